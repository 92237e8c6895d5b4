"""Backtracking search for dual 3-nets of small order."""

from .net_search import (
    BudgetExceeded,
    NetSearch,
    SearchSummary,
    SearchTask,
    enumerate_nets,
    hunt_hyperoval_net,
    run_search,
)

__all__ = [
    'BudgetExceeded',
    'NetSearch',
    'SearchSummary',
    'SearchTask',
    'enumerate_nets',
    'hunt_hyperoval_net',
    'run_search',
]
