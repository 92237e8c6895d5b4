"""Human-readable console output of nets and reports."""

import json
from typing import Any, Optional

from pydantic import BaseModel
from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from nets import AxiomReport, DualThreeNet, LatinSquare, RegularityClass

console = Console()
err_console = Console(stderr=True)


def _cell(value: Any) -> str:
    if isinstance(value, BaseModel):
        value = value.model_dump()
    if isinstance(value, (dict, list)):
        text = json.dumps(value, separators=(",", ":"))
        return text if len(text) <= 80 else text[:77] + "..."
    return str(value)


def show_net(net: DualThreeNet, axioms: Optional[AxiomReport] = None,
             regularity: Optional[RegularityClass] = None) -> None:
    """
    Print the components of a net and, when given, its axiom check.

    Args:
        net: The net to show
        axioms: Result of verify_axioms
        regularity: Result of classify_regularity
    """
    table = Table(title=f"{net!r}", box=box.ROUNDED, show_header=True)
    table.add_column("Component", style="cyan", no_wrap=True)
    table.add_column("Points (packed coordinates)")
    for name, comp in net.components.items():
        table.add_row(name, "  ".join(":".join(str(v) for v in p.values) for p in comp))
    console.print(table)
    if axioms is not None:
        style = "green" if axioms.passed else "red"
        text = "[OK] dual 3-net axioms hold" if axioms.passed else f"[FAIL] {axioms.failure}"
        console.print(Panel(f"{text}\nlines checked: {axioms.lines_checked}", border_style=style))
    if regularity is not None:
        on_line = ", ".join(regularity.collinear_components) or "none"
        console.print(f"[bold]Embedding:[/bold] {regularity.kind} (collinear: {on_line})")


def show_report(title: str, report: BaseModel) -> None:
    """One row per field of a pydantic report."""
    data = report.model_dump()
    passed = data.get("passed")
    style = "green" if passed in (True, None) else "red"
    table = Table(title=title, box=box.ROUNDED, show_header=True, border_style=style)
    table.add_column("Field", style="cyan", no_wrap=True)
    table.add_column("Value")
    for key, value in data.items():
        table.add_row(key, _cell(value))
    console.print(table)


def show_latin(square: LatinSquare, isotopy: Optional[str] = None) -> None:
    table = Table(title="Latin square (rows A, columns B, symbols C)", box=box.SIMPLE, show_header=False)
    for _ in range(square.n):
        table.add_column(justify="right")
    for row in square.rows:
        table.add_row(*(str(s) for s in row))
    console.print(table)
    if isotopy is not None:
        console.print(f"[bold]Isotopy class:[/bold] {isotopy}")


def show_error(kind: str, message: str) -> None:
    err_console.print(f"[bold red]{kind}:[/bold red] {message}")
