"""Small finite groups told apart by their element orders and derived subgroup."""

from collections import Counter
from typing import Callable, Dict, Hashable, List, Literal, Sequence, TypeVar

from pydantic import BaseModel
from sympy import isprime

K = TypeVar("K", bound=Hashable)

GroupKind = Literal["trivial", "cyclic", "elementary_abelian", "abelian", "dihedral", "metabelian", "other"]


class GroupClass(BaseModel):
    """Element-order census and the resulting isomorphism type at small scale."""

    order: int
    element_orders: Dict[int, int]
    abelian: bool
    cyclic: bool
    elementary_abelian: bool
    derived_order: int
    kind: GroupKind


def element_order(g: K, mul: Callable[[K, K], K], identity: K) -> int:
    k, x = 1, g
    while x != identity:
        x = mul(x, g)
        k += 1
    return k


def generated(gens: Sequence[K], mul: Callable[[K, K], K], identity: K) -> List[K]:
    """Subgroup generated by ``gens``, in discovery order."""
    members = {identity}
    out = [identity]
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in members:
                    members.add(y)
                    out.append(y)
                    nxt.append(y)
        frontier = nxt
    return out


def classify_group(elements: Sequence[K], mul: Callable[[K, K], K], identity: K,
                   inverse: Callable[[K], K]) -> GroupClass:
    """
    Classify a group given by its full element list.

    Args:
        elements: Every element once
        mul: Group product
        identity: Neutral element
        inverse: Group inverse

    Returns:
        GroupClass
    """
    n = len(elements)
    orders = {g: element_order(g, mul, identity) for g in elements}
    census = Counter(orders.values())
    abelian = all(mul(g, h) == mul(h, g) for i, g in enumerate(elements) for h in elements[i + 1:])
    commutators = {mul(mul(inverse(g), inverse(h)), mul(g, h)) for g in elements for h in elements}
    derived = generated(sorted(commutators, key=repr), mul, identity)
    cyclic = n in census
    exponents = {o for o in census if o != 1}
    elementary = n > 1 and len(exponents) == 1 and isprime(next(iter(exponents))) and abelian

    if n == 1:
        kind = "trivial"
    elif cyclic:
        kind = "cyclic"
    elif elementary:
        kind = "elementary_abelian"
    elif abelian:
        kind = "abelian"
    elif _is_dihedral(elements, orders, mul, identity):
        kind = "dihedral"
    elif all(mul(x, y) == mul(y, x) for x in derived for y in derived):
        kind = "metabelian"
    else:
        kind = "other"
    return GroupClass(
        order=n,
        element_orders=dict(sorted(census.items())),
        abelian=abelian,
        cyclic=cyclic,
        elementary_abelian=elementary,
        derived_order=len(derived),
        kind=kind,
    )


def _is_dihedral(elements, orders, mul, identity) -> bool:
    n = len(elements)
    if n % 2 or n < 6:
        return False
    m = n // 2
    rotation = next((g for g in elements if orders[g] == m), None)
    if rotation is None:
        return False
    rotations = set(generated([rotation], mul, identity))
    return all(orders[g] == 2 for g in elements if g not in rotations)
