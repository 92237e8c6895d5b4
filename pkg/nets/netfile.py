"""JSON net files: {"field", "A", "B", "C", "provenance"}."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Union

from pydantic import BaseModel, ValidationError

from finite_field import FieldSpec
from geometry import ProjPoint
from .net import DualThreeNet, NetError

logger = logging.getLogger(__name__)

Coords = List[List[int]]


class NetFormatError(NetError):
    """The file is not a readable net file."""


class FieldModel(BaseModel):
    p: int
    k: int
    modulus: List[int]


class NetFile(BaseModel):
    field: FieldModel
    A: List[Coords]
    B: List[Coords]
    C: List[Coords]
    provenance: Dict[str, Any] = {}


def net_to_json(net: DualThreeNet) -> Dict[str, Any]:
    return {
        "field": net.spec.to_json(),
        "A": [p.to_json() for p in net.A],
        "B": [p.to_json() for p in net.B],
        "C": [p.to_json() for p in net.C],
        "provenance": net.provenance,
    }


def net_from_json(data: Dict[str, Any]) -> DualThreeNet:
    try:
        model = NetFile.model_validate(data)
        spec = FieldSpec.from_json(model.field.model_dump())
        parts = [[ProjPoint.from_json(spec, c) for c in getattr(model, name)] for name in ("A", "B", "C")]
        return DualThreeNet(spec, *parts, provenance=model.provenance)
    except (ValidationError, ValueError, TypeError, KeyError) as exc:
        raise NetFormatError(f"not a net: {exc}") from exc


def dumps(net: DualThreeNet) -> str:
    """Deterministic single-line JSON."""
    return json.dumps(net_to_json(net), separators=(",", ":"))


def load_net(path: Union[str, Path]) -> DualThreeNet:
    try:
        text = Path(path).read_text()
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise NetFormatError(f"cannot read {path}: {exc}") from exc
    net = net_from_json(data)
    logger.debug("loaded %r from %s", net, path)
    return net


def save_net(net: DualThreeNet, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(net) + "\n")
    logger.info("wrote %r to %s", net, path)
