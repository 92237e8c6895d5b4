"""
Command-line front end: construct, verify, theorem, search and latin.

Exit status: 0 pass, 1 precondition failure, 2 theorem violation (the
counterexample is written as JSON), 3 usage error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ValidationError
from rich.console import Console
from rich.logging import RichHandler

from curve_groups import find_cubic_group, subgroup_and_cosets
from curves import CurveError
from finite_field import FieldError, field_create
from nets import (
    CONIC_KINDS,
    ConditionViolated,
    DualThreeNet,
    NetError,
    classify_regularity,
    construct_conic_line,
    construct_projection,
    construct_subgroup_type,
    dumps,
    isotopy_class,
    latin_square_of,
    load_net,
    n3_family,
    pasch_net,
    save_net,
    trivial_net,
    verify_axioms,
)
from redei import CNotOnLine, redei_certificate
from search import BudgetExceeded, NetSearch, SearchTask
from theorems import (
    PreconditionFailed,
    TheoremViolated,
    check_converse,
    check_n2,
    check_n3,
    check_n4,
    check_projection_claims,
    check_theorem1,
    waterhouse_scan,
)
from .display import show_error, show_latin, show_net, show_report
from .settings import RunConfig, Settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_VIOLATION = 2
EXIT_USAGE = 3

FAMILIES = ("trivial", "pasch", "n3", "cubic_cosets", "projection") + CONIC_KINDS
NET_CHECKS = {
    "thm1": check_theorem1,
    "converse": check_converse,
    "n4": check_n4,
    "n2": check_n2,
    "redei": redei_certificate,
    "projection": check_projection_claims,
}
CHECKS = tuple(NET_CHECKS) + ("n3", "waterhouse")


class UsageError(ValueError):
    """Arguments that parse but cannot be used together."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-o", "--output", help="Write the machine output to this file")
    common.add_argument("--json", action="store_true", help="Print JSON instead of tables")
    common.add_argument("--log-level", default=settings.log_level, help=f"Logging level (default: {settings.log_level})")
    common.add_argument("--progress", action="store_true", default=settings.progress, help="Show progress bars")
    common.add_argument("--jobs", type=int, default=settings.jobs, help=f"Worker processes (default: {settings.jobs})")
    common.add_argument("--seed", type=int, default=settings.seed, help=f"Seed of sampled checks (default: {settings.seed})")

    field = _Parser(add_help=False)
    field.add_argument("--p", type=int, help="Characteristic")
    field.add_argument("--k", type=int, default=1, help="Extension degree (default: 1)")

    parser = _Parser(prog="netlab", description="Dual 3-nets in finite projective planes")
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", parents=[common, field], help="Build a net and write its file")
    construct.add_argument("--family", required=True, choices=FAMILIES)
    construct.add_argument("--subgroup-order", type=int, help="n for the coset families")
    construct.add_argument("--shift", type=int, help="Coset representative of B (packed value)")
    construct.add_argument("--partition", type=int, default=0, help="Pasch partition index")
    construct.add_argument("--group-order", type=int, help="Point count of the cubic for cubic_cosets")
    construct.add_argument("--triple", type=int, default=0, help="Index of the coset triple for cubic_cosets")
    for name in ("a", "b", "c"):
        construct.add_argument(f"--{name}", type=int, help="Parameter of the n3 family (packed value)")
    construct.add_argument("--r", type=int, help="Subfield order of the projection family")
    construct.add_argument("--q", type=int, help="Field order of the projection family")

    verify = sub.add_parser("verify", parents=[common], help="Check the axioms of a net file")
    verify.add_argument("net", help="Net file")

    theorem = sub.add_parser("theorem", parents=[common, field], help="Run a validator")
    theorem.add_argument("--check", required=True, choices=CHECKS)
    theorem.add_argument("net", nargs="?", help="Net file (every check except n3 and waterhouse)")
    for name in ("a", "b", "c"):
        theorem.add_argument(f"--{name}", type=int, help="Parameter of the n3 check (packed value)")
    theorem.add_argument("--exhaustive-limit", type=int, default=settings.waterhouse_exhaustive_limit)
    theorem.add_argument("--samples", type=int, default=settings.waterhouse_samples)

    search = sub.add_parser("search", parents=[common, field], help="Search for nets, JSON lines")
    search.add_argument("--n", type=int, required=True, help="Order of the nets")
    search.add_argument("--frame", action="append", choices=["arc", "non_arc", "collinear"],
                        help="Canonical frames of A to search (repeatable; default all)")
    search.add_argument("--require-collinear", action="append", choices=["A", "B", "C"], default=[])
    search.add_argument("--hyperoval", action="store_true", help="Pairwise unions must be hyperovals")
    search.add_argument("--budget", type=int, default=settings.budget, help=f"Nodes per branch (default: {settings.budget})")

    latin = sub.add_parser("latin", parents=[common], help="Latin square of a net file")
    latin.add_argument("net", help="Net file")
    return parser


def _run_config(args: argparse.Namespace, settings: Settings) -> RunConfig:
    skip = {"command", "output", "json", "log_level", "progress", "jobs", "seed", "budget", "net", "p", "k"}
    params = {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}
    field = None
    if getattr(args, "p", None) is not None:
        if args.p ** args.k > settings.max_field_order:
            raise UsageError(f"GF({args.p}^{args.k}) exceeds the configured maximum {settings.max_field_order}")
        field = {"p": args.p, "k": args.k}
    return RunConfig(
        command=args.command,
        field=field,
        params=params,
        input=getattr(args, "net", None),
        output=args.output,
        json_output=args.json,
        seed=args.seed,
        budget=getattr(args, "budget", settings.budget),
        jobs=args.jobs,
        progress=args.progress,
        log_level=args.log_level,
    )


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=level.upper(),
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def _write(config: RunConfig, text: str) -> None:
    if config.output:
        Path(config.output).write_text(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _emit(config: RunConfig, title: str, report: BaseModel) -> None:
    if config.json_output or config.output:
        _write(config, report.model_dump_json())
    if not config.json_output:
        show_report(title, report)


def _field(config: RunConfig):
    if config.field is None:
        raise UsageError("--p is required")
    return field_create(config.field["p"], config.field["k"])


def _require(config: RunConfig, *names: str) -> List[int]:
    missing = [n for n in names if config.params.get(n) is None]
    if missing:
        raise UsageError(f"missing --{', --'.join(m.replace('_', '-') for m in missing)}")
    return [config.params[n] for n in names]


def _construct(config: RunConfig) -> DualThreeNet:
    family = config.params["family"]
    if family == "projection":
        r, q = _require(config, "r", "q")
        return construct_projection(r, q)
    spec = _field(config)
    if family == "trivial":
        return trivial_net(spec)
    if family == "pasch":
        return pasch_net(spec, config.params.get("partition", 0))
    if family == "n3":
        return n3_family(spec, *_require(config, "a", "b", "c"))
    if family == "cubic_cosets":
        group_order, n = _require(config, "group_order", "subgroup_order")
        group = find_cubic_group(spec, group_order, cyclic=False)
        triples = subgroup_and_cosets(group, n)
        index = config.params.get("triple", 0)
        if not 0 <= index < len(triples):
            raise UsageError(f"--triple {index} out of range 0..{len(triples) - 1}")
        return construct_subgroup_type(group, triples[index])
    (n,) = _require(config, "subgroup_order")
    return construct_conic_line(spec, family, n, config.params.get("shift"))


def cmd_construct(config: RunConfig) -> int:
    net = _construct(config)
    if config.output:
        save_net(net, config.output)
    else:
        sys.stdout.write(dumps(net) + "\n")
    if config.output and not config.json_output:
        show_net(net, verify_axioms(net), classify_regularity(net))
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    net = load_net(config.input)
    axioms = verify_axioms(net, jobs=config.jobs)
    regularity = classify_regularity(net) if axioms.passed else None
    if config.json_output or config.output:
        payload = {"axioms": axioms.model_dump(), "regularity": regularity.model_dump() if regularity else None}
        _write(config, json.dumps(payload, separators=(",", ":")))
    if not config.json_output:
        show_net(net, axioms, regularity)
    return EXIT_OK if axioms.passed else EXIT_PRECONDITION


def cmd_theorem(config: RunConfig) -> int:
    check = config.params["check"]
    if check == "waterhouse":
        report = waterhouse_scan(
            _field(config),
            exhaustive_limit=config.params["exhaustive_limit"],
            samples=config.params["samples"],
            seed=config.seed,
            progress=config.progress,
        )
    elif check == "n3":
        report = check_n3(_field(config), *_require(config, "a", "b", "c"))
    else:
        if config.input is None:
            raise UsageError(f"--check {check} needs a net file")
        net = load_net(config.input)
        try:
            report = NET_CHECKS[check](net)
        except CNotOnLine as exc:
            raise PreconditionFailed(str(exc)) from exc
    _emit(config, f"check {check}", report)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_search(config: RunConfig) -> int:
    spec = _field(config)
    fields = {"p": spec.p, "k": spec.k, "n": config.params["n"], "budget": config.budget,
              "require_collinear": config.params.get("require_collinear", []),
              "hyperoval": config.params.get("hyperoval", False)}
    if config.params.get("frame"):
        fields["frames"] = config.params["frame"]
    search = NetSearch(SearchTask(**fields), jobs=config.jobs, progress=config.progress)
    lines = []
    try:
        for net in search:
            lines.append(dumps(net))
    except BudgetExceeded as exc:
        logger.warning("%s", exc)
    lines.append(search.summary().model_dump_json())
    _write(config, "\n".join(lines))
    return EXIT_OK


def cmd_latin(config: RunConfig) -> int:
    net = load_net(config.input)
    square = latin_square_of(net)
    isotopy = isotopy_class(square) if square.n <= 4 else None
    if config.json_output or config.output:
        payload = {"rows": square.to_json(), "normalised": square.normalised().to_json(), "isotopy": isotopy}
        _write(config, json.dumps(payload, separators=(",", ":")))
    if not config.json_output:
        show_latin(square, isotopy)
    return EXIT_OK


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "theorem": cmd_theorem,
    "search": cmd_search,
    "latin": cmd_latin,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv``, run one command and return its exit status."""
    load_dotenv()
    settings = Settings()
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = _run_config(args, settings)
        _configure_logging(config.log_level)
        return COMMANDS[config.command](config)
    except TheoremViolated as exc:
        payload = {"error": "TheoremViolated", "message": str(exc), "counterexample": exc.counterexample}
        _write(config, json.dumps(payload, separators=(",", ":")))
        show_error("Theorem violated", str(exc))
        return EXIT_VIOLATION
    except (PreconditionFailed, ConditionViolated) as exc:
        show_error("Precondition failed", str(exc))
        return EXIT_PRECONDITION
    except (UsageError, NetError, CurveError, FieldError, ValidationError) as exc:
        show_error("Usage error", str(exc))
        return EXIT_USAGE
