"""Command-line surface: bounds, verification, exact minima and type listings.

Exit codes: 0 for success, 1 for a basic set that fails to cover, 2 for any
error. Output is plain text by default or JSON with --format json; nothing is
printed on stdout when a command errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from enum import Enum

from .bounds import bounds_report
from .coverings import BasicSet, construct_delta, delta_families, exact_gamma, verify_basic_set
from .cycle_types import CycleType, GroupId, Parity, parity, t_prime_set, t_set, u_set
from .numtheory import Interval
from .subgroups import (
    CatalogError,
    IntersectAlt,
    catalog_to_json,
    contains_type,
    load_catalog,
    parse_descriptor,
)

__all__ = ["CommandResult", "Status", "entry", "main"]


class Status(Enum):
    OK = 0
    UNCOVERED = 1
    ERROR = 2


@dataclass
class CommandResult:
    status: Status
    payload: dict
    text: str

    @property
    def exit_code(self) -> int:
        return self.status.value


def _group_id(n: int, group: str) -> GroupId:
    return GroupId.parse(group, degree=n)


def _render(result: CommandResult, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result.payload, indent=2)
    return result.text


def cmd_bounds(n: int, group: str) -> CommandResult:
    rep = bounds_report(_group_id(n, group))
    lines = [f"group {rep.group}"]
    lines.append(f"  lower bound: {rep.lower} (ceiling {rep.lower_ceil})")
    lines.append(f"  upper bound: {rep.upper}")
    lines.append(f"  exact:       {rep.exact if rep.exact is not None else 'unknown'}")
    lines.append("  rules:")
    for value, rule in rep.sources:
        lines.append(f"    {value:>12}  {rule}")
    return CommandResult(Status.OK, rep.to_json(), "\n".join(lines))


def _basic_set_from_args(args) -> BasicSet:
    if args.file:
        with open(args.file) as fh:
            return BasicSet.from_json(json.load(fh))
    if not args.family:
        raise ValueError("verify needs --file or --family")
    params: dict = {}
    for key in ("n", "p", "q", "alpha", "beta"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    if args.group_kind:
        params["group"] = args.group_kind
    if args.big_blocks:
        params["big_blocks"] = True
    return construct_delta(args.family, **params)


def cmd_verify(args) -> CommandResult:
    basic = _basic_set_from_args(args)
    report = verify_basic_set(basic, threads=args.threads)
    payload = {
        "basic_set": basic.to_json(),
        "report": report.to_json(),
    }
    lines = [f"group {basic.group}: {len(basic.components)} components"]
    for d in basic.components:
        lines.append(f"  {d}")
    if report.covered:
        lines.append("covered: every conjugacy class is met")
        return CommandResult(Status.OK, payload, "\n".join(lines))
    lines.append("NOT covered; missed classes:")
    for cid in report.uncovered:
        lines.append(f"  {cid}")
    return CommandResult(Status.UNCOVERED, payload, "\n".join(lines))


def cmd_gamma(n: int, group: str, catalog_path: str | None) -> CommandResult:
    g = _group_id(n, group)
    if catalog_path:
        cat = load_catalog(g, path=catalog_path)
    else:
        cat = load_catalog(g)
    result = exact_gamma(g, cat)
    payload = {
        "group": g.name,
        "gamma": result.gamma,
        "exact": result.exact,
        "witness": result.witness.to_json(),
    }
    kind = "gamma" if result.exact else "upper bound on gamma (catalog incomplete)"
    lines = [f"{kind} for {g}: {result.gamma}", "witness basic set:"]
    for d in result.witness.components:
        lines.append(f"  {d}")
    return CommandResult(Status.OK, payload, "\n".join(lines))


def cmd_table3() -> CommandResult:
    sym: dict[int, int] = {}
    alt: dict[int, int] = {}
    for n in range(3, 13):
        sym[n] = exact_gamma(GroupId.sym(n), load_catalog(GroupId.sym(n))).gamma
        if n >= 4:
            alt[n] = exact_gamma(GroupId.alt(n), load_catalog(GroupId.alt(n))).gamma
    payload = {
        "sym": {str(n): v for n, v in sym.items()},
        "alt": {str(n): v for n, v in alt.items()},
    }
    header = "n        " + " ".join(f"{n:2d}" for n in range(3, 13))
    row_s = "gamma(S) " + " ".join(f"{sym[n]:2d}" for n in range(3, 13))
    row_a = "gamma(A)  - " + " ".join(f"{alt[n]:2d}" for n in range(4, 13))
    return CommandResult(Status.OK, payload, "\n".join([header, row_s, row_a]))


_MEMBERSHIP_RULES = {
    "intransitive": "the parts split into sub-multisets summing to k and n-k",
    "imprimitive": "the parts admit a block-orbit grouping",
    "alternating": "the type has even parity",
    "named": "the type occurs in the exhaustive element spectrum",
}


def cmd_membership(n: int, descriptor: str, type_text: str) -> CommandResult:
    d = parse_descriptor(descriptor, n)
    t = CycleType.parse(type_text)
    if t.n != n:
        raise ValueError(f"type {t} is a partition of {t.n}, not {n}")
    if isinstance(d, IntersectAlt):
        member = parity(t) is Parity.EVEN and contains_type(d.inner, t)
        rule = "even type contained in the intersected class"
    else:
        member = contains_type(d, t)
        rule = _MEMBERSHIP_RULES[str(d).split(":", 1)[0]]
    payload = {"descriptor": str(d), "type": str(t), "member": member, "rule": rule}
    text = f"{t} in {d}: {'yes' if member else 'no'} ({rule})"
    return CommandResult(Status.OK, payload, text)


def cmd_types(n: int, family: str, interval: str | None) -> CommandResult:
    if family == "u":
        types = u_set(n)
    elif family == "t":
        types = t_set(n)
    elif family == "t_prime":
        if not interval:
            raise ValueError("t_prime needs --interval, e.g. --interval '[1,3)'")
        types = t_prime_set(n, Interval.parse(interval))
    else:
        raise ValueError(f"unknown family {family!r}; choose u, t or t_prime")
    payload = {"n": n, "family": family, "types": [str(t) for t in types]}
    return CommandResult(Status.OK, payload, " ".join(str(t) for t in types))


def cmd_catalog(n: int, group: str) -> CommandResult:
    g = _group_id(n, group)
    cat = load_catalog(g)
    payload = catalog_to_json(cat)
    lines = [f"catalog for {g} ({'complete' if cat.complete else 'incomplete'}):"]
    for d in cat.descriptors:
        lines.append(f"  {d}")
    return CommandResult(Status.OK, payload, "\n".join(lines))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="normcov",
        description="Normal coverings of symmetric and alternating groups: "
        "bounds, verification and exact minimal basic sets.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker threads for coverage computation")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", parents=[common], help="print all applicable bounds")
    p.add_argument("n", type=int)
    p.add_argument("group", choices=("sym", "alt"))

    p = sub.add_parser("verify", parents=[common], help="check that a basic set covers")
    p.add_argument("--file", help="basic set JSON file")
    p.add_argument("--family", choices=delta_families(), help="named construction")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--beta", type=int)
    p.add_argument("--group", dest="group_kind", choices=("sym", "alt"))
    p.add_argument("--big-blocks", action="store_true",
                   help="use the wreath product with large blocks")

    p = sub.add_parser("gamma", parents=[common], help="exact minimal basic set size")
    p.add_argument("n", type=int)
    p.add_argument("group", choices=("sym", "alt"))
    p.add_argument("--catalog", help="user catalog JSON file")

    sub.add_parser("table3", parents=[common], help="exact values for degrees 3..12")

    p = sub.add_parser(
        "membership",
        parents=[common],
        help="does a class contain a type",
        epilog="descriptor syntax: 'intransitive:K', 'imprimitive:B,C', "
        "'alternating', 'named:NAME[:CLASS]', and 'alt:...' for the "
        "intersection of any of these with the alternating group",
    )
    p.add_argument("n", type=int)
    p.add_argument("descriptor", help="e.g. 'imprimitive:3,4' or 'alt:intransitive:2'")
    p.add_argument("type", help="cycle type in bracket syntax, e.g. '[1,2,9]'; part order is ignored")

    p = sub.add_parser("types", parents=[common], help="list a distinguished type family")
    p.add_argument("n", type=int)
    p.add_argument("family", choices=("u", "t", "t_prime"))
    p.add_argument("--interval", help="interval for t_prime, e.g. '[1,3)'")

    p = sub.add_parser("catalog", parents=[common], help="dump a built-in catalog")
    p.add_argument("n", type=int)
    p.add_argument("group", choices=("sym", "alt"))

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "bounds":
            result = cmd_bounds(args.n, args.group)
        elif args.command == "verify":
            result = cmd_verify(args)
        elif args.command == "gamma":
            result = cmd_gamma(args.n, args.group, args.catalog)
        elif args.command == "table3":
            result = cmd_table3()
        elif args.command == "membership":
            result = cmd_membership(args.n, args.descriptor, args.type)
        elif args.command == "types":
            result = cmd_types(args.n, args.family, args.interval)
        elif args.command == "catalog":
            result = cmd_catalog(args.n, args.group)
        else:  # pragma: no cover
            raise ValueError(f"unknown command {args.command!r}")
    except (ValueError, CatalogError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return Status.ERROR.value
    print(_render(result, args.format))
    return result.exit_code


def entry() -> None:  # console script hook
    sys.exit(main())


if __name__ == "__main__":
    entry()
