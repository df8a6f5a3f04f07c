#!/usr/bin/env python3
"""Regenerate the built-in subgroup catalogs under src/normcov/data/catalogs/.

One JSON file per group, S_3..S_12 and A_4..A_12. Each file lists the
conjugacy classes of maximal subgroups (plus, for A_4, the subgroup C_2 that
realizes the unique all-intransitive minimal covering). Sources: the standard
classification of maximal subgroups of symmetric and alternating groups of
degree at most 12. Known non-maximal intersections are omitted:

  degree 7:  (AGL_1(7) meet A_7) lies in PSL_2(7)
  degree 8:  (PGL_2(7) meet A_8) and (S_2 wr S_4 meet A_8) lie in AGL_3(2)
  degree 12: (PGL_2(11) meet A_12) lies in M_12

Omitting a non-maximal class never changes the computed gamma because its
coverage is contained in the coverage of a maximal class that is present.
Run from the repository root:  python tools/make_catalogs.py
"""

from __future__ import annotations

import json
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "normcov" / "data" / "catalogs"


def intr(k):
    return {"kind": "intransitive", "k": k}


def imp(b, c):
    return {"kind": "imprimitive", "b": b, "c": c}


def named(name, cls=1):
    return {"kind": "named", "name": name, "class": cls}


def alt(inner):
    return {"kind": "intersect_alt", "inner": inner}


ALTERNATING = {"kind": "alternating"}

SYM = {
    3: [ALTERNATING, intr(1)],
    4: [ALTERNATING, intr(1), imp(2, 2)],
    5: [ALTERNATING, intr(1), intr(2), named("AGL1(5)")],
    6: [ALTERNATING, intr(1), intr(2), imp(2, 3), imp(3, 2), named("PGL2(5)")],
    7: [ALTERNATING, intr(1), intr(2), intr(3), named("AGL1(7)")],
    8: [ALTERNATING, intr(1), intr(2), intr(3), imp(2, 4), imp(4, 2), named("PGL2(7)")],
    9: [ALTERNATING, intr(1), intr(2), intr(3), intr(4), imp(3, 3), named("AGL2(3)")],
    10: [
        ALTERNATING,
        intr(1), intr(2), intr(3), intr(4),
        imp(2, 5), imp(5, 2),
        named("PGammaL2(9)"),
    ],
    11: [ALTERNATING, intr(1), intr(2), intr(3), intr(4), intr(5), named("AGL1(11)")],
    12: [
        ALTERNATING,
        intr(1), intr(2), intr(3), intr(4), intr(5),
        imp(2, 6), imp(6, 2), imp(3, 4), imp(4, 3),
        named("PGL2(11)"),
    ],
}

ALT = {
    # C_2 = (S_2 x S_2) meet A_4 is not maximal but realizes the unique
    # all-intransitive minimal covering together with A_3.
    4: [alt(intr(1)), alt(intr(2)), alt(imp(2, 2))],
    5: [alt(intr(1)), alt(intr(2)), alt(named("AGL1(5)"))],
    6: [alt(intr(1)), alt(intr(2)), alt(imp(2, 3)), alt(imp(3, 2)), alt(named("PGL2(5)"))],
    7: [alt(intr(1)), alt(intr(2)), alt(intr(3)), named("PSL2(7)", 1), named("PSL2(7)", 2)],
    8: [
        alt(intr(1)), alt(intr(2)), alt(intr(3)),
        alt(imp(2, 4)), alt(imp(4, 2)),
        named("AGL3(2)", 1), named("AGL3(2)", 2),
    ],
    9: [
        alt(intr(1)), alt(intr(2)), alt(intr(3)), alt(intr(4)),
        alt(imp(3, 3)),
        alt(named("AGL2(3)")),
        named("PGammaL2(8)", 1), named("PGammaL2(8)", 2),
    ],
    10: [
        alt(intr(1)), alt(intr(2)), alt(intr(3)), alt(intr(4)),
        alt(imp(2, 5)), alt(imp(5, 2)),
        alt(named("PGammaL2(9)")),
    ],
    11: [
        alt(intr(1)), alt(intr(2)), alt(intr(3)), alt(intr(4)), alt(intr(5)),
        named("M11", 1), named("M11", 2),
    ],
    12: [
        alt(intr(1)), alt(intr(2)), alt(intr(3)), alt(intr(4)), alt(intr(5)),
        alt(imp(2, 6)), alt(imp(6, 2)), alt(imp(3, 4)), alt(imp(4, 3)),
        named("M12", 1), named("M12", 2),
    ],
}


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for kind, table in (("S", SYM), ("A", ALT)):
        for n, subgroups in table.items():
            obj = {"group": f"{kind}{n}", "complete": True, "subgroups": subgroups}
            path = OUT_DIR / f"{kind}{n}.json"
            path.write_text(json.dumps(obj, indent=1) + "\n")
            print(f"wrote {path.name}: {len(subgroups)} classes")


if __name__ == "__main__":
    main()
