#!/usr/bin/env python3
"""Regenerate src/normcov/data/generators.json.

Each record carries explicit 1-indexed cycle notation plus the group order the
breadth-first closure must reproduce before the group is considered usable.
Run from the repository root:  python tools/make_generators.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from normcov.permgroup import Perm, closure, cycles_of  # noqa: E402

OUT = Path(__file__).resolve().parent.parent / "src" / "normcov" / "data" / "generators.json"


def perm_to_cycles(p: Perm) -> list[list[int]]:
    return [[x + 1 for x in c] for c in cycles_of(p) if len(c) > 1]


def perm_from_map(n: int, fn) -> Perm:
    return Perm([fn(i) for i in range(n)])


def primitive_root(p: int) -> int:
    for g in range(2, p):
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * g % p
            seen.add(x)
        if len(seen) == p - 1:
            return g
    raise ValueError(f"no primitive root mod {p}")


def agl1(p: int) -> list[Perm]:
    """x -> x+1 and x -> g*x on Z_p; point i+1 is residue i."""
    g = primitive_root(p)
    t = perm_from_map(p, lambda i: (i + 1) % p)
    m = perm_from_map(p, lambda i: i * g % p)
    return [t, m]


def pgl2(p: int) -> list[Perm]:
    """Moebius maps on the projective line over Z_p.

    Points 1..p are residues 0..p-1, point p+1 is infinity.
    """
    g = primitive_root(p)
    INF = p

    def act(fn):
        return perm_from_map(p + 1, fn)

    t = act(lambda i: (i + 1) % p if i != INF else INF)
    m = act(lambda i: i * g % p if i != INF else INF)

    def inv(i):
        if i == INF:
            return 0
        if i == 0:
            return INF
        return pow(i, p - 2, p)

    return [t, m, act(inv)]


# --- small finite fields -------------------------------------------------

class GF:
    """GF(p^k) with a fixed irreducible polynomial; elements are ints (bit/digit packed)."""

    def __init__(self, p: int, k: int, poly: list[int]):
        # poly: coefficients of the reduction polynomial x^k = poly[0] + poly[1] x + ...
        self.p = p
        self.k = k
        self.size = p**k
        self.poly = poly

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def undigits(self, ds: list[int]) -> int:
        a = 0
        for d in reversed(ds):
            a = a * self.p + d % self.p
        return a

    def add(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        return self.undigits([(x + y) % self.p for x, y in zip(da, db)])

    def mul(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        for d in range(2 * self.k - 2, self.k - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for j, coef in enumerate(self.poly):
                    prod[d - self.k + j] = (prod[d - self.k + j] + c * coef) % self.p
        return self.undigits(prod[: self.k])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError
        for b in range(1, self.size):
            if self.mul(a, b) == 1:
                return b
        raise AssertionError

    def pow(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def generator(self) -> int:
        for g in range(2, self.size):
            seen = set()
            x = 1
            for _ in range(self.size - 1):
                x = self.mul(x, g)
                seen.add(x)
            if len(seen) == self.size - 1:
                return g
        raise ValueError("no generator")


def pgammal2(field: GF) -> list[Perm]:
    """z -> z+1, z -> nu*z, z -> 1/z and the Frobenius on the projective line.

    Points 1..q are the field elements 0..q-1, point q+1 is infinity.
    """
    q = field.size
    INF = q
    nu = field.generator()

    def act(fn):
        return perm_from_map(q + 1, fn)

    t = act(lambda i: field.add(i, 1) if i != INF else INF)
    m = act(lambda i: field.mul(i, nu) if i != INF else INF)

    def inv(i):
        if i == INF:
            return 0
        if i == 0:
            return INF
        return field.inv(i)

    frob = act(lambda i: field.frobenius(i) if i != INF else INF)
    return [t, m, act(inv), frob]


def agl2_3() -> list[Perm]:
    """Affine group of F_3^2 on 9 points; point 1 + x + 3y is the vector (x, y)."""

    def enc(x, y):
        return x + 3 * y

    def act(fn):
        return perm_from_map(9, lambda i: enc(*fn(i % 3, i // 3)))

    t1 = act(lambda x, y: ((x + 1) % 3, y))
    t2 = act(lambda x, y: (x, (y + 1) % 3))
    a = act(lambda x, y: ((x + y) % 3, y))
    b = act(lambda x, y: (x, (x + y) % 3))
    c = act(lambda x, y: (2 * x % 3, y))
    return [t1, t2, a, b, c]


def gl3_2_gens():
    def m1(v):  # add bit1 into bit0
        return v ^ ((v >> 1) & 1)

    def m2(v):  # rotate bits (b0,b1,b2) -> (b2,b0,b1)
        return ((v & 3) << 1) | (v >> 2)

    return m1, m2


def agl3_2() -> list[Perm]:
    """Affine group of F_2^3 on 8 points; point 1 + v is the bit-vector v."""
    m1, m2 = gl3_2_gens()
    return [
        perm_from_map(8, lambda v: v ^ 1),
        perm_from_map(8, m1),
        perm_from_map(8, m2),
    ]


def psl2_7_on_7() -> list[Perm]:
    """GL_3(2) on the 7 nonzero vectors of F_2^3; point i is the vector i."""
    m1, m2 = gl3_2_gens()
    return [
        perm_from_map(7, lambda i: m1(i + 1) - 1),
        perm_from_map(7, lambda i: m2(i + 1) - 1),
    ]


def mathieu11() -> list[Perm]:
    return [
        Perm.from_cycles(11, [list(range(1, 12))]),
        Perm.from_cycles(11, [[3, 7, 11, 8], [4, 10, 5, 6]]),
    ]


def mathieu12() -> list[Perm]:
    return [
        Perm.from_cycles(12, [list(range(1, 12))]),
        Perm.from_cycles(12, [[3, 7, 11, 8], [4, 10, 5, 6]]),
        Perm.from_cycles(12, [[1, 12], [2, 11], [3, 6], [4, 8], [5, 9], [7, 10]]),
    ]


def main() -> None:
    f4 = GF(2, 2, [1, 1])       # x^2 = 1 + x
    f8 = GF(2, 3, [1, 1, 0])    # x^3 = 1 + x
    f9 = GF(3, 2, [2, 0])       # x^2 = -1

    records = []

    def add(name, degree, expected_order, gens, classes=1):
        grp = closure(degree, gens)
        if grp.order != expected_order:
            raise SystemExit(f"{name}: closure order {grp.order} != expected {expected_order}")
        records.append(
            {
                "name": name,
                "degree": degree,
                "expected_order": expected_order,
                "classes": classes,
                "generators": [perm_to_cycles(g) for g in gens],
            }
        )
        print(f"{name:14s} degree {degree:3d} order {grp.order}")

    for p in (5, 7, 11, 13, 17, 19, 23, 29):
        add(f"AGL1({p})", p, p * (p - 1), agl1(p))
    for p in (5, 7, 11):
        add(f"PGL2({p})", p + 1, (p + 1) * p * (p - 1), pgl2(p))
    add("PGammaL2(4)", 5, 120, pgammal2(f4))
    add("PGammaL2(8)", 9, 1512, pgammal2(f8), classes=2)
    add("PGammaL2(9)", 10, 1440, pgammal2(f9))
    add("AGL2(3)", 9, 432, agl2_3())
    add("AGL3(2)", 8, 1344, agl3_2(), classes=2)
    add("PSL2(7)", 7, 168, psl2_7_on_7(), classes=2)
    add("M11", 11, 7920, mathieu11(), classes=2)
    add("M12", 12, 95040, mathieu12(), classes=2)

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(records, indent=1) + "\n")
    print(f"wrote {OUT} ({len(records)} records)")


if __name__ == "__main__":
    main()
