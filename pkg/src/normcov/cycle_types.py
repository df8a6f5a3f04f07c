"""Partitions of n as conjugacy class labels for symmetric and alternating groups.

A cycle type names an S_n class; an alternating class needs an extra tag when
the type splits (all parts odd and pairwise distinct). This module also builds
the distinguished families of two- and three-part types used by the lower
bound arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .numtheory import Interval, a_of_n

__all__ = [
    "MAX_PARTITION_DEGREE",
    "ClassId",
    "CycleType",
    "GroupId",
    "GroupKind",
    "Parity",
    "SplitTag",
    "class_universe",
    "is_split",
    "parity",
    "partitions",
    "t_prime_set",
    "t_set",
    "u_set",
]

# Keeps the partition count (and hence any class universe) below ~10**6.
MAX_PARTITION_DEGREE = 60


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


class SplitTag(Enum):
    NOT_SPLIT = ""
    PLUS = "+"
    MINUS = "-"


class GroupKind(Enum):
    SYM = "S"
    ALT = "A"


@dataclass(frozen=True, order=True)
class CycleType:
    """A partition of n, parts stored descending; names an S_n class."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("a cycle type needs at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be >= 1, got {self.parts}")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    @classmethod
    def of(cls, parts) -> "CycleType":
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        """Parse bracket syntax such as "[4,4,3]"; part order is irrelevant."""
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"cannot parse cycle type {text!r}")
        try:
            parts = [int(tok) for tok in s[1:-1].split(",") if tok.strip()]
        except ValueError as exc:
            raise ValueError(f"cannot parse cycle type {text!r}") from exc
        if not parts:
            raise ValueError(f"cannot parse cycle type {text!r}")
        return cls.of(parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


@dataclass(frozen=True, order=True)
class ClassId:
    """A conjugacy class label: cycle type plus a split tag for A_n classes."""

    ctype: CycleType
    split_tag: SplitTag = SplitTag.NOT_SPLIT

    def __post_init__(self) -> None:
        if self.split_tag is not SplitTag.NOT_SPLIT and not is_split(self.ctype):
            raise ValueError(f"type {self.ctype} does not split; tag {self.split_tag} invalid")

    def __str__(self) -> str:
        return f"{self.ctype}{self.split_tag.value}"


@dataclass(frozen=True, order=True)
class GroupId:
    """S_n or A_n, identified by kind and degree."""

    kind: GroupKind
    degree: int

    def __post_init__(self) -> None:
        floor_deg = 3 if self.kind is GroupKind.SYM else 4
        if self.degree < floor_deg:
            raise ValueError(f"{self.kind.value}_n needs degree >= {floor_deg}, got {self.degree}")

    @classmethod
    def sym(cls, n: int) -> "GroupId":
        return cls(GroupKind.SYM, n)

    @classmethod
    def alt(cls, n: int) -> "GroupId":
        return cls(GroupKind.ALT, n)

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "GroupId":
        """Accepts "S12", "A12", or "sym"/"alt" plus an explicit degree."""
        s = text.strip()
        low = s.lower()
        if low in ("sym", "s") and degree is not None:
            return cls.sym(degree)
        if low in ("alt", "a") and degree is not None:
            return cls.alt(degree)
        if len(s) >= 2 and s[0] in "SAsa" and s[1:].isdigit():
            kind = GroupKind.SYM if s[0] in "Ss" else GroupKind.ALT
            return cls(kind, int(s[1:]))
        raise ValueError(f"cannot parse group {text!r}")

    @property
    def name(self) -> str:
        return f"{self.kind.value}{self.degree}"

    def __str__(self) -> str:
        return self.name


def _check_degree(n: int) -> None:
    if not 1 <= n <= MAX_PARTITION_DEGREE:
        raise ValueError(f"degree {n} outside enumeration bound 1..{MAX_PARTITION_DEGREE}")


@lru_cache(maxsize=None)
def _partitions_raw(n: int) -> tuple[tuple[int, ...], ...]:
    def gen(rest: int, maxpart: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def partitions(n: int) -> list[CycleType]:
    """All partitions of n in reverse lexicographic order, [n] first."""
    _check_degree(n)
    return [CycleType(p) for p in _partitions_raw(n)]


def parity(t: CycleType) -> Parity:
    """Even iff the number of even parts is even."""
    evens = sum(1 for p in t.parts if p % 2 == 0)
    return Parity.EVEN if evens % 2 == 0 else Parity.ODD


def is_split(t: CycleType) -> bool:
    """True iff all parts are odd and pairwise distinct.

    Exactly then the S_n class of the type is a union of two A_n classes.
    """
    return all(p % 2 == 1 for p in t.parts) and len(set(t.parts)) == len(t.parts)


def u_set(n: int) -> list[CycleType]:
    """Two-part types [k, n-k] with 2 <= k < n/2 and gcd(k, n) == 1.

    Always has exactly euler_phi(n)/2 - 1 members.
    """
    if n < 5:
        raise ValueError(f"u_set needs n >= 5, got {n}")
    return [CycleType.of((k, n - k)) for k in range(2, (n + 1) // 2) if 2 * k < n and gcd(k, n) == 1]


def t_set(n: int) -> list[CycleType]:
    """Three-part types [i, (a-1)i, n-ai] for a = a_of_n(n), i coprime to n.

    The index i ranges over 1 <= i < (n-1)/a.
    """
    if n < 5:
        raise ValueError(f"t_set needs n >= 5, got {n}")
    a = a_of_n(n)
    out = []
    i = 1
    while a * i < n - 1:
        if gcd(i, n) == 1:
            out.append(CycleType.of((i, (a - 1) * i, n - a * i)))
        i += 1
    return out


def t_prime_set(n: int, interval: Interval) -> list[CycleType]:
    """Three-part types [m-i, m-2i, m+3i] for m = n/3 and integer i in the interval.

    Requires 6 | n, n >= 12 and the interval contained in [1, m/2).
    """
    if n % 6 != 0 or n < 12:
        raise ValueError(f"t_prime_set needs n >= 12 divisible by 6, got {n}")
    m = n // 3
    half_m = Fraction(m, 2)
    hi_ok = interval.hi < half_m or (interval.hi == half_m and interval.hi_open)
    if interval.lo < 1 or not hi_ok:
        raise ValueError(f"interval {interval} not contained in [1, {m}/2)")
    out = []
    for i in range(interval.first_integer(), interval.last_integer() + 1):
        if gcd(i, n) == 1:
            out.append(CycleType.of((m - i, m - 2 * i, m + 3 * i)))
    return out


def class_universe(g: GroupId) -> list[ClassId]:
    """Every conjugacy class of the group, in deterministic order.

    For S_n: one class per partition. For A_n: the even partitions, with
    split types contributing a PLUS and a MINUS class.
    """
    _check_degree(g.degree)
    out: list[ClassId] = []
    for t in partitions(g.degree):
        if g.kind is GroupKind.SYM:
            out.append(ClassId(t))
        elif parity(t) is Parity.EVEN:
            if is_split(t):
                out.append(ClassId(t, SplitTag.PLUS))
                out.append(ClassId(t, SplitTag.MINUS))
            else:
                out.append(ClassId(t))
    return out
