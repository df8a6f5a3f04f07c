"""Subgroup-class descriptors with exact cycle-type membership semantics.

A descriptor names a conjugacy class of subgroups symbolically. Membership of
a cycle type is decided combinatorially for the intransitive and imprimitive
families, by parity for the alternating group, and by exhaustive type spectrum
for named groups backed by generator data.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Union

from .cycle_types import (
    ClassId,
    CycleType,
    GroupId,
    GroupKind,
    Parity,
    SplitTag,
    is_split,
    parity,
    partitions,
)
from .numtheory import divisors
from .permgroup import GeneratedGroup, Perm, alt_class_coverage, closure, conjugate, type_spectrum

__all__ = [
    "Catalog",
    "CatalogError",
    "FullAlternating",
    "Imprimitive",
    "IntersectAlt",
    "Intransitive",
    "NamedGroup",
    "SubgroupDescriptor",
    "class_coverage",
    "contains_type",
    "descriptor_from_json",
    "descriptor_sort_key",
    "descriptor_to_json",
    "load_catalog",
    "named_group",
    "named_group_names",
    "parse_descriptor",
]


class CatalogError(ValueError):
    """Missing or malformed subgroup data."""


@dataclass(frozen=True, order=True)
class Intransitive:
    """The class of S_k x S_{n-k}, the stabilizer of a k-subset."""

    degree: int
    k: int

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.degree // 2:
            raise ValueError(
                f"intransitive part k={self.k} must satisfy 1 <= k <= {self.degree // 2}"
            )

    def __str__(self) -> str:
        return f"intransitive:{self.k}"


@dataclass(frozen=True, order=True)
class Imprimitive:
    """The class of S_b wr S_c, the stabilizer of a partition into c blocks of size b."""

    degree: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.b < 2 or self.c < 2 or self.b * self.c != self.degree:
            raise ValueError(f"imprimitive shape b={self.b}, c={self.c} invalid for degree {self.degree}")

    def __str__(self) -> str:
        return f"imprimitive:{self.b},{self.c}"


@dataclass(frozen=True, order=True)
class FullAlternating:
    """A_n as a subgroup of S_n."""

    degree: int

    def __str__(self) -> str:
        return "alternating"


@dataclass(frozen=True, order=True)
class NamedGroup:
    """A group shipped as generator data; cls selects one of its conjugacy classes."""

    degree: int
    name: str
    cls: int = 1

    def __post_init__(self) -> None:
        if self.cls not in (1, 2):
            raise ValueError(f"named class index must be 1 or 2, got {self.cls}")

    def __str__(self) -> str:
        return f"named:{self.name}" + (f":{self.cls}" if self.cls != 1 else "")


@dataclass(frozen=True, order=True)
class IntersectAlt:
    """The intersection of an S_n-level class with A_n."""

    inner: Union[Intransitive, Imprimitive, NamedGroup]

    def __post_init__(self) -> None:
        if isinstance(self.inner, (FullAlternating, IntersectAlt)):
            raise ValueError("intersect_alt must wrap an S_n-level class other than A_n")

    @property
    def degree(self) -> int:
        return self.inner.degree

    def __str__(self) -> str:
        return f"alt:{self.inner}"


SubgroupDescriptor = Union[Intransitive, Imprimitive, FullAlternating, NamedGroup, IntersectAlt]

_KIND_RANK = {FullAlternating: 0, Intransitive: 1, Imprimitive: 2, NamedGroup: 3, IntersectAlt: 4}


def descriptor_sort_key(d: SubgroupDescriptor):
    """Deterministic ordering used for reproducible witnesses and reports."""
    if isinstance(d, IntersectAlt):
        return (4,) + descriptor_sort_key(d.inner)
    if isinstance(d, FullAlternating):
        return (0,)
    if isinstance(d, Intransitive):
        return (1, d.k)
    if isinstance(d, Imprimitive):
        return (2, d.b, d.c)
    return (3, d.name, d.cls)


def descriptor_to_json(d: SubgroupDescriptor) -> dict:
    if isinstance(d, Intransitive):
        return {"kind": "intransitive", "k": d.k}
    if isinstance(d, Imprimitive):
        return {"kind": "imprimitive", "b": d.b, "c": d.c}
    if isinstance(d, FullAlternating):
        return {"kind": "alternating"}
    if isinstance(d, NamedGroup):
        return {"kind": "named", "name": d.name, "class": d.cls}
    return {"kind": "intersect_alt", "inner": descriptor_to_json(d.inner)}


def descriptor_from_json(obj: dict, degree: int) -> SubgroupDescriptor:
    try:
        kind = obj["kind"]
        if kind == "intransitive":
            return Intransitive(degree, int(obj["k"]))
        if kind == "imprimitive":
            return Imprimitive(degree, int(obj["b"]), int(obj["c"]))
        if kind == "alternating":
            return FullAlternating(degree)
        if kind == "named":
            return NamedGroup(degree, str(obj["name"]), int(obj.get("class", 1)))
        if kind == "intersect_alt":
            inner = descriptor_from_json(obj["inner"], degree)
            return IntersectAlt(inner)
    except (KeyError, TypeError, ValueError) as exc:
        raise CatalogError(f"malformed descriptor {obj!r}: {exc}") from exc
    raise CatalogError(f"unknown descriptor kind {kind!r}")


def parse_descriptor(text: str, degree: int) -> SubgroupDescriptor:
    """Parse the CLI mini-syntax, e.g. "imprimitive:3,4" or "alt:intransitive:2"."""
    s = text.strip()
    if s.startswith("alt:"):
        return IntersectAlt(parse_descriptor(s[4:], degree))
    if s == "alternating":
        return FullAlternating(degree)
    if s.startswith("intransitive:"):
        return Intransitive(degree, int(s.split(":", 1)[1]))
    if s.startswith("imprimitive:"):
        b_s, c_s = s.split(":", 1)[1].split(",")
        return Imprimitive(degree, int(b_s), int(c_s))
    if s.startswith("named:"):
        rest = s.split(":", 1)[1]
        if ":" in rest:
            name, cls_s = rest.rsplit(":", 1)
            return NamedGroup(degree, name, int(cls_s))
        return NamedGroup(degree, rest)
    raise ValueError(f"cannot parse descriptor {text!r}")


# --- named group registry -------------------------------------------------

_NAMED_LOCK = threading.Lock()
_NAMED_CACHE: dict[tuple[str, str, int], GeneratedGroup] = {}


def data_dir() -> Path:
    """Directory holding generators.json and catalogs/; NCK_DATA_DIR overrides."""
    env = os.environ.get("NCK_DATA_DIR")
    if env:
        return Path(env)
    return Path(resources.files("normcov") / "data")


@lru_cache(maxsize=8)
def _generator_records(path_str: str) -> dict[str, dict]:
    path = Path(path_str)
    if not path.exists():
        raise CatalogError(f"generator data file not found: {path}")
    try:
        records = json.loads(path.read_text())
        return {rec["name"]: rec for rec in records}
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise CatalogError(f"malformed generator data file {path}: {exc}") from exc


def named_group_names() -> list[str]:
    return sorted(_generator_records(str(data_dir() / "generators.json")))


def named_group(degree: int, name: str, cls: int = 1) -> GeneratedGroup:
    """Materialize a named group; closure must reproduce the recorded order.

    cls=2 is the conjugate of the recorded generators by the transposition
    (1 2), giving the second conjugacy class where one exists.
    """
    key = (str(data_dir()), name, cls)
    with _NAMED_LOCK:
        cached = _NAMED_CACHE.get(key)
    if cached is not None:
        if cached.degree != degree:
            raise CatalogError(f"{name} has degree {cached.degree}, not {degree}")
        return cached

    records = _generator_records(str(data_dir() / "generators.json"))
    rec = records.get(name)
    if rec is None:
        raise CatalogError(f"no generator record named {name!r}")
    if rec["degree"] != degree:
        raise CatalogError(f"{name} has degree {rec['degree']}, not {degree}")
    if cls not in (1, 2) or (cls == 2 and rec.get("classes", 1) < 2):
        raise CatalogError(f"{name} does not have a class {cls}")
    gens = [Perm.from_cycles(degree, cycles) for cycles in rec["generators"]]
    if cls == 2:
        swap = Perm.from_cycles(degree, [[1, 2]])
        gens = [conjugate(g, swap) for g in gens]
    grp = closure(degree, gens)
    if grp.order != rec["expected_order"]:
        raise CatalogError(
            f"{name}: closure produced order {grp.order}, expected {rec['expected_order']}"
        )
    with _NAMED_LOCK:
        _NAMED_CACHE[key] = grp
    return grp


# --- membership semantics ---------------------------------------------------


def _subset_sum(parts: tuple[int, ...], target: int) -> bool:
    mask = 1
    for p in parts:
        mask |= mask << p
    return bool((mask >> target) & 1)


def _counts(parts: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    out: list[list[int]] = []
    for p in parts:
        if out and out[-1][0] == p:
            out[-1][1] += 1
        else:
            out.append([p, 1])
    return tuple((v, c) for v, c in out)


def _group_choices(ms: tuple[tuple[int, int], ...], d: int, b: int, anchor: int):
    """Yield remaining multisets after removing a valid block-orbit group.

    A group is a sub-multiset containing the anchor value, with every member
    divisible by d and member/d summing to b.
    """
    eligible = [(v, c) for v, c in ms if v % d == 0]

    def rec(idx: int, remaining: int, used: dict[int, int]):
        if remaining == 0:
            if used.get(anchor, 0) >= 1:
                left = []
                for v, c in ms:
                    stay = c - used.get(v, 0)
                    if stay:
                        left.append((v, stay))
                yield tuple(left)
            return
        if idx == len(eligible):
            return
        v, c = eligible[idx]
        step = v // d
        max_take = min(c, remaining // step)
        for take in range(max_take, -1, -1):
            if take:
                used[v] = take
            yield from rec(idx + 1, remaining - take * step, used)
            used.pop(v, None)

    yield from rec(0, b, {})


@lru_cache(maxsize=250000)
def _wreath_cover(ms: tuple[tuple[int, int], ...], b: int) -> bool:
    """Can the multiset of cycle lengths be partitioned into block-orbit groups?

    Each group takes a divisor d of all its members with sum(member/d) == b;
    the groups' d values automatically sum to the block count.
    """
    if not ms:
        return True
    total = sum(v * c for v, c in ms)
    c_rem = total // b
    anchor = ms[0][0]
    for d in divisors(anchor):
        if d > c_rem:
            continue
        for rest in _group_choices(ms, d, b, anchor):
            if _wreath_cover(rest, b):
                return True
    return False


def contains_type(d: SubgroupDescriptor, t: CycleType) -> bool:
    """Does the S_n-level class of subgroups contain a permutation of type t?"""
    if isinstance(d, IntersectAlt):
        raise ValueError("membership is defined at the S_n level; use class_coverage for intersections")
    if d.degree != t.n:
        raise ValueError(f"degree mismatch: descriptor degree {d.degree}, type of {t.n}")
    if isinstance(d, Intransitive):
        return _subset_sum(t.parts, d.k)
    if isinstance(d, Imprimitive):
        if sum(t.parts) != d.b * d.c:
            return False
        return _wreath_cover(_counts(t.parts), d.b)
    if isinstance(d, FullAlternating):
        return parity(t) is Parity.EVEN
    if isinstance(d, NamedGroup):
        return t in type_spectrum(named_group(d.degree, d.name, d.cls))
    raise TypeError(f"unknown descriptor {d!r}")


def _alt_cover_by_intersection(inner: SubgroupDescriptor, n: int) -> frozenset[ClassId]:
    # Intersecting a non-alternating S_n class with A_n keeps every even type,
    # and a split type always lands in both A_n classes because the normalizer
    # of the intersection contains odd permutations.
    if isinstance(inner, NamedGroup):
        grp = named_group(inner.degree, inner.name, inner.cls)
        if grp.all_even():
            raise ValueError(
                f"{inner.name} already lies inside the alternating group; use the named descriptor directly"
            )
    cover: set[ClassId] = set()
    for t in partitions(n):
        if parity(t) is not Parity.EVEN or not contains_type(inner, t):
            continue
        if is_split(t):
            cover.add(ClassId(t, SplitTag.PLUS))
            cover.add(ClassId(t, SplitTag.MINUS))
        else:
            cover.add(ClassId(t))
    return frozenset(cover)


@lru_cache(maxsize=4096)
def class_coverage(d: SubgroupDescriptor, g: GroupId) -> frozenset[ClassId]:
    """Exact set of conjugacy classes of g met by the subgroup class d."""
    if d.degree != g.degree:
        raise ValueError(f"degree mismatch: descriptor degree {d.degree}, group {g}")
    if g.kind is GroupKind.SYM:
        return frozenset(ClassId(t) for t in partitions(g.degree) if contains_type(d, t))
    if isinstance(d, FullAlternating):
        raise ValueError("A_n is the whole group, not a component, for alternating degrees")
    if isinstance(d, IntersectAlt):
        return _alt_cover_by_intersection(d.inner, g.degree)
    if isinstance(d, NamedGroup):
        return alt_class_coverage(named_group(d.degree, d.name, d.cls))
    raise ValueError(
        f"descriptor {d} lives at the S_n level; wrap it in intersect_alt for alternating groups"
    )


# --- catalogs ---------------------------------------------------------------


@dataclass(frozen=True)
class Catalog:
    """Descriptors for the (maximal) subgroup classes of one group."""

    group: GroupId
    descriptors: tuple[SubgroupDescriptor, ...]
    complete: bool

    def __post_init__(self) -> None:
        if len(set(self.descriptors)) != len(self.descriptors):
            raise CatalogError("catalog descriptors must be pairwise distinct")
        for d in self.descriptors:
            if d.degree != self.group.degree:
                raise CatalogError(f"descriptor {d} does not match degree {self.group.degree}")


def catalog_from_json(obj: dict) -> Catalog:
    try:
        group = GroupId.parse(obj["group"])
        complete = bool(obj["complete"])
        descriptors = tuple(descriptor_from_json(s, group.degree) for s in obj["subgroups"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CatalogError(f"malformed catalog: {exc}") from exc
    return Catalog(group=group, descriptors=descriptors, complete=complete)


def catalog_to_json(cat: Catalog) -> dict:
    return {
        "group": cat.group.name,
        "complete": cat.complete,
        "subgroups": [descriptor_to_json(d) for d in cat.descriptors],
    }


def load_catalog(g: GroupId | None = None, path: str | Path | None = None) -> Catalog:
    """Load the built-in catalog for g, or a user catalog from path.

    Built-in catalogs exist for S_3..S_12 and A_4..A_12 and are complete;
    user-supplied catalogs carry their own completeness flag.
    """
    if path is not None:
        p = Path(path)
        if not p.exists():
            raise CatalogError(f"catalog file not found: {p}")
        try:
            obj = json.loads(p.read_text())
        except json.JSONDecodeError as exc:
            raise CatalogError(f"malformed catalog file {p}: {exc}") from exc
        cat = catalog_from_json(obj)
        if g is not None and cat.group != g:
            raise CatalogError(f"catalog file is for {cat.group}, not {g}")
        return cat
    if g is None:
        raise ValueError("need a group or a path")
    p = data_dir() / "catalogs" / f"{g.name}.json"
    if not p.exists():
        raise CatalogError(f"no built-in catalog for {g} (supply a catalog file)")
    return catalog_from_json(json.loads(p.read_text()))
