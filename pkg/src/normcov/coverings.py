"""Basic sets for normal coverings: verification, construction, exact minima.

A basic set is a list of pairwise non-conjugate proper subgroup classes whose
conjugates, together, meet every conjugacy class of the group. Verification is
exact over the class universe; the minimum size over a complete catalog is
found by branch-and-bound set cover.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .cycle_types import ClassId, GroupId, GroupKind, class_universe
from .numtheory import euler_phi, is_prime
from .subgroups import (
    Catalog,
    CatalogError,
    FullAlternating,
    Imprimitive,
    IntersectAlt,
    Intransitive,
    NamedGroup,
    SubgroupDescriptor,
    class_coverage,
    descriptor_from_json,
    descriptor_sort_key,
    descriptor_to_json,
)

__all__ = [
    "BasicSet",
    "CoverReport",
    "GammaResult",
    "all_minimum_covers",
    "construct_delta",
    "delta_families",
    "exact_gamma",
    "mandatory_components",
    "verify_basic_set",
]


@dataclass(frozen=True)
class BasicSet:
    """A proposed basic set: component subgroup classes for one group."""

    group: GroupId
    components: tuple[SubgroupDescriptor, ...]
    provenance: str = ""
    expected_size: int | None = None

    def __post_init__(self) -> None:
        if not self.components:
            raise ValueError("a basic set needs at least one component")
        if len(set(self.components)) != len(self.components):
            raise ValueError("components must be pairwise distinct")
        for d in self.components:
            if d.degree != self.group.degree:
                raise ValueError(f"component {d} does not act on {self.group.degree} points")
            if self.group.kind is GroupKind.ALT and isinstance(d, FullAlternating):
                raise ValueError("A_n is the whole group for alternating degrees")

    def to_json(self) -> dict:
        obj = {
            "group": self.group.name,
            "components": [descriptor_to_json(d) for d in self.components],
            "provenance": self.provenance,
        }
        if self.expected_size is not None:
            obj["expected_size"] = self.expected_size
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "BasicSet":
        group = GroupId.parse(obj["group"])
        comps = tuple(descriptor_from_json(c, group.degree) for c in obj["components"])
        return cls(
            group=group,
            components=comps,
            provenance=str(obj.get("provenance", "")),
            expected_size=obj.get("expected_size"),
        )


@dataclass
class CoverReport:
    """Outcome of verifying one basic set against the full class universe."""

    group: GroupId
    covered: bool
    uncovered: tuple[ClassId, ...]
    coverage_matrix: dict[SubgroupDescriptor, frozenset[ClassId]]

    def to_json(self) -> dict:
        return {
            "group": self.group.name,
            "covered": self.covered,
            "uncovered": [str(c) for c in self.uncovered],
            "coverage": {
                str(d): sorted(str(c) for c in cov) for d, cov in self.coverage_matrix.items()
            },
        }


def verify_basic_set(b: BasicSet, threads: int = 1) -> CoverReport:
    """Exact coverage check of the basic set over every conjugacy class."""
    universe = class_universe(b.group)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            covers = list(pool.map(lambda d: class_coverage(d, b.group), b.components))
    else:
        covers = [class_coverage(d, b.group) for d in b.components]
    matrix = dict(zip(b.components, covers))
    hit: set[ClassId] = set().union(*covers) if covers else set()
    uncovered = tuple(c for c in universe if c not in hit)
    return CoverReport(
        group=b.group,
        covered=not uncovered,
        uncovered=uncovered,
        coverage_matrix=matrix,
    )


# --- named constructions ------------------------------------------------


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _least_prime_divisor(n: int) -> int:
    p = 2
    while n % p:
        p += 1
    return p


def _kind(group: str | GroupKind) -> GroupKind:
    if isinstance(group, GroupKind):
        return group
    low = str(group).lower()
    if low in ("sym", "s"):
        return GroupKind.SYM
    if low in ("alt", "a"):
        return GroupKind.ALT
    raise ValueError(f"unknown group kind {group!r}")


def _coprime_ks(n: int, ps: tuple[int, ...]) -> list[int]:
    return [k for k in range(1, (n + 1) // 2) if 2 * k < n and all(k % p for p in ps)]


def _wrap_all(comps: list[SubgroupDescriptor]) -> list[SubgroupDescriptor]:
    return [IntersectAlt(d) for d in comps]


def _delta_upper_sym(n: int, big_blocks: bool = False) -> BasicSet:
    _require(n >= 4 and not is_prime(n), f"n must be composite and >= 4, got {n}")
    p = _least_prime_divisor(n)
    wreath = Imprimitive(n, n // p, p) if big_blocks else Imprimitive(n, p, n // p)
    comps: list[SubgroupDescriptor] = [wreath]
    comps += [Intransitive(n, k) for k in _coprime_ks(n, (p,))]
    if n % 2 == 0:
        size = (n + 4) // 4
    else:
        size = 1 + n * (p - 1) // (2 * p)
    return BasicSet(
        group=GroupId.sym(n),
        components=tuple(comps),
        provenance=f"upper_sym(n={n}, p={p}{', big blocks' if big_blocks else ''})",
        expected_size=size,
    )


def _delta_upper_alt_even(n: int, big_blocks: bool = False) -> BasicSet:
    _require(n >= 4 and n % 2 == 0, f"n must be even and >= 4, got {n}")
    sym = _delta_upper_sym(n, big_blocks=big_blocks)
    return BasicSet(
        group=GroupId.alt(n),
        components=tuple(_wrap_all(list(sym.components))),
        provenance=f"upper_alt_even(n={n}{', big blocks' if big_blocks else ''})",
        expected_size=sym.expected_size,
    )


def _delta_upper_alt_odd(n: int) -> BasicSet:
    _require(n >= 5 and n % 2 == 1, f"n must be odd and >= 5, got {n}")
    if is_prime(n):
        k_top: SubgroupDescriptor = NamedGroup(n, f"AGL1({n})")
    else:
        q = _least_prime_divisor(n)
        k_top = Imprimitive(n, q, n // q)
    comps: list[SubgroupDescriptor] = [IntersectAlt(k_top)]
    comps += [IntersectAlt(Intransitive(n, k)) for k in range(1, n // 3 + 1)]
    return BasicSet(
        group=GroupId.alt(n),
        components=tuple(comps),
        provenance=f"upper_alt_odd(n={n})",
        expected_size=(n + 3) // 3,
    )


def _delta_sym_prime(p: int) -> BasicSet:
    _require(is_prime(p) and p >= 5, f"p must be a prime >= 5, got {p}")
    comps: list[SubgroupDescriptor] = [NamedGroup(p, f"AGL1({p})")]
    comps += [Intransitive(p, k) for k in range(2, (p - 1) // 2 + 1)]
    return BasicSet(
        group=GroupId.sym(p),
        components=tuple(comps),
        provenance=f"sym_prime(p={p})",
        expected_size=(p - 1) // 2,
    )


def _delta_prime_power(p: int, alpha: int, group: str | GroupKind = "sym") -> BasicSet:
    _require(is_prime(p), f"p must be prime, got {p}")
    _require(alpha >= 2, f"alpha must be >= 2, got {alpha}")
    n = p**alpha
    _require(n <= 60, f"degree {n} outside enumeration bound")
    comps: list[SubgroupDescriptor] = [Imprimitive(n, p, n // p)]
    comps += [Intransitive(n, k) for k in _coprime_ks(n, (p,))]
    kind = _kind(group)
    size = euler_phi(n) // 2 + 1
    if kind is GroupKind.ALT:
        comps = _wrap_all(comps)
    return BasicSet(
        group=GroupId(kind, n),
        components=tuple(comps),
        provenance=f"prime_power(p={p}, alpha={alpha}, {kind.name.lower()})",
        expected_size=size,
    )


def _delta_two_primes(p: int, q: int, group: str | GroupKind = "sym", big_blocks: bool = False) -> BasicSet:
    _require(is_prime(p) and is_prime(q) and p < q, f"need primes p < q, got p={p}, q={q}")
    n = p * q
    _require(n <= 60, f"degree {n} outside enumeration bound")
    wreath = Imprimitive(n, q, p) if big_blocks else Imprimitive(n, p, q)
    comps: list[SubgroupDescriptor] = [wreath]
    comps += [Intransitive(n, k) for k in _coprime_ks(n, (p, q))]
    kind = _kind(group)
    if kind is GroupKind.ALT:
        comps = _wrap_all(comps)
    return BasicSet(
        group=GroupId(kind, n),
        components=tuple(comps),
        provenance=f"two_primes(p={p}, q={q}, {kind.name.lower()})",
        expected_size=euler_phi(n) // 2 + 1,
    )


def _delta_two_prime_powers(
    p: int, q: int, alpha: int, beta: int, group: str | GroupKind = "sym"
) -> BasicSet:
    _require(is_prime(p) and is_prime(q) and p < q, f"need primes p < q, got p={p}, q={q}")
    _require(alpha >= 1 and beta >= 1, "exponents must be positive")
    _require(alpha + beta >= 3, f"need alpha + beta >= 3, got {alpha + beta}")
    n = p**alpha * q**beta
    _require(n <= 60, f"degree {n} outside enumeration bound")
    comps: list[SubgroupDescriptor] = [Imprimitive(n, p, n // p), Imprimitive(n, q, n // q)]
    comps += [Intransitive(n, k) for k in _coprime_ks(n, (p, q))]
    kind = _kind(group)
    if kind is GroupKind.ALT:
        comps = _wrap_all(comps)
    return BasicSet(
        group=GroupId(kind, n),
        components=tuple(comps),
        provenance=f"two_prime_powers(p={p}, q={q}, alpha={alpha}, beta={beta}, {kind.name.lower()})",
        expected_size=euler_phi(n) // 2 + 2,
    )


def _delta_special_a9() -> BasicSet:
    comps = (
        IntersectAlt(Intransitive(9, 4)),
        NamedGroup(9, "PGammaL2(8)", 1),
        NamedGroup(9, "PGammaL2(8)", 2),
    )
    return BasicSet(GroupId.alt(9), comps, provenance="special_a9", expected_size=3)


def _delta_special_s10() -> BasicSet:
    comps = (Imprimitive(10, 2, 5), Intransitive(10, 3), Intransitive(10, 1))
    return BasicSet(GroupId.sym(10), comps, provenance="special_s10", expected_size=3)


def _delta_special_a11() -> BasicSet:
    comps = (
        IntersectAlt(Intransitive(11, 1)),
        IntersectAlt(Intransitive(11, 2)),
        IntersectAlt(Intransitive(11, 3)),
        NamedGroup(11, "M11", 1),
    )
    return BasicSet(GroupId.alt(11), comps, provenance="special_a11", expected_size=4)


_FAMILIES = {
    "upper_sym": _delta_upper_sym,
    "upper_alt_even": _delta_upper_alt_even,
    "upper_alt_odd": _delta_upper_alt_odd,
    "sym_prime": _delta_sym_prime,
    "prime_power": _delta_prime_power,
    "two_primes": _delta_two_primes,
    "two_prime_powers": _delta_two_prime_powers,
    "special_a9": _delta_special_a9,
    "special_s10": _delta_special_s10,
    "special_a11": _delta_special_a11,
}


def delta_families() -> list[str]:
    return sorted(_FAMILIES)


def construct_delta(family: str, **params) -> BasicSet:
    """Build one of the named basic-set constructions.

    Hypotheses are validated strictly; a violated condition raises ValueError
    naming the condition.
    """
    builder = _FAMILIES.get(family)
    if builder is None:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(delta_families())}")
    return builder(**params)


# --- exact minimum over a catalog ----------------------------------------


def _coverage_rows(g: GroupId, catalog: Catalog):
    universe = class_universe(g)
    index = {cid: i for i, cid in enumerate(universe)}
    descs = sorted(catalog.descriptors, key=descriptor_sort_key)
    rows = []
    for d in descs:
        mask = 0
        for cid in class_coverage(d, g):
            mask |= 1 << index[cid]
        rows.append(mask)
    full = (1 << len(universe)) - 1
    return universe, descs, rows, full


def mandatory_components(g: GroupId, c: Catalog) -> tuple[SubgroupDescriptor, ...]:
    """Descriptors that are the unique coverer of some class.

    Every basic set over the catalog must contain them. Requires a complete
    catalog; on an incomplete one the notion is meaningless.
    """
    if c.group != g:
        raise ValueError(f"catalog is for {c.group}, not {g}")
    if not c.complete:
        raise CatalogError("mandatory components need a complete catalog")
    universe, descs, rows, _ = _coverage_rows(g, c)
    forced: list[SubgroupDescriptor] = []
    for i in range(len(universe)):
        bit = 1 << i
        coverers = [j for j, row in enumerate(rows) if row & bit]
        if not coverers:
            raise CatalogError(f"class {universe[i]} is covered by no catalog member")
        if len(coverers) == 1 and descs[coverers[0]] not in forced:
            forced.append(descs[coverers[0]])
    return tuple(sorted(forced, key=descriptor_sort_key))


@dataclass(frozen=True)
class GammaResult:
    """Result of the exact set cover: the minimum size and one witness."""

    gamma: int
    witness: BasicSet
    exact: bool


def _greedy_size(rows: list[int], start_mask: int, full: int, start_count: int) -> int:
    covered = start_mask
    count = start_count
    while covered != full:
        best = max(rows, key=lambda r: bin(r & ~covered).count("1"))
        gain = bin(best & ~covered).count("1")
        if gain == 0:
            raise CatalogError("catalog cannot cover the class universe")
        covered |= best
        count += 1
    return count


def _min_cover_size(rows: list[int], full: int, seed_mask: int, seed_count: int) -> int:
    """Branch and bound: branch on the scarcest uncovered class."""
    n_rows = len(rows)
    best = _greedy_size(rows, seed_mask, full, seed_count)
    max_gain = max((bin(r).count("1") for r in rows), default=0)

    def walk(covered: int, chosen: int) -> None:
        nonlocal best
        if covered == full:
            best = min(best, chosen)
            return
        remaining = bin(full & ~covered).count("1")
        if chosen + (remaining + max_gain - 1) // max_gain >= best:
            return
        # scarcest uncovered class
        scarce_bit = 0
        scarce = None
        probe = full & ~covered
        while probe:
            bit = probe & -probe
            probe &= probe - 1
            cands = [j for j in range(n_rows) if rows[j] & bit]
            if scarce is None or len(cands) < len(scarce):
                scarce, scarce_bit = cands, bit
                if len(cands) <= 1:
                    break
        if not scarce:
            return
        for j in scarce:
            walk(covered | rows[j], chosen + 1)

    walk(seed_mask, seed_count)
    return best


def exact_gamma(g: GroupId, c: Catalog) -> GammaResult:
    """Minimum number of catalog classes whose coverage is the whole universe.

    With a complete catalog this is the exact minimal basic set size; with an
    incomplete catalog it is only an upper bound and the result says so. Ties
    among optimal witnesses are broken by the lexicographic descriptor order.
    """
    if c.group != g:
        raise ValueError(f"catalog is for {c.group}, not {g}")
    universe, descs, rows, full = _coverage_rows(g, c)
    union = 0
    for row in rows:
        union |= row
    if union != full:
        missing = [str(universe[i]) for i in range(len(universe)) if not (union >> i) & 1]
        raise CatalogError(f"catalog cannot cover classes {', '.join(missing)}; catalog data error")

    # seed with the forced components
    seed_mask = 0
    seed = set()
    for i in range(len(universe)):
        bit = 1 << i
        coverers = [j for j, row in enumerate(rows) if row & bit]
        if len(coverers) == 1:
            seed.add(coverers[0])
    for j in seed:
        seed_mask |= rows[j]
    gamma = _min_cover_size(rows, full, seed_mask, len(seed))

    witness = None
    if comb(len(rows), gamma) <= 200_000:
        for combo in combinations(range(len(rows)), gamma):
            m = 0
            for j in combo:
                m |= rows[j]
            if m == full:
                witness = combo
                break
    if witness is None:
        # very large catalogs: rerun the search recording one optimal solution
        witness = _first_cover_of_size(rows, full, gamma)
    basic = BasicSet(
        group=g,
        components=tuple(descs[j] for j in witness),
        provenance="exact set cover minimum",
    )
    return GammaResult(gamma=gamma, witness=basic, exact=c.complete)


def _first_cover_of_size(rows: list[int], full: int, size: int):
    n_rows = len(rows)

    def walk(start: int, covered: int, chosen: tuple[int, ...]):
        if covered == full:
            return chosen
        if len(chosen) == size:
            return None
        for j in range(start, n_rows):
            got = walk(j + 1, covered | rows[j], chosen + (j,))
            if got:
                return got
        return None

    found = walk(0, 0, ())
    if found is None:
        raise CatalogError("internal set cover inconsistency")
    return found


def all_minimum_covers(g: GroupId, c: Catalog) -> list[tuple[SubgroupDescriptor, ...]]:
    """Every optimal covering subset, in lexicographic descriptor order."""
    result = exact_gamma(g, c)
    universe, descs, rows, full = _coverage_rows(g, c)
    out = []
    for combo in combinations(range(len(rows)), result.gamma):
        m = 0
        for j in combo:
            m |= rows[j]
        if m == full:
            out.append(tuple(descs[j] for j in combo))
    return out
