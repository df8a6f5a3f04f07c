"""Explicit permutations and exhaustive enumeration of small groups.

Enumeration is the canonical representation here: every group this package
materializes has order at most 10**6, and full type spectra are needed anyway,
so breadth-first closure over byte-encoded permutations does all the work.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .cycle_types import ClassId, CycleType, Parity, SplitTag, is_split

__all__ = [
    "DEFAULT_CLOSURE_CAP",
    "ClosureCapExceeded",
    "GeneratedGroup",
    "Perm",
    "alt_class_coverage",
    "canonical_split_rep",
    "closure",
    "compose",
    "conjugate",
    "cycle_type_of",
    "cycles_of",
    "direct_product_gens",
    "inverse",
    "perm_parity",
    "split_class_of",
    "sym_gens",
    "type_spectrum",
    "wreath_gens",
]

DEFAULT_CLOSURE_CAP = 10**6


class ClosureCapExceeded(RuntimeError):
    """Raised when a breadth-first closure would exceed its element cap."""


class Perm:
    """A permutation of {0..n-1} stored as its image tuple.

    Points are 0-indexed internally; cycle input/output is 1-indexed to match
    the usual written notation.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(images)
        n = len(imgs)
        if n == 0 or sorted(imgs) != list(range(n)):
            raise ValueError(f"not a bijection on 0..{n - 1}: {imgs}")
        self.images = imgs

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> "Perm":
        """Build from 1-indexed disjoint cycles; omitted points are fixed."""
        images = list(range(n))
        for cyc in cycles:
            pts = [p - 1 for p in cyc]
            if any(not 0 <= p < n for p in pts) or len(set(pts)) != len(pts):
                raise ValueError(f"bad cycle {list(cyc)} for degree {n}")
            for i, p in enumerate(pts):
                images[p] = pts[(i + 1) % len(pts)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def is_even(self) -> bool:
        return perm_parity(self) is Parity.EVEN

    def __repr__(self) -> str:
        cycs = [c for c in cycles_of(self) if len(c) > 1]
        if not cycs:
            return f"Perm(id@{self.degree})"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycs)


def compose(a: Perm, b: Perm) -> Perm:
    """a after b: (a*b)(x) = a(b(x))."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    ai = a.images
    return Perm(tuple(ai[x] for x in b.images))


def inverse(a: Perm) -> Perm:
    return a.inverse()


def conjugate(x: Perm, g: Perm) -> Perm:
    """g x g^-1, which relabels every cycle of x through g."""
    if x.degree != g.degree:
        raise ValueError(f"degree mismatch: {x.degree} vs {g.degree}")
    out = [0] * x.degree
    gi = g.images
    xi = x.images
    for j in range(x.degree):
        out[gi[j]] = gi[xi[j]]
    return Perm(out)


def _cycle_lengths(images: Sequence[int]) -> tuple[int, ...]:
    n = len(images)
    seen = bytearray(n)
    lens = []
    for i in range(n):
        if not seen[i]:
            seen[i] = 1
            length = 1
            j = images[i]
            while j != i:
                seen[j] = 1
                length += 1
                j = images[j]
            lens.append(length)
    lens.sort(reverse=True)
    return tuple(lens)


def cycles_of(a: Perm) -> list[list[int]]:
    """Disjoint cycles (0-indexed), each starting at its least point."""
    images = a.images
    n = len(images)
    seen = bytearray(n)
    out = []
    for i in range(n):
        if not seen[i]:
            seen[i] = 1
            cyc = [i]
            j = images[i]
            while j != i:
                seen[j] = 1
                cyc.append(j)
                j = images[j]
            out.append(cyc)
    return out


def cycle_type_of(a: Perm) -> CycleType:
    """Multiset of orbit lengths, fixed points included as parts of size 1."""
    return CycleType(_cycle_lengths(a.images))


def perm_parity(a: Perm) -> Parity:
    lens = _cycle_lengths(a.images)
    return Parity.EVEN if (a.degree - len(lens)) % 2 == 0 else Parity.ODD


def _parity_of_images(images: Sequence[int]) -> int:
    # 0 for even, 1 for odd
    return (len(images) - len(_cycle_lengths(images))) & 1


class GeneratedGroup:
    """A fully materialized permutation group with deterministic element order."""

    __slots__ = ("degree", "generators", "_elements", "_spectrum")

    def __init__(self, degree: int, generators: tuple[Perm, ...], elements: tuple[bytes, ...]):
        self.degree = degree
        self.generators = generators
        self._elements = elements
        self._spectrum: frozenset[CycleType] | None = None

    @property
    def order(self) -> int:
        return len(self._elements)

    def element_images(self) -> tuple[bytes, ...]:
        """Raw image arrays in discovery order; identity first."""
        return self._elements

    def elements(self) -> Iterator[Perm]:
        for eb in self._elements:
            yield Perm(eb)

    def all_even(self) -> bool:
        return all(_parity_of_images(eb) == 0 for eb in self.generators_images())

    def generators_images(self) -> list[bytes]:
        return [bytes(g.images) for g in self.generators]

    def __repr__(self) -> str:
        return f"GeneratedGroup(degree={self.degree}, order={self.order})"


def closure(degree: int, gens: Sequence[Perm], cap: int = DEFAULT_CLOSURE_CAP) -> GeneratedGroup:
    """Breadth-first closure of the generators; raises ClosureCapExceeded past cap.

    Same generators always produce the same element order.
    """
    if degree > 255:
        raise ValueError("degrees above 255 are out of scope")
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator degree {g.degree} != {degree}")
    tables = [bytes(g.images) + bytes(range(degree, 256)) for g in gens]
    ident = bytes(range(degree))
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for t in tables:
                f = e.translate(t)
                if f not in seen:
                    if len(seen) >= cap:
                        raise ClosureCapExceeded(
                            f"closure exceeds cap {cap} (degree {degree}, {len(gens)} generators)"
                        )
                    seen.add(f)
                    order.append(f)
                    nxt.append(f)
        frontier = nxt
    return GeneratedGroup(degree, tuple(gens), tuple(order))


def type_spectrum(g: GeneratedGroup) -> frozenset[CycleType]:
    """The set of cycle types realized by elements of the group."""
    if g._spectrum is None:
        seen: set[tuple[int, ...]] = set()
        for eb in g._elements:
            seen.add(_cycle_lengths(eb))
        g._spectrum = frozenset(CycleType(p) for p in seen)
    return g._spectrum


def canonical_split_rep(t: CycleType) -> Perm:
    """The PLUS representative of a split type: cycles filled with 1..n in order,
    longest cycle first."""
    if not is_split(t):
        raise ValueError(f"type {t} does not split")
    images = list(range(t.n))
    base = 0
    for length in t.parts:
        for i in range(length):
            images[base + i] = base + (i + 1) % length
        base += length
    return Perm(images)


def _split_tag_of_images(images: Sequence[int], parts: tuple[int, ...]) -> SplitTag:
    # Align the canonical representative's cycles with this element's cycles;
    # the aligning permutation's parity is well defined because all parts are
    # distinct and odd, so the centralizer is even.
    n = len(images)
    seen = bytearray(n)
    cycles: list[list[int]] = []
    for i in range(n):
        if not seen[i]:
            seen[i] = 1
            cyc = [i]
            j = images[i]
            while j != i:
                seen[j] = 1
                cyc.append(j)
                j = images[j]
            cycles.append(cyc)
    cycles.sort(key=len, reverse=True)
    target: list[int] = []
    for cyc in cycles:
        target.extend(cyc)
    return SplitTag.PLUS if _parity_of_images(target) == 0 else SplitTag.MINUS


def split_class_of(x: Perm) -> ClassId:
    """Which of the two A_n classes of its (split) type x belongs to.

    The canonical representative gets PLUS; its conjugate by the transposition
    (1 2) gets MINUS.
    """
    t = cycle_type_of(x)
    if not is_split(t):
        raise ValueError(f"type {t} does not split")
    return ClassId(t, _split_tag_of_images(x.images, t.parts))


def alt_class_coverage(g: GeneratedGroup) -> frozenset[ClassId]:
    """All A_n classes met by a group of even permutations.

    Raises if any element is odd; intersect with the alternating group first.
    """
    cover: set[ClassId] = set()
    done_nonsplit: set[tuple[int, ...]] = set()
    split_done: set[tuple[int, ...]] = set()
    for eb in g._elements:
        lens = _cycle_lengths(eb)
        if (g.degree - len(lens)) & 1:
            raise ValueError("group contains odd permutations; intersect with A_n first")
        if len(set(lens)) == len(lens) and all(p % 2 == 1 for p in lens):
            if lens in split_done:
                continue
            tag = _split_tag_of_images(eb, lens)
            cover.add(ClassId(CycleType(lens), tag))
            other = SplitTag.MINUS if tag is SplitTag.PLUS else SplitTag.PLUS
            if ClassId(CycleType(lens), other) in cover:
                split_done.add(lens)
        elif lens not in done_nonsplit:
            done_nonsplit.add(lens)
            cover.add(ClassId(CycleType(lens)))
    return frozenset(cover)


def sym_gens(n: int) -> list[Perm]:
    """Standard generators of S_n: a transposition and an n-cycle."""
    if n < 2:
        return [Perm.identity(max(n, 1))]
    gens = [Perm.from_cycles(n, [[1, 2]])]
    if n > 2:
        gens.append(Perm.from_cycles(n, [list(range(1, n + 1))]))
    return gens


def direct_product_gens(n: int, k: int) -> list[Perm]:
    """Generators of the stabilizer of {1..k}, acting as S_k x S_{n-k}."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= {n - 1}, got {k}")
    gens = []
    if k >= 2:
        gens.append(Perm.from_cycles(n, [[1, 2]]))
        if k > 2:
            gens.append(Perm.from_cycles(n, [list(range(1, k + 1))]))
    if n - k >= 2:
        gens.append(Perm.from_cycles(n, [[k + 1, k + 2]]))
        if n - k > 2:
            gens.append(Perm.from_cycles(n, [list(range(k + 1, n + 1))]))
    return gens


def wreath_gens(n: int, b: int, c: int) -> list[Perm]:
    """Generators of S_b wr S_c preserving the blocks {1..b}, {b+1..2b}, ..."""
    if b < 2 or c < 2 or b * c != n:
        raise ValueError(f"need b, c >= 2 with b*c == {n}, got b={b}, c={c}")
    gens = [Perm.from_cycles(n, [[1, 2]])]
    if b > 2:
        gens.append(Perm.from_cycles(n, [list(range(1, b + 1))]))
    # swap first two blocks
    gens.append(Perm([(i + b) % (2 * b) if i < 2 * b else i for i in range(n)]))
    if c > 2:
        # cycle all blocks
        gens.append(Perm([(i + b) % n for i in range(n)]))
    return gens
