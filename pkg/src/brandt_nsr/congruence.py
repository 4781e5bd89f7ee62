"""Congruences on the finished tables, at three compatibility levels.

A congruence is stored as a labeling: labels[x] is the smallest element
index in the class of x.  Compatibility is checked against unary
translations read straight off the operation tables; which translations
apply depends on the mode.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import LatticeTooLarge
from .generation import NearSemiringTable


class CompatibilityMode(str, Enum):
    """Which operations an equivalence must respect.

    PLUS: both additive translations x -> a+x and x -> x+a.
    RIGHT: PLUS together with the right action x -> x*a.
    TWO_SIDED: RIGHT together with x -> a*x, i.e. full congruences.
    """

    PLUS = "plus"
    RIGHT = "right"
    TWO_SIDED = "twosided"


@dataclass(frozen=True)
class Congruence:
    labels: tuple[int, ...]
    mode: CompatibilityMode

    @property
    def num_classes(self) -> int:
        return len(set(self.labels))

    def classes(self) -> list[tuple[int, ...]]:
        by_label: dict[int, list[int]] = {}
        for x, lbl in enumerate(self.labels):
            by_label.setdefault(lbl, []).append(x)
        return [tuple(by_label[k]) for k in sorted(by_label)]

    def together(self, a: int, b: int) -> bool:
        return self.labels[a] == self.labels[b]


def _translations(tbl: NearSemiringTable, mode: CompatibilityMode) -> np.ndarray:
    """Stack of unary translation tables, one per row."""
    parts = [tbl.add, tbl.add.T]
    if mode in (CompatibilityMode.RIGHT, CompatibilityMode.TWO_SIDED):
        parts.append(tbl.mul.T)
    if mode is CompatibilityMode.TWO_SIDED:
        parts.append(tbl.mul)
    return np.concatenate(parts, axis=0).astype(np.int64)


class _UF:
    """Union-find over 0..m-1 with path halving."""

    def __init__(self, m: int):
        self.parent = list(range(m))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True

    def labels(self) -> np.ndarray:
        # union attaches the larger root below the smaller, so every fully
        # resolved pointer is the least element of its class
        p = np.asarray(self.parent, dtype=np.int64)
        while True:
            q = p[p]
            if np.array_equal(q, p):
                return p
            p = q


def _group_firsts(labels: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Sorted order plus, per position, the position of its group's first."""
    order = np.argsort(labels, kind="stable")
    grp = labels[order]
    starts = np.empty(len(labels), dtype=bool)
    starts[0] = True
    starts[1:] = grp[1:] != grp[:-1]
    firsts = np.maximum.accumulate(np.where(starts, np.arange(len(labels)), 0))
    return order, firsts


def congruence_closure(
    tbl: NearSemiringTable,
    pairs: Iterable[tuple[int, int]],
    mode: CompatibilityMode,
    translations: np.ndarray | None = None,
) -> Congruence:
    """Least mode-compatible equivalence containing the given pairs.

    Round-based fixpoint: group elements by label, push every group through
    every translation, and merge the label mismatches that appear.  Each
    round is fully vectorized; rounds repeat until nothing merges.  Callers
    running many closures should precompute translations once and pass it.
    """
    m = tbl.size
    trans = _translations(tbl, mode) if translations is None else translations
    uf = _UF(m)
    for a, b in pairs:
        uf.union(a, b)
    labels = uf.labels()
    while True:
        if (labels == labels[0]).all():
            break
        order, firsts = _group_firsts(labels)
        timg = labels[trans[:, order]]
        rep = timg[:, firsts]
        mask = timg != rep
        if not mask.any():
            break
        enc = np.unique(timg[mask].astype(np.int64) * m + rep[mask])
        for code in enc.tolist():
            uf.union(code // m, code % m)
        labels = uf.labels()
    return Congruence(labels=tuple(int(x) for x in labels), mode=mode)


def congruence_closure_reference(
    tbl: NearSemiringTable,
    pairs: Iterable[tuple[int, int]],
    mode: CompatibilityMode,
) -> Congruence:
    """Worklist-of-pairs closure, kept as a slow cross-check for the fast one.

    Whenever a pair actually merges two classes, its image under every
    translation is queued.  Compositions of translations are covered by the
    cascade, so the drained queue leaves a translation-closed equivalence.
    """
    m = tbl.size
    trans = [tuple(int(v) for v in row) for row in _translations(tbl, mode)]
    uf = _UF(m)
    queue = deque(pairs)
    while queue:
        a, b = queue.popleft()
        if not uf.union(a, b):
            continue
        for t in trans:
            queue.append((t[a], t[b]))
    return Congruence(labels=tuple(int(x) for x in uf.labels()), mode=mode)


def is_congruence(
    tbl: NearSemiringTable,
    labels: Sequence[int],
    mode: CompatibilityMode,
) -> bool:
    """Whether the labeling is compatible with every translation of the mode."""
    lab = np.asarray(labels, dtype=np.int64)
    if lab.shape != (tbl.size,):
        raise ValueError("labeling has the wrong length")
    trans = _translations(tbl, mode)
    order, firsts = _group_firsts(lab)
    timg = lab[trans[:, order]]
    rep = timg[:, firsts]
    return bool((timg == rep).all())


def equality_congruence(tbl: NearSemiringTable, mode: CompatibilityMode) -> Congruence:
    return Congruence(labels=tuple(range(tbl.size)), mode=mode)


def universal_congruence(tbl: NearSemiringTable, mode: CompatibilityMode) -> Congruence:
    return Congruence(labels=(0,) * tbl.size, mode=mode)


def principal_with_pairs(
    tbl: NearSemiringTable, mode: CompatibilityMode
) -> Iterator[tuple[tuple[int, int], Congruence]]:
    """Every Cg(a, b) for a < b, with its generating pair."""
    trans = _translations(tbl, mode)
    for a in range(tbl.size):
        for b in range(a + 1, tbl.size):
            yield (a, b), congruence_closure(tbl, [(a, b)], mode, translations=trans)


def principal_congruences(
    tbl: NearSemiringTable, mode: CompatibilityMode
) -> list[Congruence]:
    """Distinct principal congruences, finest first."""
    out = {c for _, c in principal_with_pairs(tbl, mode)}
    return sorted(out, key=lambda c: (-c.num_classes, c.labels))


def join(
    tbl: NearSemiringTable,
    a: Congruence,
    b: Congruence,
    translations: np.ndarray | None = None,
) -> Congruence:
    if a.mode is not b.mode:
        raise ValueError("cannot join congruences of different modes")
    pairs = [(x, a.labels[x]) for x in range(tbl.size)]
    pairs += [(x, b.labels[x]) for x in range(tbl.size)]
    return congruence_closure(tbl, pairs, a.mode, translations=translations)


def congruence_lattice(
    tbl: NearSemiringTable,
    mode: CompatibilityMode,
    limit: int | None = None,
) -> list[Congruence]:
    """The whole lattice: join closure of the principals plus equality.

    Every congruence is a join of principal ones, so breadth-first joining
    reaches everything.  If limit is given and the lattice exceeds it,
    LatticeTooLarge is raised rather than grinding on.
    """
    trans = _translations(tbl, mode)
    known: set[Congruence] = {equality_congruence(tbl, mode)}
    known.update(principal_congruences(tbl, mode))
    if limit is not None and len(known) > limit:
        raise LatticeTooLarge(
            f"{mode.value} lattice has at least {len(known)} members (limit {limit})"
        )
    frontier = list(known)
    while frontier:
        new: list[Congruence] = []
        for f in frontier:
            for g in list(known):
                j = join(tbl, f, g, translations=trans)
                if j not in known:
                    known.add(j)
                    new.append(j)
                    if limit is not None and len(known) > limit:
                        raise LatticeTooLarge(
                            f"{mode.value} lattice has at least {len(known)} "
                            f"members (limit {limit})"
                        )
        frontier = new
    return sorted(known, key=lambda c: (-c.num_classes, c.labels))


def kernel(tbl: NearSemiringTable, cong: Congruence) -> frozenset[int]:
    """The class of the zero element."""
    z = cong.labels[tbl.zero_idx]
    return frozenset(x for x in range(tbl.size) if cong.labels[x] == z)


def right_ideals(tbl: NearSemiringTable) -> list[frozenset[int]]:
    """All kernels of RIGHT-mode congruences, as element-index sets.

    Any such kernel K equals the kernel of the join of the principal
    congruences Cg(0, x) over x in K, so closing the singleton kernels
    under (A, B) -> kernel(Cg({0} x (A|B))) enumerates them all.
    """
    mode = CompatibilityMode.RIGHT
    trans = _translations(tbl, mode)

    def close(s: frozenset[int]) -> frozenset[int]:
        pairs = [(tbl.zero_idx, x) for x in sorted(s)]
        return kernel(tbl, congruence_closure(tbl, pairs, mode, translations=trans))

    family = {frozenset({tbl.zero_idx})}
    family.update(close(frozenset({x})) for x in range(1, tbl.size))
    frontier = list(family)
    while frontier:
        new = []
        for a in frontier:
            for b in list(family):
                j = close(a | b)
                if j not in family:
                    family.add(j)
                    new.append(j)
        frontier = new
    return sorted(family, key=lambda s: (len(s), sorted(s)))


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1:]
        yield [[head]] + part


def lattice_bruteforce(
    tbl: NearSemiringTable, mode: CompatibilityMode
) -> list[Congruence]:
    """Filter every set partition; exponential, so only for tiny tables."""
    if tbl.size > 8:
        raise ValueError("partition scan is only sane for size <= 8")
    out = []
    for part in _set_partitions(list(range(tbl.size))):
        labels = [0] * tbl.size
        for block in part:
            lo = min(block)
            for x in block:
                labels[x] = lo
        if is_congruence(tbl, labels, mode):
            out.append(Congruence(labels=tuple(labels), mode=mode))
    return sorted(set(out), key=lambda c: (-c.num_classes, c.labels))
