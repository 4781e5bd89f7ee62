"""Generation of the near-semiring: endomorphisms, affine maps, closure, tables.

The pipeline is: enumerate End(B_n), form the affine maps g + constant,
close them under pointwise addition, then freeze the result as dense
index tables with the external zero adjoined at index 0.  Every stage is
deterministic, so two builds for the same n produce identical tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .brandt import Brandt
from .errors import GenerationError, ValidationError
from .maps import (
    MapTable,
    ConstTheta,
    Const,
    NSupport,
    Other,
    Singleton,
    canonical_name,
    classify,
    map_add,
)


def brandt_generators(bn: Brandt) -> list[int]:
    """The fixed additive generating set: (1,2), (2,3), ..., (n,1)."""
    n = bn.n
    if n == 1:
        return [bn.pair_code(1, 1)]
    gens = [bn.pair_code(i, i + 1) for i in range(1, n)]
    gens.append(bn.pair_code(n, 1))
    return gens


def additively_generates(bn: Brandt, gens: list[int]) -> bool:
    """Whether the additive closure of the given codes is all of B_n.

    False for n = 1: (1,1) + (1,1) = (1,1), so theta is never reached and
    the generator-driven search cannot be used there.
    """
    add = bn.add_table
    seen = set(gens)
    frontier = list(seen)
    while frontier:
        new = []
        for a in frontier:
            for b in list(seen):
                for s in (add[a][b], add[b][a]):
                    if s not in seen:
                        seen.add(s)
                        new.append(s)
        frontier = new
    return len(seen) == bn.size


def _is_endomorphism(bn: Brandt, f: MapTable) -> bool:
    add = bn.add_table
    return all(
        f[add[a][b]] == add[f[a]][f[b]]
        for a in range(bn.size)
        for b in range(bn.size)
    )


def endomorphisms_bruteforce(bn: Brandt) -> list[MapTable]:
    """All additive endomorphisms by scanning every self-map; n <= 2 only."""
    if bn.n > 2:
        raise ValueError("brute force over (n^2+1)^(n^2+1) maps is for n <= 2")
    out = [f for f in product(range(bn.size), repeat=bn.size) if _is_endomorphism(bn, f)]
    return sorted(out)


def endomorphisms(bn: Brandt) -> list[MapTable]:
    """All additive endomorphisms of B_n, sorted by table.

    For n >= 2 the images of the generating set determine the map, and
    partial assignments are extended by forced sums and pruned on any
    violated instance of (a+b)g = ag + bg.  For n = 1 the generating set
    does not reach theta, so the four self-maps are scanned directly.
    """
    if bn.n == 1:
        return endomorphisms_bruteforce(bn)

    size = bn.size
    add = bn.add_table
    gens = brandt_generators(bn)
    if not additively_generates(bn, gens):
        raise GenerationError("generating set does not reach all of B_n")

    img = [-1] * size
    known: list[int] = []
    results: list[MapTable] = []

    def assign(x: int, v: int, trail: list[int]) -> bool:
        wl = [(x, v)]
        while wl:
            a, b = wl.pop()
            cur = img[a]
            if cur >= 0:
                if cur != b:
                    return False
                continue
            img[a] = b
            trail.append(a)
            known.append(a)
            fa = img[a]
            for k in known:
                fk = img[k]
                wl.append((add[a][k], add[fa][fk]))
                wl.append((add[k][a], add[fk][fa]))
        return True

    def backtrack(gi: int) -> None:
        if gi == len(gens):
            if -1 in img:
                raise GenerationError("propagation left an image undetermined")
            results.append(tuple(img))
            return
        g = gens[gi]
        if img[g] >= 0:
            backtrack(gi + 1)
            return
        for v in range(size):
            trail: list[int] = []
            if assign(g, v, trail):
                backtrack(gi + 1)
            for a in reversed(trail):
                img[a] = -1
            del known[len(known) - len(trail):]

    backtrack(0)
    out = sorted(set(results))
    bad = [f for f in out if not _is_endomorphism(bn, f)]
    if bad:
        raise GenerationError("propagation admitted a non-endomorphism")
    return out


def affine_maps(bn: Brandt, endos: list[MapTable] | None = None) -> list[MapTable]:
    """Deduplicated maps of the form g + constant, g an endomorphism."""
    if endos is None:
        endos = endomorphisms(bn)
    add = bn.add_table
    out = {tuple(add[gx][c] for gx in g) for g in endos for c in range(bn.size)}
    return sorted(out)


def additive_closure(bn: Brandt, gens: list[MapTable]) -> list[MapTable]:
    """Closure of the given maps under pointwise addition, in first-seen order."""
    if not gens:
        raise ValueError("need at least one generator")
    addnp = np.asarray(bn.add_table, dtype=np.int64)
    ordered = sorted(set(gens))
    seen = set(ordered)
    out = list(ordered)
    frontier = list(ordered)
    while frontier:
        all_rows = np.asarray(out, dtype=np.int64)
        new: list[MapTable] = []
        for f in frontier:
            frow = np.asarray(f, dtype=np.int64)
            sums = np.concatenate([addnp[frow, all_rows], addnp[all_rows, frow]])
            for row in sums:
                t = tuple(row.tolist())
                if t not in seen:
                    seen.add(t)
                    out.append(t)
                    new.append(t)
        frontier = new
    return out


def count_formula(n: int) -> int:
    """The closed-form nonzero element count; valid for n >= 2."""
    return (math.factorial(n) + 1) * n * n + n ** 4 + 1


@dataclass
class NearSemiringTable:
    """The finished algebra: elements, names, and dense operation tables.

    Index 0 is the adjoined zero (additive identity, multiplicative
    absorber); every other index is a map table.  add and mul are
    (size x size) index arrays.
    """

    n: int
    bn: Brandt
    elements: list[MapTable | None]
    names: list[str]
    add: np.ndarray
    mul: np.ndarray
    breakdown: dict[str, int]
    zero_idx: int = 0
    xi_theta_idx: int = 1
    name_to_index: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.name_to_index:
            self.name_to_index = {nm: i for i, nm in enumerate(self.names)}

    @property
    def size(self) -> int:
        return len(self.elements)

    def index_of(self, f: MapTable) -> int:
        return self.elements.index(f)


def classify_all(bn: Brandt, maps: list[MapTable]) -> dict[str, int]:
    counts = {"constants": 0, "singletons": 0, "n_support": 0}
    for f in maps:
        form = classify(bn, f)
        if isinstance(form, (ConstTheta, Const)):
            counts["constants"] += 1
        elif isinstance(form, Singleton):
            counts["singletons"] += 1
        elif isinstance(form, NSupport):
            counts["n_support"] += 1
        else:
            raise GenerationError(f"closure produced an unclassifiable map: {f}")
    return counts


def build_nsr(n: int) -> NearSemiringTable:
    """Build and validate the full operation tables for the given n."""
    bn = Brandt(n)
    endos = endomorphisms(bn)
    aff = affine_maps(bn, endos)
    closure = sorted(additive_closure(bn, aff))
    breakdown = classify_all(bn, closure)

    elements: list[MapTable | None] = [None] + closure
    names = ["0"] + [canonical_name(bn, f) for f in closure]
    m = len(elements)

    rows = np.asarray(closure, dtype=np.int64)
    addnp = np.asarray(bn.add_table, dtype=np.int64)
    index = {f: i + 1 for i, f in enumerate(closure)}

    add = np.zeros((m, m), dtype=np.int32)
    mul = np.zeros((m, m), dtype=np.int32)
    add[0, :] = np.arange(m)
    add[:, 0] = np.arange(m)
    for i, f in enumerate(closure):
        frow = rows[i]
        sums = addnp[frow, rows]
        comps = rows[:, frow]
        try:
            add[i + 1, 1:] = [index[tuple(r.tolist())] for r in sums]
            mul[i + 1, 1:] = [index[tuple(r.tolist())] for r in comps]
        except KeyError as exc:
            raise GenerationError("operation escaped the element set") from exc

    if names[1] != "c:t":
        raise GenerationError("constant-theta map is not at index 1")

    tbl = NearSemiringTable(
        n=n, bn=bn, elements=elements, names=names,
        add=add, mul=mul, breakdown=breakdown,
    )
    validate_nsr(tbl)
    return tbl


def validate_nsr(tbl: NearSemiringTable) -> None:
    """Check every structural invariant of a finished table; raises on failure.

    Covers: table shape and index range, unique canonical names that match
    the stored maps, zero laws, associativity of both operations, and left
    distributivity.  All checks are exhaustive.
    """
    m = tbl.size
    add, mul = tbl.add, tbl.mul
    for name, t in (("add", add), ("mul", mul)):
        if t.shape != (m, m):
            raise ValidationError(f"{name} table has shape {t.shape}, want ({m},{m})")
        if t.min() < 0 or t.max() >= m:
            raise ValidationError(f"{name} table entries out of range")

    if len(set(tbl.names)) != m:
        raise ValidationError("duplicate element names")
    if tbl.names[0] != "0" or tbl.elements[0] is not None:
        raise ValidationError("index 0 must be the adjoined zero")
    for i in range(1, m):
        f = tbl.elements[i]
        if f is None or len(f) != tbl.bn.size:
            raise ValidationError(f"element {i} is not a map table")
        if canonical_name(tbl.bn, f) != tbl.names[i]:
            raise ValidationError(f"element {i} does not match its name {tbl.names[i]}")
    if tbl.names[tbl.xi_theta_idx] != "c:t":
        raise ValidationError("xi_theta_idx does not point at the theta constant")

    idx = np.arange(m)
    if not (np.array_equal(add[0], idx) and np.array_equal(add[:, 0], idx)):
        raise ValidationError("zero is not an additive identity")
    if mul[0].any() or mul[:, 0].any():
        raise ValidationError("zero is not multiplicatively absorbing")

    for name, t in (("add", add), ("mul", mul)):
        for i in range(m):
            if not np.array_equal(t[t[i]], t[i][t]):
                raise ValidationError(f"{name} is not associative (row {i})")

    for i in range(m):
        lhs = mul[i][add]
        rhs = add[np.ix_(mul[i], mul[i])]
        if not np.array_equal(lhs, rhs):
            raise ValidationError(f"left distributivity fails (row {i})")
