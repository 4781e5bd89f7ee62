"""The constant-map action structure, annihilators, and the radical report.

The carrier built here is the zero together with all constant maps.  It is
closed under right multiplication by the whole algebra, and that action is
what the radical values hang off: every radical in the report reduces to
facts about this carrier, the right-ideal kernels, and left identities, each
of which is checked exhaustively against the tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .congruence import (
    CompatibilityMode,
    Congruence,
    is_congruence,
    kernel,
    right_ideals,
)
from .errors import ValidationError
from .generation import NearSemiringTable


@dataclass(frozen=True, eq=False)
class ActionStructure:
    """A carrier with addition and a right action of the full algebra.

    carrier holds algebra indices, position 0 being the zero.  act maps
    (carrier position, algebra index) to a carrier position; plus is the
    carrier's internal addition, also in positions.
    """

    carrier: tuple[int, ...]
    act: np.ndarray
    plus: np.ndarray

    @property
    def size(self) -> int:
        return len(self.carrier)

    @property
    def zero_pos(self) -> int:
        return 0


def build_C(tbl: NearSemiringTable) -> ActionStructure:
    """The zero plus all constant maps, with the induced operations.

    Raises ValidationError if the carrier is not action-closed or any of
    the action axioms s(a+b) = sa+sb, s(ab) = (sa)b, s0 = 0 fails; such a
    failure means the underlying tables are corrupt.
    """
    carrier = [tbl.zero_idx] + [
        i for i, nm in enumerate(tbl.names) if nm.startswith("c:")
    ]
    carrier.sort()
    expected = tbl.n ** 2 + 2
    if len(carrier) != expected:
        raise ValidationError(
            f"carrier has {len(carrier)} elements, want {expected}"
        )
    pos = {e: p for p, e in enumerate(carrier)}
    m = tbl.size
    k = len(carrier)

    act = np.empty((k, m), dtype=np.int32)
    plus = np.empty((k, k), dtype=np.int32)
    for p, e in enumerate(carrier):
        for a in range(m):
            prod = int(tbl.mul[e, a])
            if prod not in pos:
                raise ValidationError("carrier is not closed under the action")
            act[p, a] = pos[prod]
        for q, e2 in enumerate(carrier):
            s = int(tbl.add[e, e2])
            if s not in pos:
                raise ValidationError("carrier is not closed under addition")
            plus[p, q] = pos[s]

    if (act[:, tbl.zero_idx] != 0).any():
        raise ValidationError("s*0 = 0 fails on the carrier")
    for p in range(k):
        row = act[p]
        if not np.array_equal(row[tbl.add], plus[np.ix_(row, row)]):
            raise ValidationError("s(a+b) = sa+sb fails on the carrier")
        if not np.array_equal(row[tbl.mul], act[row]):
            raise ValidationError("s(ab) = (sa)b fails on the carrier")

    return ActionStructure(carrier=tuple(carrier), act=act, plus=plus)


def annihilator(act: ActionStructure, p: int) -> frozenset[int]:
    """Algebra indices a with (carrier position p) * a = zero."""
    return frozenset(int(a) for a in np.nonzero(act.act[p] == act.zero_pos)[0])


def annihilator_of_set(
    act: ActionStructure, positions: Iterable[int], cross_check: bool = True
) -> frozenset[int]:
    """Annihilator of a carrier subset; the intersection of the members'.

    With cross_check, the direct definition (kills every member at once)
    is compared against the per-member intersection; they must agree.
    """
    ps = sorted(set(positions))
    if not ps:
        raise ValueError("annihilator of the empty subset is not defined here")
    direct = frozenset(
        int(a)
        for a in np.nonzero((act.act[ps] == act.zero_pos).all(axis=0))[0]
    )
    if cross_check:
        inter = annihilator(act, ps[0])
        for p in ps[1:]:
            inter &= annihilator(act, p)
        if inter != direct:
            raise ValidationError("two annihilator computations disagree")
    return direct


def nsr_annihilator(tbl: NearSemiringTable, e: int) -> frozenset[int]:
    """Right-multiplication annihilator of an algebra element: {a : ea = 0}."""
    return frozenset(int(a) for a in np.nonzero(tbl.mul[e] == tbl.zero_idx)[0])


def is_strongly_monogenic(act: ActionStructure) -> tuple[bool, int | None]:
    """Every nonzero carrier element reaches the whole carrier; zero only itself.

    Returns the verdict and a witness generator position (None if false or
    the carrier has no nonzero element).
    """
    full = set(range(act.size))
    if set(act.act[act.zero_pos].tolist()) != {act.zero_pos}:
        return False, None
    witness = None
    for p in range(act.size):
        if p == act.zero_pos:
            continue
        if set(act.act[p].tolist()) != full:
            return False, None
        if witness is None:
            witness = p
    return (witness is not None), witness


def n_subsemigroups(act: ActionStructure, max_carrier: int = 512) -> list[frozenset[int]]:
    """All carrier subsets containing 0, closed under + and the action.

    Enumerated as a closure system grown from {0}, never as a raw power
    set: each closed set is extended by one missing element and re-closed.
    """
    if act.size > max_carrier:
        raise ValueError(f"carrier of {act.size} exceeds the {max_carrier} guard")

    def close(seed: frozenset[int]) -> frozenset[int]:
        cur = set(seed)
        changed = True
        while changed:
            changed = False
            for p in list(cur):
                for v in act.act[p].tolist():
                    if v not in cur:
                        cur.add(v)
                        changed = True
                for q in list(cur):
                    for v in (int(act.plus[p, q]), int(act.plus[q, p])):
                        if v not in cur:
                            cur.add(v)
                            changed = True
        return frozenset(cur)

    family = {close(frozenset({act.zero_pos}))}
    frontier = list(family)
    while frontier:
        new = []
        for t in frontier:
            for p in range(act.size):
                if p in t:
                    continue
                grown = close(t | {p})
                if grown not in family:
                    family.add(grown)
                    new.append(grown)
        frontier = new
    return sorted(family, key=lambda s: (len(s), sorted(s)))


def has_left_identity(
    tbl: NearSemiringTable,
) -> tuple[bool, int | None, dict[int, int]]:
    """Search for u with u*x = x for every x.

    Returns (found, witness u or None, counterexamples): when not found,
    the dict gives for each candidate u some x with u*x != x.
    """
    m = tbl.size
    idx = np.arange(m)
    counterexamples: dict[int, int] = {}
    for u in range(m):
        mism = np.nonzero(tbl.mul[u] != idx)[0]
        if mism.size == 0:
            return True, u, {}
        counterexamples[u] = int(mism[0])
    return False, None, counterexamples


def modularity_witness(
    tbl: NearSemiringTable, c: Congruence
) -> tuple[bool, int | None]:
    """Search for u with (u*x, x) in c for every x; c must respect the action."""
    if c.mode is CompatibilityMode.PLUS:
        raise ValueError("need a congruence compatible with the right action")
    lab = np.asarray(c.labels, dtype=np.int64)
    for u in range(tbl.size):
        if np.array_equal(lab[tbl.mul[u]], lab):
            return True, u
    return False, None


def aplus_congruence(
    tbl: NearSemiringTable, mode: CompatibilityMode
) -> Congruence:
    """The two-class relation: zero alone, every map together."""
    labels = tuple(0 if x == tbl.zero_idx else 1 for x in range(tbl.size))
    if not is_congruence(tbl, labels, mode):
        raise ValidationError(
            f"zero-vs-maps relation is not a {mode.value} congruence"
        )
    return Congruence(labels=labels, mode=mode)


J_PAIRS: tuple[tuple[int, int], ...] = (
    (0, 0), (0, 1), (0, 2), (0, 3),
    (1, 0), (1, 1), (1, 2), (1, 3),
    (2, 0), (2, 1),
)

# Containment arrows of the standard radical diagram; each (a, b) asserts
# value(a) is contained in value(b).
RADICAL_ARROWS: tuple[tuple[str, str], ...] = (
    ("J(2,0)", "J(2,1)"),
    ("J(1,0)", "J(1,1)"), ("J(1,0)", "J(2,0)"),
    ("J(1,1)", "J(2,1)"), ("J(1,1)", "J(1,2)"), ("J(1,2)", "J(1,3)"),
    ("J(0,0)", "J(0,1)"), ("J(0,0)", "J(1,0)"), ("J(0,0)", "R1"),
    ("J(0,1)", "J(1,1)"), ("J(0,1)", "J(0,2)"),
    ("J(0,2)", "J(0,3)"), ("J(0,2)", "J(1,2)"), ("J(0,3)", "J(1,3)"),
    ("R0", "R1"), ("R1", "R2"), ("R1", "J(1,1)"), ("R2", "R3"),
)


@dataclass(frozen=True)
class PremiseCheck:
    claim: str
    holds: bool
    witness: str | None = None


@dataclass(frozen=True)
class RadicalEntry:
    name: str
    value: str | None
    premises: tuple[PremiseCheck, ...]


@dataclass(frozen=True)
class RadicalReport:
    n: int
    entries: tuple[RadicalEntry, ...]
    figure_consistent: bool

    def entry(self, name: str) -> RadicalEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    @property
    def blocked(self) -> list[str]:
        return [e.name for e in self.entries if e.value is None]

    @property
    def all_premises_hold(self) -> bool:
        return all(p.holds for e in self.entries for p in e.premises)


def _value_sets(tbl: NearSemiringTable, value: str | None) -> frozenset[int] | None:
    if value is None:
        return None
    if value == "{0}":
        return frozenset({tbl.zero_idx})
    if value == "N":
        return frozenset(range(tbl.size))
    raise ValueError(f"unknown radical value {value!r}")


def _figure_consistent(tbl: NearSemiringTable, values: dict[str, str | None]) -> bool:
    for a, b in RADICAL_ARROWS:
        sa = _value_sets(tbl, values.get(a))
        sb = _value_sets(tbl, values.get(b))
        if sa is None or sb is None:
            continue
        if not sa <= sb:
            return False
    return True


def radical_report(tbl: NearSemiringTable) -> RadicalReport:
    """Assemble every radical value this algebra admits, premises attached.

    A value appears only when all of its premises check out against the
    tables; a failed premise leaves the entry's value empty rather than
    guessing.  The step from checked premises to the values also relies on
    the type classification of the constant carrier, which is not
    re-derived here; that dependency is recorded as an explicit
    (always-true) note alongside the computed premises.
    """
    act = build_C(tbl)
    names = tbl.names

    mono_ok, mono_wit = is_strongly_monogenic(act)
    p_mono = PremiseCheck(
        claim="every nonzero carrier element generates the whole carrier "
        "under the action, and zero generates only itself",
        holds=mono_ok,
        witness=None if mono_wit is None else names[act.carrier[mono_wit]],
    )

    nonzero_ok = all(
        annihilator(act, p) == frozenset({tbl.zero_idx})
        for p in range(1, act.size)
    )
    p_ann_g = PremiseCheck(
        claim="the annihilator of every nonzero carrier element is {0}",
        holds=nonzero_ok,
    )

    ann_c = annihilator_of_set(act, range(act.size), cross_check=True)
    p_ann_c = PremiseCheck(
        claim="the annihilator of the whole carrier is {0} "
        "(direct and intersection computations agree)",
        holds=ann_c == frozenset({tbl.zero_idx}),
    )

    kernels = right_ideals(tbl)
    kernels_ok = kernels == sorted(
        [frozenset({tbl.zero_idx}), frozenset(range(tbl.size))],
        key=lambda s: (len(s), sorted(s)),
    )
    p_kernels = PremiseCheck(
        claim="the kernels of right-action congruences are exactly {0} and "
        "the whole algebra",
        holds=kernels_ok,
    )

    p_types = PremiseCheck(
        claim="the type classification of the carrier is assumed, not "
        "re-derived; only its computable premises are re-checked here",
        holds=True,
    )

    j_premises = (p_mono, p_ann_g, p_ann_c, p_kernels, p_types)
    j_ok = all(p.holds for p in j_premises)

    try:
        two_class = aplus_congruence(tbl, CompatibilityMode.RIGHT)
        kern_ok = kernel(tbl, two_class) == frozenset({tbl.zero_idx})
        mod_ok, mod_u = modularity_witness(tbl, two_class)
    except ValidationError:
        kern_ok, mod_ok, mod_u = False, False, None
    p_modular = PremiseCheck(
        claim="the two-class right-action congruence has kernel {0} and a "
        "modularity witness u with ux related to x for all x",
        holds=kern_ok and mod_ok,
        witness=None if mod_u is None else names[mod_u],
    )
    r01_premises = (p_kernels, p_modular)
    r01_ok = all(p.holds for p in r01_premises)

    li_found, li_u, _ = has_left_identity(tbl)
    p_no_li = PremiseCheck(
        claim="the algebra has no left identity, so the identity morphism "
        "on the additive semigroup is not modular",
        holds=not li_found,
        witness=None if li_u is None else names[li_u],
    )
    r23_premises = (p_no_li,)
    r23_ok = not li_found

    entries: list[RadicalEntry] = []
    for nu, mu in J_PAIRS:
        entries.append(
            RadicalEntry(
                name=f"J({nu},{mu})",
                value="{0}" if j_ok else None,
                premises=j_premises,
            )
        )
    for rname in ("R0", "R1"):
        entries.append(
            RadicalEntry(
                name=rname,
                value="{0}" if r01_ok else None,
                premises=r01_premises,
            )
        )
    for rname in ("R2", "R3"):
        entries.append(
            RadicalEntry(
                name=rname,
                value="N" if r23_ok else None,
                premises=r23_premises,
            )
        )

    values = {e.name: e.value for e in entries}
    return RadicalReport(
        n=tbl.n,
        entries=tuple(entries),
        figure_consistent=_figure_consistent(tbl, values),
    )


def report_to_json(report: RadicalReport) -> dict:
    """The report as plain data: n, J values, R values, premise list."""
    j = {
        e.name[1:]: e.value
        for e in report.entries
        if e.name.startswith("J")
    }
    r = {e.name: e.value for e in report.entries if e.name.startswith("R")}
    seen: list[PremiseCheck] = []
    for e in report.entries:
        for p in e.premises:
            if p not in seen:
                seen.append(p)
    return {
        "n": report.n,
        "J": j,
        "R": r,
        "premises": [
            {"claim": p.claim, "holds": p.holds, "witness": p.witness}
            for p in seen
        ],
    }
