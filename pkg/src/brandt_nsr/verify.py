"""One-shot verification of every classification result, per n.

Each check is a pure function of freshly built tables; run_verification
assembles the list appropriate to the requested n.  Check ids are stable
strings used by the CLI and the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .brandt import Brandt, Permutation
from .congruence import (
    CompatibilityMode,
    congruence_closure,
    congruence_lattice,
    kernel,
    lattice_bruteforce,
    right_ideals,
)
from .generation import (
    NearSemiringTable,
    build_nsr,
    count_formula,
    endomorphisms,
    endomorphisms_bruteforce,
    validate_nsr,
)
from .maps import Const, ConstTheta, NSupport, Singleton, map_add, map_compose, realize
from .structure import (
    annihilator,
    annihilator_of_set,
    aplus_congruence,
    build_C,
    has_left_identity,
    is_strongly_monogenic,
    n_subsemigroups,
    radical_report,
)


@dataclass(frozen=True)
class Check:
    id: str
    n: int
    passed: bool
    detail: str


def _expected_breakdown(n: int) -> dict[str, int]:
    import math

    return {
        "constants": n * n + 1,
        "singletons": n ** 4,
        "n_support": math.factorial(n) * n * n,
    }


def check_counts(tbl: NearSemiringTable) -> Check:
    n = tbl.n
    nonzero = tbl.size - 1
    expected = 3 if n == 1 else count_formula(n)
    breakdown_ok = tbl.breakdown == _expected_breakdown(n) if n >= 2 else (
        sorted(tbl.names[1:]) == ["c:1,1", "c:t", "n:1,1;1"]
    )
    passed = nonzero == expected and breakdown_ok
    detail = f"nonzero={nonzero} expected={expected} breakdown={tbl.breakdown}"
    return Check(id="count-theorem", n=n, passed=passed, detail=detail)


def check_algebra_laws(tbl: NearSemiringTable) -> Check:
    try:
        validate_nsr(tbl)
        return Check(
            id="algebra-laws",
            n=tbl.n,
            passed=True,
            detail="zero laws, associativity, left distributivity: exhaustive",
        )
    except Exception as exc:  # noqa: BLE001 - report, do not crash the suite
        return Check(id="algebra-laws", n=tbl.n, passed=False, detail=str(exc))


def right_distributivity_counterexample(
    tbl: NearSemiringTable,
) -> tuple[str, str, str] | None:
    """First (g, h, f) among the nonzero elements with (g+h)f != gf + hf."""
    add, mul = tbl.add, tbl.mul
    for g in range(1, tbl.size):
        lhs = mul[add[g, 1:], :][:, 1:]
        rhs = add[mul[g, 1:][None, :], mul[1:, 1:]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            h, f = int(bad[0][0]) + 1, int(bad[0][1]) + 1
            return tbl.names[g], tbl.names[h], tbl.names[f]
    return None


def check_right_distributivity_fails(tbl: NearSemiringTable) -> Check:
    witness = right_distributivity_counterexample(tbl)
    return Check(
        id="right-distributivity",
        n=tbl.n,
        passed=witness is not None,
        detail=(
            "no counterexample found"
            if witness is None
            else "(g+h)f != gf+hf at g=%s h=%s f=%s" % witness
        ),
    )


def identity_vector_failures(n: int) -> list[str]:
    """Exhaustive re-check of the table identities used in the proofs.

    Covers the constant decomposition, the singleton and n-support sum
    decompositions, and the composition/absorption identities from the
    congruence case analysis.  Returns a description per failing instance.
    """
    bn = Brandt(n)
    rng = range(1, n + 1)
    perms = Permutation.all(n)
    ident = Permutation(tuple(rng))
    failures: list[str] = []

    def eq(lhs, rhs, desc: str) -> None:
        if lhs != rhs:
            failures.append(desc)

    co = lambda p, q: realize(bn, Const(p, q))  # noqa: E731
    si = lambda k, l, p, q: realize(bn, Singleton(k, l, p, q))  # noqa: E731
    ns = lambda p, q, s: realize(bn, NSupport(p, q, s))  # noqa: E731
    theta = realize(bn, ConstTheta())

    # constants decompose through any intermediate pair
    for p in rng:
        for q in rng:
            for p0 in rng:
                for q0 in rng:
                    eq(
                        map_add(bn, map_add(bn, co(p, p0), co(p0, q0)), co(q0, q)),
                        co(p, q),
                        f"const-chain p={p} q={q} p0={p0} q0={q0}",
                    )

    # n-support maps shift their target column by adding a constant
    for k in rng:
        for l in rng:
            for p in rng:
                for s in perms:
                    eq(
                        map_add(bn, ns(k, p, s), co(p, l)),
                        ns(k, l, s),
                        f"nsupport-shift k={k} l={l} p={p} s={s.word}",
                    )

    # singletons decompose as constant plus n-support when the permutation
    # sends the source row to the target column
    for k in rng:
        for l in rng:
            for p in rng:
                for q in rng:
                    for s in perms:
                        if s(k) != q:
                            continue
                        eq(
                            map_add(bn, co(p, q), ns(l, q, s)),
                            si(k, l, p, q),
                            f"singleton-sum k={k} l={l} p={p} q={q} s={s.word}",
                        )

    # composition collapses: constants through singletons and n-support maps
    for k in rng:
        for l in rng:
            for p in rng:
                for q in rng:
                    eq(
                        map_compose(co(k, l), si(k, l, p, q)),
                        co(p, q),
                        f"compose-const-singleton k={k} l={l} p={p} q={q}",
                    )
                    for s in perms:
                        eq(
                            map_compose(co(k, p), ns(p, q, s)),
                            co(s(k), q),
                            f"compose-const-nsupport k={k} p={p} q={q} s={s.word}",
                        )

    # singleton-vs-singleton absorption (distinct sources kill each other)
    for i in rng:
        for j in rng:
            for s_ in rng:
                for t in rng:
                    if (i, j) == (s_, t):
                        continue
                    for k in rng:
                        for l in rng:
                            for v in rng:
                                eq(
                                    map_add(bn, si(i, j, k, l), si(s_, t, v, v)),
                                    theta,
                                    f"singleton-kill {i},{j}>{k},{l} + {s_},{t}>{v},{v}",
                                )

    # same-source absorption: adding the (k,k) singleton fixes, (v,v) kills
    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    eq(
                        map_add(bn, si(i, j, k, k), si(i, j, k, l)),
                        si(i, j, k, l),
                        f"singleton-fix {i},{j} k={k} l={l}",
                    )
                    for u in rng:
                        if u == k:
                            continue
                        for v in rng:
                            eq(
                                map_add(bn, si(i, j, k, k), si(i, j, u, v)),
                                theta,
                                f"singleton-clash {i},{j} k={k} u={u} v={v}",
                            )

    # n-support absorption and composition, from the case analysis
    for i in rng:
        for j in rng:
            for s in perms:
                eq(
                    map_add(bn, ns(i, j, s), co(j, j)),
                    ns(i, j, s),
                    f"nsupport-fix i={i} j={j} s={s.word}",
                )
                for k in rng:
                    for l in rng:
                        if l != j:
                            eq(
                                map_add(bn, ns(k, l, s), co(j, j)),
                                theta,
                                f"nsupport-kill k={k} l={l} j={j} s={s.word}",
                            )
                    if i != k:
                        eq(
                            map_compose(ns(k, k, ident), ns(i, j, s)),
                            theta,
                            f"nsupport-compose-miss k={k} i={i} j={j} s={s.word}",
                        )
                    eq(
                        map_compose(ns(k, k, ident), ns(k, j, s)),
                        ns(k, j, s),
                        f"nsupport-compose-hit k={k} j={j} s={s.word}",
                    )

    # constants absorb on the right of composition; mismatch with a
    # singleton's source gives the all-theta map
    for s_ in rng:
        for t in rng:
            for i in rng:
                for j in rng:
                    eq(
                        map_compose(co(s_, t), co(i, j)),
                        co(i, j),
                        f"compose-const-const {s_},{t} {i},{j}",
                    )
                    for k in rng:
                        for l in rng:
                            if (s_, t) == (k, l):
                                continue
                            eq(
                                map_compose(co(s_, t), si(k, l, i, j)),
                                theta,
                                f"compose-const-miss {s_},{t} {k},{l}>{i},{j}",
                            )

    # singleton completes to a constant by adding the matching column map
    for k in rng:
        for l in rng:
            for p in rng:
                for q in rng:
                    eq(
                        map_add(bn, si(k, l, p, p), co(p, q)),
                        si(k, l, p, q),
                        f"singleton-complete k={k} l={l} p={p} q={q}",
                    )
                    for i in rng:
                        if l == i:
                            continue
                        for j in rng:
                            for s in perms:
                                eq(
                                    map_add(bn, si(k, l, p, p), ns(i, j, s)),
                                    theta,
                                    f"singleton-nsupport-kill k={k} l={l} p={p} "
                                    f"i={i} j={j} s={s.word}",
                                )
                                eq(
                                    map_compose(co(i, i), si(k, l, p, q)),
                                    theta,
                                    f"compose-diag-miss i={i} k={k} l={l}",
                                )

    return failures


def check_identity_vectors(n: int) -> Check:
    failures = identity_vector_failures(n)
    return Check(
        id="identity-vectors",
        n=n,
        passed=not failures,
        detail="all identities hold" if not failures else "; ".join(failures[:5]),
    )


def check_congruence_lattice(tbl: NearSemiringTable) -> Check:
    lat = congruence_lattice(tbl, CompatibilityMode.TWO_SIDED)
    two_class = aplus_congruence(tbl, CompatibilityMode.TWO_SIDED)
    sizes = [c.num_classes for c in lat]
    expected = sorted({tbl.size, 2, 1}, reverse=True)
    passed = (
        len(lat) == 3
        and sizes == expected
        and two_class in lat
        and {kernel(tbl, c) for c in lat}
        == {frozenset({0}), frozenset(range(tbl.size))}
    )
    return Check(
        id="congruence-theorem",
        n=tbl.n,
        passed=passed,
        detail=f"lattice size {len(lat)}, class counts {sizes}",
    )


def check_right_ideals(tbl: NearSemiringTable) -> Check:
    ideals = right_ideals(tbl)
    passed = ideals == sorted(
        [frozenset({0}), frozenset(range(tbl.size))],
        key=lambda s: (len(s), sorted(s)),
    )
    return Check(
        id="rideal-theorem",
        n=tbl.n,
        passed=passed,
        detail=f"kernel sizes {[len(s) for s in ideals]}",
    )


def check_theta_pair_congruence(tbl: NearSemiringTable) -> Check:
    """Every full-support constant collapses everything when glued to c:t.

    The generated additive congruence must be the two-class relation, and
    since that relation has exactly two classes, the only strictly coarser
    equivalence at all is the universal one; so nothing sits in between.
    """
    target = aplus_congruence(tbl, CompatibilityMode.PLUS)
    theta = tbl.xi_theta_idx
    consts = [
        i
        for i, nm in enumerate(tbl.names)
        if nm.startswith("c:") and nm != "c:t"
    ]
    expected_count = tbl.n * tbl.n
    bad = []
    for f in consts:
        got = congruence_closure(tbl, [(f, theta)], CompatibilityMode.PLUS)
        if got != target:
            bad.append(tbl.names[f])
    passed = not bad and len(consts) == expected_count and target.num_classes == 2
    return Check(
        id="lemma-3.1",
        n=tbl.n,
        passed=passed,
        detail=(
            f"{len(consts)} full-support constants collapse to the two-class "
            "relation; two classes leave no room strictly below universal"
            if passed
            else f"failed at {bad[:3]}"
        ),
    )


def check_c_properties(tbl: NearSemiringTable) -> Check:
    act = build_C(tbl)
    mono, wit = is_strongly_monogenic(act)
    subs = n_subsemigroups(act)
    expected = sorted(
        [frozenset({0}), frozenset(range(act.size))],
        key=lambda s: (len(s), sorted(s)),
    )
    passed = mono and subs == expected
    witness = "-" if wit is None else tbl.names[act.carrier[wit]]
    return Check(
        id="c-properties",
        n=tbl.n,
        passed=passed,
        detail=f"strongly monogenic (witness {witness}); "
        f"subsemigroup sizes {[len(s) for s in subs]}",
    )


def check_annihilators(tbl: NearSemiringTable) -> Check:
    act = build_C(tbl)
    zero_only = frozenset({tbl.zero_idx})
    per_element = all(
        annihilator(act, p) == zero_only for p in range(1, act.size)
    )
    at_zero = annihilator(act, 0) == frozenset(range(tbl.size))
    whole = annihilator_of_set(act, range(act.size), cross_check=True)
    passed = per_element and at_zero and whole == zero_only
    return Check(
        id="annihilator-C",
        n=tbl.n,
        passed=passed,
        detail="A(g)={0} for nonzero g, A(0)=N, A(C)={0} (two computations)",
    )


def check_radicals(tbl: NearSemiringTable) -> Check:
    report = radical_report(tbl)
    j_ok = all(
        e.value == "{0}" for e in report.entries if e.name.startswith("J")
    )
    r_ok = (
        report.entry("R0").value == "{0}"
        and report.entry("R1").value == "{0}"
        and report.entry("R2").value == "N"
        and report.entry("R3").value == "N"
    )
    passed = (
        j_ok and r_ok and report.all_premises_hold and report.figure_consistent
    )
    return Check(
        id="radicals",
        n=tbl.n,
        passed=passed,
        detail=f"J-pairs={sum(e.name.startswith('J') for e in report.entries)} "
        f"all {{0}}; R0=R1={{0}}; R2=R3=N; premises green; diagram consistent"
        if passed
        else f"blocked={report.blocked}",
    )


def check_left_identity(tbl: NearSemiringTable) -> Check:
    found, u, cex = has_left_identity(tbl)
    if found:
        detail = f"left identity exists: {tbl.names[u]}"
    else:
        sample = next(iter(sorted(cex.items())))
        detail = (
            f"none; e.g. u={tbl.names[sample[0]]} fails at "
            f"x={tbl.names[sample[1]]}"
        )
    return Check(id="left-identity", n=tbl.n, passed=not found, detail=detail)


def check_endo_oracle(n: int = 2) -> Check:
    bn = Brandt(n)
    fast = endomorphisms(bn)
    slow = endomorphisms_bruteforce(bn)
    return Check(
        id="endo-oracle",
        n=n,
        passed=fast == slow,
        detail=f"backtracking {len(fast)} == exhaustive {len(slow)}",
    )


def check_lattice_oracle(tbl: NearSemiringTable) -> Check:
    results = []
    for mode in CompatibilityMode:
        fast = congruence_lattice(tbl, mode)
        slow = lattice_bruteforce(tbl, mode)
        results.append((mode.value, fast == slow, len(fast)))
    passed = all(ok for _, ok, _ in results)
    return Check(
        id="lattice-oracle",
        n=tbl.n,
        passed=passed,
        detail=", ".join(f"{m}: {c} congruences" for m, ok, c in results),
    )


def run_verification(n: int, allow_heavy: bool = False) -> list[Check]:
    """All checks that apply at this n, in report order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > 4:
        raise ValueError("verification needs explicit tables; n is capped at 4")
    if n == 4 and not allow_heavy:
        raise ValueError("n=4 verification is heavy; pass allow_heavy")

    tbl = build_nsr(n)
    checks = [check_counts(tbl), check_algebra_laws(tbl)]
    if n == 1:
        checks.append(check_lattice_oracle(tbl))
        checks.append(check_right_ideals(tbl))
        return checks

    checks.append(check_congruence_lattice(tbl))
    checks.append(check_right_ideals(tbl))
    checks.append(check_theta_pair_congruence(tbl))
    checks.append(check_c_properties(tbl))
    checks.append(check_annihilators(tbl))
    checks.append(check_radicals(tbl))
    checks.append(check_left_identity(tbl))
    if n == 2:
        checks.append(check_endo_oracle(2))
        checks.append(check_right_distributivity_fails(tbl))
    if n in (2, 3):
        checks.append(check_identity_vectors(n))
    return checks
