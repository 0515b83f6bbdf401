"""Acceptance criteria 1-12.

Each test records one PASS/FAIL line (shown in the terminal summary, and
printed when the file is run directly with ``python3 tests/test_acceptance.py``)
and then asserts.  Every comparison is exact; there is no tolerance anywhere.
"""

from __future__ import annotations

import itertools
import random
import sys
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lehmerbeck.bijections import verify_map
from lehmerbeck.identities import (
    check,
    cor52_partitions,
    cor52_to_cor53,
    cor53_repeated,
    cor53_to_cor52,
    excess,
    lehmer_series_holds,
    negative_coefficient_table,
)
from lehmerbeck.ids import TheoremId as T
from lehmerbeck.partitions import (
    ConstraintSpec,
    ResidueSpec,
    count_pairs,
    count_partitions,
    pairs_residue,
)
from lehmerbeck.series import (
    GenSpec,
    TruncatedSeries,
    build_generating_jet,
    derivative_difference,
    j2exp,
    j2exp3,
    lambert_sum,
    pochhammer_inf,
)

# published expansions, coefficient lists c_0, c_1, ...
J2EXP_PUBLISHED = [1, 1, -1, 0, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 2]
J2EXP3_PUBLISHED = [0, 0, 1, 1, -1, 0, 2, 1, -1, 0, 3, 2, -1, 0, 4, 3, -1, 1, 6, 4, -1]


def _failed_ns(report) -> list[int]:
    return [row.n for row in report.failures]


def _even_subsets(r: int):
    evens = list(range(2, 2 * r + 1, 2))
    for k in range(1, len(evens) + 1):
        yield from itertools.combinations(evens, k)


# --- 1 ------------------------------------------------------------------------------


def test_criterion_01_lehmer(acceptance):
    t0 = time.perf_counter()
    report = check(T.LEHMER, 60)
    series_ok = lehmer_series_holds(200)
    elapsed = time.perf_counter() - t0
    ok = report.ok and series_ok and elapsed < 60
    acceptance(1, "Lehmer: enumeration n<=60, series n<=200, < 60 s", ok,
               f"{elapsed:.1f} s, failing n={_failed_ns(report)}")
    assert report.ok, _failed_ns(report)
    assert series_ok
    assert elapsed < 60


# --- 2 ------------------------------------------------------------------------------


def test_criterion_02_glaisher(acceptance):
    report = check(T.GLAISHER, 50)
    acceptance(2, "Glaisher p_e - p_o = (-1)^n q_o, n<=50", report.ok, f"failing n={_failed_ns(report)}")
    assert report.ok


# --- 3 ------------------------------------------------------------------------------


def test_criterion_03_one_even_part_and_rectangles(acceptance):
    t12 = check(T.T1_2, 50)
    t14 = check(T.T1_4, 50)
    t14_relaxed = check(T.T1_4, 50, amended=True)
    ok = t12.ok and t14.ok
    acceptance(
        3, "three-route agreement, one-even-part and odd-rectangle statements, n<=50", ok,
        f"t1_2 failing n={_failed_ns(t12)}; t1_4 failing n={_failed_ns(t14)}; "
        f"t1_4 with relaxed gap: {'pass' if t14_relaxed.ok else 'fail'}",
    )
    assert t12.ok, _failed_ns(t12)
    assert t14.ok, f"pair count disagrees with excess at n={_failed_ns(t14)}"


# --- 4 ------------------------------------------------------------------------------


def _same_rows(a, b) -> bool:
    return [(x.n, x.lhs, x.rhs, x.series) for x in a.rows] == [(x.n, x.lhs, x.rhs, x.series) for x in b.rows]


def test_criterion_04_modulus_r(acceptance):
    failures, relaxed_failures = {}, {}
    for thm in (T.T1_6, T.T1_7, T.T1_8):
        for r in (1, 2, 3, 4):
            rep = check(thm, 40, ResidueSpec(r))
            if not rep.ok:
                failures[f"{thm}/r={r}"] = _failed_ns(rep)
                if thm is T.T1_8 and not check(thm, 40, ResidueSpec(r), amended=True).ok:
                    relaxed_failures[f"{thm}/r={r}"] = True
    p1 = ResidueSpec(1)
    regression = (
        _same_rows(check(T.T1_6, 40, p1), check(T.LEHMER, 40))
        and _same_rows(check(T.T1_7, 40, p1), check(T.T1_2, 40))
        and _same_rows(check(T.T1_8, 40, p1), check(T.T1_4, 40))
    )
    ok = not failures and regression
    acceptance(
        4, "modulus-r statements for r in 1..4, n<=40, r=1 regression", ok,
        f"failures={failures}; r=1 regression {'ok' if regression else 'broken'}; "
        f"relaxed gap failures={relaxed_failures or 'none'}",
    )
    assert regression
    assert not failures, failures


# --- 5 ------------------------------------------------------------------------------


def test_criterion_05_residue_sets(acceptance):
    failures, relaxed_failures = {}, {}
    for r in (1, 2, 3):
        for L in _even_subsets(r):
            p = ResidueSpec(r, L)
            for thm in (T.T1_9, T.T1_10, T.T1_11):
                rep = check(thm, 36, p)
                if not rep.ok:
                    failures[f"{thm}/r={r}/L={set(L)}"] = _failed_ns(rep)[:4]
                    if not check(thm, 36, p, amended=True).ok:
                        relaxed_failures[f"{thm}/r={r}/L={set(L)}"] = True
    acceptance(
        5, "residue-set statements for r in 1..3, all nonempty L, n<=36", not failures,
        f"{len(failures)} failing configurations, e.g. {dict(itertools.islice(failures.items(), 2))}; "
        f"relaxed gap failures={relaxed_failures or 'none'}",
    )
    assert not failures, failures


# --- 6 ------------------------------------------------------------------------------


def test_criterion_06_single_residue(acceptance):
    problems = []
    for r in (1, 2, 3, 5, 10):
        for ell in range(1, 2 * r + 1):
            res = ResidueSpec.from_residues(r, [ell])
            rep = check(T.T1_12, 60, res)
            if not rep.ok:
                problems.append(f"r={r} ell={ell} n={_failed_ns(rep)}")
            if ell != 2:
                continue
            full = pairs_residue(res)
            trimmed = pairs_residue(res, exclude_9751=True)
            for n in range(4, 61, 4):
                e = excess(T.T1_12, n, res)
                if e != count_pairs(n, full) - 1:
                    problems.append(f"r={r} n={n}: excess {e} != count - 1")
                if n >= 24 and e != count_pairs(n, trimmed):
                    problems.append(f"r={r} n={n}: exclusion does not restore equality")
    acceptance(6, "single-residue statement, r in {1,2,3,5,10}, every ell, n<=60", not problems,
               "; ".join(problems[:3]))
    assert not problems, problems


# --- 7 ------------------------------------------------------------------------------


def test_criterion_07_negative_coefficient_table(acceptance):
    rows = negative_coefficient_table(12, 60)
    bad = [(t.r, sorted(t.negatives), sorted(t.expected)) for t in rows if not t.ok]
    acceptance(7, "negative-coefficient table, r in 1..12, n<=60", not bad, f"mismatches={bad}")
    assert not bad
    assert sorted(rows[4].negatives) == [4, 8]
    assert sorted(rows[9].negatives) == [4, 8, 12, 16, 20]


# --- 8 ------------------------------------------------------------------------------


def test_criterion_08_printed_expansions(acceptance):
    a = list(j2exp(16).coeffs)
    b = list(j2exp3(20).coeffs)
    ok = a == J2EXP_PUBLISHED and b == J2EXP3_PUBLISHED
    acceptance(8, "printed expansions through q^16 and q^20", ok)
    assert a == J2EXP_PUBLISHED
    assert b == J2EXP3_PUBLISHED


# --- 9 ------------------------------------------------------------------------------


def _map_configs():
    yield "sec2", 1, None, T.T1_4, None
    for r in range(1, 5):
        for ell in range(1, 2 * r + 1):
            yield "lr", r, ell, T.T1_12, ResidueSpec.from_residues(r, [ell])
        yield "lr_ex1", r, None, T.EX1, ResidueSpec(r)
        yield "thm62", r, None, T.T6_2, ResidueSpec(r)
        yield "thm63", r, None, T.T6_3, ResidueSpec(r)


def test_criterion_09_bijections(acceptance):
    N = 36
    bad: dict[str, list[int]] = {}
    for map_id, r, ell, thm, p in _map_configs():
        series = derivative_difference(thm, p, N)
        for n in range(N + 1):
            rep = verify_map(map_id, n, ResidueSpec(r), ell=ell)
            card_ok = len(rep.complement) - len(rep.unmapped) == series[n]
            if not (rep.ok and card_ok):
                bad.setdefault(f"{map_id}/r={r}" + (f"/ell={ell}" if ell else ""), []).append(n)
    acceptance(9, "injections: size, injectivity, round trips, image sets, complement size, n<=36",
               not bad, "; ".join(f"{k} n={v[:5]}" for k, v in bad.items()))
    assert not bad, bad


# --- 10 -----------------------------------------------------------------------------


def test_criterion_10_sign_results(acceptance):
    N = 150
    problems = []
    for r in range(1, 7):
        p = ResidueSpec(r)
        s2 = derivative_difference(T.T6_2, p, N)
        s3 = derivative_difference(T.T6_3, p, N)
        ex3 = derivative_difference(T.EX3, p, N)
        if not s2.is_nonnegative():
            problems.append(f"r={r}: first series negative at {s2.negative_indices()[:3]}")
        if not s3.is_nonnegative():
            problems.append(f"r={r}: second series negative at {s3.negative_indices()[:3]}")
        # the third example splits as (non-positive display) + (second series),
        # the non-positive display being the negative of the first series
        if s3 - s2 != ex3:
            problems.append(f"r={r}: decomposition of the third example fails")
    acceptance(10, "both sign series >= 0 for r in 1..6 to N=150, they decompose the third example", not problems,
               "; ".join(problems))
    assert not problems, problems


# --- 11 -----------------------------------------------------------------------------


def test_criterion_11_corollaries_and_examples(acceptance):
    problems = []
    for thm in (T.COR5_2, T.COR5_3):
        rep = check(thm, 40)
        if not rep.ok:
            problems.append(f"{thm} n={_failed_ns(rep)}")
    for thm in (T.EX1, T.EX2, T.EX3):
        for r in (1, 2, 3):
            rep = check(thm, 40, ResidueSpec(r))
            if not rep.ok:
                problems.append(f"{thm}/r={r} n={_failed_ns(rep)}")
    for n in range(41):
        src = list(cor52_partitions(n))
        dst = set(cor53_repeated(n))
        img = [cor52_to_cor53(x) for x in src]
        if set(img) != dst or len(set(img)) != len(src) or any(cor53_to_cor52(y) != x for x, y in zip(src, img)):
            problems.append(f"witness bijection broken at n={n}")
    acceptance(11, "corollaries, three examples, witness bijection, n<=40", not problems,
               "; ".join(problems[:3]))
    assert not problems, problems


# --- 12 -----------------------------------------------------------------------------

_series_st = st.lists(st.integers(-20, 20), min_size=9, max_size=9).map(TruncatedSeries)
_unit_st = st.tuples(st.sampled_from([1, -1]), st.lists(st.integers(-5, 5), min_size=8, max_size=8)).map(
    lambda t: TruncatedSeries([t[0], *t[1]])
)


@settings(max_examples=150, deadline=None)
@given(_series_st, _series_st, _series_st)
def _ring_laws(a, b, c):
    zero = TruncatedSeries.zero(8)
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + zero == a and a + (-a) == zero
    assert a * TruncatedSeries.one(8) == a


@settings(max_examples=100, deadline=None)
@given(_unit_st)
def _inverse_law(u):
    assert u * u.inverse() == TruncatedSeries.one(8)


def _naive_pochhammer(sign: int, offset: int, step: int, N: int) -> list[int]:
    # prod_m (1 - sign q^m), so sign = -1 gives (-q^offset; q^step)_inf
    c = [1] + [0] * N
    m = offset
    while m <= N:
        c = [c[k] - (sign * c[k - m] if k >= m else 0) for k in range(N + 1)]
        m += step
    return c


def _naive_lambert(offset: int, modulus: int, denom_sign: int, denom_scale: int, N: int) -> list[int]:
    # sum_k q^m / (1 - denom_sign q^(scale*m)) with m = offset + k*modulus:
    # coefficient of q^n collects denom_sign^j over m*(1 + j*scale) = n
    c = [0] * (N + 1)
    for n in range(1, N + 1):
        for m in range(offset, n + 1, modulus):
            step = denom_scale * m
            if (n - m) % step == 0:
                c[n] += denom_sign ** ((n - m) // step)
    return c


def _closed_form_equalities(N: int = 150) -> list[str]:
    bad = []
    for r in range(1, 5):
        p = ResidueSpec(r)
        if build_generating_jet(GenSpec("Fr", p), N).value != build_generating_jet(GenSpec("Rr", p), N).value:
            bad.append(f"F_r != R_r at r={r}")
        for L in _even_subsets(r):
            q = ResidueSpec(r, L)
            if build_generating_jet(GenSpec("ErL", q), N).value != build_generating_jet(GenSpec("QrL", q), N).value:
                bad.append(f"E_rL != Q_rL at r={r}, L={set(L)}")
            if build_generating_jet(GenSpec("EtildeRL", q), N).value != pochhammer_inf(-1, 1, 2, N):
                bad.append(f"E-tilde at r={r}, L={set(L)}")
        odds = list(range(1, 2 * r, 2))
        for k in range(1, len(odds) + 1):
            for O in itertools.combinations(odds, k):
                q = ResidueSpec(r, (), O)
                if build_generating_jet(GenSpec("QtildeRO", q), N).value != pochhammer_inf(-1, 1, 2, N):
                    bad.append(f"Q-tilde at r={r}, O={set(O)}")
    return bad


def test_criterion_12_property_suite(acceptance):
    problems = []
    for name, law in (("ring laws", _ring_laws), ("inverse", _inverse_law)):
        try:
            law()
        except Exception as exc:  # hypothesis re-raises the shrunk failure
            problems.append(f"{name}: {exc!r}"[:200])
    rng = random.Random(20261016)
    for _ in range(60):
        sign, offset, step = rng.choice([1, -1]), rng.randint(1, 12), rng.randint(1, 8)
        if list(pochhammer_inf(sign, offset, step, 60).coeffs) != _naive_pochhammer(sign, offset, step, 60):
            problems.append(f"pochhammer {sign, offset, step}")
        ds, scale, mod = rng.choice([1, -1]), rng.randint(1, 3), rng.randint(1, 9)
        if list(lambert_sum(offset, mod, ds, scale, 60).coeffs) != _naive_lambert(offset, mod, ds, scale, 60):
            problems.append(f"lambert {offset, mod, ds, scale}")
    for n in range(31):
        if pochhammer_inf(1, 1, 2, 30).inverse()[n] != count_partitions(n, ConstraintSpec.odd_parts()):
            problems.append(f"odd-part count at n={n}")
    problems += _closed_form_equalities(150)
    acceptance(12, "ring laws, product/divisor-sum oracles, closed-form equalities to N=150, r<=4",
               not problems, "; ".join(problems[:3]))
    assert not problems, problems


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
