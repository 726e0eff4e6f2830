"""The nine acceptance criteria, each at its stated (exact) tolerance.

Every test prints one PASS/FAIL line. Run with ``pytest tests/test_acceptance.py -v``.
"""

import time
from fractions import Fraction

import pytest

from zagierpoly import classical, kernels, pipelines, series, vcoeff, zagier
from zagierpoly.report import merge_reports


@pytest.fixture
def report_line(capsys):
    def emit(criterion, ok, detail=""):
        with capsys.disabled():
            print(f"\n[acceptance {criterion}] {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    return emit


def _failures(rep):
    return "; ".join(f"{c.name}: {c.failed} failed, first {c.witnesses[:1]}" for c in rep.failed_checks())


def test_criterion_1_value_regression(report_line):
    t0 = time.perf_counter()
    bstars = [zagier.bstar(n) for n in range(1, 11)]
    alphas = [zagier.alpha(2 * n) // 4 for n in range(1, 15)]
    vs = [vcoeff.v_umbral(n) for n in range(1, 14)]
    elapsed = time.perf_counter() - t0
    ok = (
        bstars == [Fraction(3, 4), Fraction(1, 24), Fraction(-1, 4), Fraction(-27, 80), Fraction(-1, 4),
                   Fraction(-29, 1260), Fraction(1, 4), Fraction(451, 1120), Fraction(1, 4), Fraction(-65, 264)]
        and alphas == [6, 20, 315, 280, 66, 3003, 78, 9520, 305235, 20900, 138, 19734, 6, 7540]
        and vs == [Fraction(-1, 2), Fraction(11, 12), Fraction(1, 2), Fraction(-13, 40), Fraction(-1, 2),
                   Fraction(29, 630), Fraction(1, 2), Fraction(109, 560), Fraction(-1, 2), Fraction(-67, 132),
                   Fraction(1, 2), Fraction(6571, 6006), Fraction(-1, 2)]
        and all(zagier.alpha(2 * n) % 4 == 0 for n in range(1, 15))
    )
    report_line(1, ok and elapsed < 1.0, f"({elapsed:.3f} s)")
    assert ok
    assert elapsed < 1.0


def test_criterion_2_theorem_sweep(report_line):
    rep = zagier.nu2_theorem_check(300)
    report_line(2, rep.ok, f"-nu_2(B*_n) closed form and 4 | alpha_n, n <= 300 ({rep.elapsed_ms:.0f} ms) {_failures(rep)}")
    assert rep.ok, _failures(rep)


def test_criterion_3_period_claims(report_line):
    rep = merge_reports(
        "period",
        [zagier.nu2_8n_period_check(120), zagier.odd_index_suite(121), series.mod8_genfun_check(96)],
    )
    report_line(3, rep.ok, f"period 6, odd-index period 12, mod-8 period 24 and rational functions {_failures(rep)}")
    assert rep.ok, _failures(rep)


def test_criterion_4_generating_functions(report_line):
    rep = merge_reports(
        "genfun",
        [
            series.zagier_genfun_check((0, 1, -1, -2, 5, Fraction(-7, 3)), 40),
            series.even_genfun_check(40),
            series.prop22_check(64),
        ],
    )
    report_line(4, rep.ok, f"Zagier-polynomial and even-index generating functions, binomial sums {_failures(rep)}")
    assert rep.ok, _failures(rep)


def test_criterion_5_cross_method(report_line):
    t0 = time.perf_counter()
    rep = vcoeff.cross_check_all(40, 16)
    elapsed = time.perf_counter() - t0
    ok = rep.ok and elapsed < 300
    report_line(5, ok, f"six light methods n <= 40, both pipelines even n <= 16 ({elapsed:.1f} s) {_failures(rep)}")
    assert rep.ok, _failures(rep)
    assert elapsed < 300


def test_criterion_6_identity_suites(report_line):
    rep = merge_reports(
        "identities",
        [
            zagier.translation_check(30),
            zagier.reflection_check(30),
            zagier.bstar59_check(30),
            zagier.umbral_check(30),
            zagier.odd_index_suite(30),
            zagier.denominator_independence_check(60, range(-10, 11)),
        ],
    )
    report_line(6, rep.ok, f"translation, reflection, B*_n(1), umbral, odd-index, denominators {_failures(rep)}")
    assert rep.ok, _failures(rep)


def test_criterion_7_combinatorial_kernels(report_line):
    poly_v = pipelines.polynomial_v_report(5, 14)
    rep = merge_reports(
        "kernels",
        [
            kernels.bell_identity_checks(10, points=20),
            kernels.bell_der_grid_check(10, points=20),
            kernels.a_poly_check(20),
            poly_v,
            kernels.nested_identity_check(6),
        ],
    )
    report_line(7, rep.ok, f"Bell identities, Bell derivative form, A_jn forms, polynomial V, nested identity {_failures(rep)}")
    assert rep.ok, _failures(rep)


def test_criterion_8_recurrence_machinery(report_line):
    rep = merge_reports(
        "z_machinery",
        [
            vcoeff.z_recurrence_check(40),
            vcoeff.z_mod2_period_check(300),
            vcoeff.f_sum_check(40),
            vcoeff.legendre_inversion_check(15, trials=20),
        ],
    )
    report_line(8, rep.ok, f"z_n = 4n v_2n, z_n mod 2 period, F(m), Legendre inversion {_failures(rep)}")
    assert rep.ok, _failures(rep)


def test_criterion_9_congruence_layer(report_line):
    rep = merge_reports(
        "congruences",
        [
            classical.vsc_check(200),
            classical.voronoi_grid_check(60),
            classical.proof_scan_mod64(200),
            zagier.congruence_suite(200),
            zagier.conjecture_scan(200),
        ],
    )
    report_line(9, rep.ok, f"von Staudt-Clausen, Voronoi, mod-64 scan, Zagier congruence, conjecture {_failures(rep)}")
    assert rep.ok, _failures(rep)
