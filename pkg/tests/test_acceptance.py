"""Acceptance gate: the ten numbered criteria, one test each, with a printed
pass/fail line per criterion.

Criterion 8 asserts the stated error-ratio window [8, 12] for the blow-up
family between s = 1e-3 and s = 1e-4.  The measured ratio is ~100: the
characteristic (-Cs, s) is odd under (r,s) -> (-r,-s), which cancels every
odd power of s in F_{C,s} - f_C, so the convergence is quadratic and the
window cannot be met.  The check is kept as stated rather than loosened; see
the sibling sub-check for the (satisfied) convergence itself.
"""

from e2crit.verify import CRITERIA


def _run(number):
    title, fn = CRITERIA[number]
    results = fn()
    ok = all(r.passed for r in results)
    print(f"criterion {number} ({title}): {'PASS' if ok else 'FAIL'}")
    for r in results:
        print(f"    [{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}")
    failed = [f"{r.name}: {r.detail}" for r in results if not r.passed]
    assert not failed, f"criterion {number} failed -> " + "; ".join(failed)


def test_criterion_1_special_values():
    _run(1)


def test_criterion_2_identity_suite():
    _run(2)


def test_criterion_3_zero_count_table():
    _run(3)


def test_criterion_4_cusp_asymptotics():
    _run(4)


def test_criterion_5_interval_bounds():
    _run(5)


def test_criterion_6_symmetry_residuals():
    _run(6)


def test_criterion_7_critical_point_enumeration():
    _run(7)


def test_criterion_8_blowup_convergence():
    _run(8)


def test_criterion_9_degeneracy_curve_identity():
    _run(9)


def test_criterion_10_asymptotic_direction():
    _run(10)
