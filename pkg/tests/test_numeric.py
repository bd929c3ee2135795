import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mp

from sp3geom.algebra import TernaryForm
from sp3geom.numeric import (NumPoint, RootFindingError, bigfloat_from_json,
                             bigfloat_json, kernel, num_eval, num_residual,
                             numeric_rank, root_residual, roots_univariate,
                             tolerance)


def _close_set(got, want, eps=mpmath.mpf(10) ** -50):
    got = list(got)
    for w in want:
        k = min(range(len(got)), key=lambda i: abs(got[i] - w))
        assert abs(got[k] - w) < eps
        got.pop(k)


def test_roots_of_unity():
    r = roots_univariate([1, 0, 0, 0, -1])
    assert len(r) == 4
    with mp.workdps(60):
        _close_set(r, [1, -1, 1j, -1j])


def test_sqrt_two():
    with mp.workdps(60):
        _close_set(roots_univariate([1, 0, -2]), [mpmath.sqrt(2), -mpmath.sqrt(2)])


def test_fermat_slice():
    # 1 + t^4 + 1 = 0: four roots of modulus 2^(1/4)
    r = roots_univariate([1, 0, 0, 0, 2], prec=80)
    with mp.workdps(80):
        for z in r:
            assert abs(abs(z) - mpmath.mpf(2) ** 0.25) < mpmath.mpf(10) ** -70


def test_root_contract_and_precision():
    coeffs = [3, -7, 1, 5, -2]
    for prec in (40, 60, 120):
        for z in roots_univariate(coeffs, prec):
            with mp.workdps(prec):
                assert root_residual(coeffs, z) < tolerance(prec)


def test_multiple_root_backward_error():
    # (t - 1)^4: roots are only accurate to ~prec/4 digits, backward error is small
    for z in roots_univariate([1, -4, 6, -4, 1]):
        assert abs(z - 1) < mpmath.mpf(10) ** -10


def test_widely_spread_roots():
    r = roots_univariate([mpmath.mpf("1e-10"), 1, 1, 1, 1])
    assert max(abs(z) for z in r) > 1e9


def test_root_input_errors():
    with pytest.raises(ValueError):
        roots_univariate([0, 1, 2])
    with pytest.raises(ValueError):
        roots_univariate([1] * 10)
    with pytest.raises(ValueError):
        roots_univariate([1, 2], prec=20)
    assert roots_univariate([5]) == []


def test_non_convergence_reports_best_residual():
    with pytest.raises(RootFindingError) as info:
        roots_univariate([1, 0, 0, 0, 2], max_iter=1)
    assert info.value.best_residual > 0


@given(st.lists(st.integers(-50, 50), min_size=2, max_size=9).filter(lambda c: c[0] != 0))
def test_roots_reconstruct_polynomial(coeffs):
    roots = roots_univariate(coeffs, 40)
    assert len(roots) == len(coeffs) - 1
    for z in roots:
        with mp.workdps(40):
            assert root_residual(coeffs, z) < tolerance(40)


def test_numpoint_normalization():
    p = NumPoint((1, -4, 2))
    assert p[1] == 1 and abs(p[0] + mpmath.mpf("0.25")) < 1e-50
    with pytest.raises(ValueError):
        NumPoint((0, 0, 0))
    assert NumPoint((2, 4, 6)).distance(NumPoint((1, 2, 3))) == 0


def test_num_eval_examples():
    assert num_eval(TernaryForm(2, {}), (1, 2, 3)) == 0
    st_form = TernaryForm(2, {(1, 1, 0): 1})
    assert num_eval(st_form, NumPoint((1, 1, 0)).coords) == 1
    assert num_residual([st_form, TernaryForm(1, {(0, 0, 1): 1})], (2, 2, 0)) == 1
    assert num_residual([], (1, 0, 0)) == 0


def test_bigfloat_json():
    with mp.workdps(60):
        x = mpmath.sqrt(2)
        data = bigfloat_json(x, 60)
        assert data["prec"] == 60 and data["v"].startswith("1.41421356237309504880")
        assert abs(bigfloat_from_json(data) - x) < mpmath.mpf(10) ** -55
        z = bigfloat_from_json(bigfloat_json(mpmath.mpc(1, -2), 60))
        assert z == mpmath.mpc(1, -2)


def test_numeric_kernel_and_rank():
    rows = [[1, 2, 3], [2, 4, 6]]
    basis, ker_max, kept_min = kernel(rows, 3, 2)
    with mp.workdps(60):
        for v in basis:
            assert max(abs(sum(r[k] * v[k] for k in range(3))) for r in rows) < 1e-50
    assert ker_max < 1e-50 and kept_min > 0.1
    assert numeric_rank(rows) == 1
    assert numeric_rank([[1, 0], [0, 1]]) == 2
