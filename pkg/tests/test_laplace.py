import numpy as np
import pytest

from conftest import rel_err
from voigtw.laplace import laplace_rel_error, laplace_w
from voigtw.oracle import ref_w
from voigtw.scheme import boundary_z_c, external_depth


def test_large_z_leading_term():
    z = complex(1000, 0.1)
    w = laplace_w(z, 6)
    leading = 1j / (np.sqrt(np.pi) * z)
    assert abs(w - leading) / abs(w) <= 1e-5
    ref = ref_w(1000, 0.1)
    assert rel_err(w.real, ref.real) <= 2.5e-16
    assert rel_err(w.imag, ref.imag) <= 2.5e-16


def test_pure_imaginary_matches_erfcx():
    # w(iy) = exp(y^2) erfc(y); frozen from the multiprecision oracle
    w = laplace_w(10j, 65)
    assert w.imag == 0.0
    assert rel_err(w.real, 0.05614099274382259) <= 2.5e-16


def test_conjugate_parity_exact():
    zs = np.array([3 + 0.1j, 8 + 1e-5j, 100 + 1e-20j, 17.2 + 0.03j])
    assert np.array_equal(laplace_w(-zs.conj(), 16), laplace_w(zs, 16).conj())


def test_vectorized_matches_scalar():
    zs = np.array([25 + 0.1j, 300 + 1e-8j])
    vec = laplace_w(zs, 6)
    assert all(vec[i] == laplace_w(complex(zs[i]), 6) for i in range(2))


def test_rejects_zero_and_bad_depth():
    with pytest.raises(ValueError):
        laplace_w(0j, 6)
    with pytest.raises(ValueError):
        laplace_w(1 + 1j, 0)


class TestRelError:
    def test_exact_match_is_zero(self):
        ref = laplace_w(30 + 0.05j, 30)
        assert laplace_rel_error(30 + 0.05j, 30, ref) == 0.0

    def test_definition(self):
        ref = laplace_w(30 + 0.05j, 30)
        n = 30
        # perturb only the real part of the reference by 1e-10
        skew = complex(ref.real / (1 + 1e-10), ref.imag)
        assert laplace_rel_error(30 + 0.05j, n, skew) == pytest.approx(1e-10, rel=1e-4)

    def test_rejects_zero_component(self):
        with pytest.raises(ValueError):
            laplace_rel_error(10 + 0.1j, 6, complex(1.0, 0.0))


def test_tiny_y_convergence_stalls():
    # the small-y pathology: at |z| = 8, y = 1e-20 the fraction cannot get
    # below 1e-6 no matter the depth
    ref = complex(ref_w(8, 1e-20))
    assert laplace_rel_error(complex(8, 1e-20), 1000, ref) > 1e-6


def test_error_nonincreasing_in_depth():
    floor = 3e-16
    for z in [complex(8, 0.05), complex(12, 0.05), complex(40, 0.05)]:
        ref = complex(ref_w(z.real, z.imag))
        errs = [laplace_rel_error(z, n, ref) for n in (2, 4, 8, 16, 32, 64)]
        for prev, nxt in zip(errs, errs[1:]):
            assert nxt <= prev + floor


def test_accurate_beyond_boundary_with_calibrated_depth():
    # the dispatch premise: outside z_c(y) the fraction reaches the double
    # precision floor once given the calibrated depth for its radius
    y = 0.05
    z_c = boundary_z_c(y, 1e-16)
    for r in np.linspace(z_c, 30, 25):
        x = np.sqrt(r * r - y * y)
        ref = complex(ref_w(x, y))
        assert laplace_rel_error(complex(x, y), external_depth(r), ref) <= 1.5e-15
