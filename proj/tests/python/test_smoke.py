import cmath
import math

import pytest

import hybridisc as hd

U0 = cmath.exp(1j * math.pi / 4)


def test_k_relations():
    rho = 0.75
    z = 0.8 * cmath.exp(0.7j)
    k = hd.k_value(z, rho)
    assert abs(hd.k_value(rho * rho * z, rho) - k + 1) < 1e-11
    assert abs(hd.k_value(1 / z, rho) + k - 1) < 1e-11
    assert abs(hd.k_sum(z, rho) - hd.k_modular(z, rho)) < 1e-10


def test_exact_solution_streamline():
    m = hd.AnnulusMap(1.0, 0.99)
    sol = hd.ExactSolution(m, U0)
    assert abs(sol.W(-1)) < 1e-12
    vals = [sol.W(cmath.exp(2j * math.pi * k / 64)).imag for k in range(64)]
    assert max(vals) - min(vals) < 1e-10
    c, d = sol.omega_coeffs(32)
    L = sol.log_strength()
    assert abs(0.99 * c[0] - L) < 1e-10 * abs(L)


def test_two_disc_hybrid():
    cfg = hd.two_disc_configuration(1.0, 0.99, U0)
    rep = hd.solve_two_disc(cfg, hd.SchemeKind.Hybrid, 20)
    assert rep.max_boundary_error < 1e-6
    e = rep.expansion
    assert abs(e.far_field_dipole() - e.dipole_quadrature(10.0)) < 1e-8


def test_nine_disc_dipole():
    rep = hd.solve_multidisc(hd.nine_disc_problem(1e-2, 5))
    assert abs(abs(rep.expansion.far_field_dipole()) - 0.39194) < 1e-4


def test_errors():
    with pytest.raises(hd.InvalidGeometry):
        hd.AnnulusMap(1.0, 1.5)
    with pytest.raises(hd.HybridiscError):
        hd.two_disc_configuration(1.0, 1.2)
