import numpy as np
import pytest

from qgharm.catalog import EXAMPLE_NAMES, get_example
from qgharm.core import symmetric_table_s3, verify_axioms
from qgharm.duality import (
    biduality_check,
    build_dual,
    comult_conjugation_residual,
    convolution_theorem_check,
    dual_fourier,
    element_from_json,
    element_to_json,
    fourier,
    fourier_coeffs,
    lp2_norm_base,
    lp2_norm_dual,
    pentagon_residual,
    plancherel_check,
    to_dual_coeffs,
)
from qgharm.errors import NotInDual


def _random(g, seed):
    rng = np.random.default_rng(seed)
    return rng.standard_normal(g.dim) + 1j * rng.standard_normal(g.dim)


def test_pentagon_and_conjugation_are_exact_on_the_catalog():
    for name in EXAMPLE_NAMES:
        pair = build_dual(get_example(name))
        assert pentagon_residual(pair) == 0.0, name
        assert comult_conjugation_residual(pair) == 0.0, name


def test_dual_satisfies_the_axioms():
    for name in EXAMPLE_NAMES:
        pair = build_dual(get_example(name))
        rep = verify_axioms(pair.dual_qg, tol=1e-10)
        assert rep.passed, f"{name}: {rep.failing()}"


def test_dual_weight_total_is_the_dimension():
    for name in EXAMPLE_NAMES:
        g = get_example(name)
        pair = build_dual(g)
        assert pair.dual_weight_total == pytest.approx(g.dim, abs=1e-12)


def test_dual_of_z2_functions_is_the_z2_group_algebra():
    pair = build_dual(get_example("z2-function"))
    gz2 = get_example("z2-group")
    d = pair.dual_qg
    assert np.max(np.abs(d.mult - gz2.mult)) < 1e-14
    assert np.max(np.abs(d.comult - gz2.comult)) < 1e-14
    assert np.max(np.abs(d.star - gz2.star)) < 1e-14
    assert np.max(np.abs(d.haar - gz2.haar)) < 1e-14


def test_dual_of_s3_group_algebra_is_s3_functions():
    """The dual basis element B_s corresponds to delta_{s^{-1}}; the relabel
    must intertwine multiplication, comultiplication, and the Haar state."""
    pair = build_dual(get_example("s3-group"))
    fn = get_example("s3-function")
    d = pair.dual_qg
    inv = symmetric_table_s3().inverse
    t = np.zeros((6, 6))
    for s in range(6):
        t[inv[s], s] = 1.0
    lhs = np.einsum("stu,ku->stk", d.mult, t)
    rhs = np.einsum("is,jt,ijk->stk", t, t, fn.mult)
    assert np.max(np.abs(lhs - rhs)) < 1e-14
    lhs = np.einsum("uvs,iu,jv->ijs", d.comult3, t, t)
    rhs = np.einsum("ks,ijk->ijs", t, fn.comult3)
    assert np.max(np.abs(lhs - rhs)) < 1e-14
    assert np.max(np.abs(d.haar - fn.haar @ t)) < 1e-14


def test_plancherel_on_seeded_samples():
    for name in EXAMPLE_NAMES:
        pair = build_dual(get_example(name))
        rep = plancherel_check(pair, samples=100, seed=42)
        assert rep.passed, name
        assert rep.max_residual < 1e-12, name


def test_plancherel_single_element_norms():
    g = get_example("kac-paljutkin")
    pair = build_dual(g)
    x = _random(g, seed=2)
    lhs = lp2_norm_dual(pair, fourier_coeffs(pair, x))
    assert lhs == pytest.approx(lp2_norm_base(g, x), rel=1e-12)


def test_convolution_theorem():
    for name in EXAMPLE_NAMES:
        g = get_example(name)
        pair = build_dual(g)
        rep = convolution_theorem_check(pair, _random(g, 3), _random(g, 4))
        assert rep.passed, name


def test_transform_of_point_mass_is_a_scaled_projection():
    pair = build_dual(get_example("z2-function"))
    f = fourier(pair, np.eye(2)[0])
    assert np.max(np.abs(f @ f - 0.5 * f)) == 0.0


def test_inverse_transform_roundtrip():
    for name in EXAMPLE_NAMES:
        g = get_example(name)
        pair = build_dual(g)
        x = _random(g, seed=5)
        back = dual_fourier(pair, fourier(pair, x)).coeffs
        assert np.max(np.abs(back - x)) < 1e-12, name


def test_to_dual_coeffs_gates_membership():
    pair = build_dual(get_example("s3-group"))
    x = _random(pair.base, seed=6)
    c = fourier_coeffs(pair, x)
    mat = fourier(pair, x)
    sol = to_dual_coeffs(pair, mat)
    assert np.max(np.abs(sol - c)) < 1e-10
    # the function algebra C(S3) sits diagonally, most matrices are outside
    outside = np.zeros((6, 6), dtype=complex)
    outside[0, 3] = 1.0
    with pytest.raises(NotInDual):
        to_dual_coeffs(pair, outside)


def test_biduality_on_the_catalog():
    for name in EXAMPLE_NAMES:
        rep = biduality_check(get_example(name))
        assert rep.passed, f"{name}: {rep.details}"
        assert rep.max_residual < 1e-12, name


def test_element_json_roundtrip():
    doc = element_to_json(np.array([1.0 + 2.0j, -0.5]), "dual")
    owner, c = element_from_json(doc)
    assert owner == "dual"
    assert np.max(np.abs(c - np.array([1.0 + 2.0j, -0.5]))) == 0.0
    with pytest.raises(ValueError):
        element_to_json([1.0], "primal")
