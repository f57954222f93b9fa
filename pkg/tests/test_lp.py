import numpy as np
import pytest

from qgharm.catalog import EXAMPLE_NAMES, get_example
from qgharm.core import build_function_algebra, cyclic_table
from qgharm.duality import build_dual, fourier_coeffs
from qgharm.errors import BadExponents, NotAutomorphism
from qgharm.lp import (
    base_space,
    conjugate_exponent,
    dual_space,
    functional_norm_submultiplicativity_check,
    hausdorff_young_check,
    holder_check,
    lp_norm,
    lp_norms_batch,
    norm_transport_check,
    weighted_space,
    young_check,
    young_exponent,
    young_l1_lp_check,
)

INF = float("inf")


def _random(g, seed, count=1):
    rng = np.random.default_rng(seed)
    out = rng.standard_normal((count, g.dim)) + 1j * rng.standard_normal((count, g.dim))
    return out[0] if count == 1 else out


# ---------------------------------------------------------------------------
# exponent arithmetic
# ---------------------------------------------------------------------------

def test_conjugate_exponent():
    assert conjugate_exponent(1.0) == INF
    assert conjugate_exponent(INF) == 1.0
    assert conjugate_exponent(2.0) == 2.0
    assert conjugate_exponent(4.0 / 3.0) == pytest.approx(4.0)
    with pytest.raises(BadExponents):
        conjugate_exponent(0.5)


def test_young_exponent():
    assert young_exponent(1.0, 1.0) == 1.0
    assert young_exponent(2.0, 1.0) == 2.0
    assert young_exponent(2.0, 2.0) == INF
    assert young_exponent(4.0 / 3.0, 4.0 / 3.0) == pytest.approx(2.0)
    with pytest.raises(BadExponents):
        young_exponent(3.0, 3.0)


# ---------------------------------------------------------------------------
# the norm itself
# ---------------------------------------------------------------------------

def test_commutative_norm_is_the_weighted_entrywise_norm():
    """On C(Z_n) the spectral norm formula must collapse to the plain
    weighted p-norm of the function values."""
    g = build_function_algebra(cyclic_table(5))
    sp = base_space(g)
    x = _random(g, seed=0)
    for p in (1.0, 4.0 / 3.0, 2.0, 3.0):
        direct = (np.sum(np.abs(x) ** p) / 5.0) ** (1.0 / p)
        assert lp_norm(sp, x, p) == pytest.approx(direct, rel=1e-12)
    assert lp_norm(sp, x, INF) == pytest.approx(np.max(np.abs(x)), rel=1e-12)


def test_group_algebra_closed_form_on_z2():
    # a u_0 + b u_1 has eigenvalues a + b and a - b, each with weight 1/2
    g = get_example("z2-group")
    sp = base_space(g)
    a, b = 1.3, -0.4
    for p in (1.0, 2.0, 4.0):
        direct = (0.5 * abs(a + b) ** p + 0.5 * abs(a - b) ** p) ** (1.0 / p)
        assert lp_norm(sp, [a, b], p) == pytest.approx(direct, rel=1e-12)


def test_l2_norm_matches_the_gram_form():
    for name in EXAMPLE_NAMES:
        g = get_example(name)
        sp = base_space(g)
        x = _random(g, seed=1)
        direct = float(np.sqrt((x.conj() @ g.gram @ x).real))
        assert lp_norm(sp, x, 2.0) == pytest.approx(direct, rel=1e-10), name


def test_norm_is_monotone_in_p_under_a_state():
    # for a state, p <= q implies ||x||_p <= ||x||_q
    g = get_example("kac-paljutkin")
    sp = base_space(g)
    x = _random(g, seed=2)
    ps = [1.0, 1.5, 2.0, 3.0, 6.0, INF]
    vals = [lp_norm(sp, x, p) for p in ps]
    for a, b in zip(vals, vals[1:]):
        assert a <= b * (1.0 + 1e-12)


def test_norm_of_projection_has_closed_form():
    # ||h||_p = phi(h)^{1/p} for a projection h
    g = get_example("z4-function")
    sp = base_space(g)
    h = np.array([1.0, 0.0, 1.0, 0.0])  # indicator of the even subgroup
    for p in (1.0, 4.0 / 3.0, 2.0, 4.0):
        assert lp_norm(sp, h, p) == pytest.approx(0.5 ** (1.0 / p), rel=1e-12)
    assert lp_norm(sp, h, INF) == pytest.approx(1.0, rel=1e-12)


def test_batch_norms_match_single_calls():
    g = get_example("s3-group")
    sp = base_space(g)
    xs = _random(g, seed=3, count=8)
    batch = lp_norms_batch(sp, xs, 4.0 / 3.0)
    for i in range(8):
        assert batch[i] == pytest.approx(lp_norm(sp, xs[i], 4.0 / 3.0), rel=1e-12)


def test_triangle_inequality_and_scaling():
    g = get_example("s3-function")
    sp = base_space(g)
    x, y = _random(g, seed=4, count=2)
    for p in (1.0, 2.0, 3.0, INF):
        assert lp_norm(sp, x + y, p) <= (lp_norm(sp, x, p) + lp_norm(sp, y, p)) * (1 + 1e-12)
        assert lp_norm(sp, 2.5 * x, p) == pytest.approx(2.5 * lp_norm(sp, x, p), rel=1e-12)


# ---------------------------------------------------------------------------
# inequalities
# ---------------------------------------------------------------------------

def test_young_holds_on_random_samples():
    pairs = [(1.0, 1.0), (4.0 / 3.0, 4.0 / 3.0), (3.0 / 2.0, 2.0), (2.0, 1.0)]
    for name in EXAMPLE_NAMES:
        g = get_example(name)
        sp = base_space(g)
        rng = np.random.default_rng(123)
        for _ in range(50):
            x = rng.standard_normal(g.dim) + 1j * rng.standard_normal(g.dim)
            y = rng.standard_normal(g.dim) + 1j * rng.standard_normal(g.dim)
            for p, q in pairs:
                rep = young_check(g, x, y, p, q, space=sp)
                assert rep.holds, (name, p, q, rep.ratio)


def test_young_equality_at_a_group_like_projection():
    g = get_example("z4-function")
    sp = base_space(g)
    h = np.array([1.0, 0.0, 1.0, 0.0])
    rep = young_check(g, h, h, 4.0 / 3.0, 4.0 / 3.0, space=sp)
    assert rep.ratio == pytest.approx(1.0, abs=1e-12)


def test_young_endpoint_q_one():
    g = get_example("s3-group")
    x, y = _random(g, seed=5, count=2)
    for p in (1.0, 2.0, INF):
        rep = young_l1_lp_check(g, x, y, p)
        assert rep.holds


def test_hausdorff_young_random_and_endpoint():
    for name in EXAMPLE_NAMES:
        g = get_example(name)
        pair = build_dual(g)
        bsp, dsp = base_space(g), dual_space(pair)
        rng = np.random.default_rng(7)
        for _ in range(25):
            x = rng.standard_normal(g.dim) + 1j * rng.standard_normal(g.dim)
            for p in (1.0, 4.0 / 3.0, 2.0):
                rep = hausdorff_young_check(pair, x, p, bsp, dsp)
                assert rep.holds, (name, p, rep.ratio)
            # p = 2 is the Plancherel identity, an equality
            rep = hausdorff_young_check(pair, x, 2.0, bsp, dsp)
            assert rep.ratio == pytest.approx(1.0, abs=1e-11)


def test_hausdorff_young_rejects_large_p():
    pair = build_dual(get_example("z2-function"))
    with pytest.raises(BadExponents):
        hausdorff_young_check(pair, np.ones(2), 3.0)


def test_hausdorff_young_point_mass_value():
    # |F(delta_0)| has one eigenvalue 1/2 of dual weight 2 and one eigenvalue 0;
    # at p = 4/3 both sides equal (1/2)^{3/4}
    pair = build_dual(get_example("z2-function"))
    rep = hausdorff_young_check(pair, np.eye(2)[0], 4.0 / 3.0)
    assert rep.lhs == pytest.approx(0.5 ** 0.75, rel=1e-12)
    assert rep.rhs == pytest.approx(0.5 ** 0.75, rel=1e-12)


def test_norm_transport_along_inversion():
    g = get_example("z4-function")
    table = cyclic_table(4)
    alpha = np.zeros((4, 4))
    for i in range(4):
        alpha[table.inverse[i], i] = 1.0
    rep = norm_transport_check(g, alpha, _random(g, seed=8), 3.0)
    assert rep.passed
    with pytest.raises(NotAutomorphism):
        norm_transport_check(g, np.diag([1.0, 2.0, 1.0, 1.0]), np.ones(4), 2.0)


def test_holder_and_functional_submultiplicativity():
    g = get_example("kac-paljutkin")
    x, y = _random(g, seed=9, count=2)
    assert holder_check(g, x, y, 4.0 / 3.0).passed
    assert holder_check(g, x, y, 1.0).passed
    assert functional_norm_submultiplicativity_check(g, x, y).passed


def test_weighted_space_accepts_the_dual_weight():
    pair = build_dual(get_example("s3-group"))
    sp = weighted_space(pair.dual_qg, pair.dual_weight, owner="dual")
    assert not sp.is_state  # total mass is dim, not 1
    assert sp.tracial
