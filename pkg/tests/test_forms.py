import pytest
from hypothesis import given, settings, strategies as st

from crystalpoly.rootdata import cartan_matrix
from crystalpoly.zcrystal import IotaSequence, ZVector
from crystalpoly.forms import (
    LinearForm, FormSet, beta, beta_pm, xi_form, lambda_form, apply_S,
    apply_Shat, closure, canonicalize, check_positivity,
    check_strict_positivity, check_ample, render_form, ClosureCapExceeded,
)


def LF(n, d, lam=None, const=0):
    return LinearForm(n, d, lam, const)


@pytest.fixture
def b2():
    return IotaSequence(cartan_matrix("B", 2))


def test_linear_form_normalization():
    f = LF(2, {(1, 1): 1, (2, 1): 0})
    assert f.coeffs == {(1, 1): 1}
    assert canonicalize(LF(2, {(1, 1): 0})) is None
    assert canonicalize(f) is f
    g = f.minus(f)
    assert g.is_zero()
    assert LF(2, {(1, 1): 2}) == LF(2, {(1, 1): 2, (3, 2): 0})


def test_render():
    f = LF(2, {(1, 1): 2, (1, 2): -1}, lam=(0, 1), const=-3)
    assert render_form(f) == "L2 + 2*x[1;1] - x[1;2] - 3"
    assert render_form(LF(2, {})) == "0"


def test_evaluate():
    f = LF(2, {(1, 1): 1, (2, 1): -2})
    x = ZVector({(1, 1): 3, (2, 1): 1})
    assert f.evaluate(x) == 1
    assert f.evaluate({(1, 1): 3, (2, 1): 1}) == 1
    g = LF(2, {(1, 1): -1}, lam=(1, 0))
    assert g.evaluate(x, lam_values=(5, 0)) == 2
    with pytest.raises(ValueError):
        g.evaluate(x)


def test_beta_expansion(b2):
    # beta_(1;1) = x_{1;1} + a_{1,2} x_{1;2} + x_{2;1}
    assert beta(b2, b2.flat(1, 1)) == LF(2, {(1, 1): 1, (1, 2): -1, (2, 1): 1})
    # beta_(1;2) = x_{1;2} + a_{2,1} x_{2;1} + x_{2;2}
    assert beta(b2, b2.flat(1, 2)) == LF(2, {(1, 2): 1, (2, 1): -2, (2, 2): 1})
    assert beta(b2, b2.flat(2, 1)) == LF(2, {(2, 1): 1, (2, 2): -1, (3, 1): 1})


def test_beta_pm(b2):
    k = b2.flat(2, 2)
    assert beta_pm(b2, k, "+") == beta(b2, k)
    assert beta_pm(b2, k, "-") == beta(b2, b2.flat(1, 2))
    # first-row minus branch carries -lambda_i and the earlier columns
    f = beta_pm(b2, b2.flat(1, 2), "-")
    assert f == LF(2, {(1, 1): -2, (1, 2): 1}, lam=(0, -1))
    g = beta_pm(b2, b2.flat(1, 1), "-")
    assert g == LF(2, {(1, 1): 1}, lam=(-1, 0))
    with pytest.raises(ValueError):
        beta_pm(b2, 1, "?")


def test_xi_and_lambda_forms(b2):
    assert xi_form(b2, 1) == LF(2, {(1, 1): -1})
    assert xi_form(b2, 2) == LF(2, {(1, 1): 2, (1, 2): -1})
    assert lambda_form(b2, 2) == LF(2, {(1, 1): 2, (1, 2): -1}, lam=(0, 1))
    # lambda_form(i) = -beta^-_{(1;i)}
    zero = lambda_form(b2, 2).minus(beta_pm(b2, b2.flat(1, 2), "-"), -1)
    assert zero.coeffs == {} and zero.lam == (0, 0)


def test_apply_S_branches(b2):
    f = LF(2, {(1, 1): 1})
    g = apply_S(b2, b2.flat(1, 1), f)          # positive branch
    assert g == LF(2, {(1, 2): 1, (2, 1): -1})
    h = apply_S(b2, b2.flat(2, 1), g)          # negative branch, k^- exists
    assert h == g.minus(beta(b2, b2.flat(1, 1)), -1)
    assert h == LF(2, {(1, 1): 1})             # returns to the seed here
    # zero coefficient: identity
    assert apply_S(b2, b2.flat(3, 2), g) is g
    # first-row violation: no-op + event
    ev = []
    bad = LF(2, {(1, 2): -1})
    assert apply_S(b2, b2.flat(1, 2), bad, ev) is bad
    assert ev == [(bad, b2.flat(1, 2))]


def test_apply_Shat_first_row(b2):
    bad = LF(2, {(1, 2): -1})
    out = apply_Shat(b2, b2.flat(1, 2), bad)
    # adds beta^-: -x_{1;2} + (-lambda_2 - 2x_{1;1} + x_{1;2}) ... times -(-1)
    assert out == LF(2, {(1, 1): -2}, lam=(0, -1))


# frozen hand-computed families ------------------------------------------

def test_b2_binf_family(b2):
    fam = closure(b2, [LF(2, {(1, 1): 1})], "S")
    assert fam == FormSet([
        LF(2, {(1, 1): 1}),
        LF(2, {(1, 2): 1, (2, 1): -1}),
        LF(2, {(2, 1): 1, (2, 2): -1}),
        LF(2, {(3, 1): -1}),
    ])
    assert check_positivity(fam) == []


def test_b2_spin_family(b2):
    ev = []
    fam = closure(b2, [xi_form(b2, 2)], "S", events=ev)
    assert fam == FormSet([
        LF(2, {(1, 1): 2, (1, 2): -1}),
        LF(2, {(1, 2): 1, (2, 1): -2}),
        LF(2, {(2, 2): -1}),
    ])
    # exactly the seed triggers the first-row violation
    assert len(ev) == 1 and ev[0][0] == xi_form(b2, 2)


def test_c3_node3_family_plain_symbols():
    iota = IotaSequence(cartan_matrix("C", 3))
    fam = closure(iota, [xi_form(iota, 3)], "S")
    assert fam == FormSet([
        LF(3, {(1, 2): 1, (1, 3): -1}),
        LF(3, {(1, 3): 1, (2, 1): 1, (2, 2): -1}),
        LF(3, {(1, 3): 1, (3, 1): -1}),
        LF(3, {(2, 1): 1, (2, 3): -1}),
        LF(3, {(2, 2): 1, (2, 3): -1, (3, 1): -1}),
        LF(3, {(2, 3): 1, (3, 2): -1}),
        LF(3, {(3, 3): -1}),
    ])


def test_b3_node3_family_doubled_symbols():
    iota = IotaSequence(cartan_matrix("B", 3))
    fam = closure(iota, [xi_form(iota, 3)], "S")
    assert fam == FormSet([
        LF(3, {(1, 2): 2, (1, 3): -1}),
        LF(3, {(1, 3): 1, (2, 1): 2, (2, 2): -2}),
        LF(3, {(1, 3): 1, (3, 1): -2}),
        LF(3, {(2, 1): 2, (2, 3): -1}),
        LF(3, {(2, 2): 2, (2, 3): -1, (3, 1): -2}),
        LF(3, {(2, 3): 1, (3, 2): -2}),
        LF(3, {(3, 3): -1}),
    ])


def test_shat_closure_is_lambda_plus_s_closure(b2):
    # hatted closure of lambda_i + xi^(i) = lambda_i + unhatted closure
    for i in (1, 2):
        hat = closure(b2, [lambda_form(b2, i)], "Shat")
        plain = closure(b2, [xi_form(b2, i)], "S")
        lam = tuple(1 if m == i else 0 for m in (1, 2))
        assert hat == FormSet([f.plus_constant(lam=lam) for f in plain])


def test_closure_controls(b2):
    gen = [LF(2, {(1, 1): 1})]
    # position bound 0 freezes everything
    assert closure(b2, gen, "S", position_bound=0) == FormSet(gen)
    with pytest.raises(ClosureCapExceeded):
        closure(b2, gen, "S", size_cap=2)
    with pytest.raises(ValueError):
        closure(b2, gen, "X")


def test_checks(b2):
    fam = closure(b2, [LF(2, {(1, 1): 1})], "S")
    assert check_positivity(fam) == []
    assert check_positivity(FormSet([xi_form(b2, 2)])) == [xi_form(b2, 2)]
    xi_cl = {i: closure(b2, [xi_form(b2, i)], "S") for i in (1, 2)}
    assert check_strict_positivity(fam, xi_cl, b2) == []
    lam_fam = FormSet([lambda_form(b2, 2), LF(2, {(2, 2): -1}, lam=(0, 1))])
    assert check_ample(lam_fam, (0, 1)) == []
    assert check_ample(FormSet([LF(2, {}, lam=(1, -1))]), (0, 1)) != []


def test_formset_behaviour():
    f = LF(2, {(1, 1): 1})
    g = LF(2, {(1, 2): 1})
    s = FormSet([f, g, f])
    assert len(s) == 2 and f in s
    assert s == FormSet([g, f])
    assert s.union(FormSet([LF(2, {(2, 1): 1})])).difference(s) == \
        FormSet([LF(2, {(2, 1): 1})])
    # zero forms are silently dropped
    assert len(FormSet([f, f.minus(f)])) == 1


# property tests -----------------------------------------------------------

SMALL = [("A", 2), ("B", 2), ("C", 2), ("G", 2), ("B", 3)]


@st.composite
def random_form(draw):
    t, n = draw(st.sampled_from(SMALL))
    iota = IotaSequence(cartan_matrix(t, n))
    slots = draw(st.dictionaries(
        st.tuples(st.integers(1, 3), st.integers(1, n)),
        st.integers(-3, 3), max_size=5))
    return iota, LinearForm(n, slots)


@settings(deadline=None, max_examples=80)
@given(random_form(), st.data())
def test_S_is_idempotent_per_position(rf, data):
    iota, f = rf
    k = data.draw(st.integers(1, 4 * iota.rank))
    g = apply_S(iota, k, f)
    assert apply_S(iota, k, g) == g               # coefficient at k is now 0
    h = apply_Shat(iota, k, f)
    assert apply_Shat(iota, k, h) == h


@settings(deadline=None, max_examples=80)
@given(random_form(), st.data())
def test_S_step_is_a_beta_multiple(rf, data):
    # phi - S_k(phi) is exactly phi_k * beta_k (or beta_{k^-} on the
    # negative branch), so S never changes a form in any other way
    iota, f = rf
    k = data.draw(st.integers(1, 3 * iota.rank))
    g = apply_S(iota, k, f)
    diff = f.minus(g)
    c = f.coeff(*iota.rowcol(k))
    if c > 0:
        assert diff.minus(beta(iota, k), c).is_zero()
    elif c < 0 and iota.kminus(k) > 0:
        assert diff.minus(beta(iota, iota.kminus(k)), c).is_zero()
    else:
        assert diff.is_zero()
