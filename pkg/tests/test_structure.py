from fractions import Fraction as F

import pytest

from rotabaxter import (
    Subspace,
    Tensor2,
    condition_weights,
    corollary1_check,
    corollary3_check,
    corollary4_check,
    harmonize_weights,
    ideal_I_lambda,
    killing_form,
    theorem1_condition,
    theorem2_pipeline,
    theorem3_decomposition,
    theorem4_decomposition,
)
from rotabaxter import structure
from rotabaxter.catalog import get, gl2, gl2_trace_form, sl2, standard_r
from rotabaxter.errors import (
    DegenerateForm,
    HypothesisViolated,
    MixedZeroNonzeroWeights,
    NotBothRotaBaxter,
    NotRotaBaxter,
    NotSimple,
    TheoremContradiction,
    ZeroTargetWeight,
    ZeroWeight,
)
from rotabaxter.rota_baxter import WeightSet
from rotabaxter.structure import NOT_APPLICABLE, Decomposition, is_simple


def units(n):
    return [tuple(int(i == j) for i in range(n)) for j in range(n)]


@pytest.fixture
def sl2k():
    L = sl2()
    return L, killing_form(L), standard_r()


@pytest.fixture
def plus_abelian():
    e = get("sl2-plus-abelian")
    return e.algebra, e.form, e.tensors["standard"]


def test_condition_weights(sl2k):
    L, k, r = sl2k
    assert condition_weights(L, k, r) == WeightSet.of(-4)
    e = get("sl2-dual-example3")
    assert condition_weights(e.algebra, e.form, e.tensors["example3"]) == WeightSet.of(-1)


def test_theorem1_reports_failing_pairs(sl2k):
    L, k, r = sl2k
    report = theorem1_condition(L, k, r, 1)
    assert not report.holds and report.witnesses["failing_pairs"]
    assert report.witnesses["cybe"] and not report.witnesses["rota_baxter"]


def test_theorem1_contradiction_is_raised(monkeypatch, sl2k):
    L, k, r = sl2k
    # a checker that lies about CYBE must be caught by the cross-check
    monkeypatch.setattr(structure, "is_cybe_solution", lambda L, r: False)
    with pytest.raises(TheoremContradiction):
        theorem1_condition(L, k, r, -4)


def test_degenerate_form_rejected():
    L = gl2()
    with pytest.raises(DegenerateForm):
        theorem1_condition(L, killing_form(L), Tensor2.zero(4), 0)


def test_corollary1(plus_abelian):
    L, w, r = plus_abelian
    R = structure.operator_of(L, w, r)
    report = corollary1_check(L, w, R, -4)
    assert report.holds and report.witnesses["cybe"]
    e = get("sl2-dual-example3")
    na = corollary1_check(e.algebra, e.form, e.operators["R"], -1)
    assert na.verdict == NOT_APPLICABLE
    with pytest.raises(NotRotaBaxter):
        corollary1_check(e.algebra, e.form, e.operators["Rstar"], -1)
    with pytest.raises(ZeroWeight):
        corollary1_check(L, w, R, 0)


def test_corollary4(sl2k):
    L, k, r = sl2k
    R = structure.operator_of(L, k, r)
    assert corollary4_check(L, k, R, -4).holds
    e = get("sl2-dual-example3")
    assert corollary4_check(e.algebra, e.form, e.operators["R"], -1).verdict == NOT_APPLICABLE


def test_corollary3_preconditions(sl2k):
    L, k, r = sl2k
    with pytest.raises(HypothesisViolated):
        corollary3_check(L, k, Tensor2.zero(3))
    with pytest.raises(HypothesisViolated):
        corollary3_check(L, k, get("sl2").tensors["skew"])
    e = get("gl2-example1")
    with pytest.raises(NotSimple):
        corollary3_check(e.algebra, e.form, e.tensors["example1"])


def test_is_simple():
    assert is_simple(sl2())
    assert not is_simple(gl2())
    assert not is_simple(get("sl2-dual-example3").algebra)


def test_ideal_requires_invariant_symmetric_part(sl2k):
    L, k, _ = sl2k
    with pytest.raises(HypothesisViolated):
        ideal_I_lambda(L, k, Tensor2.from_terms(3, [(0, 1, 1)]), -4)


def test_theorem2_trivial_ideal(sl2k):
    L, k, r = sl2k
    report = theorem2_pipeline(L, k, r, -4)
    assert report.holds and report.witnesses["I"].is_zero()
    assert report.witnesses["quotient"].quotient.dim == 3


def test_theorem2_hypotheses(sl2k):
    L, k, _ = sl2k
    with pytest.raises(HypothesisViolated):
        theorem2_pipeline(L, k, Tensor2.from_terms(3, [(0, 1, 1)]), -4)


def test_theorem3_errors(sl2k):
    L, k, r = sl2k
    with pytest.raises(ZeroWeight):
        theorem3_decomposition(L, k, r, 0)
    with pytest.raises(HypothesisViolated):
        theorem3_decomposition(L, k, get("sl2").tensors["skew"], -4)
    with pytest.raises(ValueError):
        theorem3_decomposition(L, k, r, -4, direction="sideways")


def test_theorem3_converse(plus_abelian):
    L, w, r = plus_abelian
    I1, I2 = Subspace.zero(4), Subspace(4, units(4)[:3])
    dec, report = theorem3_decomposition(L, w, r, -4, direction="converse", parts=(I1, I2))
    assert report.holds and report.witnesses["cybe"] and report.witnesses["symmetric_part_invariant"]
    assert dec["I2"] == I2
    with pytest.raises(HypothesisViolated):
        theorem3_decomposition(L, w, r, -4, direction="converse",
                               parts=(I2, Subspace.zero(4)))


def test_theorem4_converse(plus_abelian):
    L, w, r = plus_abelian
    parts = (Subspace(4, units(4)[:3]), Subspace(4, units(4)[3:]))
    dec, report = theorem4_decomposition(L, w, r, -4, direction="converse", parts=parts)
    assert report.holds
    with pytest.raises(HypothesisViolated):
        theorem4_decomposition(L, w, r, -4, direction="converse", parts=parts[::-1])


def test_theorem4_not_both(sl2k):
    e = get("sl2-dual-example3")
    with pytest.raises(NotBothRotaBaxter) as info:
        theorem4_decomposition(e.algebra, e.form, e.tensors["example3"], -1)
    assert info.value.report.witnesses["R_rota_baxter"]


def test_decomposition_validation():
    e = units(3)
    full = Subspace.full(3)
    Decomposition(full, (Subspace(3, e[:1]), Subspace(3, e[1:])), ("a", "b"))
    with pytest.raises(ValueError):
        Decomposition(full, (Subspace(3, e[:2]), Subspace(3, e[1:])), ("a", "b"))
    with pytest.raises(ValueError):
        Decomposition(full, (Subspace(3, e[:1]),), ("a",))


def test_harmonize(sl2k):
    L, k, r = sl2k
    comps = get("sl2-sum-example2").components
    assert harmonize_weights(comps, -4) == [1, 2]
    assert harmonize_weights(comps, -1) == [F(1, 4), F(1, 2)]
    with pytest.raises(ZeroTargetWeight):
        harmonize_weights(comps, 0)
    with pytest.raises(MixedZeroNonzeroWeights) as info:
        harmonize_weights(get("sl2-sum-mixed").components, -4)
    assert info.value.report.witnesses["combined_weights"].is_empty()
    skew = get("sl2").tensors["skew"]
    with pytest.raises(HypothesisViolated):
        harmonize_weights([(L, k, skew), (L, k, skew)], -4)
    with pytest.raises(HypothesisViolated):
        harmonize_weights([(L, k, Tensor2.from_terms(3, [(0, 1, 1)]))], -4)


def test_weight_zero_with_degenerate_killing_needs_trace_form():
    e = get("gl2-example1")
    assert theorem1_condition(e.algebra, gl2_trace_form(), e.tensors["example1"], 0).holds
