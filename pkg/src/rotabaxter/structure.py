"""Executable checks relating CYBE solutions to Rota-Baxter operators.

Each pipeline derives R and R* from (form, r), verifies the hypotheses of
the result it implements, recomputes the conclusion, and raises
TheoremContradiction if the conclusion fails while the hypotheses hold.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

from .errors import (
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
from .exact_linalg import (
    Matrix,
    Subspace,
    independent,
    kernel,
    rational_eigen_decomposition,
    scalar,
    subspace_sum,
    vec_is_zero,
    vec_scale,
    vec_sub,
)
from .lie import (
    LieAlgebra,
    bracket_space,
    center,
    derived_subalgebra,
    direct_sum,
    ideal_closure,
    induce_operator,
    is_ideal,
    quotient,
)
from .quadratic import BilinearForm, adjoint
from .rota_baxter import (
    WeightSet,
    centroid_check,
    find_weights,
    is_rota_baxter,
    operators,
    solve_affine_weights,
    theta,
)
from .tensor import (
    Tensor2,
    is_ad_invariant,
    is_cybe_solution,
    operator_of,
    symmetric_part,
    tensor_of,
)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


@dataclass
class StructureReport:
    """Outcome of one check.

    ``failures`` lists what went wrong in words; ``witnesses`` carries the
    computed data (ideals, weights, failing pairs) either way.
    """

    claim: str
    failures: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)
    applicable: bool = True
    direction: str | None = None

    @property
    def holds(self) -> bool:
        return self.applicable and not self.failures

    @property
    def verdict(self) -> str:
        if not self.applicable:
            return NOT_APPLICABLE
        return FAIL if self.failures else PASS


@dataclass(frozen=True)
class Decomposition:
    """A direct sum decomposition of ``ambient`` into ``parts``."""

    ambient: Subspace
    parts: tuple
    labels: tuple

    def __post_init__(self):
        if len(self.parts) != len(self.labels):
            raise ValueError("one label per part")
        if not independent(self.parts):
            raise ValueError("parts are not independent")
        if subspace_sum(self.parts, self.ambient.ambient_dim) != self.ambient:
            raise ValueError("parts do not add up to the ambient subspace")

    def __getitem__(self, label):
        return self.parts[self.labels.index(label)]


def _setup(L: LieAlgebra, form: BilinearForm, r: Tensor2):
    if not form.is_nondegenerate:
        raise DegenerateForm("the form must be non-degenerate")
    return operators(L, form, r)


def _require_quasitriangular(L, r, claim):
    failures = []
    if not is_cybe_solution(L, r):
        failures.append("r does not solve CYBE")
    if not is_ad_invariant(L, symmetric_part(r)):
        failures.append("r + tau(r) is not ad-invariant")
    if failures:
        raise HypothesisViolated(
            "; ".join(failures), StructureReport(claim, failures, applicable=False)
        )


def _nonzero_weight(lam):
    lam = scalar(lam)
    if lam == 0:
        raise ZeroWeight("the weight must be non-zero")
    return lam


def _kernel_condition(L, K, R, Rs, lam):
    """Basis pairs (a, b) with K([theta_lam(e_a), e_b]) != 0."""
    th = theta(R, Rs, lam)
    bad = []
    for a in range(L.dim):
        ta = th @ L.basis_vector(a)
        for b in range(L.dim):
            if not vec_is_zero(K @ L.bracket(ta, L.basis_vector(b))):
                bad.append((a, b))
    return bad


def _condition_report(L, form, r, lam, which):
    R, Rs = _setup(L, form, r)
    lam = scalar(lam)
    K = R if which == "R" else Rs
    bad = _kernel_condition(L, K, R, Rs, lam)
    claim = "theorem1" if which == "R" else "remark1"
    report = StructureReport(claim)
    if bad:
        report.failures.append(
            f"[R(a) + R*(a) + lam a, b] leaves ker({which}) on {len(bad)} basis pairs"
        )
    cybe = is_cybe_solution(L, r)
    rb, _ = is_rota_baxter(L, K, lam)
    report.witnesses.update(
        weight=lam, cybe=cybe, rota_baxter=rb, failing_pairs=bad[:16], condition=not bad
    )
    if cybe and rb == bool(bad):
        raise TheoremContradiction(
            f"r solves CYBE but the kernel condition ({not bad}) disagrees with "
            f"{which} being Rota-Baxter ({rb})", report)
    if which == "R" and rb and cybe == bool(bad):
        raise TheoremContradiction(
            "R is Rota-Baxter but the kernel condition disagrees with CYBE", report)
    return report


def theorem1_condition(L: LieAlgebra, form: BilinearForm, r: Tensor2, lam) -> StructureReport:
    """[R a, b] + [R* a, b] + lam [a, b] in ker R for all basis a, b.

    Cross-checked: when r solves CYBE the condition must agree with R being
    Rota-Baxter of weight lam, and when R is Rota-Baxter it must agree with
    r solving CYBE.
    """
    return _condition_report(L, form, r, lam, "R")


def remark1_condition(L: LieAlgebra, form: BilinearForm, r: Tensor2, lam) -> StructureReport:
    """Same as theorem1_condition with ker R*; governs whether R* is Rota-Baxter."""
    return _condition_report(L, form, r, lam, "Rstar")


def condition_weights(L: LieAlgebra, form: BilinearForm, r: Tensor2, which: str = "R") -> WeightSet:
    """Every lam for which the kernel condition holds (it is affine in lam)."""
    R, Rs = _setup(L, form, r)
    K = R if which == "R" else Rs
    S = R + Rs
    parts = []
    for a in range(L.dim):
        ea = L.basis_vector(a)
        for b in range(L.dim):
            eb = L.basis_vector(b)
            parts.append((K @ L.bracket(S @ ea, eb), K @ L.bracket(ea, eb)))
    return solve_affine_weights(parts)


def corollary1_check(L: LieAlgebra, form: BilinearForm, R: Matrix, lam) -> StructureReport:
    """If R is Rota-Baxter of weight lam != 0 and theta_lam(L) lies in Z(L),
    the tensor of R solves CYBE."""
    lam = _nonzero_weight(lam)
    rb, defects = is_rota_baxter(L, R, lam)
    if not rb:
        raise NotRotaBaxter(f"R is not Rota-Baxter of weight {lam}")
    Rs = adjoint(L, form, R)
    th = theta(R, Rs, lam)
    Z = center(L)
    outside = [i for i in range(L.dim) if th @ L.basis_vector(i) not in Z]
    report = StructureReport("corollary1", witnesses={"weight": lam, "center": Z})
    if outside:
        report.applicable = False
        report.witnesses["theta_outside_center"] = outside
        return report
    r = tensor_of(L, form, R)
    if not is_cybe_solution(L, r):
        raise TheoremContradiction("theta maps into the center but r does not solve CYBE", report)
    report.witnesses["cybe"] = True
    return report


def corollary4_check(L: LieAlgebra, form: BilinearForm, R: Matrix, lam) -> StructureReport:
    """If R is Rota-Baxter of weight lam != 0 and theta_lam = 0, its tensor solves
    CYBE with ad-invariant symmetric part."""
    lam = _nonzero_weight(lam)
    rb, _ = is_rota_baxter(L, R, lam)
    if not rb:
        raise NotRotaBaxter(f"R is not Rota-Baxter of weight {lam}")
    th = theta(R, adjoint(L, form, R), lam)
    report = StructureReport("corollary4", witnesses={"weight": lam})
    if not th.is_zero():
        report.applicable = False
        return report
    r = tensor_of(L, form, R)
    cybe = is_cybe_solution(L, r)
    inv = is_ad_invariant(L, symmetric_part(r))
    report.witnesses.update(cybe=cybe, symmetric_part_invariant=inv)
    if not (cybe and inv):
        raise TheoremContradiction("theta vanishes but the tensor conclusion fails", report)
    return report


def ideal_I_lambda(L: LieAlgebra, form: BilinearForm, r: Tensor2, lam) -> Subspace:
    """theta_lam([L, L]), an ideal inside [L, L] when r + tau(r) is invariant."""
    R, Rs = _setup(L, form, r)
    if not is_ad_invariant(L, symmetric_part(r)):
        raise HypothesisViolated("r + tau(r) is not ad-invariant")
    D = derived_subalgebra(L)
    I = D.mapped(theta(R, Rs, scalar(lam)))
    if not is_ideal(L, I):
        raise TheoremContradiction("theta_lam([L, L]) is not an ideal")
    if not I <= D:
        raise TheoremContradiction("theta_lam([L, L]) is not inside [L, L]")
    return I


def theorem2_pipeline(L: LieAlgebra, form: BilinearForm, r: Tensor2, lam) -> StructureReport:
    """Build I_lam and, when R preserves it, descend R and R* to L / I_lam."""
    lam = scalar(lam)
    _require_quasitriangular(L, r, "theorem2")
    R, Rs = _setup(L, form, r)
    I = ideal_I_lambda(L, form, r, lam)
    report = StructureReport("theorem2", witnesses={"weight": lam, "I": I})
    r_invariant = I.mapped(R) <= I
    report.witnesses["R_invariant"] = r_invariant

    rb, _ = is_rota_baxter(L, R, lam)
    report.witnesses["rota_baxter"] = rb
    if rb:
        # an RB operator of weight lam must kill I_lam
        if not I.mapped(R).is_zero():
            raise TheoremContradiction("R is Rota-Baxter but R(I_lam) != 0", report)
    if not r_invariant:
        report.applicable = False
        return report

    if not I.mapped(Rs) <= I:
        raise TheoremContradiction("I_lam is R-invariant but not R*-invariant", report)
    Q = quotient(L, I)
    Rq = induce_operator(Q, R)
    Rsq = induce_operator(Q, Rs)
    report.witnesses.update(quotient=Q, induced_R=Rq, induced_Rstar=Rsq)
    for name, op in (("R", Rq), ("R*", Rsq)):
        ok, _ = is_rota_baxter(Q.quotient, op, lam)
        if not ok:
            raise TheoremContradiction(f"induced {name} is not Rota-Baxter of weight {lam}", report)
    thq = theta(Rq, Rsq, lam)
    if not derived_subalgebra(Q.quotient).mapped(thq).is_zero():
        raise TheoremContradiction("theta_lam does not vanish on the quotient's commutators", report)
    report.witnesses["quotient_theta_vanishes"] = True
    return report


def is_simple(L: LieAlgebra) -> bool:
    """Non-abelian, and every basis line generates all of L as an ideal.

    Exact for the catalog algebras; not a general simplicity test.
    """
    if L.dim == 0 or L.is_abelian():
        return False
    full = Subspace.full(L.dim)
    return all(ideal_closure(L, Subspace(L.dim, [L.basis_vector(i)])) == full for i in range(L.dim))


def corollary3_check(L: LieAlgebra, form: BilinearForm, r: Tensor2) -> StructureReport:
    """On a simple L, R is Rota-Baxter of a nonzero weight lam and R + R* + lam id = 0."""
    sym = symmetric_part(r)
    if r.is_zero():
        raise HypothesisViolated("r must be non-zero")
    if sym.is_zero():
        raise HypothesisViolated("r + tau(r) must be non-zero")
    _require_quasitriangular(L, r, "corollary3")
    if not is_simple(L):
        raise NotSimple("L is not simple")
    R, Rs = _setup(L, form, r)
    weights = find_weights(L, R)
    report = StructureReport("corollary3", witnesses={"weights": weights})
    lam = weights.single
    if lam is None or lam == 0:
        report.failures.append(f"R is not Rota-Baxter of a single non-zero weight ({weights})")
        return report
    report.witnesses["weight"] = lam
    if not theta(R, Rs, lam).is_zero():
        raise TheoremContradiction("R + R* + lam id is not zero on a simple algebra", report)
    report.witnesses["theta_zero"] = True
    return report


def _rb_pair(L, R, Rs, lam):
    return is_rota_baxter(L, R, lam)[0], is_rota_baxter(L, Rs, lam)[0]


def theorem3_decomposition(L: LieAlgebra, form: BilinearForm, r: Tensor2, lam,
                           direction: str = "forward", parts=None):
    """[L, L] = I1 + I2 with R(I1) = R*(I1) = 0 and theta_lam = 0 on I2.

    ``direction="forward"`` builds I1 = theta_lam([L, L]) and
    I2 = ker theta_lam within [L, L] when R and R* are both Rota-Baxter of
    weight lam. ``direction="converse"`` takes ``parts=(I1, I2)``, checks
    the hypotheses, and re-derives CYBE and invariance of r + tau(r).
    Returns (Decomposition, StructureReport).
    """
    lam = _nonzero_weight(lam)
    R, Rs = _setup(L, form, r)
    th = theta(R, Rs, lam)
    D = derived_subalgebra(L)
    if direction == "converse":
        return _theorem3_converse(L, r, R, Rs, th, D, lam, parts)
    if direction != "forward":
        raise ValueError(f"unknown direction {direction!r}")

    _require_quasitriangular(L, r, "theorem3")
    if r.is_skew():
        raise HypothesisViolated("r is skew-symmetric")
    I1 = D.mapped(th)
    rbR, rbS = _rb_pair(L, R, Rs, lam)
    report = StructureReport("theorem3", direction="forward",
                             witnesses={"weight": lam, "R_rota_baxter": rbR,
                                        "Rstar_rota_baxter": rbS, "I1": I1})
    if not (rbR and rbS):
        report.witnesses["R_I1"] = I1.mapped(R)
        report.witnesses["Rstar_I1"] = I1.mapped(Rs)
        report.failures.append(
            "R and R* are not both Rota-Baxter of weight " + str(lam)
            + f" (R: {rbR}, R*: {rbS})")
        raise NotBothRotaBaxter(report.failures[-1], report)

    I2 = kernel(th) & D
    report.witnesses["I2"] = I2
    problems = []
    if not (is_ideal(L, I1) and is_ideal(L, I2)):
        problems.append("I1 or I2 is not an ideal")
    if not independent([I1, I2]) or I1 + I2 != D:
        problems.append("[L, L] is not the direct sum of I1 and I2")
    if not (I1.mapped(R).is_zero() and I1.mapped(Rs).is_zero()):
        problems.append("R or R* does not vanish on I1")
    if not I2.mapped(th).is_zero():
        problems.append("theta_lam does not vanish on I2")
    for x in D.vectors:
        if vec_sub(x, vec_scale(1 / lam, th @ x)) not in I2:
            problems.append("x - theta_lam(x)/lam is not in I2")
            break
    if problems:
        report.failures.extend(problems)
        raise TheoremContradiction("; ".join(problems), report)
    return Decomposition(D, (I1, I2), ("I1", "I2")), report


def _theorem3_converse(L, r, R, Rs, th, D, lam, parts):
    if parts is None:
        raise ValueError("the converse direction needs parts=(I1, I2)")
    I1, I2 = parts
    report = StructureReport("theorem3", direction="converse",
                             witnesses={"weight": lam, "I1": I1, "I2": I2})
    rbR, rbS = _rb_pair(L, R, Rs, lam)
    missing = []
    if not (rbR and rbS):
        missing.append("R and R* are not both Rota-Baxter of this weight")
    if not centroid_check(L, R + Rs):
        missing.append("R + R* is not in the centroid")
    if not (is_ideal(L, I1) and is_ideal(L, I2)):
        missing.append("I1 or I2 is not an ideal")
    if not independent([I1, I2]) or I1 + I2 != D:
        missing.append("[L, L] is not the direct sum of I1 and I2")
    if not (I1.mapped(R).is_zero() and I1.mapped(Rs).is_zero()):
        missing.append("R or R* does not vanish on I1")
    if not I2.mapped(th).is_zero():
        missing.append("theta_lam does not vanish on I2")
    if missing:
        report.applicable = False
        report.failures.extend(missing)
        raise HypothesisViolated("; ".join(missing), report)
    return Decomposition(D, (I1, I2), ("I1", "I2")), _converse_conclusion(L, r, report)


def _converse_conclusion(L, r, report):
    cybe = is_cybe_solution(L, r)
    sym = symmetric_part(r)
    inv = is_ad_invariant(L, sym)
    report.witnesses.update(cybe=cybe, symmetric_part_invariant=inv,
                            symmetric_part_nonzero=not sym.is_zero())
    if not (cybe and inv):
        raise TheoremContradiction("hypotheses hold but r fails CYBE or invariance", report)
    return report


def theorem4_decomposition(L: LieAlgebra, form: BilinearForm, r: Tensor2, lam,
                           direction: str = "forward", parts=None):
    """L = I1 + I2 from the root spaces of R + R*.

    Forward: with R and R* both Rota-Baxter of weight lam, I1 is the root
    space of R + R* at -lam (or 0) and I2 the sum of the other root spaces;
    then theta_lam(I1) lies in Z(L) and R, R* vanish on [I2, L]. Only
    rational spectra are handled (NonRationalSpectrum otherwise).
    Converse: given ``parts``, re-derive CYBE and invariance of r + tau(r).
    """
    lam = _nonzero_weight(lam)
    R, Rs = _setup(L, form, r)
    thl = theta(R, Rs, lam)
    Z = center(L)
    full = Subspace.full(L.dim)
    if direction == "converse":
        return _theorem4_converse(L, r, R, Rs, thl, Z, full, lam, parts)
    if direction != "forward":
        raise ValueError(f"unknown direction {direction!r}")

    _require_quasitriangular(L, r, "theorem4")
    rbR, rbS = _rb_pair(L, R, Rs, lam)
    report = StructureReport("theorem4", direction="forward",
                             witnesses={"weight": lam, "R_rota_baxter": rbR,
                                        "Rstar_rota_baxter": rbS})
    if not (rbR and rbS):
        report.failures.append(
            f"R and R* are not both Rota-Baxter of weight {lam} (R: {rbR}, R*: {rbS})")
        raise NotBothRotaBaxter(report.failures[-1], report)

    spaces = rational_eigen_decomposition(R + Rs)
    report.witnesses["spectrum"] = [(alpha, S.dim) for alpha, S in spaces]
    problems = []
    for alpha, S in spaces:
        if not is_ideal(L, S):
            problems.append(f"root space for {alpha} is not an ideal")
    I1 = next((S for alpha, S in spaces if alpha == -lam), Subspace.zero(L.dim))
    I2 = subspace_sum([S for alpha, S in spaces if alpha != -lam], L.dim)
    report.witnesses.update(I1=I1, I2=I2)
    if not I1.mapped(thl) <= Z:
        problems.append("theta_lam(I1) is not central")
    I2L = bracket_space(L, I2, full)
    if not (I2L.mapped(R).is_zero() and I2L.mapped(Rs).is_zero()):
        problems.append("R or R* does not vanish on [I2, L]")
    if problems:
        report.failures.extend(problems)
        raise TheoremContradiction("; ".join(problems), report)
    return Decomposition(full, (I1, I2), ("I1", "I2")), report


def _theorem4_converse(L, r, R, Rs, thl, Z, full, lam, parts):
    if parts is None:
        raise ValueError("the converse direction needs parts=(I1, I2)")
    I1, I2 = parts
    report = StructureReport("theorem4", direction="converse",
                             witnesses={"weight": lam, "I1": I1, "I2": I2})
    missing = []
    if not is_rota_baxter(L, R, lam)[0]:
        missing.append("R is not Rota-Baxter of this weight")
    if not centroid_check(L, R + Rs):
        missing.append("R + R* is not in the centroid")
    if not (is_ideal(L, I1) and is_ideal(L, I2)):
        missing.append("I1 or I2 is not an ideal")
    if not independent([I1, I2]) or I1 + I2 != full:
        missing.append("L is not the direct sum of I1 and I2")
    if not I1.mapped(thl) <= Z:
        missing.append("theta_lam(I1) is not central")
    I2L = bracket_space(L, I2, full)
    if not (I2L.mapped(R).is_zero() and I2L.mapped(Rs).is_zero()):
        missing.append("R or R* does not vanish on [I2, L]")
    if missing:
        report.applicable = False
        report.failures.extend(missing)
        raise HypothesisViolated("; ".join(missing), report)
    return Decomposition(full, (I1, I2), ("I1", "I2")), _converse_conclusion(L, r, report)


def combine_components(components):
    """Direct sum of (algebra, form, tensor) triples."""
    algs, forms, tensors = zip(*components)
    L = reduce(direct_sum, algs)
    form = reduce(lambda a, b: a.direct_sum(b), forms)
    r = reduce(lambda a, b: a.direct_sum(b), tensors)
    return L, form, r


def harmonize_weights(components, target) -> list:
    """Scalars mu_i so that the direct sum with form sum(mu_i w_i) has one weight.

    Each component's operator must be Rota-Baxter of a single weight
    lam_i; then mu_i = target / lam_i. Mixing zero and non-zero lam_i
    cannot be repaired by rescaling and raises MixedZeroNonzeroWeights.
    """
    target = scalar(target)
    if target == 0:
        raise ZeroTargetWeight("the target weight must be non-zero")
    components = list(components)
    weights = []
    for idx, (Li, wi, ri) in enumerate(components):
        ws = find_weights(Li, operator_of(Li, wi, ri))
        if ws.single is None:
            raise HypothesisViolated(f"component {idx} has no single weight ({ws})")
        weights.append(ws.single)
    zero = [w == 0 for w in weights]
    if any(zero):
        report = StructureReport("harmonize", witnesses={"component_weights": weights})
        if len(components) > 1:
            L, form, r = combine_components(components)
            report.witnesses["combined_weights"] = find_weights(L, operator_of(L, form, r))
        if all(zero):
            raise HypothesisViolated("every component has weight 0", report)
        raise MixedZeroNonzeroWeights("components mix zero and non-zero weights", report)
    mus = [target / w for w in weights]
    scaled = [(Li, wi * mu, ri) for (Li, wi, ri), mu in zip(components, mus)]
    L, form, r = combine_components(scaled)
    ok, _ = is_rota_baxter(L, operator_of(L, form, r), target)
    if not ok:
        raise TheoremContradiction("rescaled direct sum is not Rota-Baxter of the target weight")
    return mus
