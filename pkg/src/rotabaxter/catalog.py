"""Built-in algebras, forms, tensors and operators with their expected outcomes.

Every expected value is re-derived by :func:`verify`; nothing stored here is
trusted without recomputation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType

from .errors import StructureError, TheoremContradiction, UnknownEntry
from .exact_linalg import Matrix, Subspace, scalar
from .lie import LieAlgebra, abelian, center, derived_subalgebra, direct_sum, validate
from .quadratic import BilinearForm, adjoint, dual_numbers_extension, is_invariant, killing_form
from .rota_baxter import WeightSet, centroid_check, find_weights, theta
from .structure import (
    combine_components,
    condition_weights,
    corollary3_check,
    harmonize_weights,
    ideal_I_lambda,
    remark1_condition,
    theorem1_condition,
    theorem2_pipeline,
    theorem3_decomposition,
    theorem4_decomposition,
)
from .tensor import (
    Tensor2,
    is_ad_invariant,
    is_cybe_solution,
    operator_of,
    symmetric_part,
    tensor_of,
)

F = Fraction


def sl2() -> LieAlgebra:
    """sl2 on the basis e, h, f with [h, e] = 2e, [h, f] = -2f, [e, f] = h."""
    return LieAlgebra(
        3,
        {(0, 1): {0: -2}, (0, 2): {1: 1}, (1, 2): {2: -2}},
        ("e", "h", "f"),
        name="sl2",
    )


def gl2() -> LieAlgebra:
    """gl2 on the matrix units e11, e12, e21, e22."""
    return LieAlgebra(
        4,
        {
            (0, 1): {1: 1},
            (0, 2): {2: -1},
            (1, 2): {0: 1, 3: -1},
            (1, 3): {1: 1},
            (2, 3): {2: -1},
        },
        ("e11", "e12", "e21", "e22"),
        name="gl2",
    )


def gl2_trace_form() -> BilinearForm:
    """tr(xy); the Killing form of gl2 is degenerate."""
    return BilinearForm([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])


def sl2_dual_numbers():
    """(L2, w): sl2 over Q[t]/(t^2) with the form kappa(a, b) pi(f g)."""
    L = sl2()
    return dual_numbers_extension(L, killing_form(L))


def standard_r() -> Tensor2:
    """e (x) f + 1/4 h (x) h on sl2."""
    return Tensor2.from_terms(3, [(0, 2, 1), (1, 1, F(1, 4))])


def _embed(t: Tensor2, dim: int, offset: int = 0) -> Tensor2:
    return Tensor2.from_terms(dim, [(i + offset, j + offset, c) for i, j, c in t.terms()])


@dataclass(frozen=True)
class Expectation:
    kind: str
    args: tuple
    value: object

    @property
    def name(self) -> str:
        return f"{self.kind}({', '.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    algebra: LieAlgebra
    form: BilinearForm | None
    tensors: MappingProxyType
    operators: MappingProxyType
    expected: tuple
    components: tuple = ()
    notes: tuple = ()


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    expected: object = None
    actual: object = None


def _entry(name, description, algebra, form, tensors, operators, expected, **kw):
    return CatalogEntry(
        name,
        description,
        algebra,
        form,
        MappingProxyType(dict(tensors)),
        MappingProxyType(dict(operators)),
        tuple(Expectation(k, tuple(a), v) for k, a, v in expected),
        **kw,
    )


W = WeightSet.of
NONE = WeightSet.empty()


def _sl2_entry():
    L = sl2()
    kappa = killing_form(L)
    r = standard_r()
    R = operator_of(L, kappa, r)
    casimir = Tensor2.from_terms(3, [(0, 2, 1), (2, 0, 1), (1, 1, F(1, 2))])
    skew = Tensor2.from_terms(3, [(1, 0, 1), (0, 1, -1)])
    return _entry(
        "sl2",
        "sl2 with its Killing form and the standard r-matrix e(x)f + 1/4 h(x)h",
        L, kappa,
        {"standard": r, "casimir": casimir, "skew": skew},
        {"R": R, "Rstar": adjoint(L, kappa, R)},
        [
            ("center_dim", (), 0),
            ("derived_dim", (), 3),
            ("operator", ("standard",), Matrix.diag([4, 2, 0])),
            ("weights", ("R",), W(-4)),
            ("cybe", ("standard",), True),
            ("sym_invariant", ("standard",), True),
            ("invariant", ("casimir",), True),
            ("cybe", ("skew",), True),
            ("tensor_weights", ("skew",), W(0)),
            ("theta_zero", ("standard", "-4"), True),
            ("theorem1", ("standard", "-4"), True),
            ("remark1", ("standard", "-4"), True),
            ("ideal", ("standard", "-4"), Subspace.zero(3)),
            ("theorem2", ("standard", "-4"), "pass"),
            ("theorem3", ("standard", "-4"), (0, 3)),
            ("theorem4", ("standard", "-4"), ((F(4), 3),)),
            ("corollary3", ("standard",), F(-4)),
        ],
    )


def _sl2_trace_entry():
    L = sl2()
    form = killing_form(L) * F(1, 4)
    r = standard_r()
    R = operator_of(L, form, r)
    return _entry(
        "sl2-trace",
        "sl2 with kappa/4 (the trace form); rescaling the form rescales the weight",
        L, form, {"standard": r}, {"R": R, "Rstar": adjoint(L, form, R)},
        [
            ("weights", ("R",), W(-1)),
            ("theta_zero", ("standard", "-1"), True),
            ("corollary3", ("standard",), F(-1)),
        ],
    )


def _gl2_entry():
    L = gl2()
    form = gl2_trace_form()
    E = (1, 0, 0, 1)
    e11 = (1, 0, 0, 0)
    e22 = (0, 0, 0, 1)
    r = (Tensor2.outer(E, e11) + Tensor2.outer(e22, E)) * F(1, 2)
    # R(a) = 1/2 (a11 E + tr(a) e22), written down directly
    cols = []
    for j in range(4):
        a11 = 1 if j == 0 else 0
        tr = 1 if j in (0, 3) else 0
        cols.append([F(a11, 2), 0, 0, F(a11, 2) + F(tr, 2)])
    R_formula = Matrix.from_columns(cols)
    return _entry(
        "gl2-example1",
        "gl2 with the trace form and r = 1/2 (E(x)e11 + e22(x)E): a weight-zero operator",
        L, form, {"example1": r}, {"R": R_formula, "Rstar": adjoint(L, form, R_formula)},
        [
            ("center_dim", (), 1),
            ("derived_dim", (), 3),
            ("operator", ("example1",), R_formula),
            ("cybe", ("example1",), True),
            ("skew", ("example1",), False),
            ("sym_part", ("example1",), Tensor2.outer(E, E)),
            ("sym_invariant", ("example1",), True),
            ("weights", ("R",), W(0)),
            ("centroid", ("R",), True),
        ],
    )


def _dual_entry():
    L2, w = sl2_dual_numbers()
    ident = Matrix.identity(6)
    R = Matrix.diag([1, 1, 1, 0, 0, 0])
    Q = ident - R
    # R*(a) = R*(a t) = a t
    Rstar = Matrix.from_columns([[0, 0, 0] + [int(i == j) for i in range(3)] for j in range(3)] * 2)
    # Q*(a) = a - a t, Q*(a t) = 0
    Qstar = Matrix.from_columns(
        [[int(i == j) for i in range(3)] + [-int(i == j) for i in range(3)] for j in range(3)]
        + [[0] * 6] * 3
    )
    q = F(1, 4)
    printed3 = Tensor2.from_terms(6, [(1, 4, q), (0, 5, 1), (2, 3, 1)])
    # 1/4 h.t (x) (h - h.t) + e.t (x) (f - f.t) + f.t (x) (e - e.t)
    printed4 = Tensor2.from_terms(
        6, [(4, 1, q), (4, 4, -q), (3, 2, 1), (3, 5, -1), (5, 0, 1), (5, 3, -1)]
    )
    skew = Tensor2.from_terms(6, [(3, 5, 1), (5, 3, -1)])
    t_part = Subspace(6, [Matrix.identity(6).row(i) for i in (3, 4, 5)])
    return _entry(
        "sl2-dual-example3",
        "L2 = sl2 (x) Q[t]/(t^2) with the projection R onto sl2 and Q = id - R",
        L2, w,
        {
            "example3": tensor_of(L2, w, R),
            "example3-printed": printed3,
            "example4": tensor_of(L2, w, Q),
            "example4-printed": printed4,
            "skew": skew,
        },
        {"R": R, "Rstar": Rstar, "Q": Q, "Qstar": Qstar},
        [
            ("center_dim", (), 0),
            ("derived_dim", (), 6),
            ("adjoint", ("R", "Rstar"), True),
            ("adjoint", ("Q", "Qstar"), True),
            ("operator", ("example3",), R),
            ("weights", ("R",), W(-1)),
            ("weights", ("Q",), W(-1)),
            ("weights", ("Rstar",), NONE),
            ("cybe", ("example3",), True),
            ("sym_invariant", ("example3",), True),
            ("centroid", ("R",), True),
            ("theta", ("R", "-1"), Matrix.from_columns(
                [[0] * 3 + [int(i == j) for i in range(3)] for j in range(3)] + [[0] * 6] * 3)),
            ("theorem1", ("example3", "-1"), True),
            ("remark1", ("example3", "-1"), False),
            ("condition_weights", ("example3", "Rstar"), NONE),
            ("cybe", ("example4",), False),
            ("cybe", ("example4-printed",), False),
            ("cybe", ("example3-printed",), False),
            ("ideal", ("example3", "-1"), t_part),
            ("theorem2", ("example3", "-1"), "pass"),
            ("theorem3", ("example3", "-1"), "NotBothRotaBaxter"),
            ("theorem4", ("example3", "-1"), "NotBothRotaBaxter"),
            ("cybe", ("skew",), True),
            ("skew", ("skew",), True),
            ("tensor_weights", ("skew",), W(0)),
        ],
        notes=(
            "example3 is tensor_of(w, R) = 1/8 h(x)h.t + 1/4 e(x)f.t + 1/4 f(x)e.t; the "
            "printed coefficients 1/4, 1, 1 give the operator (4, 2, 4, 0, 0, 0), which "
            "is not a multiple of R and does not solve CYBE.",
        ),
    )


def _sl2_plus_abelian_entry():
    L = direct_sum(sl2(), abelian(1, ("z",)), name="sl2+abelian(1)")
    form = killing_form(sl2()).direct_sum(BilinearForm([[1]]))
    r = _embed(standard_r(), 4)
    R = operator_of(L, form, r)
    sl2_part = Subspace(4, [Matrix.identity(4).row(i) for i in range(3)])
    return _entry(
        "sl2-plus-abelian",
        "sl2 + abelian(1) with kappa + (1) and the embedded standard r-matrix",
        L, form, {"standard": r}, {"R": R, "Rstar": adjoint(L, form, R)},
        [
            ("center_dim", (), 1),
            ("derived", (), sl2_part),
            ("cybe", ("standard",), True),
            ("sym_invariant", ("standard",), True),
            ("weights", ("R",), W(-4)),
            ("theorem3", ("standard", "-4"), (0, 3)),
            ("theorem4", ("standard", "-4"), ((F(4), 3), (F(0), 1))),
        ],
    )


def _example2_entry():
    L = sl2()
    kappa = killing_form(L)
    r = standard_r()
    comps = ((L, kappa, r), (L, kappa, r * F(1, 2)))
    scaled = ((L, kappa, r), (L, kappa * 2, r * F(1, 2)))
    S, form, rr = combine_components(scaled)
    R = operator_of(S, form, rr)
    return _entry(
        "sl2-sum-example2",
        "sl2 + sl2 with r + 1/2 r; the form kappa + 2 kappa gives one weight -4",
        S, form, {"r": rr}, {"R": R},
        [
            ("harmonize", ("-4",), (F(1), F(2))),
            ("cybe", ("r",), True),
            ("sym_invariant", ("r",), True),
            ("weights", ("R",), W(-4)),
        ],
        components=comps,
    )


def _mixed_entry():
    L = sl2()
    kappa = killing_form(L)
    skew = Tensor2.from_terms(3, [(1, 0, 1), (0, 1, -1)])
    comps = ((L, kappa, skew), (L, kappa, standard_r()))
    S, form, rr = combine_components(comps)
    return _entry(
        "sl2-sum-mixed",
        "sl2 + sl2 with a skew solution on one summand: no form makes R Rota-Baxter",
        S, form, {"r": rr}, {"R": operator_of(S, form, rr)},
        [
            ("harmonize", ("-4",), "MixedZeroNonzeroWeights"),
            ("cybe", ("r",), True),
            ("weights", ("R",), NONE),
        ],
        components=comps,
    )


_BUILDERS = {
    "sl2": _sl2_entry,
    "sl2-trace": _sl2_trace_entry,
    "gl2-example1": _gl2_entry,
    "sl2-dual-example3": _dual_entry,
    "sl2-plus-abelian": _sl2_plus_abelian_entry,
    "sl2-sum-example2": _example2_entry,
    "sl2-sum-mixed": _mixed_entry,
}


@lru_cache(maxsize=None)
def get(name: str) -> CatalogEntry:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise UnknownEntry(f"unknown catalog entry {name!r}; try one of {sorted(_BUILDERS)}") from None
    return builder()


def list_entries() -> list:
    """(name, description) pairs in a fixed order."""
    return [(name, get(name).description) for name in _BUILDERS]


def names() -> list:
    return list(_BUILDERS)


# -- verification ---------------------------------------------------------

def _actual(entry: CatalogEntry, exp: Expectation):
    L, w = entry.algebra, entry.form
    T, O = entry.tensors, entry.operators
    kind, args = exp.kind, exp.args
    if kind == "center_dim":
        return center(L).dim
    if kind == "derived_dim":
        return derived_subalgebra(L).dim
    if kind == "derived":
        return derived_subalgebra(L)
    if kind == "weights":
        return find_weights(L, O[args[0]])
    if kind == "tensor_weights":
        return find_weights(L, operator_of(L, w, T[args[0]]))
    if kind == "operator":
        return operator_of(L, w, T[args[0]])
    if kind == "adjoint":
        return adjoint(L, w, O[args[0]]) == O[args[1]]
    if kind == "cybe":
        return is_cybe_solution(L, T[args[0]])
    if kind == "skew":
        return T[args[0]].is_skew()
    if kind == "invariant":
        return is_ad_invariant(L, T[args[0]])
    if kind == "sym_invariant":
        return is_ad_invariant(L, symmetric_part(T[args[0]]))
    if kind == "sym_part":
        return symmetric_part(T[args[0]])
    if kind == "centroid":
        R = O[args[0]]
        return centroid_check(L, R + adjoint(L, w, R))
    if kind == "theta":
        R = O[args[0]]
        return theta(R, adjoint(L, w, R), scalar(args[1]))
    if kind == "theta_zero":
        R = operator_of(L, w, T[args[0]])
        return theta(R, adjoint(L, w, R), scalar(args[1])).is_zero()
    if kind == "theorem1":
        return theorem1_condition(L, w, T[args[0]], scalar(args[1])).holds
    if kind == "remark1":
        return remark1_condition(L, w, T[args[0]], scalar(args[1])).holds
    if kind == "condition_weights":
        return condition_weights(L, w, T[args[0]], args[1])
    if kind == "ideal":
        return ideal_I_lambda(L, w, T[args[0]], scalar(args[1]))
    if kind == "theorem2":
        return theorem2_pipeline(L, w, T[args[0]], scalar(args[1])).verdict
    if kind == "theorem3":
        dec, _ = theorem3_decomposition(L, w, T[args[0]], scalar(args[1]))
        return (dec["I1"].dim, dec["I2"].dim)
    if kind == "theorem4":
        _, rep = theorem4_decomposition(L, w, T[args[0]], scalar(args[1]))
        return tuple(rep.witnesses["spectrum"])
    if kind == "corollary3":
        return corollary3_check(L, w, T[args[0]]).witnesses.get("weight")
    if kind == "harmonize":
        return tuple(harmonize_weights(entry.components, scalar(args[0])))
    raise ValueError(f"unknown expectation kind {kind!r}")


def verify(entry: CatalogEntry | str) -> list:
    """Recompute every expectation of an entry; returns CheckResults in order."""
    if isinstance(entry, str):
        entry = get(entry)
    results = []
    report = validate(entry.algebra)
    results.append(CheckResult("validate", report.ok, "valid", str(report)))
    if entry.form is not None:
        results.append(CheckResult("form_invariant", is_invariant(entry.algebra, entry.form), True,
                                   is_invariant(entry.algebra, entry.form)))
        results.append(CheckResult("form_nondegenerate", entry.form.is_nondegenerate, True,
                                   entry.form.is_nondegenerate))
    for exp in entry.expected:
        try:
            actual = _actual(entry, exp)
        except TheoremContradiction as exc:
            actual = f"TheoremContradiction: {exc}"
        except StructureError as exc:
            actual = type(exc).__name__
        results.append(CheckResult(exp.name, actual == exp.value, exp.value, actual))
    return results
