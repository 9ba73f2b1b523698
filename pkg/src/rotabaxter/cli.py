"""Command-line front end.

Exit codes: 0 pass (or not-applicable unless --strict), 1 a checked
property fails, 2 bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import catalog, documents
from .errors import (
    AlgebraError,
    DegenerateForm,
    DimensionMismatch,
    DocumentError,
    HypothesisViolated,
    InvalidLieAlgebra,
    MixedZeroNonzeroWeights,
    NonRationalSpectrum,
    NonSymmetricForm,
    NotBothRotaBaxter,
    NotSimple,
    StructureError,
    TheoremContradiction,
    UnknownEntry,
    ZeroTargetWeight,
    ZeroWeight,
)
from .exact_linalg import Matrix, Subspace, format_scalar, scalar
from .lie import LieAlgebra, QuotientAlgebra, validate
from .quadratic import BilinearForm, adjoint, is_invariant
from .rota_baxter import DefectReport, WeightSet, find_weights, is_rota_baxter
from .structure import (
    NOT_APPLICABLE,
    PASS,
    FAIL,
    StructureReport,
    harmonize_weights,
    ideal_I_lambda,
    remark1_condition,
    theorem1_condition,
    theorem2_pipeline,
    theorem3_decomposition,
    theorem4_decomposition,
)
from .tensor import Tensor2, Tensor3, cybe_element, is_ad_invariant, operator_of, symmetric_part, tensor_of

OUTPUT_ENV = "ROTABAXTER_OUTPUT"
MAX_LISTED = 32


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: list
    verdict: str
    details: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)
    exit_code: int = 0
    message: str = ""
    output: str | None = None

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "verdict": self.verdict,
            "details": jsonable(self.details),
            "exit_code": self.exit_code,
        }
        if self.message:
            doc["message"] = self.message
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        out = list(self.lines)
        if self.message:
            out.append(self.message)
        out.append(f"verdict: {self.verdict}")
        return "\n".join(out) + "\n"


# -- rendering ------------------------------------------------------------

def format_vector(v, labels) -> str:
    parts = []
    for c, name in zip(v, labels):
        if not c:
            continue
        mag = abs(c)
        coeff = "" if mag == 1 else f"{format_scalar(mag)} "
        sign = "-" if c < 0 else "+"
        parts.append((sign, f"{coeff}{name}"))
    if not parts:
        return "0"
    head_sign, head = parts[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def format_subspace(S: Subspace, labels) -> str:
    if S.is_zero():
        return "0"
    return "span{" + ", ".join(format_vector(v, labels) for v in S.vectors) + "}"


def format_tensor(t: Tensor2, labels) -> str:
    terms = t.terms()
    if not terms:
        return "0"
    out = []
    for n, (i, j, c) in enumerate(terms):
        mag = abs(c)
        coeff = "" if mag == 1 else f"{format_scalar(mag)} "
        body = f"{coeff}{labels[i]} (x) {labels[j]}"
        if n == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def format_matrix(M: Matrix) -> str:
    return "[" + "; ".join(" ".join(format_scalar(c) for c in row) for row in M.rows) + "]"


def format_value(value, labels=None) -> str:
    if isinstance(value, Subspace):
        return format_subspace(value, labels or _default_labels(value.ambient_dim))
    if isinstance(value, Tensor2):
        return format_tensor(value, labels or _default_labels(value.dim))
    if isinstance(value, Matrix):
        return format_matrix(value)
    if isinstance(value, Fraction):
        return format_scalar(value)
    if isinstance(value, QuotientAlgebra):
        return f"quotient of dim {value.quotient.dim} on {', '.join(value.quotient.labels)}"
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(format_value(v, labels) for v in value) + ")"
    return str(value)


def _default_labels(n):
    return [f"e{i}" for i in range(n)]


def jsonable(value):
    """Plain JSON data for report details; scalars become 'p/q' strings."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return format_scalar(value)
    if isinstance(value, Matrix):
        return {"convention": documents.CONVENTION,
                "columns": [[format_scalar(c) for c in col] for col in value.columns()]}
    if isinstance(value, Subspace):
        return {"dim": value.dim, "basis": [[format_scalar(c) for c in v] for v in value.vectors]}
    if isinstance(value, WeightSet):
        return {"kind": value.kind, "values": [format_scalar(v) for v in value.values]}
    if isinstance(value, Tensor2):
        return documents.dump(value)["terms"]
    if isinstance(value, Tensor3):
        return [[i, j, k, format_scalar(c)] for i, j, k, c in value.terms()]
    if isinstance(value, DefectReport):
        return {"total": value.total, "pairs": [[i, j, jsonable(d)] for i, j, d in value.pairs]}
    if isinstance(value, QuotientAlgebra):
        return {"dim": value.quotient.dim, "labels": list(value.quotient.labels)}
    if isinstance(value, LieAlgebra):
        return documents.dump(value)
    if isinstance(value, StructureReport):
        return {"claim": value.claim, "verdict": value.verdict,
                "failures": list(value.failures), "witnesses": jsonable(value.witnesses)}
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


# -- argument handling ----------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _weight(text: str) -> Fraction:
    try:
        return scalar(text)
    except (ValueError, TypeError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


_FLAG_DEFAULTS = {"output": None, "strict": False, "lenient": False}


def _common_flags() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the subcommand from being reset by it;
    # the real defaults are filled in by parse_args
    common = argparse.ArgumentParser(add_help=False)
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", dest="output", action="store_const", const="json",
                     default=argparse.SUPPRESS, help="machine-readable output")
    out.add_argument("--text", dest="output", action="store_const", const="text",
                     default=argparse.SUPPRESS,
                     help=f"human-readable output (default unless ${OUTPUT_ENV}=json)")
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--strict", action="store_true", default=argparse.SUPPRESS,
                      help="not-applicable exits 1")
    mode.add_argument("--lenient", action="store_true", default=argparse.SUPPRESS,
                      help="not-applicable exits 0 (the default)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    p = _Parser(prog="rotabaxter", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def group(name, help=None):
        return sub.add_parser(name, help=help).add_subparsers(
            dest="action", required=True, parser_class=_Parser)

    def cmd(parent, name, *files, weight=False, help=None):
        sp = parent.add_parser(name, help=help, parents=[common])
        for f in files:
            sp.add_argument(f)
        if weight:
            sp.add_argument("--weight", type=_weight, required=True, metavar="LAMBDA")
        return sp

    cmd(sub, "validate", "algebra", help="check antisymmetry and Jacobi")
    form = group("form")
    cmd(form, "check", "algebra", "form", help="symmetric, invariant, non-degenerate")
    cybe = group("cybe")
    cmd(cybe, "check", "algebra", "tensor", help="does r solve CYBE")
    cmd(sub, "invariance", "algebra", "tensor", help="is r + tau(r) ad-invariant")
    op = group("op", help="convert between tensors and operators")
    for name, last in (("from-tensor", "tensor"), ("to-tensor", "operator"), ("adjoint", "operator")):
        sp = cmd(op, name, "algebra", "form", last)
        sp.add_argument("-o", "--output-file", help="write the resulting document here")
    rb = group("rb", help="Rota-Baxter identity")
    cmd(rb, "check", "algebra", "operator", weight=True)
    cmd(rb, "weights", "algebra", "operator")
    for name in ("thm1", "thm1star", "ideal", "thm2", "thm3", "thm4"):
        cmd(sub, name, "algebra", "form", "tensor", weight=True)
    hz = cmd(sub, "harmonize", help="rescale component forms to a common weight")
    hz.add_argument("--component", nargs=3, action="append", required=True,
                    metavar=("ALGEBRA", "FORM", "TENSOR"))
    hz.add_argument("--target", type=_weight, required=True, metavar="LAMBDA")
    cat = group("catalog", help="built-in examples")
    cmd(cat, "list")
    em = cmd(cat, "emit")
    em.add_argument("name")
    em.add_argument("-d", "--directory", default=".", help="output directory (default .)")
    ver = cmd(cat, "verify")
    which = ver.add_mutually_exclusive_group(required=True)
    which.add_argument("name", nargs="?")
    which.add_argument("--all", action="store_true")
    return p


def parse_args(argv):
    args = build_parser().parse_args(argv)
    for name, default in _FLAG_DEFAULTS.items():
        if not hasattr(args, name):
            setattr(args, name, default)
    return args


# -- loading --------------------------------------------------------------

def _algebra(path) -> LieAlgebra:
    return documents.load(path, "algebra")


def _form(path, L) -> BilinearForm:
    form = documents.load(path, "form")
    if form.dim != L.dim:
        raise DocumentError(f"{path}: form has dim {form.dim} but the algebra has dim {L.dim}")
    return form


def _tensor(path, L) -> Tensor2:
    t = documents.load(path, "tensor2")
    if t.dim != L.dim:
        raise DocumentError(f"{path}: tensor has dim {t.dim} but the algebra has dim {L.dim}")
    return t


def _operator(path, L) -> Matrix:
    R = documents.load(path, "operator")
    if R.nrows != L.dim:
        raise DocumentError(f"{path}: operator has dim {R.nrows} but the algebra has dim {L.dim}")
    return R


def _quadratic(args):
    L = _algebra(args.algebra)
    args.labels = L.labels
    form = _form(args.form, L)
    if not form.is_nondegenerate:
        raise DocumentError(f"{args.form}: the form is degenerate")
    return L, form


# -- subcommands ----------------------------------------------------------
# Each returns (verdict, details, lines).

def _verdict(ok):
    return PASS if ok else FAIL


def do_validate(args):
    dim, brackets, labels, _ = documents.algebra_data(documents.read_json(args.algebra), args.algebra)
    report = validate(brackets, dim)
    lines = [f"antisymmetry violations: {len(report.antisymmetry)}",
             f"Jacobi violations: {len(report.jacobi)}"]
    lines += [f"  {v}" for v in (list(report.antisymmetry) + list(report.jacobi))[:MAX_LISTED]]
    details = {"antisymmetry": [list(map(jsonable, v)) for v in report.antisymmetry],
               "jacobi": [list(map(jsonable, v)) for v in report.jacobi]}
    return _verdict(report.ok), details, lines


def do_form_check(args):
    L = _algebra(args.algebra)
    try:
        form = _form(args.form, L)
    except NonSymmetricForm:
        return FAIL, {"symmetric": False}, ["symmetric: False"]
    inv = is_invariant(L, form)
    nondeg = form.is_nondegenerate
    details = {"symmetric": True, "invariant": inv, "nondegenerate": nondeg}
    return _verdict(inv and nondeg), details, [f"{k}: {v}" for k, v in details.items()]


def do_cybe_check(args):
    L = _algebra(args.algebra)
    r = _tensor(args.tensor, L)
    C = cybe_element(L, r)
    terms = C.terms()
    lines = [f"C(r) has {len(terms)} non-zero coefficients"]
    lab = L.labels
    for i, j, k, c in terms[:MAX_LISTED]:
        lines.append(f"  {format_scalar(c)} {lab[i]} (x) {lab[j]} (x) {lab[k]}")
    if len(terms) > MAX_LISTED:
        lines.append(f"  ... {len(terms) - MAX_LISTED} more")
    return _verdict(not terms), {"nonzero_terms": len(terms), "terms": C}, lines


def do_invariance(args):
    L = _algebra(args.algebra)
    r = _tensor(args.tensor, L)
    sym = symmetric_part(r)
    inv = is_ad_invariant(L, sym)
    details = {"symmetric_part": sym, "symmetric_part_invariant": inv,
               "tensor_invariant": is_ad_invariant(L, r)}
    lines = [f"r + tau(r) = {format_tensor(sym, L.labels)}",
             f"r + tau(r) ad-invariant: {inv}",
             f"r ad-invariant: {details['tensor_invariant']}"]
    return _verdict(inv), details, lines


def do_op(args):
    L, form = _quadratic(args)
    if args.action == "from-tensor":
        result = operator_of(L, form, _tensor(args.tensor, L))
    elif args.action == "to-tensor":
        result = tensor_of(L, form, _operator(args.operator, L))
    else:
        result = adjoint(L, form, _operator(args.operator, L))
    doc = documents.dump(result)
    if args.output_file:
        documents.save(result, args.output_file)
        lines = [f"wrote {args.output_file}"]
    else:
        lines = [json.dumps(doc, indent=2, sort_keys=True)]
    return PASS, {"document": doc}, lines


def do_rb_check(args):
    L = _algebra(args.algebra)
    R = _operator(args.operator, L)
    ok, defects = is_rota_baxter(L, R, args.weight)
    lines = [f"Rota-Baxter of weight {format_scalar(args.weight)}: {ok}"]
    for i, j, d in defects.pairs:
        lines.append(f"  ({L.labels[i]}, {L.labels[j]}): defect {format_vector(d, L.labels)}")
    if defects.truncated:
        lines.append(f"  ... {defects.total - len(defects.pairs)} more failing pairs")
    return _verdict(ok), {"weight": args.weight, "defects": defects}, lines


def do_rb_weights(args):
    L = _algebra(args.algebra)
    ws = find_weights(L, _operator(args.operator, L))
    return PASS, {"weights": ws}, [f"weights: {ws}"]


def _report_lines(report: StructureReport, labels):
    lines = [f"{report.claim}: {report.verdict}"]
    lines += [f"  failure: {f}" for f in report.failures]
    for k, v in report.witnesses.items():
        lines.append(f"  {k}: {format_value(v, labels)}")
    return lines


def _structure(report, labels):
    return report.verdict, {"report": report}, _report_lines(report, labels)


def do_thm1(args):
    L, form = _quadratic(args)
    fn = theorem1_condition if args.command == "thm1" else remark1_condition
    return _structure(fn(L, form, _tensor(args.tensor, L), args.weight), L.labels)


def do_ideal(args):
    L, form = _quadratic(args)
    I = ideal_I_lambda(L, form, _tensor(args.tensor, L), args.weight)
    return PASS, {"ideal": I}, [f"I_{format_scalar(args.weight)} = {format_subspace(I, L.labels)}",
                                f"dim = {I.dim}"]


def do_thm2(args):
    L, form = _quadratic(args)
    return _structure(theorem2_pipeline(L, form, _tensor(args.tensor, L), args.weight), L.labels)


def do_thm34(args):
    L, form = _quadratic(args)
    fn = theorem3_decomposition if args.command == "thm3" else theorem4_decomposition
    dec, report = fn(L, form, _tensor(args.tensor, L), args.weight)
    verdict, details, lines = _structure(report, L.labels)
    details["decomposition"] = dict(zip(dec.labels, dec.parts))
    return verdict, details, lines


def do_harmonize(args):
    comps = []
    for a, f, t in args.component:
        L = _algebra(a)
        comps.append((L, _form(f, L), _tensor(t, L)))
    try:
        mus = harmonize_weights(comps, args.target)
    except MixedZeroNonzeroWeights as exc:
        details = {"report": exc.report} if exc.report else {}
        return FAIL, details, [str(exc)]
    return PASS, {"mu": mus}, ["mu = " + ", ".join(format_scalar(m) for m in mus)]


def do_catalog(args):
    if args.action == "list":
        entries = catalog.list_entries()
        return PASS, {"entries": [{"name": n, "description": d} for n, d in entries]}, \
            [f"{n:20s} {d}" for n, d in entries]
    if args.action == "emit":
        entry = catalog.get(args.name)
        paths = emit(entry, args.directory)
        return PASS, {"files": [str(p) for p in paths]}, [f"wrote {p}" for p in paths]
    names = catalog.names() if args.all else [args.name]
    for n in names:
        catalog.get(n)  # unknown names are input errors before any work starts
    with ThreadPoolExecutor() as pool:
        results = list(pool.map(catalog.verify, names))
    lines, details, ok = [], {}, True
    for n, checks in zip(names, results):
        entry = catalog.get(n)
        lines.append(f"{n}:")
        for c in checks:
            ok &= c.passed
            mark = "ok  " if c.passed else "FAIL"
            text = f"  {mark} {c.name}: {format_value(c.actual, entry.algebra.labels)}"
            if not c.passed:
                text += f" (expected {format_value(c.expected, entry.algebra.labels)})"
            lines.append(text)
        details[n] = [{"check": c.name, "passed": c.passed, "actual": jsonable(c.actual),
                       "expected": jsonable(c.expected)} for c in checks]
    return _verdict(ok), details, lines


def emit(entry, directory) -> list:
    """Write every document of a catalog entry; returns the paths in order."""
    d = Path(directory) / entry.name
    d.mkdir(parents=True, exist_ok=True)
    paths = [documents.save(entry.algebra, d / "algebra.json", entry.name)]
    if entry.form is not None:
        paths.append(documents.save(entry.form, d / "form.json"))
    for name, t in entry.tensors.items():
        paths.append(documents.save(t, d / f"tensor-{name}.json", name))
    for name, op in entry.operators.items():
        paths.append(documents.save(op, d / f"operator-{name}.json", name))
    return paths


HANDLERS = {
    "validate": do_validate,
    "form": do_form_check,
    "cybe": do_cybe_check,
    "invariance": do_invariance,
    "op": do_op,
    "rb": lambda a: do_rb_check(a) if a.action == "check" else do_rb_weights(a),
    "thm1": do_thm1,
    "thm1star": do_thm1,
    "ideal": do_ideal,
    "thm2": do_thm2,
    "thm3": do_thm34,
    "thm4": do_thm34,
    "harmonize": do_harmonize,
    "catalog": do_catalog,
}


def _exit_code(verdict, strict):
    if verdict == PASS:
        return 0
    if verdict == NOT_APPLICABLE:
        return 1 if strict else 0
    return 1


def run(argv=None) -> RunReport:
    argv = list(sys.argv[1:] if argv is None else argv)
    report = RunReport(argv, "error", exit_code=2)
    try:
        args = parse_args(argv)
    except UsageError as exc:
        report.message = str(exc)
        return report
    except SystemExit as exc:  # --help
        report.verdict, report.exit_code = PASS, int(exc.code or 0)
        return report
    report.output = args.output
    try:
        verdict, details, lines = HANDLERS[args.command](args)
    except TheoremContradiction as exc:
        verdict, details, lines = FAIL, {"report": exc.report}, [f"theorem contradiction: {exc}"]
    except (HypothesisViolated, NotBothRotaBaxter, NotSimple) as exc:
        verdict = NOT_APPLICABLE
        details = {"reason": type(exc).__name__, "report": exc.report}
        lines = [f"{type(exc).__name__}: {exc}"]
        if exc.report is not None:
            lines += _report_lines(exc.report, getattr(args, "labels", None))[1:]
    except (ZeroWeight, ZeroTargetWeight) as exc:
        flag = "--target" if isinstance(exc, ZeroTargetWeight) else "--weight"
        report.message = f"{flag}: {exc}"
        return report
    except NonRationalSpectrum as exc:
        report.message = f"unsupported input: {exc}"
        return report
    except (DocumentError, UnknownEntry, InvalidLieAlgebra, NonSymmetricForm,
            DegenerateForm, DimensionMismatch) as exc:
        report.message = str(exc.args[0]) if exc.args else str(exc)
        return report
    except StructureError as exc:
        verdict, details, lines = FAIL, {"reason": type(exc).__name__}, [str(exc)]
    except AlgebraError as exc:
        report.message = str(exc)
        return report
    report.verdict, report.details, report.lines = verdict, details, lines
    report.exit_code = _exit_code(verdict, args.strict)
    return report


def _output_mode(report):
    mode = getattr(report, "output", None) or os.environ.get(OUTPUT_ENV, "text")
    return "json" if mode.lower() == "json" else "text"


def main(argv=None) -> int:
    report = run(argv)
    text = report.to_json() if _output_mode(report) == "json" else report.to_text()
    stream = sys.stderr if report.exit_code == 2 and _output_mode(report) == "text" else sys.stdout
    stream.write(text)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
