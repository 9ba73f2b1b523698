"""JSON documents for algebras, forms, 2-tensors and operators.

Every document is an object with a ``kind`` field. Scalars are strings
``"p/q"`` (``"p"`` when q = 1); plain JSON integers are also read, floats
never. Indices are 0-based. Unknown fields are rejected.

    {"kind": "algebra", "dim": 3, "labels": ["e", "h", "f"],
     "brackets": [{"i": 0, "j": 1, "terms": [{"k": 0, "coeff": "-2"}]}, ...]}
    {"kind": "form", "dim": 3, "gram": [["0", "0", "4"], ...]}
    {"kind": "tensor2", "dim": 3, "terms": [{"i": 0, "j": 2, "coeff": "1"}, ...]}
    {"kind": "operator", "dim": 3, "convention": "columns-are-images",
     "columns": [["4", "0", "0"], ...]}
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import DocumentError
from .exact_linalg import Matrix, format_scalar, scalar
from .lie import LieAlgebra
from .quadratic import BilinearForm
from .tensor import Tensor2

CONVENTION = "columns-are-images"

_FIELDS = {
    "algebra": {"kind", "dim", "name", "labels", "brackets"},
    "form": {"kind", "dim", "name", "gram"},
    "tensor2": {"kind", "dim", "name", "terms"},
    "operator": {"kind", "dim", "name", "convention", "columns"},
}
KINDS = tuple(_FIELDS)


def _fail(msg, where):
    raise DocumentError(f"{where}: {msg}" if where else msg)


def _scalar(value, where) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        _fail(f"scalar must be a 'p/q' string, got {value!r}", where)
    try:
        return scalar(value)
    except (ValueError, TypeError, ZeroDivisionError):
        _fail(f"malformed scalar {value!r}", where)


def _index(value, dim, where) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(f"index must be an integer, got {value!r}", where)
    if not 0 <= value < dim:
        _fail(f"index {value} out of range for dim {dim}", where)
    return value


def _keys(obj, allowed, required, where):
    if not isinstance(obj, dict):
        _fail("expected an object", where)
    extra = set(obj) - set(allowed)
    if extra:
        _fail(f"unknown field(s) {sorted(extra)}", where)
    missing = set(required) - set(obj)
    if missing:
        _fail(f"missing field(s) {sorted(missing)}", where)


def _grid(rows, dim, where):
    if not isinstance(rows, list) or len(rows) != dim:
        _fail(f"expected {dim} rows", where)
    out = []
    for a, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            _fail(f"row {a} must have {dim} entries", where)
        out.append([_scalar(x, f"{where}[{a}]") for x in row])
    return out


def check_kind(doc: dict, where: str = "") -> str:
    if not isinstance(doc, dict):
        _fail("a document must be a JSON object", where)
    kind = doc.get("kind")
    if kind not in _FIELDS:
        _fail(f"unknown kind {kind!r}; expected one of {list(KINDS)}", where)
    _keys(doc, _FIELDS[kind], {"kind", "dim"} | _required(kind), where)
    dim = doc["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        _fail(f"dim must be a non-negative integer, got {dim!r}", where)
    if "name" in doc and not isinstance(doc["name"], str):
        _fail("name must be a string", where)
    return kind


def _required(kind):
    return {"algebra": {"brackets"}, "form": {"gram"}, "tensor2": {"terms"},
            "operator": {"convention", "columns"}}[kind]


def algebra_data(doc: dict, where: str = ""):
    """(dim, brackets, labels, name) without checking the Lie axioms."""
    if check_kind(doc, where) != "algebra":
        _fail(f"expected an algebra document, got {doc['kind']!r}", where)
    dim = doc["dim"]
    labels = doc.get("labels")
    if labels is not None:
        if (not isinstance(labels, list) or len(labels) != dim
                or not all(isinstance(a, str) for a in labels)):
            _fail(f"labels must be {dim} strings", where)
        if len(set(labels)) != dim:
            _fail("labels must be distinct", where)
    if not isinstance(doc["brackets"], list):
        _fail("brackets must be a list", where)
    brackets = {}
    for n, entry in enumerate(doc["brackets"]):
        w = f"{where} brackets[{n}]"
        _keys(entry, {"i", "j", "terms"}, {"i", "j", "terms"}, w)
        i, j = _index(entry["i"], dim, w), _index(entry["j"], dim, w)
        if i >= j:
            _fail(f"brackets are listed for i < j only, got ({i}, {j})", w)
        if (i, j) in brackets:
            _fail(f"bracket ({i}, {j}) given twice", w)
        if not isinstance(entry["terms"], list):
            _fail("terms must be a list", w)
        coeffs = {}
        for m, term in enumerate(entry["terms"]):
            wt = f"{w}.terms[{m}]"
            _keys(term, {"k", "coeff"}, {"k", "coeff"}, wt)
            k = _index(term["k"], dim, wt)
            coeffs[k] = coeffs.get(k, Fraction(0)) + _scalar(term["coeff"], wt)
        brackets[(i, j)] = coeffs
    return dim, brackets, labels, doc.get("name")


def parse(doc: dict, where: str = ""):
    """Build the object a document describes."""
    kind = check_kind(doc, where)
    dim = doc["dim"]
    if kind == "algebra":
        dim, brackets, labels, name = algebra_data(doc, where)
        return LieAlgebra(dim, brackets, labels, name=name)
    if kind == "form":
        return BilinearForm(Matrix(_grid(doc["gram"], dim, f"{where} gram"), dim))
    if kind == "tensor2":
        if not isinstance(doc["terms"], list):
            _fail("terms must be a list", where)
        terms = []
        for n, term in enumerate(doc["terms"]):
            w = f"{where} terms[{n}]"
            _keys(term, {"i", "j", "coeff"}, {"i", "j", "coeff"}, w)
            terms.append((_index(term["i"], dim, w), _index(term["j"], dim, w),
                          _scalar(term["coeff"], w)))
        return Tensor2.from_terms(dim, terms)
    if doc["convention"] != CONVENTION:
        _fail(f"convention must be {CONVENTION!r}, got {doc['convention']!r}", where)
    cols = _grid(doc["columns"], dim, f"{where} columns")
    return Matrix.from_columns(cols, dim)


def _s(q) -> str:
    return format_scalar(q)


def dump(obj, name: str | None = None) -> dict:
    """Canonical document for a LieAlgebra, BilinearForm, Tensor2 or operator Matrix."""
    if isinstance(obj, LieAlgebra):
        doc = {
            "kind": "algebra",
            "dim": obj.dim,
            "labels": list(obj.labels),
            "brackets": [
                {"i": i, "j": j, "terms": [{"k": k, "coeff": _s(c)} for k, c in enumerate(v) if c]}
                for (i, j), v in sorted(obj.brackets.items())
            ],
        }
        name = name or obj.name
    elif isinstance(obj, BilinearForm):
        doc = {"kind": "form", "dim": obj.dim, "gram": [[_s(c) for c in row] for row in obj.gram.rows]}
    elif isinstance(obj, Tensor2):
        doc = {"kind": "tensor2", "dim": obj.dim,
               "terms": [{"i": i, "j": j, "coeff": _s(c)} for i, j, c in obj.terms()]}
    elif isinstance(obj, Matrix):
        if not obj.is_square():
            raise DocumentError("only square operators can be written")
        doc = {"kind": "operator", "dim": obj.nrows, "convention": CONVENTION,
               "columns": [[_s(c) for c in col] for col in obj.columns()]}
    else:
        raise DocumentError(f"cannot write {type(obj).__name__}")
    if name:
        doc["name"] = name
    return doc


def dumps(obj, name: str | None = None) -> str:
    return json.dumps(dump(obj, name), indent=2, sort_keys=True) + "\n"


def loads(text: str, where: str = ""):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{where}: not valid JSON ({exc})") from None
    return parse(doc, where)


def read_json(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise DocumentError(f"{path}: cannot read ({exc.strerror})") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: not valid JSON ({exc})") from None


def load(path, kind: str | None = None):
    """Read and build the object in ``path``; ``kind`` restricts the accepted kind."""
    doc = read_json(path)
    where = str(path)
    found = check_kind(doc, where)
    if kind is not None and found != kind:
        raise DocumentError(f"{where}: expected a {kind} document, got {found}")
    return parse(doc, where)


def save(obj, path, name: str | None = None) -> Path:
    path = Path(path)
    path.write_text(dumps(obj, name))
    return path
