"""Matrix-file parsing, command-line vectors and the report serializer.

A matrix file is JSON::

    {"mode": "real", "n": 2, "G1": [[1, 0], [0, 1]], "G2": [[1, 0], [0, 4]]}

or ``{"mode": ..., "n": ..., "A": [[...]]}`` for a pair induced by an
invertible matrix. Complex entries are ``[re, im]`` pairs.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DimensionError, ParseError, WielandtError
from .spectrum import GramPair, pair_from_matrix


@dataclass(frozen=True)
class MatrixFile:
    mode: str
    n: int
    A: np.ndarray | None = None
    G1: np.ndarray | None = None
    G2: np.ndarray | None = None

    def pair(self):
        if self.A is not None:
            return pair_from_matrix(self.A)
        return GramPair(self.G1, self.G2)

    def echo(self):
        out = {"mode": self.mode, "n": self.n}
        for key in ("A", "G1", "G2"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out


def _entry(x, mode, where):
    if mode == "complex":
        if (isinstance(x, list) and len(x) == 2
                and all(isinstance(t, (int, float)) and not isinstance(t, bool) for t in x)):
            return complex(x[0], x[1])
        if isinstance(x, (int, float)) and not isinstance(x, bool):
            return complex(x)
        raise ParseError(f"{where}: complex entries must be [re, im], got {x!r}")
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return float(x)
    raise ParseError(f"{where}: expected a real number, got {x!r}")


def _matrix(rows, n, mode, name):
    if not isinstance(rows, list) or len(rows) != n:
        raise ParseError(f"{name}: expected {n} rows")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise ParseError(f"{name}: row {i} is not a list")
        if len(row) != n:
            raise ParseError(f"{name}: row {i} has {len(row)} entries, expected {n}")
        out.append([_entry(x, mode, f"{name}[{i}][{j}]") for j, x in enumerate(row)])
    dtype = np.complex128 if mode == "complex" else np.float64
    M = np.array(out, dtype=dtype)
    if not np.all(np.isfinite(M)):
        raise ParseError(f"{name}: non-finite entries")
    return M


def parse_matrix_doc(doc):
    """Validate a decoded matrix document and build a :class:`MatrixFile`.

    Hermitian symmetry of ``G1``/``G2`` is checked here; positive
    definiteness is left to :class:`~wielandt.spectrum.GramPair` so that it
    surfaces as a numeric error rather than a parse error.
    """
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    mode = doc.get("mode")
    if mode not in ("real", "complex"):
        raise ParseError(f"mode must be 'real' or 'complex', got {mode!r}")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"n must be a positive integer, got {n!r}")
    has_a = "A" in doc
    has_g = "G1" in doc or "G2" in doc
    if has_a == has_g:
        raise ParseError("give either 'A' or both 'G1' and 'G2'")
    if has_a:
        return MatrixFile(mode, n, A=_matrix(doc["A"], n, mode, "A"))
    if "G1" not in doc or "G2" not in doc:
        raise ParseError("Gram-pair mode needs both 'G1' and 'G2'")
    mats = {}
    for key in ("G1", "G2"):
        M = _matrix(doc[key], n, mode, key)
        try:
            mats[key] = linalg.hermitian(M)
        except WielandtError as exc:
            raise ParseError(f"{key}: {exc}") from None
    return MatrixFile(mode, n, G1=mats["G1"], G2=mats["G2"])


def load_matrix_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return parse_matrix_doc(doc)


def parse_vector(text, n=None):
    """Comma-separated numbers; a complex entry is written ``re:im``."""
    items = [t.strip() for t in text.split(",")]
    if not items or any(t == "" for t in items):
        raise ParseError(f"empty entry in vector {text!r}")
    vals = []
    cplx = False
    try:
        for t in items:
            if ":" in t:
                re_, im_ = t.split(":")
                vals.append(complex(float(re_), float(im_)))
                cplx = True
            else:
                vals.append(float(t))
    except ValueError:
        raise ParseError(f"cannot parse vector {text!r}") from None
    v = np.array(vals, dtype=np.complex128 if cplx else np.float64)
    if not np.all(np.isfinite(v)):
        raise ParseError(f"non-finite entry in vector {text!r}")
    if n is not None and v.size != n:
        raise DimensionError(f"vector has {v.size} entries, expected {n}")
    return v


# --- serialization ---------------------------------------------------------

def _num(x):
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return "%.17g" % x


def _dump(obj, out, indent, level):
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if obj is None:
        out.append("null")
    elif isinstance(obj, (bool, np.bool_)):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(_num(float(obj)))
    elif isinstance(obj, (complex, np.complexfloating)):
        _dump([obj.real, obj.imag], out, indent, level)
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, np.ndarray):
        _dump(obj.tolist(), out, indent, level)
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for i, (k, v) in enumerate(obj.items()):
            out.append(f"{pad}{json.dumps(str(k))}: ")
            _dump(v, out, indent, level + 1)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(end + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        flat = all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in obj)
        if flat:
            out.append("[")
            for i, v in enumerate(obj):
                _dump(v, out, indent, level + 1)
                if i < len(obj) - 1:
                    out.append(", ")
            out.append("]")
            return
        out.append("[\n")
        for i, v in enumerate(obj):
            out.append(pad)
            _dump(v, out, indent, level + 1)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(end + "]")
    elif hasattr(obj, "value"):  # enums
        _dump(obj.value, out, indent, level)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent=2):
    """JSON text with every real written to 17 significant digits.

    Non-finite reals become the strings ``"inf"``, ``"-inf"`` and ``"nan"``;
    complex numbers become ``[re, im]``.
    """
    out = []
    _dump(obj, out, indent, 0)
    return "".join(out) + "\n"
