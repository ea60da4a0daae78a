"""JSON codecs for polynomial matrices, MFDs, realizations and networks.

Rationals are written as integers when integral and as ``"p/q"`` strings
otherwise; surds as strings like ``"1/2*sqrt(3)"``; floats pass through.
Polynomials are ascending coefficient lists; on input a string such as
``"s^2 + 2*s - 1"`` is accepted as well.  Parse errors raise
:class:`InputError` carrying a JSONPath-like location.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .network import NetworkData
from .polymat import Poly, PolyMatrix
from .ratmfd import LeftMFD
from .realization import SignatureRealization, StateSpace
from .surd import Surd, format_surd, parse_surd, simplify


class InputError(ValueError):
    def __init__(self, where: str, msg: str):
        super().__init__(f"{where}: {msg}")
        self.where = where


# -- scalars -----------------------------------------------------------------

def dump_number(x):
    x = simplify(x)
    if isinstance(x, Surd):
        return format_surd(x)
    if isinstance(x, float):
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def load_number(v, where: str = "$", allow_surd: bool = False):
    if isinstance(v, bool):
        raise InputError(where, "expected a number, got a boolean")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return Fraction(repr(v))
    if isinstance(v, str):
        text = v.strip()
        if "sqrt" in text:
            if not allow_surd:
                raise InputError(where, "square roots are not allowed here")
            try:
                return simplify(parse_surd(text))
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(where, f"bad surd {v!r}") from exc
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(where, f"bad rational {v!r}") from exc
    raise InputError(where, f"expected a number, got {type(v).__name__}")


def dump_matrix(M) -> list:
    return [[dump_number(x) for x in row] for row in M]


def load_matrix(v, where: str, rows: int | None = None, cols: int | None = None,
                allow_surd: bool = False, allow_float: bool = False) -> list:
    if not isinstance(v, list) or any(not isinstance(r, list) for r in v):
        raise InputError(where, "expected a list of rows")
    if rows is not None and len(v) != rows:
        raise InputError(where, f"expected {rows} rows, got {len(v)}")
    width = len(v[0]) if v else 0
    for i, r in enumerate(v):
        if len(r) != (cols if cols is not None else width):
            raise InputError(f"{where}[{i}]", f"expected {cols if cols is not None else width} entries")
    if allow_float:
        return [[x if isinstance(x, float) else load_number(x, f"{where}[{i}][{j}]", allow_surd)
                 for j, x in enumerate(r)] for i, r in enumerate(v)]
    return [[load_number(x, f"{where}[{i}][{j}]", allow_surd) for j, x in enumerate(r)]
            for i, r in enumerate(v)]


# -- polynomials -------------------------------------------------------------------

_TERM = re.compile(r"^([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(s|xi|ξ)?(?:\^(\d+))?$")


def parse_poly_string(text: str, where: str = "$") -> Poly:
    body = text.replace(" ", "").replace("**", "^")
    if not body:
        raise InputError(where, "empty polynomial")
    parts = re.findall(r"[+-]?[^+-]+", body)
    out = Poly()
    for part in parts:
        m = _TERM.match(part)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise InputError(where, f"cannot parse term {part!r} of {text!r}")
        sign, coef, var, power = m.groups()
        if power is not None and var is None:
            raise InputError(where, f"exponent without variable in {part!r}")
        c = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            c = -c
        k = (int(power) if power else 1) if var else 0
        out = out + Poly.monomial(k, c)
    return out


def load_poly(v, where: str) -> Poly:
    if isinstance(v, str):
        return parse_poly_string(v, where)
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return Poly.const(load_number(v, where))
    if isinstance(v, list):
        return Poly([load_number(x, f"{where}[{k}]") for k, x in enumerate(v)])
    raise InputError(where, "expected a coefficient list or polynomial string")


def dump_poly(p: Poly) -> list:
    return [dump_number(c) for c in p.coeffs]


def load_polymatrix(v, where: str) -> PolyMatrix:
    if not isinstance(v, list) or not v or any(not isinstance(r, list) for r in v):
        raise InputError(where, "expected a non-empty list of rows")
    width = len(v[0])
    for i, r in enumerate(v):
        if len(r) != width:
            raise InputError(f"{where}[{i}]", f"expected {width} entries")
    return PolyMatrix([[load_poly(x, f"{where}[{i}][{j}]") for j, x in enumerate(r)]
                       for i, r in enumerate(v)])


def dump_polymatrix(M: PolyMatrix) -> list:
    return [[dump_poly(e) for e in row] for row in M.entries]


def load_mfd(obj, where: str = "$") -> LeftMFD:
    if not isinstance(obj, dict) or "P" not in obj or "Q" not in obj:
        raise InputError(where, "expected an object with keys 'P' and 'Q'")
    P = load_polymatrix(obj["P"], f"{where}.P")
    Q = load_polymatrix(obj["Q"], f"{where}.Q")
    try:
        return LeftMFD(Q, P)
    except ValueError as exc:
        raise InputError(where, str(exc)) from exc


def dump_mfd(h: LeftMFD) -> dict:
    return {"P": dump_polymatrix(h.P), "Q": dump_polymatrix(h.Q)}


# -- realizations and networks -------------------------------------------------

def load_realization(obj, where: str = "$") -> SignatureRealization:
    if not isinstance(obj, dict):
        raise InputError(where, "expected an object")
    for key in ("A", "B", "C", "D", "sigma"):
        if key not in obj:
            raise InputError(where, f"missing key {key!r}")
    D = load_matrix(obj["D"], f"{where}.D", allow_surd=True)
    n = len(D)
    A = load_matrix(obj["A"], f"{where}.A", allow_surd=True)
    d = len(A)
    B = load_matrix(obj["B"], f"{where}.B", rows=d, cols=n, allow_surd=True)
    C = load_matrix(obj["C"], f"{where}.C", rows=n, cols=d, allow_surd=True) if d else [[] for _ in range(n)]
    sigma = obj["sigma"]
    if not isinstance(sigma, list) or any(x not in (1, -1) for x in sigma):
        raise InputError(f"{where}.sigma", "expected a list of +-1")
    try:
        return SignatureRealization(StateSpace(A, B, C, D), tuple(sigma))
    except ValueError as exc:
        raise InputError(where, str(exc)) from exc


def dump_realization(sr: SignatureRealization) -> dict:
    ss = sr.ss
    return {"A": dump_matrix(ss.A), "B": dump_matrix(ss.B), "C": dump_matrix(ss.C),
            "D": dump_matrix(ss.D), "sigma": list(sr.sigma)}


def _signs(v, where):
    if not isinstance(v, list) or any(x not in (1, -1) for x in v):
        raise InputError(where, "expected a list of +-1")
    return v


def load_network(obj, where: str = "$") -> NetworkData:
    if not isinstance(obj, dict):
        raise InputError(where, "expected an object")
    sE = _signs(obj.get("sigmaE", []), f"{where}.sigmaE")
    s1 = _signs(obj.get("sigma1", []), f"{where}.sigma1")
    s2 = _signs(obj.get("sigma2", []), f"{where}.sigma2")
    ne, n1, n2 = len(sE), len(s1), len(s2)

    def block(key, r, c):
        v = obj.get(key, [])
        if r == 0 or c == 0:
            return [[] for _ in range(r)]
        return load_matrix(v, f"{where}.{key}", rows=r, cols=c)

    def values(key, k):
        v = obj.get(key, [])
        if not isinstance(v, list) or len(v) != k:
            raise InputError(f"{where}.{key}", f"expected {k} values")
        return [load_number(x, f"{where}.{key}[{i}]") for i, x in enumerate(v)]

    return NetworkData(block("M11", ne, ne), block("M12", ne, n1), block("M21", n1, ne),
                       block("M22", n1, n1), block("M23", n1, n2), sE, s1, s2,
                       values("lambda1", n1), values("lambda2", n2))


def dump_network(data: NetworkData) -> dict:
    return {"M11": dump_matrix(data.M11), "M12": dump_matrix(data.M12),
            "M21": dump_matrix(data.M21), "M22": dump_matrix(data.M22),
            "M23": dump_matrix(data.M23), "sigmaE": list(data.sigmaE),
            "sigma1": list(data.sigma1), "sigma2": list(data.sigma2),
            "lambda1": [dump_number(x) for x in data.lambda1],
            "lambda2": [dump_number(x) for x in data.lambda2]}


def read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(path, exc.strerror or str(exc)) from exc
    try:
        return json.loads(text), text.encode("utf-8")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from exc
