"""Reading and writing polynomials.

Two input forms are accepted:

* JSON ``{"coeffs": [[re, im], ...]}`` in ascending degree.  Numeric entries
  give a floating polynomial; ``"p/q"`` string entries give an exact one.
* Plain text, one ``re im`` pair per line (blank lines and ``#`` comments
  are skipped).  Integer and ``p/q`` tokens are exact, anything else float.
"""

import json
import re
from fractions import Fraction

from .gaussian import GaussianRational
from .poly import Polynomial

__all__ = ["PolynomialParseError", "parse_polynomial", "polynomial_to_json"]

_RATIONAL = re.compile(r"^[+-]?\d+(?:/\d+)?$")


class PolynomialParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


def parse_polynomial(text):
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_plain(text)


def _parse_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolynomialParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or "coeffs" not in doc:
        raise PolynomialParseError('expected an object with a "coeffs" array')
    entries = doc["coeffs"]
    if not isinstance(entries, list) or not entries:
        raise PolynomialParseError('"coeffs" must be a non-empty array')
    kinds = set()
    coeffs = []
    for idx, pair in enumerate(entries):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise PolynomialParseError(f"coeffs[{idx}] must be a [re, im] pair")
        parts = []
        for x in pair:
            if isinstance(x, str):
                if not _RATIONAL.match(x.strip()):
                    raise PolynomialParseError(f"coeffs[{idx}]: {x!r} is not a p/q rational")
                kinds.add("exact")
                parts.append(Fraction(x.strip()))
            elif isinstance(x, (int, float)) and not isinstance(x, bool):
                kinds.add("float")
                parts.append(float(x))
            else:
                raise PolynomialParseError(f"coeffs[{idx}]: {x!r} is not a number")
        coeffs.append(parts)
    if len(kinds) > 1:
        raise PolynomialParseError("mixes numeric and p/q string entries")
    return _build(coeffs, exact=kinds == {"exact"})


def _parse_plain(text):
    coeffs = []
    exact = True
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        tokens = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", body)]
        if len(tokens) != 2:
            col = tokens[2][0] if len(tokens) > 2 else len(body.rstrip()) + 1
            raise PolynomialParseError(f"expected 2 values, found {len(tokens)}", lineno, col)
        pair = []
        for col, tok in tokens:
            if _RATIONAL.match(tok):
                pair.append(Fraction(tok))
                continue
            try:
                pair.append(float(tok))
            except ValueError:
                raise PolynomialParseError(f"cannot read {tok!r} as a number", lineno, col) from None
            exact = False
        coeffs.append(pair)
    if not coeffs:
        raise PolynomialParseError("no coefficients found")
    return _build(coeffs, exact)


def _build(pairs, exact):
    if exact:
        return Polynomial([GaussianRational(re, im) for re, im in pairs])
    return Polynomial([complex(float(re), float(im)) for re, im in pairs])


def polynomial_to_json(p):
    if p.exact:
        coeffs = [[str(c.re), str(c.im)] for c in p.coeffs]
    else:
        coeffs = [[c.real, c.imag] for c in p.coeffs]
    return {"coeffs": coeffs}
