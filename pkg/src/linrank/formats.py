"""Text formats for fields and polynomials.

Field:       ``p=<int> s=<int> n=<int> [mod=<c0,c1,...,1>]``
Polynomial:  ``<name>=[e0,e1,...,ek] [stride=<int>]``

Element encodings are the decimal integers described in :mod:`linrank.field`.
Errors carry the offending token and its character offset.
"""

import re

from .errors import LinRankError, ParseError, StrideNotCoprime, ValidationError
from .field import FieldParams, make_field_ctx
from .linpoly import LinearizedPoly

_TOKEN = re.compile(r"\S+")
_INT = re.compile(r"[0-9]+")


def _tokens(text):
    return [(m.group(), m.start()) for m in _TOKEN.finditer(text)]


def _int(value, token, pos):
    if not _INT.fullmatch(value):
        raise ParseError(f"expected a nonnegative integer in {token!r}", token, pos)
    return int(value)


def parse_field_spec(text):
    fields = {}
    for token, pos in _tokens(text):
        key, eq, value = token.partition("=")
        if not eq or key not in ("p", "s", "n", "mod"):
            raise ParseError(f"unknown field token {token!r}", token, pos)
        if key in fields:
            raise ParseError(f"duplicate key {key!r}", token, pos)
        if key == "mod":
            fields[key] = [_int(v, token, pos) for v in value.split(",")]
        else:
            fields[key] = _int(value, token, pos)
    for key in ("p", "n"):
        if key not in fields:
            raise ParseError(f"field spec is missing {key}=", text, len(text))
    try:
        params = FieldParams(fields["p"], fields.get("s", 1), fields["n"])
        return make_field_ctx(params, fields.get("mod"))
    except LinRankError:
        raise
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc


def format_field_spec(ctx):
    mod = ",".join(str(c) for c in ctx.modulus)
    return f"p={ctx.p} s={ctx.s} n={ctx.n} mod={mod}"


_POLY = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)=\[([^\]]*)\]")


def parse_poly_spec(text, ctx):
    """Return (name, LinearizedPoly)."""
    m = _POLY.search(text)
    if not m or text[:m.start()].strip():
        tok = _tokens(text)
        token, pos = tok[0] if tok else ("", 0)
        raise ParseError("expected <name>=[e0,e1,...]", token, pos)
    name, body = m.group(1), m.group(2)
    coeffs = []
    if body.strip():
        offset = m.start(2)
        for part in body.split(","):
            token = part.strip()
            coeffs.append(_int(token, token, offset))
            offset += len(part) + 1
    stride = 1
    for token, pos in _tokens(text[m.end():]):
        pos += m.end()
        key, eq, value = token.partition("=")
        if key != "stride" or not eq:
            raise ParseError(f"unknown polynomial token {token!r}", token, pos)
        stride = _int(value, token, pos)
    for e in coeffs:
        if e >= ctx.order:
            raise ValidationError(f"element encoding {e} outside [0, {ctx.order})")
    try:
        return name, LinearizedPoly(ctx, coeffs, stride)
    except StrideNotCoprime as exc:
        raise ValidationError(str(exc)) from exc


def format_poly_spec(name, f):
    body = ",".join(str(c) for c in f.coeffs)
    return f"{name}=[{body}] stride={f.stride}"
