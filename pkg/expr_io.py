"""
Text form of rational functions and the JSON map documents.

Grammar:
    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := '-' factor | base ('^' integer)?
    base     := rational | variable | '(' expr ')'
    variable := 'x' positive-integer | 'u' | 'a1' | 'a2'
    rational := integer ('/' positive-integer)?
Whitespace is insignificant.
"""
import json
import logging
import re

from cachetools import LRUCache, cached
from sympy import QQ

import multipoly
from config import RENDER_CACHE_SIZE
from core_arith import to_rational
from jonquieres_consts import (
    DocumentException,
    ParseException,
    SemanticException,
    ZeroDenominatorException,
)
from multipoly import RING
from ratfunc import RatFunc

logger = logging.getLogger("ExprIO")

_TOKEN = re.compile(r"(?P<space>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()])")
_VARIABLE = re.compile(r"x[1-9]\d*")

VARIANTS = ("J", "Jhat", "flow")


class Token:
    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column

    def __repr__(self):
        return f"Token({self.kind}, {self.text!r}, {self.line}:{self.column})"


def tokenize(text):
    tokens = []
    line, column, pos = 1, 1, 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ParseException(f"unexpected character {text[pos]!r}", line, column)
        kind = match.lastgroup
        chunk = match.group()
        if kind != "space":
            tokens.append(Token(kind, chunk, line, column))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            column = len(chunk) - chunk.rfind("\n")
        else:
            column += len(chunk)
        pos = match.end()
    tokens.append(Token("end", "", line, column))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def peek(self, offset=1):
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self):
        token = self.current
        self.pos += 1
        return token

    def at(self, text):
        return self.current.kind == "op" and self.current.text == text

    def expect(self, text):
        if not self.at(text):
            self.fail(f"expected {text!r}")
        return self.advance()

    def fail(self, message, token=None):
        token = token or self.current
        found = token.text or "end of input"
        raise ParseException(f"{message}, found {found!r}", token.line, token.column)

    def parse(self):
        if self.current.kind == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.current.kind != "end":
            self.fail("unexpected token")
        return value

    def expr(self):
        value = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.at("*") or self.at("/"):
            op = self.advance()
            rhs = self.factor(literal=False)
            if op.text == "*":
                value = value * rhs
            elif rhs.is_zero():
                raise SemanticException("zero denominator", op.line, op.column)
            else:
                value = value / rhs
        return value

    def factor(self, literal=True):
        if self.at("-"):
            self.advance()
            return -self.factor(literal)
        value = self.base(literal)
        if self.at("^"):
            caret = self.advance()
            sign = 1
            if self.at("-"):
                self.advance()
                sign = -1
            if self.current.kind != "int":
                self.fail("expected an integer exponent")
            exponent = sign * int(self.advance().text)
            if exponent < 0 and value.is_zero():
                raise SemanticException("zero denominator", caret.line, caret.column)
            value = value ** exponent
        return value

    def base(self, literal=True):
        token = self.current
        if token.kind == "int":
            self.advance()
            numerator = int(token.text)
            # p/q is one literal only at the start of a term
            if literal and self.at("/") and self.peek().kind == "int" and int(self.peek().text) > 0:
                self.advance()
                denominator = int(self.advance().text)
                return RatFunc.from_value(to_rational(f"{numerator}/{denominator}"))
            return RatFunc.from_value(numerator)
        if token.kind == "name":
            self.advance()
            return _variable(token)
        if self.at("("):
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        self.fail("expected a number, a variable or '('")


def _variable(token):
    name = token.text
    if name in multipoly.PUBLIC_PARAMETERS:
        return RatFunc.param(name)
    if _VARIABLE.fullmatch(name):
        if int(name[1:]) > len(multipoly.X_NAMES):
            raise ParseException(
                f"variable {name} exceeds MAX_VARIABLES = {len(multipoly.X_NAMES)}",
                token.line,
                token.column,
            )
        return RatFunc.param(name)
    raise ParseException(f"unknown identifier {name!r}", token.line, token.column)


def parse(text) -> RatFunc:
    """
    Parse an expression into a canonical RatFunc.

    :raises ParseException: syntax errors, with line and column
    :raises SemanticException: division by the zero polynomial
    """
    if not isinstance(text, str):
        text = str(text)
    try:
        return _Parser(text).parse()
    except ZeroDenominatorException:
        raise SemanticException("zero denominator", 1, 1)


def _coefficient(c):
    q = to_rational(c)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _monomial(monom):
    parts = []
    for k, e in enumerate(monom):
        if e:
            name = multipoly.NAMES[k]
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def render_polynomial(p) -> str:
    if not p:
        return "0"
    pieces = []
    for monom, coeff in p.terms():
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        mono = _monomial(monom)
        if not mono:
            text = _coefficient(magnitude)
        elif magnitude == QQ.one:
            text = mono
        else:
            text = f"{_coefficient(magnitude)}*{mono}"
        if not pieces:
            pieces.append(f"-{text}" if negative else text)
        else:
            pieces.append(f" - {text}" if negative else f" + {text}")
    return "".join(pieces)


def _plain_power(p):
    # single variable power with coefficient 1, safe without parentheses after '/'
    if len(p) != 1:
        return False
    (monom, coeff), = p.terms()
    return coeff == QQ.one and sum(1 for e in monom if e) == 1


@cached(cache=LRUCache(maxsize=RENDER_CACHE_SIZE))
def render(f: RatFunc) -> str:
    """
    Canonical text of f; parse(render(f)) == f.
    """
    num = render_polynomial(f.num)
    if f.den == RING.one:
        return num
    if len(f.num) > 1:
        num = f"({num})"
    den = render_polynomial(f.den)
    if not _plain_power(f.den):
        den = f"({den})"
    return f"{num} / {den}"


class MapDocument:
    def __init__(self, n, variant, entries):
        """
        On-disk form of an element or a flow.

        :param n: variable count
        :param variant: "J", "Jhat" or "flow"
        :param entries: list of {"mu": str, "f": str} ({"f": str} for flows)
        """
        self.n = n
        self.variant = variant
        self.entries = entries

    @classmethod
    def from_dict(cls, document):
        if not isinstance(document, dict):
            raise DocumentException("map document must be a JSON object")
        try:
            n = document["n"]
            variant = document["variant"]
            entries = document["entries"]
        except KeyError as e:
            raise DocumentException(f"map document lacks field {e.args[0]!r}")
        if not isinstance(n, int) or n < 1:
            raise DocumentException("n must be a positive integer")
        if n > len(multipoly.X_NAMES):
            raise DocumentException(f"n = {n} exceeds MAX_VARIABLES = {len(multipoly.X_NAMES)}")
        if variant not in VARIANTS:
            raise DocumentException(f"variant must be one of {', '.join(VARIANTS)}")
        if not isinstance(entries, list) or len(entries) != n:
            raise DocumentException(f"expected {n} entries")
        for i, entry in enumerate(entries, start=1):
            if not isinstance(entry, dict) or "f" not in entry:
                raise DocumentException(f"entry {i} lacks field 'f'", index=i)
            if variant != "flow" and "mu" not in entry:
                raise DocumentException(f"entry {i} lacks field 'mu'", index=i)
        return cls(n, variant, entries)

    def to_dict(self):
        return {"n": self.n, "variant": self.variant, "entries": self.entries}


def _parse_entry(text, i, field, allow_parameter):
    value = parse(text)
    extra = [name for name in value.variables() if name not in multipoly.X_NAMES]
    if extra and not (allow_parameter and extra == ["u"]):
        raise DocumentException(
            f"{field}_{i} uses parameter {', '.join(extra)}", index=i
        )
    return value


def load_map(document):
    """
    Build and validate a JonqElement or an AdditiveFlow from a map document.
    """
    from jonq_group import JonqElement, Variant
    from unipotent_slice import AdditiveFlow, validate_flow

    if not isinstance(document, MapDocument):
        document = MapDocument.from_dict(document)
    if document.variant == "flow":
        increments = [
            _parse_entry(entry["f"], i, "F", True)
            for i, entry in enumerate(document.entries, start=1)
        ]
        return validate_flow(AdditiveFlow(document.n, increments))
    pairs = [
        (
            _parse_entry(entry["mu"], i, "mu", False),
            _parse_entry(entry["f"], i, "f", False),
        )
        for i, entry in enumerate(document.entries, start=1)
    ]
    element = JonqElement(document.n, Variant(document.variant), pairs)
    return element.validate()


def dump_map(obj) -> dict:
    """JonqElement or AdditiveFlow -> map document (as a dict)"""
    from unipotent_slice import AdditiveFlow

    if isinstance(obj, AdditiveFlow):
        entries = [{"f": render(f)} for f in obj.increments]
        return MapDocument(obj.n, "flow", entries).to_dict()
    entries = [{"mu": render(mu), "f": render(f)} for mu, f in obj.pairs]
    return MapDocument(obj.n, obj.variant.value, entries).to_dict()


def read_map(path):
    logger.debug(f"Reading map document {path}")
    with open(path, "r", encoding="utf-8") as f:
        return load_map(json.load(f))


def write_map(obj, path):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(dump_map(obj), f, indent=2, sort_keys=True)
        f.write("\n")
    logger.info(f"Wrote map document {path}")


def load_flows(document):
    """
    A list of flow documents, {"flows": [...]}, or a single flow document.
    """
    if isinstance(document, dict) and "flows" in document:
        document = document["flows"]
    if isinstance(document, dict):
        document = [document]
    if not isinstance(document, list) or not document:
        raise DocumentException("expected a nonempty list of flow documents")
    flows = [load_map(entry) for entry in document]
    from unipotent_slice import AdditiveFlow

    if not all(isinstance(flow, AdditiveFlow) for flow in flows):
        raise DocumentException("every document in a flow file must use variant 'flow'")
    if len({flow.n for flow in flows}) != 1:
        raise DocumentException("flows must share the same n")
    return flows


def read_flows(path):
    logger.debug(f"Reading flow document {path}")
    with open(path, "r", encoding="utf-8") as f:
        return load_flows(json.load(f))


def load_algebra(document):
    """
    Nilpotent Lie algebra from a list of [i, j, k, c] brackets ([e_i, e_j] has
    coefficient c on e_k) or from {"dim": n, "brackets": [...]}.
    """
    from unipotent_slice import NilpotentAlgebra

    dim = None
    if isinstance(document, dict):
        dim = document.get("dim")
        document = document.get("brackets")
    if not isinstance(document, list):
        raise DocumentException("algebra document must list brackets [i, j, k, c]")
    structure = {}
    for entry in document:
        if not isinstance(entry, (list, tuple)) or len(entry) != 4:
            raise DocumentException(f"malformed bracket {entry!r}")
        i, j, k, c = entry
        if not all(isinstance(a, int) and a >= 1 for a in (i, j, k)):
            raise DocumentException(f"bracket indices must be positive integers: {entry!r}")
        c = to_rational(c)
        if i == j:
            raise DocumentException(f"bracket [e{i}, e{i}] must vanish")
        if i > j:
            i, j, c = j, i, -c
        structure[(i, j, k)] = structure.get((i, j, k), 0) + c
    if dim is None:
        dim = max((max(key) for key in structure), default=1)
    if not isinstance(dim, int) or dim < 1:
        raise DocumentException("dim must be a positive integer")
    algebra = NilpotentAlgebra(dim, {key: c for key, c in structure.items() if c})
    return algebra.validate()


def read_algebra(path):
    logger.debug(f"Reading algebra document {path}")
    with open(path, "r", encoding="utf-8") as f:
        return load_algebra(json.load(f))
