"""
Expression parser

Top-down operator precedence: unary minus binds tighter than * and /,
which bind tighter than + and -. Decimal literals and dyadic literals
m*2^e become exact rationals.
"""
import re
from fractions import Fraction
from typing import Dict, Iterator, List, NamedTuple, Optional

from ..errors import DomainError, ParseError
from ..models.expr import Binary, Expr, Num, RecipCall, UNARY_FUNCTIONS, Unary, Var
from ..models.real import Real, coerce, exp, hexp, recip, recip_enriched, sqrt

_TOKENS = {
    "dyadic": r"\d+\s*\*\s*2\s*\^\s*(?:\(\s*[+-]?\d+\s*\)|[+-]?\d+)",
    "number": r"\d+(?:\.\d*)?|\.\d+",
    "name": r"[A-Za-z_][A-Za-z0-9_]*",
    "op": r"[-+*/]",
    "lpar": r"\(",
    "rpar": r"\)",
    "sep": r"[;,]",
    "skip": r"\s+",
    "error": r".",
}
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{text})" for name, text in _TOKENS.items()))
_DYADIC_PARTS = re.compile(r"(\d+)\s*\*\s*2\s*\^\s*\(?\s*([+-]?\d+)")

_BINDING = {"+": 10, "-": 10, "*": 20, "/": 20}
_PREFIX = 30


class Token(NamedTuple):
    kind: str
    text: str
    offset: int


def _byte_offset(src: str, index: int) -> int:
    return len(src[:index].encode("utf-8"))


def tokenize(src: str) -> Iterator[Token]:
    for mo in _TOKEN_RE.finditer(src):
        kind = mo.lastgroup
        if kind == "skip":
            continue
        offset = _byte_offset(src, mo.start())
        if kind == "error":
            raise ParseError(f"unexpected character {mo.group()!r}", offset)
        yield Token(kind, mo.group(), offset)
    yield Token("end", "", _byte_offset(src, len(src)))


def _literal(token: Token) -> Fraction:
    if token.kind == "dyadic":
        mantissa, exponent = _DYADIC_PARTS.match(token.text).groups()
        return Fraction(int(mantissa)) * Fraction(2) ** int(exponent)
    return Fraction(token.text)


class Parser:
    """Pratt parser over the token stream of one source string"""

    def __init__(self, src: str):
        self.src = src
        self.tokens: List[Token] = list(tokenize(src))
        self.pos = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.pos]

    def advance(self, kind: Optional[str] = None, text: Optional[str] = None) -> Token:
        token = self.token
        if kind and token.kind != kind or text and token.text != text:
            wanted = text or kind
            found = token.text or "end of input"
            raise ParseError(f"expected {wanted!r}, found {found!r}", token.offset)
        self.pos += 1
        return token

    def parse(self) -> Expr:
        expr = self.expression(0)
        if self.token.kind != "end":
            raise ParseError(f"unexpected {self.token.text!r}", self.token.offset)
        return expr

    def expression(self, rbp: int) -> Expr:
        left = self.nud(self.advance())
        while self.token.kind == "op" and rbp < _BINDING[self.token.text]:
            op = self.advance()
            left = Binary(op.text, left, self.expression(_BINDING[op.text]))
        return left

    def nud(self, token: Token) -> Expr:
        if token.kind in ("number", "dyadic"):
            return Num(_literal(token))
        if token.kind == "op" and token.text == "-":
            return Unary("neg", self.expression(_PREFIX))
        if token.kind == "lpar":
            expr = self.expression(0)
            self.advance("rpar")
            return expr
        if token.kind == "name":
            if token.text in UNARY_FUNCTIONS:
                self.advance("lpar")
                arg = self.expression(0)
                self.advance("rpar")
                return Unary(token.text, arg)
            if token.text == "recip":
                return self.recip_call()
            return Var(token.text)
        found = token.text or "end of input"
        raise ParseError(f"unexpected {found!r}", token.offset)

    def recip_call(self) -> Expr:
        """recip(x) is the adaptive reciprocal, recip(x; k) the enriched one"""
        self.advance("lpar")
        arg = self.expression(0)
        if self.token.kind == "rpar":
            self.advance()
            return Binary("/", Num(Fraction(1)), arg)
        self.advance("sep")
        k_token = self.token
        if k_token.kind != "number" or not k_token.text.isdigit():
            raise ParseError("enrichment argument must be a natural number", k_token.offset)
        self.advance()
        self.advance("rpar")
        return RecipCall(arg, int(k_token.text))


def parse_expr(src: str) -> Expr:
    return Parser(src).parse()


def parse_number(text: str) -> Fraction:
    """
    Numeric command-line argument: "p/q", decimal or "m*2^e", optionally signed

    Raises:
        ParseError: anything else
    """
    src = text.strip()
    sign = 1
    if src and src[0] in "+-":
        sign = -1 if src[0] == "-" else 1
        src = src[1:]
    try:
        expr = parse_expr(src)
    except ParseError as exc:
        raise ParseError(f"not a number: {text!r}", exc.offset) from None
    if isinstance(expr, Num):
        return sign * expr.value
    if (
        isinstance(expr, Binary) and expr.op == "/"
        and isinstance(expr.left, Num) and isinstance(expr.right, Num)
        and expr.left.value.denominator == 1 and expr.right.value.denominator == 1
    ):
        if expr.right.value == 0:
            raise DomainError(f"zero denominator in {text!r}")
        return sign * expr.left.value / expr.right.value
    raise ParseError(f"not a number: {text!r}", 0)


def to_real(expr: Expr, env: Optional[Dict[str, Real]] = None) -> Real:
    """Build the Real DAG for an expression; variables come from env"""
    env = env or {}
    if isinstance(expr, Num):
        return coerce(expr.value)
    if isinstance(expr, Var):
        if expr.name not in env:
            raise DomainError(f"unbound variable {expr.name!r}")
        return env[expr.name]
    if isinstance(expr, Unary):
        arg = to_real(expr.arg, env)
        if expr.op == "neg":
            return -arg
        return {"sqrt": sqrt, "exp": exp, "hexp": hexp}[expr.op](arg)
    if isinstance(expr, Binary):
        left, right = to_real(expr.left, env), to_real(expr.right, env)
        if expr.op == "+":
            return left + right
        if expr.op == "-":
            return left - right
        if expr.op == "*":
            return left * right
        return left * recip(right)
    if isinstance(expr, RecipCall):
        return recip_enriched(to_real(expr.arg, env), expr.k)
    raise TypeError(f"not an expression: {expr!r}")
