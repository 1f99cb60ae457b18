"""
Expression trees for the command line and HTTP front ends
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


@dataclass(frozen=True)
class Num:
    """Exact rational literal"""
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Unary:
    """op is one of neg, sqrt, exp, hexp"""
    op: str
    arg: "Expr"


@dataclass(frozen=True)
class Binary:
    """op is one of + - * /"""
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class RecipCall:
    """recip(arg; k): reciprocal under the promise arg >= 2**-k"""
    arg: "Expr"
    k: int


Expr = Union[Num, Var, Unary, Binary, RecipCall]

UNARY_FUNCTIONS = ("sqrt", "exp", "hexp")


def _terminating_digits(value: Fraction):
    """Decimal digits needed to write value exactly, None if it does not terminate"""
    den = value.denominator
    twos = (den & -den).bit_length() - 1
    den >>= twos
    fives = 0
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return None
    return max(twos, fives)


def format_number(value: Fraction) -> str:
    """Exact decimal when it terminates, p/q otherwise"""
    digits = _terminating_digits(value)
    if digits is None:
        return f"{value.numerator}/{value.denominator}"
    if digits == 0:
        return str(value.numerator)
    scaled = abs(value.numerator * 10 ** digits // value.denominator)
    whole, frac = divmod(scaled, 10 ** digits)
    sign = "-" if value < 0 else ""
    return f"{sign}{whole}.{frac:0{digits}d}"


def format_expr(expr: Expr) -> str:
    """
    Fully parenthesized text form

    parse_expr(format_expr(e)) == e for trees whose literals are
    non-negative and have terminating decimal expansions, which includes
    every tree parse_expr produces.
    """
    if isinstance(expr, Num):
        text = format_number(expr.value)
        return f"({text})" if expr.value < 0 or "/" in text else text
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Unary):
        if expr.op == "neg":
            return f"(-{format_expr(expr.arg)})"
        return f"{expr.op}({format_expr(expr.arg)})"
    if isinstance(expr, Binary):
        return f"({format_expr(expr.left)} {expr.op} {format_expr(expr.right)})"
    if isinstance(expr, RecipCall):
        return f"recip({format_expr(expr.arg)}; {expr.k})"
    raise TypeError(f"not an expression: {expr!r}")
