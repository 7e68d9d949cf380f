"""Parameter schemas and a small safe parser for numeric parameter strings."""
from __future__ import annotations

import ast
import operator
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp, mpc

from ..errors import DomainError

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv, ast.Pow: operator.pow}
_UNOPS = {ast.UAdd: operator.pos, ast.USub: operator.neg}


def _eval(node, src: str):
    if isinstance(node, ast.Expression):
        return _eval(node.body, src)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float, complex)):
        # re-read the literal text so digits beyond double precision survive
        lit = src[node.col_offset:node.end_col_offset]
        if isinstance(node.value, complex):
            return mpc(0, mpmath.mpf(lit[:-1]))
        return mpmath.mpf(lit)
    if isinstance(node, ast.Name):
        if node.id == "pi":
            return +mp.pi
        if node.id in ("j", "i"):
            return mpc(0, 1)
        if node.id == "e":
            return mpmath.e()
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval(node.left, src), _eval(node.right, src))
    if isinstance(node, ast.UnaryOp) and type(node.op) in _UNOPS:
        return _UNOPS[type(node.op)](_eval(node.operand, src))
    raise DomainError(f"unsupported expression element {ast.dump(node)[:40]}")


def parse_number(text: str):
    """Evaluate e.g. ``"1.3"``, ``"pi/2"``, ``"0.7+0.4j"`` at the current precision."""
    src = str(text).strip()
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise DomainError(f"cannot parse {text!r}") from exc
    try:
        v = _eval(tree, src)
    except ZeroDivisionError as exc:
        raise DomainError(f"division by zero in {text!r}") from exc
    if isinstance(v, mpc) and v.imag == 0:
        v = v.real
    return v


def parse_int(text: str) -> int:
    try:
        return int(str(text).strip())
    except ValueError as exc:
        raise DomainError(f"expected an integer, got {text!r}") from exc


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"expected a rational such as 1/3, got {text!r}") from exc


@dataclass(frozen=True)
class Param:
    """One named input of a catalog entry.

    kind is ``int``, ``real``, ``complex``, ``rational`` or ``choice``.
    """

    name: str
    kind: str
    default: str
    choices: tuple[str, ...] = ()

    def parse(self, text: str):
        if self.kind == "int":
            return parse_int(text)
        if self.kind == "rational":
            return parse_rational(text)
        if self.kind == "choice":
            t = str(text).strip()
            if t not in self.choices:
                raise DomainError(f"{self.name} must be one of {', '.join(self.choices)}")
            return t
        v = parse_number(text)
        if self.kind == "real" and isinstance(v, mpc):
            raise DomainError(f"{self.name} must be real")
        return v

    def describe(self) -> str:
        if self.kind == "choice":
            return f"{self.name}:{{{','.join(self.choices)}}}"
        return f"{self.name}:{self.kind}"


def require(cond: bool, message: str) -> None:
    if not cond:
        raise DomainError(message)
