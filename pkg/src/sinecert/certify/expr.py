"""Small expression trees in one variable ``x`` with interval evaluation
and forward first derivatives.

Constants are exact rationals or the named enclosures ``b1``, ``b2`` and
``pi``.  ``str(e)`` is valid input for :func:`parse` and reproduces the tree
exactly, which is what certificate files rely on.
"""

from __future__ import annotations

import ast
from fractions import Fraction

from .. import interval as iv
from ..interval import Interval

FUNCS = ("ln", "exp", "sin", "cos", "sqrt")
NAMED = ("b1", "b2", "pi")


class ExprError(ValueError):
    pass


class Expr:
    __slots__ = ()

    def has_var(self) -> bool:
        raise NotImplementedError

    def eval(self, x: Interval, prec: int | None = None) -> Interval:
        raise NotImplementedError

    def diff(self) -> "Expr":
        raise NotImplementedError

    def __call__(self, x, prec: int = iv.DEFAULT_PRECISION) -> Interval:
        if not isinstance(x, Interval):
            x = Interval(x, prec=prec)
        return self.eval(x, x.prec)

    # builders
    def __add__(self, o):
        return add(self, wrap(o))

    def __radd__(self, o):
        return add(wrap(o), self)

    def __sub__(self, o):
        return sub(self, wrap(o))

    def __rsub__(self, o):
        return sub(wrap(o), self)

    def __mul__(self, o):
        return mul(self, wrap(o))

    def __rmul__(self, o):
        return mul(wrap(o), self)

    def __truediv__(self, o):
        return div(self, wrap(o))

    def __rtruediv__(self, o):
        return div(wrap(o), self)

    def __pow__(self, o):
        return power(self, wrap(o))

    def __neg__(self):
        return neg(self)

    def __eq__(self, other):
        return isinstance(other, Expr) and str(self) == str(other)

    def __hash__(self):
        return hash(str(self))

    def __repr__(self):
        return f"Expr({self})"


class Const(Expr):
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = Fraction(value)

    def has_var(self):
        return False

    def eval(self, x, prec=None):
        return Interval(self.value, prec=prec or x.prec)

    def diff(self):
        return ZERO

    def __str__(self):
        v = self.value
        if v.denominator == 1:
            return str(v.numerator) if v >= 0 else f"({v.numerator})"
        return f"({v.numerator}/{v.denominator})"


class Named(Expr):
    __slots__ = ("name",)

    def __init__(self, name: str):
        if name not in NAMED:
            raise ExprError(f"unknown constant {name!r}")
        self.name = name

    def has_var(self):
        return False

    def eval(self, x, prec=None):
        p = prec or x.prec
        if self.name == "b1":
            return iv.beta1(p)
        if self.name == "b2":
            return iv.beta2(p)
        return iv.pi(p)

    def diff(self):
        return ZERO

    def __str__(self):
        return self.name


class Var(Expr):
    __slots__ = ()

    def has_var(self):
        return True

    def eval(self, x, prec=None):
        return x

    def diff(self):
        return ONE

    def __str__(self):
        return "x"


class Binary(Expr):
    __slots__ = ("op", "a", "b")

    def __init__(self, op: str, a: Expr, b: Expr):
        self.op, self.a, self.b = op, a, b

    def has_var(self):
        return self.a.has_var() or self.b.has_var()

    def eval(self, x, prec=None):
        p = prec or x.prec
        u = self.a.eval(x, p)
        if self.op == "**":
            b = self.b
            if isinstance(b, Const) and b.value.denominator == 1:
                return u ** int(b.value)
            return iv.pow_(u, b.eval(x, p))
        v = self.b.eval(x, p)
        if self.op == "+":
            return u + v
        if self.op == "-":
            return u - v
        if self.op == "*":
            return u * v
        return u / v

    def diff(self):
        a, b, op = self.a, self.b, self.op
        if op == "+":
            return add(a.diff(), b.diff())
        if op == "-":
            return sub(a.diff(), b.diff())
        if op == "*":
            return add(mul(a.diff(), b), mul(a, b.diff()))
        if op == "/":
            return div(sub(mul(a.diff(), b), mul(a, b.diff())), power(b, Const(2)))
        # power
        if not b.has_var():
            return mul(mul(b, power(a, sub(b, ONE))), a.diff())
        if not a.has_var():
            return mul(mul(self, func("ln", a)), b.diff())
        return mul(self, add(mul(b.diff(), func("ln", a)), div(mul(b, a.diff()), a)))

    def __str__(self):
        return f"({self.a} {self.op} {self.b})"


class Func(Expr):
    __slots__ = ("name", "a")

    def __init__(self, name: str, a: Expr):
        if name not in FUNCS and name != "neg":
            raise ExprError(f"unknown function {name!r}")
        self.name, self.a = name, a

    def has_var(self):
        return self.a.has_var()

    def eval(self, x, prec=None):
        u = self.a.eval(x, prec or x.prec)
        if self.name == "neg":
            return -u
        return getattr(iv, self.name)(u)

    def diff(self):
        a, da = self.a, self.a.diff()
        name = self.name
        if name == "neg":
            return neg(da)
        if name == "ln":
            return div(da, a)
        if name == "exp":
            return mul(self, da)
        if name == "sin":
            return mul(func("cos", a), da)
        if name == "cos":
            return neg(mul(func("sin", a), da))
        return div(da, mul(Const(2), self))

    def __str__(self):
        if self.name == "neg":
            return f"(-{self.a})"
        return f"{self.name}({self.a})"


ZERO = Const(0)
ONE = Const(1)
X = Var()


def wrap(v) -> Expr:
    if isinstance(v, Expr):
        return v
    if isinstance(v, str):
        return Named(v)
    return Const(v)


def _const(e: Expr):
    return e.value if isinstance(e, Const) else None


def add(a: Expr, b: Expr) -> Expr:
    ca, cb = _const(a), _const(b)
    if ca is not None and cb is not None:
        return Const(ca + cb)
    if ca == 0:
        return b
    if cb == 0:
        return a
    return Binary("+", a, b)


def sub(a: Expr, b: Expr) -> Expr:
    ca, cb = _const(a), _const(b)
    if ca is not None and cb is not None:
        return Const(ca - cb)
    if cb == 0:
        return a
    if ca == 0:
        return neg(b)
    return Binary("-", a, b)


def mul(a: Expr, b: Expr) -> Expr:
    ca, cb = _const(a), _const(b)
    if ca is not None and cb is not None:
        return Const(ca * cb)
    if ca == 0 or cb == 0:
        return ZERO
    if ca == 1:
        return b
    if cb == 1:
        return a
    return Binary("*", a, b)


def div(a: Expr, b: Expr) -> Expr:
    ca, cb = _const(a), _const(b)
    if cb == 0:
        raise ExprError("division by constant zero")
    if ca is not None and cb is not None:
        return Const(ca / cb)
    if ca == 0:
        return ZERO
    if cb == 1:
        return a
    return Binary("/", a, b)


def power(a: Expr, b: Expr) -> Expr:
    ca, cb = _const(a), _const(b)
    if ca is not None and cb is not None and cb.denominator == 1 and (ca != 0 or cb > 0):
        return Const(ca ** int(cb))
    if cb == 0:
        return ONE
    if cb == 1:
        return a
    return Binary("**", a, b)


def neg(a: Expr) -> Expr:
    ca = _const(a)
    if ca is not None:
        return Const(-ca)
    if isinstance(a, Func) and a.name == "neg":
        return a.a
    return Func("neg", a)


def func(name: str, a: Expr) -> Expr:
    return Func(name, a)


def ln(a):
    return func("ln", wrap(a))


def exp(a):
    return func("exp", wrap(a))


def sin(a):
    return func("sin", wrap(a))


def cos(a):
    return func("cos", wrap(a))


def sqrt(a):
    return func("sqrt", wrap(a))


# -- parsing -------------------------------------------------------------------

_BINOPS = {ast.Add: "+", ast.Sub: "-", ast.Mult: "*", ast.Div: "/", ast.Pow: "**"}


def parse(text: str) -> Expr:
    """Parse Python-syntax arithmetic in ``x``; decimal literals stay exact."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ExprError(f"cannot parse expression {text!r}: {exc.msg}") from None
    return _convert(tree.body, text.strip())


def _convert(node, src: str) -> Expr:
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        op = _BINOPS[type(node.op)]
        a, b = _convert(node.left, src), _convert(node.right, src)
        if op == "/" and isinstance(a, Const) and isinstance(b, Const):
            return div(a, b)
        return Binary(op, a, b)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _convert(node.operand, src)
        if isinstance(node.op, ast.UAdd):
            return inner
        if isinstance(inner, Const):
            return Const(-inner.value)
        return Func("neg", inner)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) \
            and not isinstance(node.value, bool):
        if isinstance(node.value, int):
            return Const(node.value)
        literal = ast.get_source_segment(src, node)
        return Const(Fraction(literal))
    if isinstance(node, ast.Name):
        if node.id == "x":
            return X
        if node.id in NAMED:
            return Named(node.id)
        raise ExprError(f"unknown name {node.id!r}")
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and not node.keywords:
        name = "ln" if node.func.id == "log" else node.func.id
        if name in FUNCS and len(node.args) == 1:
            return Func(name, _convert(node.args[0], src))
        raise ExprError(f"unsupported call {node.func.id!r}")
    raise ExprError(f"unsupported syntax: {ast.dump(node)[:60]}")
