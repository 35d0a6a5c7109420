"""
Closed-form expression trees.

Right-hand sides such as ``pi/(4*a) - psi1(a/(2*pi))/(4*a*pi)`` are built with
ordinary Python operators on ``Expr`` nodes, evaluated numerically against a
parameter point and rendered back to text for reports.

Usage:
    from logkernel.models.expressions import PI, A, psi1

    rhs = -psi1(A / (2 * PI)) / (4 * A * PI) + psi1(A / PI) / (A * PI)
    rhs.eval({"a": 3.14159})
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Union

from logkernel import specfun
from logkernel.specfun.constants import EULER_GAMMA


Number = Union[int, float, Fraction]


class Expr:
    """Base node. Subclasses implement eval, render and free_params."""

    def eval(self, params: Mapping[str, float]) -> float:
        raise NotImplementedError

    def render(self) -> str:
        raise NotImplementedError

    def free_params(self) -> frozenset[str]:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.render()

    # Arithmetic
    def __add__(self, other: "ExprLike") -> "Expr":
        return BinOp("+", self, wrap(other))

    def __radd__(self, other: "ExprLike") -> "Expr":
        return BinOp("+", wrap(other), self)

    def __sub__(self, other: "ExprLike") -> "Expr":
        return BinOp("-", self, wrap(other))

    def __rsub__(self, other: "ExprLike") -> "Expr":
        return BinOp("-", wrap(other), self)

    def __mul__(self, other: "ExprLike") -> "Expr":
        return BinOp("*", self, wrap(other))

    def __rmul__(self, other: "ExprLike") -> "Expr":
        return BinOp("*", wrap(other), self)

    def __truediv__(self, other: "ExprLike") -> "Expr":
        return BinOp("/", self, wrap(other))

    def __rtruediv__(self, other: "ExprLike") -> "Expr":
        return BinOp("/", wrap(other), self)

    def __pow__(self, other: "ExprLike") -> "Expr":
        return BinOp("**", self, wrap(other))

    def __rpow__(self, other: "ExprLike") -> "Expr":
        return BinOp("**", wrap(other), self)

    def __neg__(self) -> "Expr":
        return Neg(self)


ExprLike = Union[Expr, Number]


@dataclass(frozen=True, eq=False)
class Const(Expr):
    value: float
    name: Optional[str] = None

    def eval(self, params: Mapping[str, float]) -> float:
        return self.value

    def render(self) -> str:
        if self.name is not None:
            return self.name
        if float(self.value).is_integer():
            return str(int(self.value))
        return repr(self.value)

    def free_params(self) -> frozenset[str]:
        return frozenset()


@dataclass(frozen=True, eq=False)
class Param(Expr):
    name: str

    def eval(self, params: Mapping[str, float]) -> float:
        try:
            return float(params[self.name])
        except KeyError:
            raise KeyError(f"missing parameter '{self.name}'") from None

    def render(self) -> str:
        return self.name

    def free_params(self) -> frozenset[str]:
        return frozenset({self.name})


_BINARY: dict[str, Callable[[float, float], float]] = {
    "+": lambda x, y: x + y,
    "-": lambda x, y: x - y,
    "*": lambda x, y: x * y,
    "/": lambda x, y: x / y,
    "**": lambda x, y: x**y,
}


@dataclass(frozen=True, eq=False)
class BinOp(Expr):
    op: str
    left: Expr
    right: Expr

    def eval(self, params: Mapping[str, float]) -> float:
        return _BINARY[self.op](self.left.eval(params), self.right.eval(params))

    def render(self) -> str:
        if self.op == "**":
            return f"{self.left.render()}^{self.right.render()}"
        return f"({self.left.render()} {self.op} {self.right.render()})"

    def free_params(self) -> frozenset[str]:
        return self.left.free_params() | self.right.free_params()


@dataclass(frozen=True, eq=False)
class Neg(Expr):
    operand: Expr

    def eval(self, params: Mapping[str, float]) -> float:
        return -self.operand.eval(params)

    def render(self) -> str:
        return f"-{self.operand.render()}"

    def free_params(self) -> frozenset[str]:
        return self.operand.free_params()


@dataclass(frozen=True, eq=False)
class Call(Expr):
    fn: str
    args: tuple[Expr, ...]

    def eval(self, params: Mapping[str, float]) -> float:
        return FUNCTIONS[self.fn](*(arg.eval(params) for arg in self.args))

    def render(self) -> str:
        return f"{self.fn}({', '.join(arg.render() for arg in self.args)})"

    def free_params(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for arg in self.args:
            out |= arg.free_params()
        return out


def wrap(x: ExprLike) -> Expr:
    """Lift a number into an Expr; Fractions keep their exact spelling."""
    if isinstance(x, Expr):
        return x
    if isinstance(x, Fraction):
        return Const(float(x), name=str(x))
    return Const(float(x))


def _sign_power(k: float) -> float:
    """(-1)**k for integral k."""
    return -1.0 if int(round(k)) % 2 else 1.0


FUNCTIONS: dict[str, Callable[..., float]] = {
    "ln": math.log,
    "sqrt": math.sqrt,
    "sin": math.sin,
    "cos": math.cos,
    "tan": math.tan,
    "cot": lambda x: math.cos(x) / math.sin(x),
    "tanh": math.tanh,
    "factorial": lambda x: float(math.factorial(int(round(x)))),
    "sign_power": _sign_power,
    "psi": lambda x: specfun.digamma(x),
    "psi1": lambda x: specfun.polygamma(1, x),
    "psi2": lambda x: specfun.polygamma(2, x),
    "gamma_ln": lambda x: specfun.gamma_ln(x),
    "zeta": lambda s: specfun.zeta(s),
    "Si": lambda x: specfun.si_upper(x),
    "si": lambda x: specfun.si_lower(x),
    "Ci": lambda x: specfun.ci(x),
    "aux_f": lambda x: specfun.aux_f(x),
    "aux_g": lambda x: specfun.aux_g(x),
    "kummer_trig": lambda k: specfun.kummer_trig_integral(int(round(k))),
}


def _function(name: str) -> Callable[..., Expr]:
    def build(*args: ExprLike) -> Expr:
        return Call(name, tuple(wrap(a) for a in args))

    build.__name__ = name
    return build


ln = _function("ln")
sqrt = _function("sqrt")
sin = _function("sin")
cos = _function("cos")
tan = _function("tan")
cot = _function("cot")
tanh = _function("tanh")
factorial = _function("factorial")
sign_power = _function("sign_power")
psi = _function("psi")
psi1 = _function("psi1")
psi2 = _function("psi2")
gamma_ln = _function("gamma_ln")
zeta = _function("zeta")
Si = _function("Si")
si = _function("si")
Ci = _function("Ci")
aux_f = _function("aux_f")
aux_g = _function("aux_g")
kummer_trig = _function("kummer_trig")

# Constants
PI = Const(math.pi, "pi")
GAMMA = Const(EULER_GAMMA, "gamma")
LN2 = Const(math.log(2.0), "ln2")

# Parameters
A = Param("a")
B = Param("b")
K = Param("k")
N = Param("n")
S = Param("s")
X = Param("x")
Y = Param("y")
Z = Param("z")
