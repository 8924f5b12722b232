"""
x, q 的有理函数 RationalGF 与 x 的一元有理函数 UnivariateRGF。

规范形式：
- 分子分母用 sympy 的 PolyElement.cancel 约去公共因子；
- 分母常数项缩放为 1（分母常数项为 0 时抛出 NotSeriesExpandableError）。
规范形式唯一，因此 == 直接比较分子分母；equals() 另外提供交叉相乘的判定。
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from lis312.algebra.polynomial import (
    UNIVARIATE_RING,
    BivariatePolynomial,
    Scalar,
    to_fraction,
    to_qq,
    x_coefficients,
    x_constant,
    x_poly,
)
from lis312.algebra.render import render_fraction, render_terms
from lis312.errors import (
    DegenerateSubstitutionError,
    DivisionByZeroError,
    NotSeriesExpandableError,
    PoleError,
)

Operand = Union["RationalGF", BivariatePolynomial, int, Fraction]
XOperand = Union[PolyElement, Sequence[Scalar]]


def _cancel(num: PolyElement, den: PolyElement, what: str) -> tuple[PolyElement, PolyElement]:
    """约分并把分母常数项缩放为 1。"""
    num, den = num.cancel(den)
    c = den.get(den.ring.zero_monom, QQ.zero)
    if not c:
        raise NotSeriesExpandableError(f"{what}分母常数项为 0，无法在原点展开: {den.as_expr()}")
    if c != QQ.one:
        num, den = num.quo_ground(c), den.quo_ground(c)
    return num, den


class RationalGF:
    """规范化的二元有理函数 num / den，den(0, 0) = 1。"""

    __slots__ = ("num", "den")

    def __init__(self, num: BivariatePolynomial | Scalar, den: BivariatePolynomial | Scalar = 1):
        num = BivariatePolynomial.coerce(num)
        den = BivariatePolynomial.coerce(den)
        if den.is_zero():
            raise DivisionByZeroError("有理函数的分母为零")
        if num.is_zero():
            num, den = BivariatePolynomial.zero(), BivariatePolynomial.one()
        else:
            n, d = _cancel(num.element, den.element, "")
            num, den = BivariatePolynomial.wrap(n), BivariatePolynomial.wrap(d)
        self.num = num
        self.den = den

    @classmethod
    def zero(cls) -> "RationalGF":
        return cls(0)

    @classmethod
    def one(cls) -> "RationalGF":
        return cls(1)

    @staticmethod
    def coerce(value: Operand) -> "RationalGF":
        if isinstance(value, RationalGF):
            return value
        return RationalGF(value)

    # ------------------------------------------------------------------
    # 域运算
    # ------------------------------------------------------------------

    def __add__(self, other: Operand) -> "RationalGF":
        other = RationalGF.coerce(other)
        if self.den == other.den:
            return RationalGF(self.num + other.num, self.den)
        return RationalGF(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalGF":
        return RationalGF(-self.num, self.den)

    def __sub__(self, other: Operand) -> "RationalGF":
        return self + (-RationalGF.coerce(other))

    def __rsub__(self, other: Operand) -> "RationalGF":
        return RationalGF.coerce(other) - self

    def __mul__(self, other: Operand) -> "RationalGF":
        other = RationalGF.coerce(other)
        return RationalGF(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> "RationalGF":
        other = RationalGF.coerce(other)
        if other.is_zero():
            raise DivisionByZeroError("除以零有理函数")
        return RationalGF(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: Operand) -> "RationalGF":
        return RationalGF.coerce(other) / self

    def __pow__(self, k: int) -> "RationalGF":
        if k < 0:
            return RationalGF.one() / (self ** (-k))
        return RationalGF(self.num**k, self.den**k)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, BivariatePolynomial)):
            other = RationalGF(other)
        if not isinstance(other, RationalGF):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def equals(self, other: Operand) -> bool:
        """交叉相乘判定相等：num_a * den_b == num_b * den_a。"""
        other = RationalGF.coerce(other)
        return self.num * other.den == other.num * self.den

    # ------------------------------------------------------------------
    # 求值与输出
    # ------------------------------------------------------------------

    def eval(self, x0: Scalar, q0: Scalar) -> Fraction:
        d = self.den.eval(x0, q0)
        if d == 0:
            raise PoleError(f"分母在 ({x0}, {q0}) 处为 0")
        return self.num.eval(x0, q0) / d

    def to_text(self) -> str:
        return render_fraction(
            self.num.to_text(),
            self.den.to_text(),
            num_terms=len(self.num),
            den_is_one=self.den == BivariatePolynomial.one(),
        )

    def to_json(self) -> dict:
        return {"numerator": self.num.to_json_terms(), "denominator": self.den.to_json_terms()}

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"RationalGF({self.to_text()!r})"


class UnivariateRGF:
    """x 的一元有理函数 num / den（QQ[x] 的元素），约分且 den(0) = 1。

    num、den 也可以按 x 的次数从低到高给出系数序列。
    """

    __slots__ = ("num", "den")

    def __init__(self, num: XOperand, den: XOperand = (1,)):
        num, den = x_poly(num), x_poly(den)
        if not den:
            raise DivisionByZeroError("一元有理函数的分母为零")
        if not num:
            num, den = UNIVARIATE_RING.zero, UNIVARIATE_RING.one
        else:
            num, den = _cancel(num, den, "一元有理函数")
        self.num = num
        self.den = den

    @staticmethod
    def coerce(value: "UnivariateRGF | Scalar") -> "UnivariateRGF":
        if isinstance(value, UnivariateRGF):
            return value
        return UnivariateRGF(UNIVARIATE_RING.ground_new(to_qq(value)))

    def __add__(self, other: "UnivariateRGF | Scalar") -> "UnivariateRGF":
        other = UnivariateRGF.coerce(other)
        if self.den == other.den:
            return UnivariateRGF(self.num + other.num, self.den)
        return UnivariateRGF(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "UnivariateRGF":
        return UnivariateRGF(-self.num, self.den)

    def __sub__(self, other: "UnivariateRGF | Scalar") -> "UnivariateRGF":
        return self + (-UnivariateRGF.coerce(other))

    def __rsub__(self, other: Scalar) -> "UnivariateRGF":
        return UnivariateRGF.coerce(other) - self

    def __mul__(self, other: "UnivariateRGF | Scalar") -> "UnivariateRGF":
        other = UnivariateRGF.coerce(other)
        return UnivariateRGF(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "UnivariateRGF | Scalar") -> "UnivariateRGF":
        other = UnivariateRGF.coerce(other)
        if not other.num:
            raise DivisionByZeroError("除以零有理函数")
        return UnivariateRGF(self.num * other.den, self.den * other.num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UnivariateRGF.coerce(other)
        if not isinstance(other, UnivariateRGF):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def equals(self, other: "UnivariateRGF") -> bool:
        return self.num * other.den == other.num * self.den

    def eval(self, x0: Scalar) -> Fraction:
        x0 = Fraction(x0)
        d = _eval_x(self.den, x0)
        if d == 0:
            raise PoleError(f"分母在 x = {x0} 处为 0")
        return _eval_x(self.num, x0) / d

    def to_text(self) -> str:
        num_terms = [((i, 0), c) for i, c in enumerate(x_coefficients(self.num)) if c != 0]
        den_terms = [((i, 0), c) for i, c in enumerate(x_coefficients(self.den)) if c != 0]
        return render_fraction(
            render_terms(num_terms),
            render_terms(den_terms),
            num_terms=len(num_terms),
            den_is_one=self.den == UNIVARIATE_RING.one,
        )

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"UnivariateRGF({self.to_text()!r})"


def _eval_x(p: PolyElement, x0: Fraction) -> Fraction:
    return sum((to_fraction(c) * x0**i for (i,), c in p.items()), Fraction(0))


# ---------------------------------------------------------------------------
# q = 1 处的代入与求导
# ---------------------------------------------------------------------------


def _q1_parts(F: RationalGF, order: int) -> tuple[list[UnivariateRGF], list[UnivariateRGF]]:
    """返回 N, N', N'' 与 D, D', D'' 在 q=1 处的值（作为一元有理函数）。"""
    d0 = F.den.subs_q(1)
    if not d0:
        raise DegenerateSubstitutionError("代入 q = 1 后分母恒为 0")
    if x_constant(d0) == 0:
        raise DegenerateSubstitutionError("代入 q = 1 后分母常数项为 0")
    nums, dens = [], []
    n, d = F.num, F.den
    for _ in range(order + 1):
        nums.append(UnivariateRGF(n.subs_q(1)))
        dens.append(UnivariateRGF(d.subs_q(1)))
        n, d = n.diff_q(), d.diff_q()
    return nums, dens


def at_q1(F: RationalGF) -> UnivariateRGF:
    """F(x, 1)。"""
    nums, dens = _q1_parts(F, 0)
    return nums[0] / dens[0]


def d_dq_at_q1(F: RationalGF) -> UnivariateRGF:
    """∂_q F 在 q = 1 处的值：r' = (N' - r D') / D。"""
    (n0, n1), (d0, d1) = _q1_parts(F, 1)
    r = n0 / d0
    return (n1 - r * d1) / d0


def d2_dq2_at_q1(F: RationalGF) -> UnivariateRGF:
    """∂²_q F 在 q = 1 处的值：r'' = (N'' - 2 r' D' - r D'') / D。"""
    (n0, n1, n2), (d0, d1, d2) = _q1_parts(F, 2)
    r = n0 / d0
    r1 = (n1 - r * d1) / d0
    return (n2 - 2 * r1 * d1 - r * d2) / d0


def add(a: Operand, b: Operand) -> RationalGF:
    return RationalGF.coerce(a) + b


def sub(a: Operand, b: Operand) -> RationalGF:
    return RationalGF.coerce(a) - b


def mul(a: Operand, b: Operand) -> RationalGF:
    return RationalGF.coerce(a) * b


def div(a: Operand, b: Operand) -> RationalGF:
    return RationalGF.coerce(a) / b


def evaluate(F: RationalGF, x0: Scalar, q0: Scalar) -> Fraction:
    return F.eval(x0, q0)


__all__ = [
    "RationalGF",
    "UnivariateRGF",
    "at_q1",
    "d_dq_at_q1",
    "d2_dq2_at_q1",
    "add",
    "sub",
    "mul",
    "div",
    "evaluate",
]
