"""
x, q 两个变量的稀疏多项式，系数为任意精度有理数。

底层是 sympy 稀疏多项式环 QQ[x, q] 的元素（PolyElement，以 (i, j) 为键的字典），
i 为 x 的次数，j 为 q 的次数。对外的系数一律转换成 Fraction。
对象创建后不可变，可作为 dict key。

同时提供一元环 QQ[x]，q = 1 代入、Q_k(x) 等一元多项式都是它的元素。
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Any, Iterable, Mapping, Sequence, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from lis312.algebra.render import render_terms, term_order_key
from lis312.errors import InvalidInputError

Exponent = tuple[int, int]
Scalar = Union[int, Fraction]

BIVARIATE_RING, _XG, _QG = ring("x,q", QQ)
UNIVARIATE_RING, UNIVARIATE_X = ring("x", QQ)


def to_qq(value: Scalar) -> Any:
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def to_fraction(c: Any) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def x_poly(coefficients: Sequence[Scalar] | PolyElement) -> PolyElement:
    """QQ[x] 的元素；序列按 x 的次数从低到高给出。"""
    if isinstance(coefficients, PolyElement):
        if coefficients.ring != UNIVARIATE_RING:
            raise InvalidInputError(f"不是 QQ[x] 的元素: {coefficients}")
        return coefficients
    return UNIVARIATE_RING.from_dict({(i,): to_qq(c) for i, c in enumerate(coefficients) if c != 0})


def x_coefficients(p: PolyElement) -> list[Fraction]:
    """一元多项式的系数表，下标为 x 的次数；零多项式返回 []。"""
    if not p:
        return []
    out = [Fraction(0)] * (max(i for (i,) in p) + 1)
    for (i,), c in p.items():
        out[i] = to_fraction(c)
    return out


def x_constant(p: PolyElement) -> Fraction:
    return to_fraction(p.get(UNIVARIATE_RING.zero_monom, QQ.zero))


class BivariatePolynomial:
    __slots__ = ("_p",)

    def __init__(self, terms: Mapping[Exponent, Scalar] | Iterable[tuple[Exponent, Scalar]] | None = None):
        data: dict[Exponent, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise InvalidInputError(f"指数必须非负: {(i, j)!r}")
            data[(i, j)] = data.get((i, j), Fraction(0)) + Fraction(c)
        self._p = BIVARIATE_RING.from_dict({e: to_qq(c) for e, c in data.items() if c != 0})

    @classmethod
    def wrap(cls, element: PolyElement) -> "BivariatePolynomial":
        if element.ring != BIVARIATE_RING:
            raise InvalidInputError(f"不是 QQ[x, q] 的元素: {element}")
        obj = cls.__new__(cls)
        obj._p = element
        return obj

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls.wrap(BIVARIATE_RING.zero)

    @classmethod
    def one(cls) -> "BivariatePolynomial":
        return cls.wrap(BIVARIATE_RING.one)

    @classmethod
    def constant(cls, c: Scalar) -> "BivariatePolynomial":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = 1) -> "BivariatePolynomial":
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> "BivariatePolynomial":
        return cls.wrap(_XG)

    @classmethod
    def q(cls) -> "BivariatePolynomial":
        return cls.wrap(_QG)

    @classmethod
    def from_x_univariate(cls, p: PolyElement | Sequence[Scalar]) -> "BivariatePolynomial":
        return cls({(i, 0): c for i, c in enumerate(x_coefficients(x_poly(p))) if c != 0})

    @staticmethod
    def coerce(value: "BivariatePolynomial | Scalar") -> "BivariatePolynomial":
        if isinstance(value, BivariatePolynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return BivariatePolynomial.constant(value)
        raise TypeError(f"无法转换为多项式: {type(value)!r}")

    # ------------------------------------------------------------------
    # 访问
    # ------------------------------------------------------------------

    @property
    def element(self) -> PolyElement:
        return self._p

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType({e: to_fraction(c) for e, c in self._p.items()})

    def ordered_terms(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: term_order_key(item[0]))

    def is_zero(self) -> bool:
        return not self._p

    def __bool__(self) -> bool:
        return bool(self._p)

    def __len__(self) -> int:
        return len(self._p)

    def coeff(self, i: int, j: int) -> Fraction:
        return to_fraction(self._p.get((i, j), QQ.zero))

    @property
    def constant_term(self) -> Fraction:
        return self.coeff(0, 0)

    @property
    def deg_x(self) -> int:
        return max((i for i, _ in self._p), default=-1)

    @property
    def deg_q(self) -> int:
        return max((j for _, j in self._p), default=-1)

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self._p), default=-1)

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._p)

    # ------------------------------------------------------------------
    # 运算
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._p == other._p

    def __hash__(self) -> int:
        return hash(self._p)

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial.wrap(-self._p)

    def __add__(self, other: "BivariatePolynomial | Scalar") -> "BivariatePolynomial":
        if not isinstance(other, (BivariatePolynomial, int, Fraction)):
            return NotImplemented
        return BivariatePolynomial.wrap(self._p + BivariatePolynomial.coerce(other)._p)

    __radd__ = __add__

    def __sub__(self, other: "BivariatePolynomial | Scalar") -> "BivariatePolynomial":
        if not isinstance(other, (BivariatePolynomial, int, Fraction)):
            return NotImplemented
        return BivariatePolynomial.wrap(self._p - BivariatePolynomial.coerce(other)._p)

    def __rsub__(self, other: Scalar) -> "BivariatePolynomial":
        return BivariatePolynomial.coerce(other) - self

    def __mul__(self, other: "BivariatePolynomial | Scalar") -> "BivariatePolynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return BivariatePolynomial.wrap(self._p * other._p)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BivariatePolynomial":
        if k < 0:
            raise InvalidInputError("多项式只支持非负整数次幂")
        return BivariatePolynomial.wrap(self._p**k)

    def scale(self, c: Scalar) -> "BivariatePolynomial":
        return BivariatePolynomial.wrap(self._p.mul_ground(to_qq(c)))

    # ------------------------------------------------------------------
    # 代入 / 求导
    # ------------------------------------------------------------------

    def eval(self, x0: Scalar, q0: Scalar) -> Fraction:
        """在有理点 (x0, q0) 精确求值。"""
        x0, q0 = Fraction(x0), Fraction(q0)
        total = Fraction(0)
        for (i, j), c in self._p.items():
            total += to_fraction(c) * (x0**i) * (q0**j)
        return total

    def subs_q(self, q0: Scalar) -> PolyElement:
        """代入 q = q0，得到 QQ[x] 中的多项式。"""
        q0 = Fraction(q0)
        rows: dict[int, Fraction] = {}
        for (i, j), c in self._p.items():
            rows[i] = rows.get(i, Fraction(0)) + to_fraction(c) * q0**j
        return UNIVARIATE_RING.from_dict({(i,): to_qq(c) for i, c in rows.items() if c != 0})

    def diff_q(self) -> "BivariatePolynomial":
        return BivariatePolynomial.wrap(self._p.diff(_QG))

    # ------------------------------------------------------------------
    # 输出
    # ------------------------------------------------------------------

    def to_text(self) -> str:
        return render_terms(self.terms.items())

    def to_json_terms(self) -> list[list]:
        return [[i, j, str(c)] for (i, j), c in self.ordered_terms()]

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self.to_text()!r})"


X = BivariatePolynomial.x()
Q = BivariatePolynomial.q()
ONE = BivariatePolynomial.one()


__all__ = [
    "BivariatePolynomial",
    "Exponent",
    "Scalar",
    "X",
    "Q",
    "ONE",
    "BIVARIATE_RING",
    "UNIVARIATE_RING",
    "UNIVARIATE_X",
    "to_qq",
    "to_fraction",
    "x_poly",
    "x_coefficients",
    "x_constant",
]
