"""Exact arithmetic in the ring of Eisenstein integers and its fraction field.

The ring E = Z[w] with w a primitive cube root of unity (w^2 + w + 1 = 0)
carries everything in this package: lattice vectors, group matrices, scalar
factors of the variable transformations.  All integers are Python ints, so
no overflow is possible.  sqrt(-3) is realised as 1 + 2w.
"""

from __future__ import annotations

from fractions import Fraction


class EisInt:
    """a + b*w with integer a, b and w^2 = -1 - w."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0):
        self.a = a
        self.b = b

    def __repr__(self):
        return f"EisInt({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*w"
        return f"{self.a}{self.b:+}*w"

    def __hash__(self):
        return hash((self.a, self.b))

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __neg__(self):
        return EisInt(-self.a, -self.b)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return EisInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return EisInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        # (a+bw)(c+dw) = ac + (ad+bc)w + bd*w^2,  w^2 = -1-w
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisInt(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers live in CycRat")
        result = EisInt(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "EisInt":
        """Complex conjugate: conj(a+bw) = (a-b) - b*w."""
        return EisInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        """x * conj(x) = a^2 - a*b + b^2 >= 0."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def trace(self) -> int:
        """x + conj(x) = 2a - b."""
        return 2 * self.a - self.b

    def is_unit(self) -> bool:
        return self.norm() == 1

    def divisible_by_sqrt_minus3(self) -> bool:
        return (self.a + self.b) % 3 == 0

    def to_cyc(self) -> "CycRat":
        return CycRat(Fraction(self.a), Fraction(self.b))


def _coerce(x):
    if isinstance(x, EisInt):
        return x
    if isinstance(x, int):
        return EisInt(x, 0)
    return None


ZERO = EisInt(0, 0)
ONE = EisInt(1, 0)
W = EisInt(0, 1)           # primitive cube root of unity
SQRT_MINUS3 = EisInt(1, 2)  # (1+2w)^2 = -3


def units() -> list[EisInt]:
    """The six units of E, listed as the powers (-w)^0 .. (-w)^5."""
    out = []
    x = ONE
    m = -W
    for _ in range(6):
        out.append(x)
        x = x * m
    return out


def reduce_mod3(x: EisInt) -> tuple[int, int]:
    """Canonical representative of x in E/3E as (a mod 3, b mod 3)."""
    return (x.a % 3, x.b % 3)


def reduce_sqrt3(x: EisInt) -> int:
    """Ring homomorphism E -> E/sqrt(-3)E = F_3 sending w to 1."""
    return (x.a + x.b) % 3


class Res3:
    """Element of the nine-element ring E/3E."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int):
        self.a = a % 3
        self.b = b % 3

    @classmethod
    def from_eis(cls, x: EisInt) -> "Res3":
        return cls(x.a, x.b)

    def __repr__(self):
        return f"Res3({self.a}, {self.b})"

    def __hash__(self):
        return hash((self.a, self.b, "res3"))

    def __eq__(self, other):
        return isinstance(other, Res3) and self.a == other.a and self.b == other.b

    def __add__(self, other):
        return Res3(self.a + other.a, self.b + other.b)

    def __neg__(self):
        return Res3(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b, c, d = self.a, self.b, other.a, other.b
        return Res3(a * c - b * d, a * d + b * c - b * d)

    def conj(self) -> "Res3":
        return Res3(self.a - self.b, -self.b)

    def index(self) -> int:
        """Packed index a + 3b in 0..8, used by the group machinery."""
        return self.a + 3 * self.b


class CycRat:
    """Element re + zc*w of Q(w), with exact rational coordinates."""

    __slots__ = ("re", "zc")

    def __init__(self, re=0, zc=0):
        self.re = Fraction(re)
        self.zc = Fraction(zc)

    def __repr__(self):
        return f"CycRat({self.re}, {self.zc})"

    def __str__(self):
        if self.zc == 0:
            return str(self.re)
        if self.re == 0:
            return f"({self.zc})*w"
        return f"({self.re})+({self.zc})*w"

    def __hash__(self):
        return hash((self.re, self.zc, "cyc"))

    def __eq__(self, other):
        other = _coerce_cyc(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.zc == other.zc

    def __bool__(self):
        return self.re != 0 or self.zc != 0

    def __neg__(self):
        return CycRat(-self.re, -self.zc)

    def __add__(self, other):
        other = _coerce_cyc(other)
        if other is None:
            return NotImplemented
        return CycRat(self.re + other.re, self.zc + other.zc)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_cyc(other)
        if other is None:
            return NotImplemented
        return CycRat(self.re - other.re, self.zc - other.zc)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = _coerce_cyc(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.zc, other.re, other.zc
        return CycRat(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def conj(self) -> "CycRat":
        return CycRat(self.re - self.zc, -self.zc)

    def norm(self) -> Fraction:
        return self.re * self.re - self.re * self.zc + self.zc * self.zc

    def inv(self) -> "CycRat":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("CycRat division by zero")
        c = self.conj()
        return CycRat(c.re / n, c.zc / n)

    def __truediv__(self, other):
        other = _coerce_cyc(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return _coerce_cyc(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = CycRat(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_rational(self) -> bool:
        return self.zc == 0

    def is_integral(self) -> bool:
        return self.re.denominator == 1 and self.zc.denominator == 1

    def to_eis(self) -> EisInt:
        if not self.is_integral():
            raise ValueError(f"{self} is not in E")
        return EisInt(int(self.re), int(self.zc))


def _coerce_cyc(x):
    if isinstance(x, CycRat):
        return x
    if isinstance(x, (int, Fraction)):
        return CycRat(Fraction(x))
    if isinstance(x, EisInt):
        return x.to_cyc()
    return None


CYC_ONE = CycRat(1)
CYC_W = CycRat(0, 1)


def sixth_roots() -> list[CycRat]:
    """The six roots of unity in Q(w), canonically the powers of -w."""
    out = []
    x = CYC_ONE
    m = -CYC_W
    for _ in range(6):
        out.append(x)
        x = x * m
    return out


def root_order(eta: CycRat) -> int:
    """Multiplicative order of a sixth root of unity; raises otherwise."""
    x = CycRat(1)
    for k in range(1, 7):
        x = x * eta
        if x == CYC_ONE:
            return k
    raise ValueError(f"{eta} is not a sixth root of unity")
