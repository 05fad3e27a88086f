"""Scalar rings: exact rationals plus their complex and split-complex
quadratic extensions.

A Scalar is a pair (re, im) of gmpy2 rationals together with a ring tag:

  * "R"  -- im is identically 0
  * "C"  -- i**2 = -1 (a field)
  * "Cs" -- j**2 = +1 (has zero divisors, e.g. (1+j)(1-j) = 0)
"""

from gmpy2 import mpq as Q

_MPQ = type(Q(0))

KINDS = ("R", "C", "Cs")

# sign of the square of the adjoined unit; 0 marks "no unit" for R
_UNIT_SQ = {"R": 0, "C": -1, "Cs": 1}


class Scalar:
    __slots__ = ("kind", "re", "im")

    def __init__(self, kind, re, im=0):
        if kind not in KINDS:
            raise ValueError(f"unknown scalar ring {kind!r}")
        if type(re) is not _MPQ:
            re = Q(re)
        if type(im) is not _MPQ:
            im = Q(im)
        if kind == "R" and im != 0:
            raise ValueError("real scalars have no imaginary part")
        self.kind = kind
        self.re = re
        self.im = im

    # -- ring structure -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.kind != self.kind:
                if other.kind == "R":
                    return Scalar(self.kind, other.re)
                if self.kind == "R":
                    raise TypeError("cannot mix scalar rings")
                raise TypeError(f"cannot mix scalar rings {self.kind} and {other.kind}")
            return other
        return Scalar(self.kind, Q(other))

    def __add__(self, other):
        o = self._coerce(other)
        return Scalar(self.kind, self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Scalar(self.kind, self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return Scalar(self.kind, -self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        s = _UNIT_SQ[self.kind]
        return Scalar(
            self.kind,
            self.re * o.re + s * self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return self * o.inverse()

    def conjugate(self):
        return Scalar(self.kind, self.re, -self.im)

    def sq_abs(self):
        """self * conj(self) as a rational: re^2 - s*im^2."""
        return self.re * self.re - _UNIT_SQ[self.kind] * self.im * self.im

    def inverse(self):
        n = self.sq_abs()
        if n == 0:
            raise ZeroDivisionError(f"scalar {self} is not invertible")
        return Scalar(self.kind, self.re / n, -self.im / n)

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_real(self):
        return self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.kind == other.kind and self.re == other.re and self.im == other.im
        if isinstance(other, (int, type(Q(0)))):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.kind, self.re, self.im))

    # -- io -----------------------------------------------------------------

    def __repr__(self):
        if self.kind == "R" or self.im == 0:
            return str(self.re)
        unit = "i" if self.kind == "C" else "j"
        return f"({self.re}{'+' if self.im >= 0 else ''}{self.im}{unit})"

    def to_json(self):
        if self.kind == "R":
            return str(self.re)
        return [str(self.re), str(self.im)]

    @classmethod
    def from_json(cls, kind, data):
        if kind == "R":
            return cls("R", Q(data))
        re, im = data
        return cls(kind, Q(re), Q(im))


def zero(kind):
    return Scalar(kind, 0)


def one(kind):
    return Scalar(kind, 1)


def unit(kind):
    """The adjoined unit i (for C) or j (for Cs)."""
    if kind == "R":
        raise ValueError("R has no adjoined unit")
    return Scalar(kind, 0, 1)
