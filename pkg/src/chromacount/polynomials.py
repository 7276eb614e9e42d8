"""Dense integer polynomials with exact arbitrary-precision arithmetic."""

from __future__ import annotations

from typing import Iterable


class IntPolynomial:
    """Immutable polynomial over the integers in one indeterminate.

    ``coeffs[k]`` is the coefficient of ``t**k``.  Trailing zeros are trimmed,
    so the leading coefficient of a nonzero polynomial is never zero.  All
    arithmetic uses Python ints and is therefore exact at any magnitude.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        """c * t**k"""
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * k + (c,))

    @classmethod
    def variable(cls) -> "IntPolynomial":
        return cls((0, 1))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, v: int) -> int:
        """Exact value at the integer v (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def __call__(self, v: int) -> int:
        return self.evaluate(v)

    def compose_shift(self, delta: int) -> "IntPolynomial":
        """Substitute t -> t + delta, exactly."""
        shift = IntPolynomial((delta, 1))
        acc = IntPolynomial(())
        for c in reversed(self.coeffs):
            acc = acc * shift + IntPolynomial((c,))
        return acc

    def divide_exact_by_linear(self, root: int) -> "IntPolynomial":
        """Exact quotient by (t - root); raises if the remainder is nonzero.

        Synthetic division -- no floating point is involved anywhere.
        """
        if not self.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) - 1)
        acc = 0
        for k in range(len(self.coeffs) - 1, 0, -1):
            acc = acc * root + self.coeffs[k]
            out[k - 1] = acc
        remainder = acc * root + self.coeffs[0]
        if remainder != 0:
            raise ArithmeticError(
                f"division by (t - {root}) leaves remainder {remainder}"
            )
        return IntPolynomial(out)

    def divide_exact_by_power(self, k: int) -> "IntPolynomial":
        """Exact quotient by t**k; raises if any of the low coefficients is nonzero."""
        if k == 0 or not self.coeffs:
            return self
        if any(self.coeffs[:k]):
            raise ArithmeticError(f"not divisible by t^{k}")
        return IntPolynomial(self.coeffs[k:])

    # -- comparisons / display ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == IntPolynomial((other,)).coeffs
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({self.coeffs!r})"

    def pretty(self, var: str = "x") -> str:
        """Human-readable form, highest power first."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                term = str(mag)
            elif k == 1:
                term = f"{var}" if mag == 1 else f"{mag}*{var}"
            else:
                term = f"{var}^{k}" if mag == 1 else f"{mag}*{var}^{k}"
            parts.append((sign, term))
        first_sign, first_term = parts[0]
        text = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def _coerce(value):
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial((value,))
    return NotImplemented


def polynomial_to_json(p: IntPolynomial, var: str) -> dict:
    """JSON form: {"var": "x"|"y", "coeffs": [decimal strings, index = exponent]}."""
    if var not in ("x", "y"):
        raise ValueError("var must be 'x' or 'y'")
    return {"var": var, "coeffs": [str(c) for c in p.coeffs]}


def polynomial_from_json(obj: dict) -> tuple[IntPolynomial, str]:
    var = obj["var"]
    if var not in ("x", "y"):
        raise ValueError("var must be 'x' or 'y'")
    return IntPolynomial(int(c) for c in obj["coeffs"]), var
