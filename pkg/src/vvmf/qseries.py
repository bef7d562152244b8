"""Truncated Puiseux/Laurent series in q with exact cyclotomic coefficients.

A series lives on an exponent grid (1/grid)*Z; ``coeffs[i]`` is the
coefficient of q^((lead+i)/grid) and the expansion is trusted for all
exponents strictly below valid_to/grid.  Every operation tracks validity
conservatively, so truncation can never turn into a silently wrong claim.

All values are immutable and operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PrecisionError
from .exactfield import CycNumber, _coerce

_ZERO = Fraction(0)


def _as_cyc(value) -> CycNumber:
    c = _coerce(value)
    if c is None:
        raise TypeError(f"cannot use {value!r} as a series coefficient")
    return c


@dataclass(frozen=True, eq=False)
class QSeries:
    grid: int
    lead: int
    valid_to: int
    coeffs: tuple[CycNumber, ...]

    # -- construction ------------------------------------------------------

    @staticmethod
    def _make(grid: int, lead: int, valid_to: int, coeffs) -> QSeries:
        """Normalize: trim leading zeros, canonicalize zero, minimize grid."""
        coeffs = [_as_cyc(c).demoted() for c in coeffs]
        if len(coeffs) != valid_to - lead:
            raise ValueError("coefficient count must equal valid_to - lead")
        while coeffs and coeffs[0].is_zero():
            coeffs.pop(0)
            lead += 1
        if not coeffs:
            # Canonical zero on grid 1; keep the (floored) validity bound.
            v = valid_to // grid
            return QSeries(1, v, v, ())
        g = math.gcd(grid, *(lead + i for i, c in enumerate(coeffs) if not c.is_zero()))
        if g > 1:
            new_grid = grid // g
            new_lead = lead // g
            new_valid = valid_to // g
            out = []
            for pos in range(new_lead, new_valid):
                idx = pos * g - lead
                out.append(coeffs[idx] if 0 <= idx < len(coeffs) else CycNumber.zero())
            return QSeries(new_grid, new_lead, new_valid, tuple(out))
        return QSeries(grid, lead, valid_to, tuple(coeffs))

    @staticmethod
    def from_coeffs(coeffs, lead: int = 0, grid: int = 1, valid_to: int | None = None) -> QSeries:
        """Series from explicit coefficients.

        ``lead`` and ``valid_to`` are numerators over ``grid``; by default the
        series is trusted exactly as far as the coefficients reach.
        """
        coeffs = list(coeffs)
        if valid_to is None:
            valid_to = lead + len(coeffs)
        if valid_to < lead + len(coeffs):
            raise ValueError("valid_to cannot cut into the supplied coefficients")
        coeffs += [CycNumber.zero()] * (valid_to - lead - len(coeffs))
        return QSeries._make(grid, lead, valid_to, coeffs)

    @staticmethod
    def zero(valid_to: int = 0, grid: int = 1) -> QSeries:
        return QSeries._make(grid, valid_to, valid_to, ())

    @staticmethod
    def constant(value, valid_to: int) -> QSeries:
        return QSeries.from_coeffs([value], lead=0, grid=1, valid_to=valid_to)

    @staticmethod
    def monomial(value, num: int, den: int = 1, valid_steps: int = 1) -> QSeries:
        """value * q^(num/den), trusted for ``valid_steps`` grid steps past it."""
        return QSeries.from_coeffs([value], lead=num, grid=den,
                                   valid_to=num + max(1, valid_steps))

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> Fraction:
        """Lowest exponent; the pole order at q=0 is max(0, -valuation)."""
        if self.is_zero():
            raise ValueError("valuation of zero is undefined")
        return Fraction(self.lead, self.grid)

    def pole_order(self) -> Fraction:
        """Order of the pole at q=0: -valuation when negative, else 0."""
        v = self.valuation()
        return -v if v < 0 else Fraction(0)

    def valid_exponent(self) -> Fraction:
        """The expansion is trusted for exponents strictly below this."""
        return Fraction(self.valid_to, self.grid)

    def coefficient(self, exponent) -> CycNumber:
        """Exact coefficient of q^exponent; refuses exponents past validity."""
        e = Fraction(exponent)
        if e >= self.valid_exponent():
            raise PrecisionError(
                f"coefficient of q^{e} lies outside the validity window "
                f"(< {self.valid_exponent()})"
            )
        num = e * self.grid
        if num.denominator != 1:
            return CycNumber.zero()
        idx = int(num) - self.lead
        if 0 <= idx < len(self.coeffs):
            return self.coeffs[idx]
        return CycNumber.zero()

    def leading_coefficient(self) -> CycNumber:
        if self.is_zero():
            raise ValueError("zero series has no leading coefficient")
        return self.coeffs[0]

    # -- grid handling ------------------------------------------------------

    def regrid(self, grid: int) -> QSeries:
        """Refine onto a multiple of the current grid (lossless)."""
        if grid % self.grid != 0:
            raise ValueError(f"{grid} is not a multiple of grid {self.grid}")
        m = grid // self.grid
        if m == 1:
            return self
        out = [CycNumber.zero()] * (len(self.coeffs) * m)
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        # Dodge _make's re-minimization: the refined form is requested as is.
        return QSeries(grid, self.lead * m, self.valid_to * m, tuple(out))

    def _common(self, other: QSeries) -> tuple[QSeries, QSeries]:
        g = math.lcm(self.grid, other.grid)
        return self.regrid(g), other.regrid(g)

    def shift(self, num: int, den: int = 1) -> QSeries:
        """Multiply by the exact monomial q^(num/den)."""
        g = math.lcm(self.grid, den)
        s = self.regrid(g)
        d = num * (g // den)
        return QSeries._make(g, s.lead + d, s.valid_to + d, list(s.coeffs))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            return self._add_scalar(_as_cyc(other))
        if not isinstance(other, QSeries):
            return NotImplemented
        a, b = self._common(other)
        valid = min(a.valid_to, b.valid_to)
        lo = min(a.lead, b.lead, valid)
        out = [CycNumber.zero()] * (valid - lo)
        for i, c in enumerate(a.coeffs):
            pos = a.lead + i - lo
            if 0 <= pos < len(out):
                out[pos] = out[pos] + c
        for i, c in enumerate(b.coeffs):
            pos = b.lead + i - lo
            if 0 <= pos < len(out):
                out[pos] = out[pos] + c
        return QSeries._make(a.grid, lo, valid, out)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.grid, self.lead, self.valid_to,
                       tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            return self._add_scalar(-_as_cyc(other))
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _add_scalar(self, c: CycNumber) -> QSeries:
        if c.is_zero():
            return self
        if self.valid_to <= 0:
            # The constant sits at exponent 0, outside the trusted window.
            return self
        lo = min(self.lead, 0)
        out = [CycNumber.zero()] * (self.valid_to - lo)
        for i, v in enumerate(self.coeffs):
            out[self.lead + i - lo] = v
        out[-lo] = out[-lo] + c
        return QSeries._make(self.grid, lo, self.valid_to, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            c = _as_cyc(other)
            if c.is_zero():
                return QSeries.zero(self.valid_to, self.grid)
            return QSeries._make(self.grid, self.lead, self.valid_to,
                                 [v * c for v in self.coeffs])
        if not isinstance(other, QSeries):
            return NotImplemented
        a, b = self._common(other)
        valid = min(a.valid_to + b.lead, b.valid_to + a.lead)
        lead = a.lead + b.lead
        n_out = valid - lead
        if n_out <= 0 or a.is_zero() or b.is_zero():
            return QSeries.zero(valid, a.grid)
        out = _convolve(list(a.coeffs), list(b.coeffs), n_out)
        return QSeries._make(a.grid, lead, valid, out)

    __rmul__ = __mul__

    def inverse(self) -> QSeries:
        """Multiplicative inverse of a series with a nonzero lead."""
        if self.is_zero():
            raise ZeroDivisionError("division by (truncated) zero series")
        one = [CycNumber.one()]
        out = _quotient(one, list(self.coeffs), len(self.coeffs))
        return QSeries._make(self.grid, -self.lead,
                             self.valid_to - 2 * self.lead, out)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            return self * _as_cyc(other).inverse()
        if not isinstance(other, QSeries):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by (truncated) zero series")
        a, b = self._common(other)
        if a.is_zero():
            return QSeries.zero(min(a.valid_to - b.lead,
                                    b.valid_to + a.lead - 2 * b.lead), a.grid)
        lead = a.lead - b.lead
        n_out = min(a.valid_to - a.lead, b.valid_to - b.lead)
        out = _quotient(list(a.coeffs), list(b.coeffs), n_out)
        return QSeries._make(a.grid, lead, lead + n_out, out)

    def __pow__(self, k: int) -> QSeries:
        if not isinstance(k, int):
            raise TypeError("series exponents must be integers")
        if k == 0:
            steps = max(1, self.valid_to - self.lead)
            return QSeries.constant(1, steps)
        base = self.inverse() if k < 0 else self
        k = abs(k)
        result = None
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparisons ---------------------------------------------------------

    def agrees_with(self, other: QSeries, min_steps: int = 1) -> bool:
        """Exact equality on the intersection of the validity windows.

        Raises PrecisionError when the shared window stops short of the lead
        of a nonzero side, i.e. when the comparison would be vacuous: a pass
        that never saw a potentially-nonzero coefficient proves nothing.
        """
        a, b = self._common(other)
        valid = min(a.valid_to, b.valid_to)
        leads = [s.lead for s in (a, b) if not s.is_zero()]
        if leads and valid - min(leads) < min_steps:
            raise PrecisionError(
                "comparison window is empty at this order; increase the order"
            )
        return (a - b).is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self.grid, self.lead, self.valid_to) == (other.grid, other.lead, other.valid_to) \
            and all(x == y for x, y in zip(self.coeffs, other.coeffs))

    __hash__ = None

    # -- display and wire format ----------------------------------------------

    def _exp_str(self, num: int) -> str:
        e = Fraction(num, self.grid)
        if e == 0:
            return ""
        if e == 1:
            return "q"
        if e.denominator == 1:
            return f"q^{e.numerator}"
        return f"q^({e})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            qpart = self._exp_str(self.lead + i)
            if not qpart:
                parts.append(str(c) if c.is_rational() else f"({c})")
            elif c == 1:
                parts.append(qpart)
            elif c == -1:
                parts.append(f"-{qpart}")
            elif c.is_rational():
                parts.append(f"{c.as_rational()}*{qpart}")
            else:
                parts.append(f"({c})*{qpart}")
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def factored_str(self) -> str:
        """Rendering with the lead power pulled out: q^(a/D)*(c0 + c1*q^(1/D) + ...)."""
        if self.is_zero():
            return "0"
        inner = self.shift(-self.lead, self.grid)
        head = self._exp_str(self.lead)
        return f"{head}*({inner})" if head else str(inner)

    def __repr__(self) -> str:
        return (f"QSeries(grid={self.grid}, lead={self.lead}, "
                f"valid_to={self.valid_to}, {self})")

    def to_record(self) -> dict:
        return {
            "grid": self.grid,
            "lead": self.lead,
            "valid_to": self.valid_to,
            "coeffs": [c.to_record() for c in self.coeffs],
        }

    @staticmethod
    def from_record(record: dict) -> QSeries:
        coeffs = [CycNumber.from_record(r) for r in record["coeffs"]]
        return QSeries._make(int(record["grid"]), int(record["lead"]),
                             int(record["valid_to"]), coeffs)


def _raw_rationals(coeffs: list[CycNumber]) -> list[Fraction] | None:
    out = []
    for c in coeffs:
        if c.order != 1:
            return None
        out.append(c.coeffs[0])
    return out


def _convolve(a: list[CycNumber], b: list[CycNumber], n_out: int) -> list[CycNumber]:
    """First n_out coefficients of the product of two dense coefficient lists."""
    ra = _raw_rationals(a)
    rb = _raw_rationals(b)
    if ra is not None and rb is not None:
        if all(f.denominator == 1 for f in ra) and all(f.denominator == 1 for f in rb):
            ia = [f.numerator for f in ra]
            ib = [f.numerator for f in rb]
            out = [0] * n_out
            for i, ai in enumerate(ia):
                if ai and i < n_out:
                    stop = min(len(ib), n_out - i)
                    for j in range(stop):
                        bj = ib[j]
                        if bj:
                            out[i + j] += ai * bj
            return [CycNumber(1, (Fraction(v),)) for v in out]
        outf = [_ZERO] * n_out
        for i, ai in enumerate(ra):
            if ai and i < n_out:
                stop = min(len(rb), n_out - i)
                for j in range(stop):
                    bj = rb[j]
                    if bj:
                        outf[i + j] += ai * bj
        return [CycNumber(1, (v,)) for v in outf]
    out = [CycNumber.zero()] * n_out
    for i, ai in enumerate(a):
        if not ai.is_zero() and i < n_out:
            stop = min(len(b), n_out - i)
            for j in range(stop):
                bj = b[j]
                if not bj.is_zero():
                    out[i + j] = out[i + j] + ai * bj
    return out


def _quotient(a: list[CycNumber], b: list[CycNumber], n_out: int) -> list[CycNumber]:
    """First n_out coefficients of a/b for dense lists with b[0] != 0."""
    ra = _raw_rationals(a)
    rb = _raw_rationals(b)
    if ra is not None and rb is not None:
        ints_ok = all(f.denominator == 1 for f in ra) and all(f.denominator == 1 for f in rb)
        if ints_ok and rb[0].numerator in (1, -1):
            ia = [f.numerator for f in ra]
            ib = [f.numerator for f in rb]
            b0 = ib[0]
            out = [0] * n_out
            for k in range(n_out):
                acc = ia[k] if k < len(ia) else 0
                for i in range(1, min(k, len(ib) - 1) + 1):
                    if ib[i]:
                        qv = out[k - i]
                        if qv:
                            acc -= qv * ib[i]
                out[k] = acc * b0
            return [CycNumber(1, (Fraction(v),)) for v in out]
        inv0 = Fraction(1) / rb[0]
        outf = [_ZERO] * n_out
        for k in range(n_out):
            acc = ra[k] if k < len(ra) else _ZERO
            for i in range(1, min(k, len(rb) - 1) + 1):
                if rb[i]:
                    qv = outf[k - i]
                    if qv:
                        acc -= qv * rb[i]
            outf[k] = acc * inv0
        return [CycNumber(1, (v,)) for v in outf]
    inv0 = b[0].inverse()
    out = [CycNumber.zero()] * n_out
    for k in range(n_out):
        acc = a[k] if k < len(a) else CycNumber.zero()
        for i in range(1, min(k, len(b) - 1) + 1):
            qv = out[k - i]
            if not qv.is_zero() and not b[i].is_zero():
                acc = acc - qv * b[i]
        out[k] = acc * inv0
    return out
