"""Exact truncated Laurent series arithmetic.

One-variable series are dense (a coefficient tuple over a contiguous
exponent window), two-variable series are sparse maps truncated to a
rectangle of exponents.  Coefficients are plain ints or
:class:`fractions.Fraction` values; nothing in this module ever touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction


class ZeroLeadingCoefficient(ArithmeticError):
    """The series is zero through its truncation order and cannot be inverted."""


class UnknownCoefficient(LookupError):
    """A coefficient at or past the truncation order was queried."""


class RectangleMismatch(ValueError):
    """Two-variable operands live on different truncation rectangles."""


def _norm(c):
    # Integral Fractions collapse to ints so integer pipelines stay on the
    # fast native path.  Floats are rejected outright.
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int) and not isinstance(c, bool):
        return c
    raise TypeError(f"exact coefficient expected, got {type(c).__name__}")


def coeff_denominator(c) -> int:
    """Denominator of an exact coefficient (1 for plain ints)."""
    return c.denominator if isinstance(c, Fraction) else 1


class LaurentSeries:
    """A Laurent series known exactly on the exponent window [valuation, trunc).

    ``trunc`` is the exponent of the first *unknown* term.  Querying a
    coefficient at or past it raises :class:`UnknownCoefficient` instead of
    returning zero, so a window that is too short for a computation fails
    loudly rather than silently dropping precision.

    The zero series is the sentinel with an empty coefficient tuple and a
    recorded ``trunc`` (its ``valuation`` equals ``trunc`` by convention).
    Instances are immutable; every operation returns a new series.
    """

    __slots__ = ("valuation", "coeffs", "trunc")

    def __init__(self, coeffs, valuation=0, trunc=None):
        coeffs = [_norm(c) for c in coeffs]
        if trunc is None:
            trunc = valuation + len(coeffs)
        elif trunc != valuation + len(coeffs):
            raise ValueError("coefficients must cover the window [valuation, trunc)")
        lead = 0
        while lead < len(coeffs) and coeffs[lead] == 0:
            lead += 1
        self.coeffs = tuple(coeffs[lead:])
        self.valuation = valuation + lead if self.coeffs else trunc
        self.trunc = trunc

    @classmethod
    def zero(cls, trunc):
        return cls((), trunc, trunc)

    @classmethod
    def constant(cls, value, trunc):
        if trunc <= 0:
            return cls.zero(trunc)
        return cls([value] + [0] * (trunc - 1), 0, trunc)

    @classmethod
    def one(cls, trunc):
        return cls.constant(1, trunc)

    @classmethod
    def monomial(cls, exponent, coeff=1, trunc=None):
        if trunc is None:
            trunc = exponent + 1
        if trunc <= exponent:
            return cls.zero(trunc)
        return cls([coeff] + [0] * (trunc - exponent - 1), exponent, trunc)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, e):
        """Coefficient of q^e; exact zero below the valuation, error at/past trunc."""
        if e >= self.trunc:
            raise UnknownCoefficient(f"exponent {e} is at or past truncation {self.trunc}")
        if e < self.valuation:
            return 0
        return self.coeffs[e - self.valuation]

    __getitem__ = coefficient

    def coefficient_list(self):
        """Known coefficients as a list over [valuation, trunc)."""
        return list(self.coeffs)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentSeries.constant(other, max(self.trunc, 1))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        trunc = min(self.trunc, other.trunc)
        val = min(self.valuation, other.valuation, trunc)
        out = []
        for e in range(val, trunc):
            a = self.coeffs[e - self.valuation] if self.valuation <= e < self.trunc and self.coeffs else 0
            b = other.coeffs[e - other.valuation] if other.valuation <= e < other.trunc and other.coeffs else 0
            out.append(a + b)
        return LaurentSeries(out, val, trunc)

    __radd__ = __add__

    def __neg__(self):
        s = LaurentSeries.zero(self.trunc)
        s.coeffs = tuple(-c for c in self.coeffs)
        s.valuation = self.valuation
        return s

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentSeries.zero(self.trunc)
            return LaurentSeries([c * other for c in self.coeffs], self.valuation, self.trunc)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        av = self.valuation  # equals trunc for the zero series: widest honest window
        bv = other.valuation
        trunc = min(self.trunc + bv, other.trunc + av)
        if self.is_zero or other.is_zero:
            return LaurentSeries.zero(trunc)
        val = av + bv
        width = trunc - val
        out = [0] * width
        a, b = self.coeffs, other.coeffs
        for i, ai in enumerate(a):
            if i >= width:
                break
            if ai == 0:
                continue
            for j in range(min(len(b), width - i)):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return LaurentSeries(out, val, trunc)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)) or scalar == 0:
            raise ValueError("can only divide a series by a nonzero exact scalar")
        return self * (Fraction(1) / Fraction(scalar))

    def inverse(self):
        """Multiplicative inverse on the widest window the input determines.

        Requires a nonzero leading coefficient (a unit times a power of q):
        the result has valuation -v and ``self * self.inverse()`` equals 1 on
        the whole determined window.
        """
        if self.is_zero:
            raise ZeroLeadingCoefficient("series is zero up to its truncation")
        width = self.trunc - self.valuation
        u = self.coeffs
        lead = u[0]
        inv_lead = _norm(Fraction(1) / Fraction(lead))
        out = [0] * width
        out[0] = inv_lead
        for k in range(1, width):
            acc = 0
            top = min(k, len(u) - 1)
            for i in range(1, top + 1):
                ui = u[i]
                if ui:
                    acc += ui * out[k - i]
            if acc:
                out[k] = -acc if lead == 1 else _norm(-Fraction(acc) / Fraction(lead))
        return LaurentSeries(out, -self.valuation, self.trunc - 2 * self.valuation)

    def __pow__(self, e):
        if not isinstance(e, int):
            raise TypeError("series powers must be integers")
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return LaurentSeries.one(self.trunc - self.valuation)
        result = None
        base = self
        while True:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if not e:
                return result
            base = base * base

    # -- window management ---------------------------------------------------

    def shift(self, k):
        """Multiply by q^k (shifts the whole window by k)."""
        s = LaurentSeries.zero(self.trunc + k)
        s.coeffs = self.coeffs
        s.valuation = self.valuation + k if self.coeffs else self.trunc + k
        return s

    def truncate(self, new_trunc):
        """Restrict the known window to exponents below ``new_trunc``."""
        if new_trunc > self.trunc:
            raise ValueError("cannot extend a series window by truncation")
        if new_trunc == self.trunc:
            return self
        if new_trunc <= self.valuation:
            return LaurentSeries.zero(new_trunc)
        return LaurentSeries(self.coeffs[: new_trunc - self.valuation], self.valuation, new_trunc)

    # -- comparisons / display ------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.valuation, self.coeffs, self.trunc) == (other.valuation, other.coeffs, other.trunc)

    def __hash__(self):
        return hash((self.valuation, self.coeffs, self.trunc))

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coeffs[:6]):
            if c == 0:
                continue
            e = self.valuation + i
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*q")
            else:
                parts.append(f"{c}*q^{e}")
        if len(self.coeffs) > 6:
            parts.append("...")
        body = " + ".join(parts) if parts else "0"
        return f"LaurentSeries({body} + O(q^{self.trunc}))"


class BiLaurentSeries:
    """Sparse two-variable Laurent series on a rectangle of exponents.

    ``rect`` is ``(pmin, pmax, qmin, qmax)``; keys of ``terms`` are ``(m, n)``
    for the monomial p^m q^n.  Products falling outside the rectangle are
    discarded: the rectangle is the two-variable truncation window.
    """

    __slots__ = ("terms", "rect")

    def __init__(self, terms, rect):
        pmin, pmax, qmin, qmax = rect
        if pmin > pmax or qmin > qmax:
            raise ValueError("empty truncation rectangle")
        store = {}
        for (m, n), c in terms.items():
            c = _norm(c)
            if c == 0:
                continue
            if not (pmin <= m <= pmax and qmin <= n <= qmax):
                raise ValueError(f"exponent ({m}, {n}) outside rectangle {rect}")
            store[(m, n)] = c
        self.terms = store
        self.rect = (pmin, pmax, qmin, qmax)

    @classmethod
    def constant(cls, value, rect):
        pmin, pmax, qmin, qmax = rect
        if pmin <= 0 <= pmax and qmin <= 0 <= qmax and value != 0:
            return cls({(0, 0): value}, rect)
        return cls({}, rect)

    @classmethod
    def one(cls, rect):
        return cls.constant(1, rect)

    def coefficient(self, m, n):
        pmin, pmax, qmin, qmax = self.rect
        if not (pmin <= m <= pmax and qmin <= n <= qmax):
            raise UnknownCoefficient(f"exponent ({m}, {n}) outside rectangle {self.rect}")
        return self.terms.get((m, n), 0)

    def __add__(self, other):
        if not isinstance(other, BiLaurentSeries):
            return NotImplemented
        if other.rect != self.rect:
            raise RectangleMismatch(f"{self.rect} vs {other.rect}")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiLaurentSeries(out, self.rect)

    def __neg__(self):
        return BiLaurentSeries({k: -c for k, c in self.terms.items()}, self.rect)

    def __sub__(self, other):
        if not isinstance(other, BiLaurentSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiLaurentSeries({k: c * other for k, c in self.terms.items()}, self.rect)
        if not isinstance(other, BiLaurentSeries):
            return NotImplemented
        if other.rect != self.rect:
            raise RectangleMismatch(f"{self.rect} vs {other.rect}")
        pmin, pmax, qmin, qmax = self.rect
        out = {}
        for (m1, n1), c1 in self.terms.items():
            for (m2, n2), c2 in other.terms.items():
                m, n = m1 + m2, n1 + n2
                if pmin <= m <= pmax and qmin <= n <= qmax:
                    key = (m, n)
                    out[key] = out.get(key, 0) + c1 * c2
        return BiLaurentSeries(out, self.rect)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int):
            raise TypeError("series powers must be integers")
        if e < 0:
            raise ValueError("two-variable series only support nonnegative powers")
        result = BiLaurentSeries.one(self.rect)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shifted(self, dp, dq, rect=None):
        """Multiply by p^dp q^dq, optionally rebasing onto a new rectangle."""
        rect = rect if rect is not None else self.rect
        return BiLaurentSeries({(m + dp, n + dq): c for (m, n), c in self.terms.items()}, rect)

    def truncated(self, rect):
        """Restrict to a sub-rectangle, discarding terms outside it."""
        pmin, pmax, qmin, qmax = rect
        spmin, spmax, sqmin, sqmax = self.rect
        if pmin < spmin or pmax > spmax or qmin < sqmin or qmax > sqmax:
            raise ValueError("can only truncate to a sub-rectangle")
        kept = {(m, n): c for (m, n), c in self.terms.items()
                if pmin <= m <= pmax and qmin <= n <= qmax}
        return BiLaurentSeries(kept, rect)

    def transposed(self):
        """Swap the two variables (rectangle is transposed accordingly)."""
        pmin, pmax, qmin, qmax = self.rect
        return BiLaurentSeries({(n, m): c for (m, n), c in self.terms.items()},
                               (qmin, qmax, pmin, pmax))

    def __eq__(self, other):
        if not isinstance(other, BiLaurentSeries):
            return NotImplemented
        return self.rect == other.rect and self.terms == other.terms

    def __hash__(self):
        return hash((self.rect, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        items = sorted(self.terms.items())[:6]
        body = " + ".join(f"{c}*p^{m}*q^{n}" for (m, n), c in items) or "0"
        if len(self.terms) > 6:
            body += " + ..."
        return f"BiLaurentSeries({body} on {self.rect})"
