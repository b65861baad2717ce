"""Sparse exact polynomials in t, u, v and truncated power series.

Coefficients are Python ints or fractions.Fraction values; nothing is
ever rounded. Zero coefficients are never stored, so equality is plain
coefficient-wise dict comparison. All values are immutable in spirit:
every operation returns a fresh object.
"""

from fractions import Fraction


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _grade(key):
    return (key[0] + key[1] + key[2], key[0], key[1], key[2])


class PolyTUV:
    """Polynomial in the three variables t, u, v.

    Terms live in a dict keyed by the exponent triple (e_t, e_u, e_v).
    The canonical term order used for printing and JSON is graded
    lexicographic on that triple.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                et, eu, ev = key
                if et < 0 or eu < 0 or ev < 0:
                    raise ValueError("exponents must be non-negative")
                key = (int(et), int(eu), int(ev))
                c = _norm(data.get(key, 0) + c)
                if c:
                    data[key] = c
                else:
                    data.pop(key, None)
        self.terms = data

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, c):
        return cls({(0, 0, 0): c})

    @classmethod
    def one(cls):
        return cls({(0, 0, 0): 1})

    @classmethod
    def monomial(cls, et, eu, ev, c=1):
        return cls({(et, eu, ev): c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, PolyTUV):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == PolyTUV.constant(other).terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyTUV.constant(other)
        if not isinstance(other, PolyTUV):
            return NotImplemented
        data = dict(self.terms)
        for key, c in other.terms.items():
            s = _norm(data.get(key, 0) + c)
            if s:
                data[key] = s
            else:
                data.pop(key, None)
        out = PolyTUV()
        out.terms = data
        return out

    __radd__ = __add__

    def __neg__(self):
        out = PolyTUV()
        out.terms = {key: -c for key, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyTUV.constant(other)
        if not isinstance(other, PolyTUV):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return PolyTUV()
            out = PolyTUV()
            out.terms = {k: _norm(c * other) for k, c in self.terms.items()}
            return out
        if not isinstance(other, PolyTUV):
            return NotImplemented
        data = {}
        for (a1, a2, a3), c in self.terms.items():
            for (b1, b2, b3), d in other.terms.items():
                key = (a1 + b1, a2 + b2, a3 + b3)
                s = _norm(data.get(key, 0) + c * d)
                if s:
                    data[key] = s
                else:
                    data.pop(key, None)
        out = PolyTUV()
        out.terms = data
        return out

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power")
        result = PolyTUV.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def value_at(self, t, u, v):
        """Evaluate exactly at the given scalar point."""
        total = 0
        for (et, eu, ev), c in self.terms.items():
            total += c * t**et * u**eu * v**ev
        return _norm(total)

    def t_coefficients(self):
        """Coefficient list in t after setting u = v = 1."""
        if not self.terms:
            return [0]
        top = max(key[0] for key in self.terms)
        out = [0] * (top + 1)
        for (et, _, _), c in self.terms.items():
            out[et] = _norm(out[et] + c)
        return out

    def is_integral(self):
        return all(isinstance(c, int) for c in self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: _grade(item[0]))

    def pretty(self):
        if not self.terms:
            return "0"
        parts = []
        for (et, eu, ev), c in self.sorted_terms():
            factors = []
            if c != 1 or (et, eu, ev) == (0, 0, 0):
                factors.append(str(c))
            for name, e in (("t", et), ("u", eu), ("v", ev)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            parts.append("*".join(factors))
        return " + ".join(parts)

    def to_json_obj(self):
        """Canonical JSON form: term list in graded-lex order.

        Coefficients are decimal strings so that arbitrarily large
        integers survive any JSON reader.
        """
        if not self.is_integral():
            raise ValueError("polynomial has non-integer coefficients")
        return [
            {"t": et, "u": eu, "v": ev, "c": str(c)}
            for (et, eu, ev), c in self.sorted_terms()
        ]

    @classmethod
    def from_json_obj(cls, obj):
        return cls([((d["t"], d["u"], d["v"]), int(d["c"])) for d in obj])

    def __repr__(self):
        return "PolyTUV(%s)" % self.pretty()


class SeriesT:
    """Power series in one formal variable, truncated at a fixed order.

    Coefficients may be ints, Fractions, or PolyTUV values; arithmetic
    never leaves the truncation order. Index k holds the coefficient of
    the k-th power.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        coeffs = coeffs[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def constant(cls, c, order):
        return cls([c], order)

    def coefficient(self, k):
        if not 0 <= k <= self.order:
            raise IndexError("coefficient beyond truncation order")
        return self.coeffs[k]

    def _match(self, other):
        if isinstance(other, SeriesT):
            if other.order != self.order:
                raise ValueError("series orders differ")
            return other
        return SeriesT.constant(other, self.order)

    def __add__(self, other):
        other = self._match(other)
        return SeriesT(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._match(other)
        return SeriesT(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __rsub__(self, other):
        other = self._match(other)
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PolyTUV)):
            return SeriesT([c * other for c in self.coeffs], self.order)
        other = self._match(other)
        out = [0] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if isinstance(a, int) and a == 0:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if isinstance(b, int) and b == 0:
                    continue
                out[i + j] = out[i + j] + a * b
        return SeriesT(out, self.order)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power")
        result = SeriesT.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def reciprocal(self):
        """Multiplicative inverse, requires an invertible scalar constant term."""
        c0 = self.coeffs[0]
        if isinstance(c0, PolyTUV) or c0 == 0:
            raise ValueError("constant term must be a nonzero scalar")
        inv0 = Fraction(1, 1) / Fraction(c0)
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = 0
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * out[k - i]
            out.append(-inv0 * acc)
        return SeriesT(out, self.order)

    def __eq__(self, other):
        if not isinstance(other, SeriesT):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def to_json_obj(self):
        """JSON form for scalar series: rationals as "num/den" strings."""
        out = []
        for c in self.coeffs:
            if isinstance(c, PolyTUV):
                raise ValueError("JSON form needs scalar coefficients")
            f = Fraction(c)
            out.append("%d/%d" % (f.numerator, f.denominator))
        return {"order": self.order, "coeffs": out}

    def __repr__(self):
        return "SeriesT(order=%d, %r)" % (self.order, self.coeffs)
