"""Capped-absolute-precision arithmetic over Q_p.

An element is stored as p^val * unit known modulo p^prec ("absolute
precision prec"): additions keep the minimum of the absolute precisions,
multiplications the minimum of the relative ones.  Zero carries only its
precision O(p^prec).  All values are immutable; operations return new
objects, so instances can be shared freely between threads.

The module also provides Laurent series with a truncation order and
matrices with valuation-pivoted elimination, which is where the loss
bounded by ord_p(det) comes from.
"""

from __future__ import annotations

import math
from fractions import Fraction


class DomainError(ValueError):
    """A mathematically invalid request (log of 0, sqrt of a non-square, ...)."""


class PrecisionError(ArithmeticError):
    """The requested result is not determined at the available precision."""


def _vp(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class PadicNumber:
    """Element of Q_p known modulo p^prec.

    Invariants: for nonzero values, 0 < unit < p^(prec - val) with
    unit % p != 0; zero is represented by unit == 0 (val is then the
    precision itself, playing the role of +infinity capped at prec).
    """

    __slots__ = ("p", "val", "unit", "prec")

    def __init__(self, p: int, val: int, unit: int, prec: int):
        # Normalizing constructor: accepts any integer `unit` for p^val*unit.
        if unit:
            rel = prec - val
            if rel <= 0:
                unit = 0
            else:
                unit %= p ** rel
                if unit == 0:
                    pass
                else:
                    shift = _vp(unit, p)
                    if shift:
                        val += shift
                        unit //= p ** shift
                        unit %= p ** max(prec - val, 0)
                    if val >= prec:
                        unit = 0
        self.p = p
        self.unit = unit
        self.val = prec if unit == 0 else val
        self.prec = prec

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_int(cls, p: int, n: int, prec: int) -> "PadicNumber":
        return cls(p, 0, n, prec)

    @classmethod
    def from_rational(cls, p: int, q, prec: int) -> "PadicNumber":
        q = Fraction(q)
        if q == 0:
            return cls.zero(p, prec)
        num, den = q.numerator, q.denominator
        vn = _vp(num, p) if num % p == 0 else 0
        vd = _vp(den, p) if den % p == 0 else 0
        num //= p ** vn
        den //= p ** vd
        val = vn - vd
        rel = prec - val
        if rel <= 0:
            return cls.zero(p, prec)
        mod = p ** rel
        return cls(p, val, num * pow(den, -1, mod), prec)

    @classmethod
    def zero(cls, p: int, prec: int) -> "PadicNumber":
        return cls(p, prec, 0, prec)

    @classmethod
    def one(cls, p: int, prec: int) -> "PadicNumber":
        return cls(p, 0, 1, prec)

    # -- basic queries ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.unit == 0

    @property
    def relprec(self) -> int:
        return self.prec - self.val if self.unit else 0

    def digits(self) -> list:
        """Base-p digits of the unit part, lowest first."""
        out = []
        u, p = self.unit, self.p
        for _ in range(self.relprec):
            u, d = divmod(u, p)
            out.append(d)
        return out

    def digit(self, k: int) -> int:
        """Digit of p^k in the expansion (k must be < prec)."""
        if k >= self.prec:
            raise PrecisionError(f"digit p^{k} beyond precision O(p^{self.prec})")
        if self.unit == 0 or k < self.val:
            return 0
        return (self.unit // self.p ** (k - self.val)) % self.p

    def residue(self) -> int:
        """Reduction mod p; requires val >= 0."""
        if self.unit == 0:
            return 0
        if self.val < 0:
            raise DomainError("residue of an element of negative valuation")
        return self.unit % self.p if self.val == 0 else 0

    def lift(self) -> int:
        """Integer representative p^val*unit (val >= 0 required)."""
        if self.unit == 0:
            return 0
        if self.val < 0:
            raise DomainError("no integer lift: negative valuation")
        return self.unit * self.p ** self.val

    def as_fraction(self) -> Fraction:
        if self.unit == 0:
            return Fraction(0)
        return Fraction(self.unit * self.p ** max(self.val, 0), self.p ** max(-self.val, 0))

    def cap(self, prec: int) -> "PadicNumber":
        """Reduce the absolute precision to at most `prec`."""
        if prec >= self.prec:
            return self
        if self.unit == 0 or self.val >= prec:
            return PadicNumber.zero(self.p, prec)
        return PadicNumber(self.p, self.val, self.unit, prec)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PadicNumber):
            return other
        if isinstance(other, int):
            return PadicNumber.from_int(self.p, other, self.prec)
        if isinstance(other, Fraction):
            return PadicNumber.from_rational(self.p, other, self.prec)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.p
        n = min(self.prec, other.prec)
        if self.unit == 0:
            return other.cap(n)
        if other.unit == 0:
            return self.cap(n)
        v = min(self.val, other.val)
        rel = n - v
        if rel <= 0:
            return PadicNumber.zero(p, n)
        s = self.unit * p ** (self.val - v) + other.unit * p ** (other.val - v)
        return PadicNumber(p, v, s, n)

    __radd__ = __add__

    def __neg__(self):
        if self.unit == 0:
            return self
        return PadicNumber(self.p, self.val, self.p ** self.relprec - self.unit, self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.p
        if self.unit == 0 or other.unit == 0:
            # O(p^Na) * (p^vb u) = O(p^(Na+vb)); val of a zero is its prec.
            return PadicNumber.zero(p, self.val + other.val)
        rel = min(self.relprec, other.relprec)
        v = self.val + other.val
        u = self.unit * other.unit % p ** rel
        return PadicNumber(p, v, u, v + rel)

    __rmul__ = __mul__

    def inverse(self) -> "PadicNumber":
        if self.unit == 0:
            raise PrecisionError("inverting a p-adic zero O(p^%d)" % self.prec)
        rel = self.relprec
        u = pow(self.unit, -1, self.p ** rel)
        return PadicNumber(self.p, -self.val, u, -self.val + rel)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.unit == 0:
            raise PrecisionError("division by p-adic zero O(p^%d)" % other.prec)
        if self.unit == 0:
            return PadicNumber.zero(self.p, self.prec - other.val)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = PadicNumber.one(self.p, self.prec + abs(e) * max(self.val, 0) + 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k: int) -> "PadicNumber":
        """Multiply by p^k (exact)."""
        if self.unit == 0:
            return PadicNumber.zero(self.p, self.prec + k)
        return PadicNumber(self.p, self.val + k, self.unit, self.prec + k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    # -- output ------------------------------------------------------------

    def __str__(self):
        if self.unit == 0:
            return f"O({self.p}^{self.prec})"
        parts = []
        for i, d in enumerate(self.digits()):
            if d == 0:
                continue
            e = self.val + i
            if e == 0:
                parts.append(f"{d}")
            elif e == 1:
                parts.append(f"{d}*{self.p}")
            else:
                parts.append(f"{d}*{self.p}^{e}")
        parts.append(f"O({self.p}^{self.prec})")
        return " + ".join(parts)

    def __repr__(self):
        return f"PadicNumber({self})"

    def to_json(self) -> dict:
        if self.unit == 0:
            return {"val": None, "digits": [], "prec": self.prec}
        return {"val": self.val, "digits": self.digits(), "prec": self.prec}

    @classmethod
    def from_json(cls, p: int, obj: dict) -> "PadicNumber":
        if obj["val"] is None:
            return cls.zero(p, obj["prec"])
        u = 0
        for d in reversed(obj["digits"]):
            u = u * p + d
        return cls(p, obj["val"], u, obj["prec"])


# -- special functions ------------------------------------------------------


def teichmuller(x: PadicNumber) -> PadicNumber:
    """The (p-1)-st root of unity congruent to x mod p (val(x) = 0 required)."""
    if x.is_zero or x.val != 0:
        raise DomainError("teichmuller lift needs a unit")
    p, n = x.p, x.prec
    mod = p ** n
    z = x.unit % mod
    # x -> x^p contracts toward the Teichmuller fixed point, one digit a step.
    for _ in range(n + 1):
        znew = pow(z, p, mod)
        if znew == z:
            break
        z = znew
    return PadicNumber(p, 0, z, n)


def hensel_sqrt(a: PadicNumber, sign_hint: int | None = None) -> PadicNumber:
    """Square root of a with even valuation; chooses the root = sign_hint mod p.

    sign_hint is a residue class mod p, defaulting to the smaller
    nonnegative representative among the two mod-p roots.
    """
    if a.is_zero:
        raise PrecisionError("sqrt of p-adic zero: sign undetermined")
    if a.val % 2:
        raise DomainError("sqrt of odd valuation")
    p, n = a.p, a.prec
    rel = a.relprec
    u0 = a.unit % p
    # Euler criterion on the unit part.
    if pow(u0, (p - 1) // 2, p) != 1:
        raise DomainError("no square root: unit part is a non-residue mod p")
    r = pow(u0, (p + 1) // 4, p) if p % 4 == 3 else _tonelli(u0, p)
    if sign_hint is not None:
        if (sign_hint - r) % p == 0:
            pass
        elif (sign_hint + r) % p == 0:
            r = p - r
        else:
            raise DomainError("sign_hint is not a mod-p square root of a")
    else:
        r = min(r, p - r)
    mod = p ** rel
    s = r
    known = 1
    inv2 = pow(2, -1, mod)
    while known < rel:
        known = min(2 * known, rel)
        m = p ** known
        s = (s + a.unit * pow(s, -1, m)) * inv2 % m
    return PadicNumber(p, a.val // 2, s, a.val // 2 + rel)


def _tonelli(n: int, p: int) -> int:
    # Tonelli-Shanks mod p, p odd, n a QR.
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def log_iwasawa(x: PadicNumber) -> PadicNumber:
    """Iwasawa branch of log_p: log_p(p) = 0, Teichmuller part killed.

    log is 1-Lipschitz on units, so the result is good to the full input
    precision; internally we lift a few guard digits to absorb the series
    denominators.
    """
    if x.is_zero:
        raise DomainError("log of zero")
    p, n = x.p, x.relprec  # log is determined by the unit part's digits
    guard = _flog(p, 4 * (n + 2)) + 2
    work = n + guard
    mod = p ** work
    u = x.unit % mod  # any lift of the unit part; Lipschitz makes the choice harmless
    tz = PadicNumber(p, 0, u, work)
    zeta = teichmuller(tz)
    u1 = u * pow(zeta.unit, -1, mod) % mod  # 1-unit part
    z = u1 - 1
    if z == 0:
        return PadicNumber.zero(p, n)
    acc = PadicNumber.zero(p, work)
    term = PadicNumber(p, 0, 1, work)
    zp = PadicNumber(p, 0, z, work)
    k = 1
    while True:
        term = term * zp
        if term.is_zero:
            break
        contrib = term / PadicNumber.from_int(p, k, work)
        if k % 2 == 0:
            contrib = -contrib
        acc = acc + contrib
        k += 1
        if k > 4 * work:
            break
    return acc.cap(n)


def _flog(p: int, x: int) -> int:
    return max(0, math.floor(math.log(x) / math.log(p)))


# -- Laurent series ---------------------------------------------------------


class PadicSeries:
    """Laurent series sum c_e t^e, e = low..order-1, over PadicNumber.

    Coefficients at exponents >= order are unknown (O(t^order)); the
    residue is the coefficient of t^(-1).
    """

    __slots__ = ("var", "p", "low", "coeffs", "order")

    def __init__(self, var: str, p: int, low: int, coeffs: list, order: int):
        # trim exact leading/trailing zeros but keep interval semantics
        while coeffs and coeffs[0].unit == 0 and coeffs[0].prec >= 10 ** 9:
            coeffs = coeffs[1:]
            low += 1
        if low + len(coeffs) > order:
            coeffs = coeffs[: order - low]
        self.var = var
        self.p = p
        self.low = low
        self.coeffs = coeffs
        self.order = order

    @classmethod
    def zero(cls, var: str, p: int, order: int) -> "PadicSeries":
        return cls(var, p, 0, [], order)

    @classmethod
    def from_coeffs(cls, var: str, p: int, pairs, order: int) -> "PadicSeries":
        """pairs: iterable of (exponent, PadicNumber)."""
        pairs = sorted(pairs, key=lambda t: t[0])
        if not pairs:
            return cls.zero(var, p, order)
        low = pairs[0][0]
        hi = pairs[-1][0]
        coeffs = [None] * (hi - low + 1)
        for e, c in pairs:
            coeffs[e - low] = c
        zero = _exact_zero(p)
        coeffs = [c if c is not None else zero for c in coeffs]
        return cls(var, p, low, coeffs, order)

    def coefficient(self, e: int) -> PadicNumber:
        if e >= self.order:
            raise PrecisionError(f"coefficient t^{e} beyond series order {self.order}")
        if e < self.low or e - self.low >= len(self.coeffs):
            return _exact_zero(self.p)
        return self.coeffs[e - self.low]

    def residue(self) -> PadicNumber:
        if self.order < 0:
            raise PrecisionError("series order too small to see t^-1")
        return self.coefficient(-1)

    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def __add__(self, other):
        assert self.p == other.p
        order = min(self.order, other.order)
        low = min(self.low, other.low)
        hi = max(self.low + len(self.coeffs), other.low + len(other.coeffs))
        hi = min(hi, order)
        zero = _exact_zero(self.p)
        out = []
        for e in range(low, hi):
            out.append(self.coefficient(e) + other.coefficient(e))
        return PadicSeries(self.var, self.p, low, out, order)

    def __neg__(self):
        return PadicSeries(self.var, self.p, self.low, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PadicNumber):
            return self.scale(other)
        assert self.p == other.p
        # truncation: unknown tails limit the product order
        order = min(self.order + other.low, other.order + self.low)
        low = self.low + other.low
        n = order - low
        if n <= 0 or not self.coeffs or not other.coeffs:
            return PadicSeries.zero(self.var, self.p, order)
        zero = _exact_zero(self.p)
        out = [zero] * n
        for i, a in enumerate(self.coeffs):
            if a.unit == 0 and a.prec >= 10 ** 9:
                continue
            for j, b in enumerate(other.coeffs):
                k = i + j
                if k >= n:
                    break
                out[k] = out[k] + a * b
        return PadicSeries(self.var, self.p, low, out, order)

    def scale(self, c: PadicNumber) -> "PadicSeries":
        return PadicSeries(self.var, self.p, self.low, [c * a for a in self.coeffs], self.order)

    def shift(self, k: int) -> "PadicSeries":
        """Multiply by t^k."""
        return PadicSeries(self.var, self.p, self.low + k, list(self.coeffs), self.order + k)

    def derivative(self) -> "PadicSeries":
        out = []
        for i, c in enumerate(self.coeffs):
            e = self.low + i
            out.append(c * e)
        return PadicSeries(self.var, self.p, self.low - 1, out, self.order - 1)

    def antiderivative(self) -> "PadicSeries":
        """Termwise integral with zero constant term; fails on a nonzero residue."""
        res = self.coefficient(-1) if self.low <= -1 < self.order else None
        if res is not None and not res.is_zero:
            raise DomainError("log term required: series has nonzero residue")
        pairs = []
        for i, c in enumerate(self.coeffs):
            e = self.low + i
            if e == -1:
                continue
            pairs.append((e + 1, c / PadicNumber.from_int(self.p, e + 1, c.prec + 2 * _flog(self.p, abs(e + 1) + 1) + 2)))
        return PadicSeries.from_coeffs(self.var, self.p, pairs, self.order + 1)

    def inverse(self) -> "PadicSeries":
        """Inverse of a series whose lowest coefficient is a unit."""
        if not self.coeffs or self.coeffs[0].is_zero:
            raise DomainError("series inverse needs a nonzero leading coefficient")
        a0 = self.coeffs[0]
        n = self.order - self.low
        inv0 = a0.inverse()
        out = [inv0]
        for k in range(1, n):
            s = None
            for j in range(1, min(k, len(self.coeffs) - 1) + 1):
                t = self.coeffs[j] * out[k - j]
                s = t if s is None else s + t
            out.append(-inv0 * s if s is not None else _exact_zero(self.p))
        return PadicSeries(self.var, self.p, -self.low, out, self.order - 2 * self.low)

    def sqrt(self, root0: PadicNumber) -> "PadicSeries":
        """Square root with prescribed constant-term root (low must be 0)."""
        if self.low != 0 or not self.coeffs:
            raise DomainError("series sqrt expects lowest exponent 0")
        if not (root0 * root0 - self.coeffs[0]).is_zero:
            raise DomainError("root0^2 does not match the constant term")
        n = self.order
        out = [root0]
        inv2r = (root0 + root0).inverse()
        for k in range(1, n):
            s = self.coefficient(k)
            for j in range(1, k):
                s = s - out[j] * out[k - j]
            out.append(s * inv2r)
        return PadicSeries(self.var, self.p, 0, out, n)

    def evaluate(self, t: PadicNumber) -> PadicNumber:
        """Evaluate at t; requires val(t) >= 1 so the tail t^order is negligible."""
        if t.is_zero or t.val < 1:
            raise DomainError("series evaluation needs val(t) >= 1")
        acc = PadicNumber.zero(self.p, 10 ** 9)
        # Horner from the top, then multiply by t^low
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc * t ** self.low if self.low else acc

    def map_coeffs(self, fn) -> "PadicSeries":
        return PadicSeries(self.var, self.p, self.low, [fn(c) for c in self.coeffs], self.order)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            terms.append(f"({c})*{self.var}^{self.low + i}")
        terms.append(f"O({self.var}^{self.order})")
        return " + ".join(terms)


def _exact_zero(p: int) -> PadicNumber:
    return PadicNumber.zero(p, 10 ** 9)


def formal_antiderivative(s: PadicSeries) -> PadicSeries:
    """Termwise antiderivative with zero constant; see PadicSeries.antiderivative."""
    return s.antiderivative()


# -- matrices ----------------------------------------------------------------


class PadicMatrix:
    """Dense matrix over PadicNumber with valuation-pivoted elimination."""

    __slots__ = ("p", "rows", "nrows", "ncols")

    def __init__(self, p: int, rows: list):
        self.p = p
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0

    @classmethod
    def identity(cls, p: int, n: int, prec: int) -> "PadicMatrix":
        one = PadicNumber.one(p, prec)
        zero = PadicNumber.zero(p, prec)
        return cls(p, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, p: int, nrows: int, ncols: int, prec: int) -> "PadicMatrix":
        zero = PadicNumber.zero(p, prec)
        return cls(p, [[zero] * ncols for _ in range(nrows)])

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def column(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def transpose(self) -> "PadicMatrix":
        return PadicMatrix(self.p, [list(c) for c in zip(*self.rows)])

    def __add__(self, other):
        return PadicMatrix(self.p, [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return PadicMatrix(self.p, [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if isinstance(other, PadicNumber):
            return PadicMatrix(self.p, [[a * other for a in r] for r in self.rows])
        assert self.ncols == other.nrows
        bt = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in bt:
                s = r[0] * c[0]
                for a, b in zip(r[1:], c[1:]):
                    s = s + a * b
                row.append(s)
            out.append(row)
        return PadicMatrix(self.p, out)

    def scale(self, c: PadicNumber) -> "PadicMatrix":
        return self * c

    def __pow__(self, e: int):
        assert self.nrows == self.ncols and e >= 0
        prec = max(a.prec for r in self.rows for a in r)
        result = PadicMatrix.identity(self.p, self.nrows, prec)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def hstack(self, other: "PadicMatrix") -> "PadicMatrix":
        return PadicMatrix(self.p, [ra + rb for ra, rb in zip(self.rows, other.rows)])

    def _pivot(self, rows, col, start):
        """Row index >= start minimizing valuation in `col`; ties to lowest index."""
        best, bestval = None, None
        for i in range(start, len(rows)):
            a = rows[i][col]
            if a.is_zero:
                continue
            if bestval is None or a.val < bestval:
                best, bestval = i, a.val
        return best

    def det(self) -> PadicNumber:
        assert self.nrows == self.ncols
        n = self.nrows
        rows = [list(r) for r in self.rows]
        det = PadicNumber.one(self.p, max(a.prec for r in rows for a in r))
        sign = 1
        for c in range(n):
            piv = self._pivot(rows, c, c)
            if piv is None:
                return PadicNumber.zero(self.p, min(a.prec for r in rows for a in r))
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                sign = -sign
            det = det * rows[c][c]
            inv = rows[c][c].inverse()
            for i in range(c + 1, n):
                if rows[i][c].is_zero:
                    continue
                f = rows[i][c] * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
        return det if sign == 1 else -det

    def solve(self, b: "PadicMatrix") -> "PadicMatrix":
        """Solve A x = b; raises PrecisionError when det is indistinguishable from 0."""
        assert self.nrows == self.ncols == b.nrows
        n = self.nrows
        aug = [list(ra) + list(rb) for ra, rb in zip(self.rows, b.rows)]
        for c in range(n):
            piv = self._pivot(aug, c, c)
            if piv is None:
                raise PrecisionError("precision exhausted: pivot indistinguishable from zero")
            if piv != c:
                aug[c], aug[piv] = aug[piv], aug[c]
            inv = aug[c][c].inverse()
            aug[c] = [a * inv for a in aug[c]]
            for i in range(n):
                if i == c or aug[i][c].is_zero:
                    continue
                f = aug[i][c]
                aug[i] = [a - f * bb for a, bb in zip(aug[i], aug[c])]
        return PadicMatrix(self.p, [row[n:] for row in aug])

    def inverse(self) -> "PadicMatrix":
        prec = max(a.prec for r in self.rows for a in r)
        return self.solve(PadicMatrix.identity(self.p, self.nrows, prec))

    def charpoly(self) -> list:
        """Characteristic polynomial coefficients [c_0, ..., c_n] (monic), division-free."""
        # Berkowitz: suited to p-adic entries since no pivoting/divisions occur.
        n = self.nrows
        p = self.p
        prec = max(a.prec for r in self.rows for a in r)
        one = PadicNumber.one(p, prec)
        zero = PadicNumber.zero(p, prec)
        if n == 0:
            return [one]
        poly = [one, -self.rows[0][0]]  # charpoly of leading 1x1, highest degree first
        for k in range(1, n):
            A = [row[:k] for row in self.rows[:k]]
            R = self.rows[k][:k]
            Ccol = [self.rows[i][k] for i in range(k)]
            akk = self.rows[k][k]
            # Toeplitz column: [1, -a_kk, -(R C), -(R A C), -(R A^2 C), ...]
            col = [one, -akk]
            vec = Ccol
            for _ in range(k):
                s = R[0] * vec[0]
                for a, b in zip(R[1:], vec[1:]):
                    s = s + a * b
                col.append(-s)
                vec = [sum_list([A[i][j] * vec[j] for j in range(k)], p, prec) for i in range(k)]
            new = [zero] * (k + 2)
            for i, c in enumerate(poly):
                for j, t in enumerate(col):
                    if i + j <= k + 1:
                        new[i + j] = new[i + j] + c * t
            poly = new
        poly.reverse()  # ascending: [c_0, ..., c_n]
        return poly


def sum_list(vals: list, p: int, prec: int) -> PadicNumber:
    acc = PadicNumber.zero(p, prec)
    for v in vals:
        acc = acc + v
    return acc


def solve_linear(A: PadicMatrix, b: PadicMatrix) -> PadicMatrix:
    """Solve A x = b with min-valuation pivoting; loss <= ord_p(det A)."""
    return A.solve(b)
