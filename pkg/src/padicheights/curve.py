"""Hyperelliptic curve models y^2 = f(x) over Q_p and their points.

Curves keep exact (rational, p-integral) coefficients so that working
precision can be raised later without rebuilding inputs.  The internal
normal form used by all cohomology and height code is f monic of even
degree 2g+2 with unit discriminant; `normalize_model` converts any
admissible model to it and returns the change-of-coordinates map, which
is the same x' = 1/(x-a), y' = -y/(b(x-a)^(g+1)) transformation used to
move a divisor's base point to infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .padic import (
    DomainError,
    PadicNumber,
    PadicSeries,
    PrecisionError,
    hensel_sqrt,
    teichmuller,
)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _vp_fraction(q: Fraction, p: int) -> int:
    if q == 0:
        return 10 ** 9
    v = 0
    n = q.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = q.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def _poly_gcd_degree_fp(f: list, p: int) -> int:
    """deg gcd(f mod p, f' mod p) over F_p; 0 means squarefree reduction."""
    a = [c % p for c in f]
    b = [(i * c) % p for i, c in enumerate(f)][1:]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    while b:
        # a mod b
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b) and a:
            c = a[-1] * inv % p
            off = len(a) - len(b)
            for i in range(len(b)):
                a[off + i] = (a[off + i] - c * b[i]) % p
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return len(a) - 1 if a else -1


def _poly_gcd_nontrivial_q(f: list) -> bool:
    """True iff gcd(f, f') over Q has positive degree (repeated roots)."""
    a = [Fraction(c) for c in f]
    b = [Fraction(i * c) for i, c in enumerate(f)][1:]

    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = trim(a), trim(b)
    while b:
        inv = 1 / b[-1]
        while len(a) >= len(b) and a:
            c = a[-1] * inv
            off = len(a) - len(b)
            for i in range(len(b)):
                a[off + i] -= c * b[i]
            a = trim(a)
        a, b = b, a
    return len(a) - 1 > 0


class HyperellipticCurve:
    """y^2 = f(x) over Q_p with good reduction; f stored exactly."""

    def __init__(self, p: int, f: list, prec: int):
        self.p = p
        self.f = tuple(Fraction(c) for c in f)
        self.prec = prec
        self.degree = len(self.f) - 1
        self.genus = (self.degree - 1) // 2
        self.is_normal = self.degree % 2 == 0 and self.f[-1] == 1
        self._fp_cache = {}

    def key(self):
        return (self.p, self.f, self.prec)

    def __repr__(self):
        return f"HyperellipticCurve(p={self.p}, genus={self.genus}, deg={self.degree})"

    # -- coefficient access ----------------------------------------------

    def f_padic(self, prec: int) -> list:
        if prec not in self._fp_cache:
            self._fp_cache[prec] = [PadicNumber.from_rational(self.p, c, prec) for c in self.f]
        return self._fp_cache[prec]

    def f_eval_exact(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.f):
            acc = acc * x + c
        return acc

    def f_eval(self, x: PadicNumber, prec: int | None = None) -> PadicNumber:
        coeffs = self.f_padic(prec or self.prec)
        acc = PadicNumber.zero(self.p, 10 ** 9)
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    def f_shifted(self, a: PadicNumber, prec: int) -> list:
        """Taylor coefficients of f(a + u): repeated synthetic division by (X - a)."""
        work = list(self.f_padic(prec))
        out = []
        while work:
            qrev = []
            acc = PadicNumber.zero(self.p, 10 ** 9)
            for c in reversed(work):
                acc = acc * a + c
                qrev.append(acc)
            out.append(qrev.pop())  # remainder = next Taylor coefficient
            work = list(reversed(qrev))
        return out

    # -- points -------------------------------------------------------------

    def point(self, x, y, prec: int | None = None) -> "CurvePoint":
        """Affine point; exact rational inputs are validated exactly and kept."""
        prec = prec or self.prec
        if isinstance(x, PadicNumber) or isinstance(y, PadicNumber):
            xp = x if isinstance(x, PadicNumber) else PadicNumber.from_rational(self.p, x, prec)
            yp = y if isinstance(y, PadicNumber) else PadicNumber.from_rational(self.p, y, prec)
            res = yp * yp - self.f_eval(xp, max(prec, xp.prec))
            if not res.is_zero:
                raise DomainError("point does not satisfy y^2 = f(x) at working precision")
            return CurvePoint("affine", xp, yp, None, None)
        xq, yq = Fraction(x), Fraction(y)
        if yq * yq != self.f_eval_exact(xq):
            raise DomainError("point does not satisfy y^2 = f(x)")
        xp = PadicNumber.from_rational(self.p, xq, prec)
        yp = PadicNumber.from_rational(self.p, yq, prec)
        return CurvePoint("affine", xp, yp, xq, yq)

    def infinity(self, sign: int) -> "CurvePoint":
        if self.degree % 2:
            return CurvePoint("inf", None, None, None, None)
        return CurvePoint("inf+" if sign > 0 else "inf-", None, None, None, None)

    def lift_x(self, x, sign_hint: int | None = None, prec: int | None = None) -> "CurvePoint":
        """Point above x, y chosen by sign_hint (mod p) or smaller representative."""
        prec = prec or self.prec
        xp = x if isinstance(x, PadicNumber) else PadicNumber.from_rational(self.p, x, prec)
        fx = self.f_eval(xp, prec)
        y = hensel_sqrt(fx, sign_hint)
        pt = CurvePoint("affine", xp, y, None, None)
        if not isinstance(x, PadicNumber):
            pt = CurvePoint("affine", xp, y, Fraction(x), None)
        return pt

    def at_precision(self, prec: int) -> "HyperellipticCurve":
        if prec == self.prec:
            return self
        return HyperellipticCurve(self.p, self.f, prec)


class CurvePoint:
    """A Q_p-point: affine (x, y), inf+/inf- on even models, inf on odd ones."""

    __slots__ = ("kind", "x", "y", "xq", "yq")

    def __init__(self, kind, x, y, xq=None, yq=None):
        self.kind = kind
        self.x = x
        self.y = y
        self.xq = xq
        self.yq = yq

    @property
    def is_affine(self):
        return self.kind == "affine"

    @property
    def is_infinite(self):
        return self.kind != "affine"

    def at_precision(self, curve: HyperellipticCurve, prec: int) -> "CurvePoint":
        """Re-lift exact points to higher precision; cap approximate ones."""
        if not self.is_affine:
            return self
        if self.xq is not None and self.yq is not None:
            p = curve.p
            return CurvePoint(
                "affine",
                PadicNumber.from_rational(p, self.xq, prec),
                PadicNumber.from_rational(p, self.yq, prec),
                self.xq,
                self.yq,
            )
        return CurvePoint("affine", self.x.cap(prec), self.y.cap(prec), None, None)

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        if self.kind != other.kind:
            return False
        if self.kind != "affine":
            return True
        return (self.x - other.x).is_zero and (self.y - other.y).is_zero

    def __repr__(self):
        if self.kind != "affine":
            return self.kind
        return f"({self.x}, {self.y})"

    def to_json(self):
        if self.kind == "inf+":
            return "inf+"
        if self.kind == "inf-":
            return "inf-"
        if self.kind == "inf":
            return "inf"
        if self.xq is not None and self.yq is not None:
            return {"x": str(self.xq), "y": str(self.yq)}
        return {"x": self.x.to_json(), "y": self.y.to_json()}


@dataclass(frozen=True)
class DiscClass:
    kind: str  # ordinary_affine | weierstrass | infinite_plus | infinite_minus
    data: tuple  # (xbar, ybar) for affine kinds, (sign,) at infinity


@dataclass
class ModelMap:
    """x' = 1/(x-a), y' = -y/(b (x-a)^(g+1)), or the identity.

    (a, b^2) are exact rationals with b^2 = f(a), so the map can be
    re-lifted at any working precision; b itself is pinned by its
    residue class mod p (or kept exactly when it is rational).
    """

    kind: str  # "identity" | "tau"
    source: HyperellipticCurve
    target: HyperellipticCurve
    a: Fraction | None = None
    b2: Fraction | None = None
    b_residue: int | None = None
    bq: Fraction | None = None  # exact b when available

    def b_at(self, prec: int) -> PadicNumber:
        p = self.source.p
        if self.bq is not None:
            return PadicNumber.from_rational(p, self.bq, prec)
        return hensel_sqrt(PadicNumber.from_rational(p, self.b2, prec), self.b_residue)


def build_curve(p: int, f_coeffs, N: int) -> HyperellipticCurve:
    """Validated curve; odd-degree/non-monic input is kept raw and flagged."""
    if not _is_prime(p) or p == 2:
        raise DomainError(f"p = {p} is not an odd prime")
    f = [Fraction(c) for c in f_coeffs]
    while f and f[-1] == 0:
        f.pop()
    deg = len(f) - 1
    if deg < 3:
        raise DomainError("deg f >= 3 required")
    C = HyperellipticCurve(p, f, N)
    if p <= C.genus:
        raise DomainError(f"prime too small: p = {p} <= genus {C.genus}")
    if any(_vp_fraction(c, p) < 0 for c in f):
        raise DomainError("bad reduction: coefficients are not p-integral")
    if _vp_fraction(f[-1], p) != 0:
        raise DomainError("bad reduction: leading coefficient is divisible by p")
    fint = [c.numerator * pow(c.denominator, -1, p) % p for c in f]
    if _poly_gcd_degree_fp(fint, p) != 0:
        if _poly_gcd_nontrivial_q(f):
            raise DomainError("singular: f has repeated roots")
        raise DomainError("bad reduction: disc(f) is divisible by p")
    return C


def involution(C: HyperellipticCurve, P: CurvePoint) -> CurvePoint:
    if P.kind == "affine":
        return CurvePoint("affine", P.x, -P.y, P.xq, -P.yq if P.yq is not None else None)
    if P.kind == "inf+":
        return CurvePoint("inf-", None, None)
    if P.kind == "inf-":
        return CurvePoint("inf+", None, None)
    return P  # odd-model infinity is a Weierstrass point


def classify_point(C: HyperellipticCurve, P: CurvePoint) -> DiscClass:
    p = C.p
    if P.kind == "inf+":
        return DiscClass("infinite_plus", (1,))
    if P.kind == "inf-":
        return DiscClass("infinite_minus", (-1,))
    if P.kind == "inf":
        return DiscClass("infinite_plus", (0,))  # odd model: the single disc at infinity
    if P.x.is_zero or P.x.val >= 0:
        xbar = P.x.residue()
        ybar = P.y.residue() if (P.y.is_zero or P.y.val >= 0) else None
        if ybar is None:
            raise DomainError("not a Z_p-point: integral x with non-integral y")
        if ybar == 0:
            return DiscClass("weierstrass", (xbar, 0))
        return DiscClass("ordinary_affine", (xbar, ybar))
    if C.degree % 2:
        raise DomainError("odd model has no Q_p-points with negative x-valuation")
    g = C.genus
    u = (P.y * (P.x ** (g + 1)).inverse()).residue()
    if u == 1:
        return DiscClass("infinite_plus", (1,))
    if u == p - 1:
        return DiscClass("infinite_minus", (-1,))
    raise DomainError("point at infinity disc with y/x^(g+1) != +-1 mod p")


def same_disc(C: HyperellipticCurve, P: CurvePoint, Q: CurvePoint) -> bool:
    return classify_point(C, P) == classify_point(C, Q)


def weierstrass_point_of_disc(C: HyperellipticCurve, P: CurvePoint, prec: int | None = None) -> CurvePoint:
    """The Weierstrass point (a, 0) in the disc of P (which must be Weierstrass)."""
    cls = classify_point(C, P)
    if cls.kind != "weierstrass":
        raise DomainError("not a Weierstrass disc")
    prec = prec or max(C.prec, P.x.prec)
    p = C.p
    a = PadicNumber.from_int(p, cls.data[0], prec)
    fp = C.f_padic(prec)
    for _ in range(prec.bit_length() + 2):
        fa = C.f_eval(a, prec)
        if fa.is_zero:
            break
        dfa = _poly_eval(_poly_derivative(fp), a, p)
        a = a - fa / dfa
    return CurvePoint("affine", a, PadicNumber.zero(p, prec), None, None)


def _poly_derivative(coeffs: list) -> list:
    return [c * i for i, c in enumerate(coeffs)][1:]


def _poly_eval(coeffs: list, x: PadicNumber, p: int) -> PadicNumber:
    acc = PadicNumber.zero(p, 10 ** 9)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def teichmuller_point(C: HyperellipticCurve, P: CurvePoint, prec: int | None = None) -> CurvePoint:
    """The Frobenius-fixed point in the (ordinary affine) disc of P."""
    cls = classify_point(C, P)
    if cls.kind != "ordinary_affine":
        raise DomainError("Teichmuller point needs an ordinary affine disc")
    prec = prec or P.x.prec
    if P.x.is_zero:
        xt = PadicNumber.zero(C.p, prec)
    else:
        xt = teichmuller(P.x.cap(prec))
    fx = C.f_eval(xt, prec)
    yt = hensel_sqrt(fx, cls.data[1])
    return CurvePoint("affine", xt, yt, None, None)


# -- model normalization ------------------------------------------------------


def tau_curve(C: HyperellipticCurve, a: Fraction, b2: Fraction, prec: int) -> HyperellipticCurve:
    """Target of the base-point map: f'(x') = x'^(2g+2) f(a + 1/x') / b2."""
    d = 2 * C.genus + 2
    # Taylor shift over exact rationals: f(a+u) = sum c_j u^j
    work = [Fraction(c) for c in C.f]
    cs = []
    for _ in range(len(work)):
        rem = work[-1]
        neww = [work[-1]]
        for c in reversed(work[:-1]):
            rem = rem * a + c
            neww.append(rem)
        cs.append(rem)
        neww.pop()
        neww.reverse()
        work = neww
        if not work:
            break
    fprime = [Fraction(0)] * (d + 1)
    for j, c in enumerate(cs):
        fprime[d - j] = c / b2
    return build_curve(C.p, fprime, prec)


def normalize_model(C: HyperellipticCurve, P0: CurvePoint | None = None):
    """Monic even-degree model plus the ModelMap. Heights are invariant under it."""
    if C.is_normal:
        return C, ModelMap("identity", C, C)
    p = C.p
    if P0 is not None:
        if not P0.is_affine:
            raise DomainError("P0 must be an affine point with unit y")
        if P0.y.is_zero or P0.y.val != 0:
            raise DomainError("ord_p(y(P0)) = 0 required")
        if P0.xq is None:
            raise DomainError("P0 must have exact rational coordinates")
        a = P0.xq
        b2 = C.f_eval_exact(a)
        b_res = P0.y.residue()
        bq = P0.yq
    else:
        a = None
        for xbar in range(p):
            fx = C.f_eval_exact(Fraction(xbar))
            if _vp_fraction(fx, p) != 0:
                continue
            r = fx.numerator * pow(fx.denominator, -1, p) % p
            if pow(r, (p - 1) // 2, p) == 1:
                a = Fraction(xbar)
                break
        if a is None:
            raise DomainError("no unit-y point: curve out of scope")
        b2 = C.f_eval_exact(a)
        b = hensel_sqrt(PadicNumber.from_rational(p, b2, C.prec), None)
        b_res = b.residue()
        bq = None
        if b2.numerator >= 0:
            root = _exact_sqrt(b2)
            if root is not None and (b - PadicNumber.from_rational(p, root, C.prec)).is_zero:
                bq = root
    target = tau_curve(C, a, b2, C.prec)
    assert target.is_normal and target.degree == 2 * C.genus + 2
    m = ModelMap("tau", C, target, a=a, b2=b2, b_residue=b_res, bq=bq)
    return target, m


def _exact_sqrt(q: Fraction):
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def map_point(m: ModelMap, P: CurvePoint, prec: int | None = None) -> CurvePoint:
    if m.kind == "identity":
        return P
    C, T = m.source, m.target
    p = C.p
    g = C.genus
    prec = prec or (C.prec if not P.is_affine else P.x.prec)
    b = m.b_at(prec)
    a_p = PadicNumber.from_rational(p, m.a, prec + g + 2)
    if P.kind == "inf":
        return T.point(0, 0, prec)
    if P.kind in ("inf+", "inf-"):
        sign = 1 if P.kind == "inf+" else -1
        yq = None if m.bq is None else Fraction(-sign, 1) / m.bq
        yv = -b.inverse() if sign > 0 else b.inverse()
        xp = PadicNumber.zero(p, prec)
        return CurvePoint("affine", xp, yv, Fraction(0) if yq is not None else None, yq)
    dx = P.x - a_p
    if dx.is_zero:
        if (P.y - b).is_zero:
            return T.infinity(-1)
        if (P.y + b).is_zero:
            return T.infinity(+1)
        raise DomainError("cannot map: x(P) = a but y(P) != +-b at precision")
    xnew = dx.inverse()
    ynew = -P.y / (b * dx ** (g + 1))
    xq = yq = None
    if P.xq is not None and P.yq is not None and m.bq is not None and P.xq != m.a:
        xq = 1 / (P.xq - m.a)
        yq = -P.yq / (m.bq * (P.xq - m.a) ** (g + 1))
    img = CurvePoint("affine", xnew, ynew, xq, yq)
    res = img.y * img.y - T.f_eval(img.x, img.y.prec)
    if not res.is_zero:
        raise DomainError("mapped point fails the target curve equation")
    return img


# -- local expansions ---------------------------------------------------------


def local_expansion(C: HyperellipticCurve, P: CurvePoint, k: int, prec: int | None = None):
    """(x(t), y(t)) in the standard uniformizer at P, to O(t^k).

    Ordinary affine: t = x - x(P).  Weierstrass: t = y (x is even in t).
    Infinity (normal models): t = 1/x with y t^(g+1) -> +-1.
    """
    p = C.p
    g = C.genus
    if P.is_affine:
        prec = prec or P.x.prec
        cls = classify_point(C, P)
        if cls.kind == "ordinary_affine" or (cls.kind == "weierstrass" and not P.y.is_zero):
            # x(t) = x(P) + t is exact, so it carries unbounded t-order
            xt = PadicSeries.from_coeffs("t", p, [(0, P.x), (1, PadicNumber.one(p, 10 ** 9))], 10 ** 9)
            shifted = C.f_shifted(P.x, prec)
            fseries = PadicSeries.from_coeffs("t", p, list(enumerate(shifted)), k)
            yt = fseries.sqrt(P.y)
            return xt, yt
        if cls.kind == "weierstrass":
            # t = y; solve f(x(t)) = t^2 by series Newton around the root a
            a = P.x
            shifted = C.f_shifted(a, prec)
            t2 = PadicSeries.from_coeffs("t", p, [(2, PadicNumber.one(p, 10 ** 9))], k)
            u = PadicSeries.zero("t", p, k)
            steps = max(2, k.bit_length() + 3)
            for _ in range(steps):
                fu = _poly_on_series(shifted, u, p, k)
                resid = fu - t2
                if resid.is_zero():
                    break
                dfu = _poly_on_series([c * i for i, c in enumerate(shifted)][1:], u, p, k)
                u = u - resid * dfu.inverse()
            xt = u + PadicSeries.from_coeffs("t", p, [(0, a)], k)
            yt = PadicSeries.from_coeffs("t", p, [(1, PadicNumber.one(p, 10 ** 9))], 10 ** 9)
            return xt, yt
        raise DomainError("local expansion at an affine point of an infinite disc: use t = 1/x at infinity")
    if P.kind == "inf":
        raise DomainError("expansion at odd-model infinity: normalize the model first")
    prec = prec or C.prec
    if not C.is_normal:
        raise DomainError("expansion at infinity needs the monic even-degree normal form")
    sign = 1 if P.kind == "inf+" else -1
    fp = C.f_padic(prec)
    d = C.degree
    rev = [(j, fp[d - j]) for j in range(min(d + 1, k))]
    frev = PadicSeries.from_coeffs("t", p, rev, k)  # t^(2g+2) f(1/t), constant term 1
    root = frev.sqrt(PadicNumber.one(p, prec))
    yt = root.shift(-(g + 1))
    if sign < 0:
        yt = -yt
    xt = PadicSeries.from_coeffs("t", p, [(-1, PadicNumber.one(p, 10 ** 9))], 10 ** 9)
    return xt, yt


def _poly_on_series(coeffs: list, s: PadicSeries, p: int, k: int) -> PadicSeries:
    acc = PadicSeries.zero("t", p, k)
    for c in reversed(coeffs):
        acc = acc * s + PadicSeries.from_coeffs("t", p, [(0, c)], k)
    return acc


@dataclass
class OddDifferential:
    """scalar * A(x) / (x - pole) * dx/y, pole optional.

    Covers the basis forms x^i dx/y, eta-combinations, and the
    third-kind form y(P)/(x - x(P)) dx/y with residue divisor P - iota(P).
    """

    numerator: list  # PadicNumber coefficients of A
    pole: PadicNumber | None = None
    scalar: PadicNumber | None = None

    @classmethod
    def omega(cls, C: HyperellipticCurve, i: int, prec: int | None = None) -> "OddDifferential":
        p = C.p
        one = PadicNumber.one(p, 10 ** 9)
        zero = PadicNumber.zero(p, 10 ** 9)
        return cls([zero] * i + [one], None, None)

    @classmethod
    def omega_prime(cls, C: HyperellipticCurve, P: CurvePoint) -> "OddDifferential":
        if not P.is_affine or P.y.is_zero:
            raise DomainError("omega' needs an affine non-Weierstrass base point")
        one = PadicNumber.one(C.p, 10 ** 9)
        return cls([one], P.x, P.y)


def expand_odd_differential(C: HyperellipticCurve, omega: OddDifferential, P: CurvePoint, k: int, prec: int | None = None) -> PadicSeries:
    """Laurent series of omega/dt in the uniformizer of local_expansion."""
    p = C.p
    margin = 3 * C.genus + 8
    xt, yt = local_expansion(C, P, k + margin, prec)
    num = _series_from_poly_at(omega.numerator, xt, p)
    dxdt = xt.derivative()
    out = num * dxdt * _laurent_inverse(yt)
    if omega.pole is not None:
        delta = _x_minus_const(C, xt, omega.pole, P)
        out = out * _laurent_inverse(delta)
    if omega.scalar is not None:
        out = out.scale(omega.scalar)
    return out


def _series_from_poly_at(coeffs: list, xt: PadicSeries, p: int) -> PadicSeries:
    acc = PadicSeries.zero("t", p, 10 ** 9)
    for c in reversed(coeffs):
        acc = acc * xt + PadicSeries.from_coeffs("t", p, [(0, c)], 10 ** 9)
    return acc


def _laurent_inverse(s: PadicSeries) -> PadicSeries:
    return s.inverse()


def _x_minus_const(C: HyperellipticCurve, xt: PadicSeries, a: PadicNumber, P: CurvePoint) -> PadicSeries:
    p = C.p
    if P.is_affine and (P.x - a).is_zero:
        # expansion at the pole itself: x(t) - a = t exactly (ordinary uniformizer)
        one = PadicNumber.one(p, 10 ** 9)
        return PadicSeries.from_coeffs("t", p, [(1, one)], xt.order)
    return xt - PadicSeries.from_coeffs("t", p, [(0, a)], xt.order)
