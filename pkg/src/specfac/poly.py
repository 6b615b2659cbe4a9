"""Real roots of quadratics and cubics: closed form, then Newton polish."""

from __future__ import annotations

import math
from dataclasses import dataclass

from specfac.config import DEFAULT, Tolerances


_EPS = 2.0**-52


class DegenerateLeadingCoefficient(ValueError):
    pass


def _newton(coeffs: tuple[float, ...], x: float, tol: Tolerances) -> float:
    """Polish a root of the monic polynomial with the given coefficients (highest first)."""
    best, best_res = x, abs(_horner(coeffs, x))
    abs_coeffs = tuple(abs(c) for c in coeffs)
    for _ in range(tol.newton_max_iter):
        p, dp = _horner_with_derivative(coeffs, x)
        # Stop once the residual is at the rounding level of Horner's rule; near
        # a multiple root dp is noise there and a step could jump to another root.
        if abs(p) <= 4 * _EPS * _horner(abs_coeffs, abs(x)) or dp == 0.0:
            break
        x_new = x - p / dp
        res = abs(_horner(coeffs, x_new))
        if res < best_res:
            best, best_res = x_new, res
        if abs(x_new - x) <= 1e-16 * max(1.0, abs(x)):
            break
        x = x_new
    # Near a multiple root Newton crawls and may wander; keep the best iterate.
    return best


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _horner(coeffs: tuple[float, ...], x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _horner_with_derivative(coeffs: tuple[float, ...], x: float) -> tuple[float, float]:
    p = 0.0
    dp = 0.0
    for c in coeffs:
        dp = dp * x + p
        p = p * x + c
    return p, dp


@dataclass(frozen=True)
class Quadratic:
    c2: float
    c1: float
    c0: float

    def __call__(self, x: float) -> float:
        return (self.c2 * x + self.c1) * x + self.c0

    def derivative(self, x: float) -> float:
        return 2 * self.c2 * x + self.c1

    @property
    def coefficients(self) -> tuple[float, float, float]:
        return (self.c2, self.c1, self.c0)

    def roots(self, tol: Tolerances = DEFAULT) -> list[float]:
        """Real roots, descending, with multiplicity. Empty if the roots are complex."""
        if self.c2 == 0:
            raise DegenerateLeadingCoefficient("quadratic with zero leading coefficient")
        b = self.c1 / self.c2
        c = self.c0 / self.c2
        disc = b * b - 4 * c
        if disc < 0:
            # Treat tiny negative discriminants as a double root.
            if disc >= -1e-12 * max(1.0, b * b):
                r = _newton((1.0, b, c), -b / 2, tol)
                return [r, r]
            return []
        sq = math.sqrt(disc)
        # Citardauq form avoids cancellation.
        q = -0.5 * (b + math.copysign(sq, b)) if b != 0 else -0.5 * sq
        if q == 0:
            r1 = r2 = 0.0
        else:
            r1, r2 = q, c / q
        out = [_newton((1.0, b, c), r, tol) for r in (r1, r2)]
        return sorted(out, reverse=True)

    def largest_real_root(self, tol: Tolerances = DEFAULT) -> float:
        rs = self.roots(tol)
        if not rs:
            raise ValueError("quadratic has no real roots")
        return rs[0]


@dataclass(frozen=True)
class Cubic:
    c3: float
    c2: float
    c1: float
    c0: float

    def __call__(self, x: float) -> float:
        return ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0

    def derivative(self, x: float) -> float:
        return (3 * self.c3 * x + 2 * self.c2) * x + self.c1

    @property
    def coefficients(self) -> tuple[float, float, float, float]:
        return (self.c3, self.c2, self.c1, self.c0)

    def monic(self) -> tuple[float, float, float]:
        if self.c3 == 0:
            raise DegenerateLeadingCoefficient("cubic with zero leading coefficient")
        return self.c2 / self.c3, self.c1 / self.c3, self.c0 / self.c3

    def roots(self, tol: Tolerances = DEFAULT) -> list[float]:
        """All real roots, descending, repeated according to multiplicity when three are real."""
        a, b, c = self.monic()
        # Depressed cubic t^3 + p t + q with x = t - a/3.
        shift = a / 3
        p = b - a * a / 3
        q = 2 * a**3 / 27 - a * b / 3 + c
        disc = (q / 2) ** 2 + (p / 3) ** 3
        scale = max(1.0, abs(p) ** 1.5, abs(q))
        if p == 0 and q == 0:
            ts = [0.0, 0.0, 0.0]
        elif disc > 1e-14 * scale * scale:
            sq = math.sqrt(disc)
            u = _cbrt(-q / 2 + sq)
            v = _cbrt(-q / 2 - sq)
            r = _newton((1.0, a, b, c), u + v - shift, tol)
            # Rounding can push a near-double root pair into this branch; deflate
            # and let the quadratic decide (it accepts a tiny negative discriminant).
            rest = Quadratic(1.0, a + r, b + r * (a + r)).roots(tol)
            coeffs = (1.0, a, b, c)
            return sorted([r, *(_newton(coeffs, x, tol) for x in rest)], reverse=True)
        else:
            # Three real roots (possibly repeated): trigonometric form.
            if p >= 0 or p * math.sqrt(-p / 3) == 0.0:
                # Only reachable with disc ~ 0 and p ~ 0 (possibly underflowing); a triple root.
                ts = [_cbrt(-q)] * 3
            else:
                m = 2 * math.sqrt(-p / 3)
                arg = 3 * q / (p * m)
                arg = min(1.0, max(-1.0, arg))
                phi = math.acos(arg) / 3
                ts = [m * math.cos(phi - 2 * math.pi * k / 3) for k in range(3)]
        coeffs = (1.0, a, b, c)
        return sorted((_newton(coeffs, t - shift, tol) for t in ts), reverse=True)

    def largest_real_root(self, tol: Tolerances = DEFAULT) -> float:
        return self.roots(tol)[0]

    def residual_scale(self) -> float:
        a, b, c = self.monic()
        return max(1.0, abs(a), abs(b), abs(c))


def largest_real_root(poly: Cubic | Quadratic, tol: Tolerances = DEFAULT) -> float:
    return poly.largest_real_root(tol)


def roots(poly: Cubic | Quadratic, tol: Tolerances = DEFAULT) -> list[float]:
    return poly.roots(tol)


def char_poly_small(m) -> Cubic | Quadratic | float:
    """Characteristic polynomial det(xI - m) of a 1x1, 2x2 or 3x3 matrix.

    A 1x1 matrix returns its single eigenvalue.
    """
    d = len(m)
    if d == 1:
        return float(m[0][0])
    if d == 2:
        tr = m[0][0] + m[1][1]
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        return Quadratic(1.0, -tr, det)
    if d == 3:
        tr = m[0][0] + m[1][1] + m[2][2]
        minors = (
            m[0][0] * m[1][1] - m[0][1] * m[1][0]
            + m[0][0] * m[2][2] - m[0][2] * m[2][0]
            + m[1][1] * m[2][2] - m[1][2] * m[2][1]
        )
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        return Cubic(1.0, -tr, minors, -det)
    raise ValueError(f"closed-form characteristic polynomial only for dim <= 3, got {d}")
