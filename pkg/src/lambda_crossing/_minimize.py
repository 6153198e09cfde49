"""Derivative-free scalar minimization: golden section with parabolic acceleration."""

import math

_GOLD = 0.5 * (3.0 - math.sqrt(5.0))


def minimize_scalar(f, a, b, xtol=1e-10, max_iter=200):
    """Minimize f on [a, b] to absolute abscissa tolerance xtol.

    Brent-style: golden-section steps, replaced by a parabolic step through
    the three best points whenever that step is well behaved. Assumes a
    single local minimum in the bracket. Returns (x, f(x)). Deterministic.
    """
    if not b > a:
        raise ValueError("bracket must satisfy a < b")
    x = w = v = a + _GOLD * (b - a)
    fx = fw = fv = f(x)
    d = e = 0.0
    for _ in range(max_iter):
        m = 0.5 * (a + b)
        tol1 = xtol
        tol2 = 2.0 * tol1
        if abs(x - m) <= tol2 - 0.5 * (b - a):
            break
        golden = True
        if abs(e) > tol1:
            # Parabola through (x, fx), (w, fw), (v, fv).
            r = (x - w) * (fx - fv)
            q = (x - v) * (fx - fw)
            p = (x - v) * q - (x - w) * r
            q = 2.0 * (q - r)
            if q > 0.0:
                p = -p
            q = abs(q)
            e_old = e
            e = d
            if abs(p) < abs(0.5 * q * e_old) and q * (a - x) < p < q * (b - x):
                d = p / q
                u = x + d
                if (u - a) < tol2 or (b - u) < tol2:
                    d = tol1 if x < m else -tol1
                golden = False
        if golden:
            e = (b - x) if x < m else (a - x)
            d = _GOLD * e
        u = x + d if abs(d) >= tol1 else x + (tol1 if d > 0.0 else -tol1)
        fu = f(u)
        if fu <= fx:
            if u < x:
                b = x
            else:
                a = x
            v, fv = w, fw
            w, fw = x, fx
            x, fx = u, fu
        else:
            if u < x:
                a = u
            else:
                b = u
            if fu <= fw or w == x:
                v, fv = w, fw
                w, fw = u, fu
            elif fu <= fv or v == x or v == w:
                v, fv = u, fu
    return x, fx


def maximize_scalar(f, a, b, xtol=1e-10, max_iter=200):
    """Maximize f on [a, b]; returns (x, f(x))."""
    x, fneg = minimize_scalar(lambda t: -f(t), a, b, xtol=xtol, max_iter=max_iter)
    return x, -fneg


def parabolic_vertex(x0, y0, x1, y1, x2, y2):
    """Abscissa of the vertex of the parabola through three points.

    Falls back to x1 when the three points are collinear.
    """
    denom = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0)
    if denom == 0.0:
        return x1
    num = (x1 - x0) ** 2 * (y1 - y2) - (x1 - x2) ** 2 * (y1 - y0)
    return x1 - 0.5 * num / denom
