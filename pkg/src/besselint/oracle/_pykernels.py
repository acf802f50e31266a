"""Pure-Python quadrature kernels.

Reference implementation of the algorithm compiled in ``_ckernels.pyx``; the
two modules must stay step-for-step identical (same panel ordering, same
selection rule) so that both backends return the same numbers.

Every public function returns ``(re, im, est_error, evaluations, status)``
with ``status`` one of ``OK``, ``NO_CONVERGENCE``.
"""

import cmath
import math

from ._gk import WG, WGK, XGK

OK = 0
NO_CONVERGENCE = 1

KIND_COSH_POW = 0
KIND_SINH_POW = 1
KIND_COSH_LIN = 2

MAX_PANELS = 4000
U_MAX = 60.0
# fraction of the relative tolerance handed to the inner K quadrature
INNER_TOL_FRACTION = 0.1
PROBE_TOL = 1e-6
EPS = 2.220446049250313e-16
UFLOW = 2.2250738585072014e-308


def _log_cosh(y):
    y = abs(y)
    return y + math.log1p(math.exp(-2.0 * y)) - math.log(2.0)


def _gk15(f, a, b, stats):
    """One Gauss-Kronrod panel.

    Returns ``(value, quad_err, propagated_err, at_floor)``. ``quad_err`` uses
    the QUADPACK qk15 scaling; ``at_floor`` means it is pinned at the
    round-off level and bisection cannot reduce it.
    """
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fv = [0j] * 15
    fc, ec = f(c, stats)
    fv[14] = fc
    resk = fc * WGK[7]
    resg = fc * WG[3]
    resabs = abs(fc) * WGK[7]
    prop = ec * WGK[7]
    for j in range(7):
        dx = h * XGK[j]
        f1, e1 = f(c - dx, stats)
        f2, e2 = f(c + dx, stats)
        fv[2 * j] = f1
        fv[2 * j + 1] = f2
        resk += WGK[j] * (f1 + f2)
        resabs += WGK[j] * (abs(f1) + abs(f2))
        prop += WGK[j] * (e1 + e2)
        if j % 2 == 1:
            resg += WG[j // 2] * (f1 + f2)
    reskh = 0.5 * resk
    resasc = WGK[7] * abs(fc - reskh)
    for j in range(7):
        resasc += WGK[j] * (abs(fv[2 * j] - reskh) + abs(fv[2 * j + 1] - reskh))
    resasc *= h
    resabs *= h
    err = abs(resk - resg) * h
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    at_floor = False
    if resabs > UFLOW / (50.0 * EPS):
        floor = 50.0 * EPS * resabs
        if floor >= err:
            err = floor
            at_floor = True
    return resk * h, err, prop * h, at_floor


def _adaptive(f, a, b, tol, max_depth, stats):
    """Globally adaptive bisection: split the panel with the largest
    quadrature error until quadrature plus propagated error meets ``tol``.

    Panels pinned at round-off or at ``max_depth`` are frozen. Their error and
    the propagated error are irreducible; once those alone exceed the target,
    refinement continues only until the reducible part drops below them.
    """
    v, qe, pe, fl = _gk15(f, a, b, stats)
    lo, hi, val, qerr, perr, depth = [a], [b], [v], [qe], [pe], [0]
    frozen = [fl or max_depth <= 0]
    total, total_q, total_p = v, qe, pe
    frozen_q = qe if frozen[0] else 0.0
    status = OK
    while True:
        target = tol * abs(total)
        fixed = frozen_q + total_p
        movable = total_q - frozen_q
        if movable + fixed <= target:
            break
        if fixed > target and movable <= fixed:
            status = NO_CONVERGENCE
            break
        worst, worst_err = -1, -1.0
        for i in range(len(qerr)):
            if not frozen[i] and qerr[i] > worst_err:
                worst, worst_err = i, qerr[i]
        if worst < 0 or len(qerr) >= MAX_PANELS:
            status = NO_CONVERGENCE
            break
        pa, pb = lo[worst], hi[worst]
        mid = 0.5 * (pa + pb)
        v1, q1, p1, f1 = _gk15(f, pa, mid, stats)
        v2, q2, p2, f2 = _gk15(f, mid, pb, stats)
        d = depth[worst] + 1
        f1 = f1 or d >= max_depth
        f2 = f2 or d >= max_depth
        total += v1 + v2 - val[worst]
        total_q += q1 + q2 - qerr[worst]
        total_p += p1 + p2 - perr[worst]
        if f1:
            frozen_q += q1
        if f2:
            frozen_q += q2
        hi[worst], val[worst], qerr[worst], perr[worst] = mid, v1, q1, p1
        depth[worst], frozen[worst] = d, f1
        lo.append(mid)
        hi.append(pb)
        val.append(v2)
        qerr.append(q2)
        perr.append(p2)
        depth.append(d)
        frozen.append(f2)
    total = 0j
    total_err = 0.0
    for i in range(len(val)):
        total += val[i]
        total_err += qerr[i] + perr[i]
    return total, total_err, status


def _truncate(log_bound, step, eps):
    """First grid point past the peak where the bound drops below ``eps``
    times the running integral of the bound; returns ``(U, tail_estimate)``."""
    running = 0.0
    prev = math.exp(log_bound(0.0))
    u = 0.0
    while u < U_MAX:
        u += step
        cur = math.exp(log_bound(u))
        running += 0.5 * step * (prev + cur)
        if running > 0.0 and cur <= prev and cur <= eps * running:
            return u, cur * step
        prev = cur
    return U_MAX, prev * step


def _scaled_k(nu, x, tol, max_depth, eps, stats):
    """``e^x K_nu(x) = int_0^inf exp(-x (cosh u - 1)) cosh(nu u) du``."""
    xr = x.real
    step = min(0.5, 1.0 / math.sqrt(xr))

    def log_bound(u):
        s = math.sinh(0.5 * u)
        return -2.0 * xr * s * s + _log_cosh(nu * u)

    upper, tail = _truncate(log_bound, step, eps)

    def integrand(u, st):
        st[0] += 1
        s = math.sinh(0.5 * u)
        return cmath.exp(-2.0 * x * s * s) * math.cosh(nu * u), 0.0

    inner = [0]
    val, err, status = _adaptive(integrand, 0.0, upper, tol, max_depth, inner)
    stats[0] += inner[0]
    return val, err + tail, status


def k_nu(nu, xr, xi, tol, max_depth, eps):
    x = complex(xr, xi)
    stats = [0]
    s, e, status = _scaled_k(abs(nu), x, tol, max_depth, eps, stats)
    ex = cmath.exp(-x)
    val = ex * s
    return val.real, val.imag, abs(ex) * e, stats[0], status


def _log_weight(kind, p, t):
    if kind == KIND_COSH_POW:
        return p * math.log(math.cosh(t)) if p else 0.0
    if kind == KIND_SINH_POW:
        if p == 0:
            return 0.0
        return p * math.log(math.sinh(t)) if t > 0.0 else -math.inf
    return _log_cosh(p * t)


def _weight(kind, p, t):
    if kind == KIND_COSH_POW:
        return math.cosh(t) ** p
    if kind == KIND_SINH_POW:
        return math.sinh(t) ** p
    return math.cosh(p * t)


def weighted_k_integral(kind, p, nu, zr, zi, tol, max_depth, eps):
    """``int_0^inf w(t) K_nu(z cosh t) dt`` for weight ``cosh^p``, ``sinh^p``
    or ``cosh(p t)`` (``kind``), with ``K_nu`` itself by inner quadrature."""
    z = complex(zr, zi)
    nu = abs(nu)
    step = min(0.5, 1.0 / math.sqrt(zr))
    probes = [0]

    def log_bound(t):
        lw = _log_weight(kind, p, t)
        if lw == -math.inf:
            return lw
        big_x = zr * math.cosh(t)
        s, _, _ = _scaled_k(nu, complex(big_x, 0.0), PROBE_TOL, max_depth, eps, probes)
        if s.real <= 0.0:
            return -math.inf
        return lw - big_x + math.log(s.real)

    upper, tail = _truncate(log_bound, step, eps)
    inner_tol = INNER_TOL_FRACTION * tol

    def integrand(t, st):
        st[0] += 1
        x = z * math.cosh(t)
        # an unconverged inner value still carries an honest error bound
        s, e, _ = _scaled_k(nu, x, inner_tol, max_depth, eps, st)
        scale = _weight(kind, p, t) * cmath.exp(-x)
        return scale * s, abs(scale) * e

    stats = [0]
    val, err, status = _adaptive(integrand, 0.0, upper, tol, max_depth, stats)
    return val.real, val.imag, err + tail, stats[0] + probes[0], status
