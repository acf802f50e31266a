# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled quadrature kernels.

Step-for-step port of ``_pykernels``; see that module for the algorithm.
"""

from libc.math cimport cosh, sinh, exp, log, log1p, fabs, sqrt, pow, fmin, fmax, INFINITY
from libc.stdlib cimport malloc, free
from libc.complex cimport cexp, cabs

cdef extern from *:
    """
    static const double XGK_[8] = {
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.0};
    static const double WGK_[8] = {
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    static const double WG_[4] = {
        0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
        0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
    """
    const double XGK_[8]
    const double WGK_[8]
    const double WG_[4]

cdef enum:
    MAX_PANELS = 4000

cdef double U_MAX = 60.0
cdef double INNER_TOL_FRACTION = 0.1
cdef double PROBE_TOL = 1e-6
cdef double EPS = 2.220446049250313e-16
cdef double UFLOW = 2.2250738585072014e-308

OK = 0
NO_CONVERGENCE = 1

cdef enum:
    KIND_COSH_POW = 0
    KIND_SINH_POW = 1
    KIND_COSH_LIN = 2

ctypedef struct Ctx:
    bint outer
    double nu
    double complex x      # inner argument
    int kind
    double p
    double complex z      # outer argument
    double inner_tol
    int max_depth
    double eps
    long nevals


cdef inline double _log_cosh(double y) noexcept nogil:
    y = fabs(y)
    return y + log1p(exp(-2.0 * y)) - log(2.0)


cdef inline void _integrand(Ctx* c, double t, double complex* f, double* e) noexcept nogil:
    cdef double s, w
    cdef double complex x, sk, scale
    cdef double ek
    cdef long nev = 0
    c.nevals += 1
    if not c.outer:
        s = sinh(0.5 * t)
        f[0] = cexp(-2.0 * c.x * s * s) * cosh(c.nu * t)
        e[0] = 0.0
        return
    x = c.z * cosh(t)
    # an unconverged inner value still carries an honest error bound
    _scaled_k(c.nu, x, c.inner_tol, c.max_depth, c.eps, &sk, &ek, &nev)
    c.nevals += nev
    if c.kind == KIND_COSH_POW:
        w = pow(cosh(t), c.p)
    elif c.kind == KIND_SINH_POW:
        w = pow(sinh(t), c.p)
    else:
        w = cosh(c.p * t)
    scale = w * cexp(-x)
    f[0] = scale * sk
    e[0] = cabs(scale) * ek


cdef bint _gk15(Ctx* c, double a, double b, double complex* val,
                double* qerr, double* perr) noexcept nogil:
    cdef double cen = 0.5 * (a + b)
    cdef double h = 0.5 * (b - a)
    cdef double complex fv[15]
    cdef double complex fc, f1, f2, resk, resg, reskh
    cdef double ec, e1, e2, prop, dx, resabs, resasc, e, floor
    cdef bint at_floor = False
    cdef int j
    _integrand(c, cen, &fc, &ec)
    fv[14] = fc
    resk = fc * WGK_[7]
    resg = fc * WG_[3]
    resabs = cabs(fc) * WGK_[7]
    prop = ec * WGK_[7]
    for j in range(7):
        dx = h * XGK_[j]
        _integrand(c, cen - dx, &f1, &e1)
        _integrand(c, cen + dx, &f2, &e2)
        fv[2 * j] = f1
        fv[2 * j + 1] = f2
        resk = resk + WGK_[j] * (f1 + f2)
        resabs = resabs + WGK_[j] * (cabs(f1) + cabs(f2))
        prop = prop + WGK_[j] * (e1 + e2)
        if j % 2 == 1:
            resg = resg + WG_[j // 2] * (f1 + f2)
    reskh = 0.5 * resk
    resasc = WGK_[7] * cabs(fc - reskh)
    for j in range(7):
        resasc = resasc + WGK_[j] * (cabs(fv[2 * j] - reskh) + cabs(fv[2 * j + 1] - reskh))
    resasc = resasc * h
    resabs = resabs * h
    e = cabs(resk - resg) * h
    if resasc != 0.0 and e != 0.0:
        e = resasc * fmin(1.0, pow(200.0 * e / resasc, 1.5))
    if resabs > UFLOW / (50.0 * EPS):
        floor = 50.0 * EPS * resabs
        if floor >= e:
            e = floor
            at_floor = True
    val[0] = resk * h
    qerr[0] = e
    perr[0] = prop * h
    return at_floor


cdef int _adaptive(Ctx* c, double a, double b, double tol,
                   double complex* out, double* out_err) noexcept nogil:
    cdef double* lo = <double*> malloc(MAX_PANELS * sizeof(double))
    cdef double* hi = <double*> malloc(MAX_PANELS * sizeof(double))
    cdef double complex* val = <double complex*> malloc(MAX_PANELS * sizeof(double complex))
    cdef double* qerr = <double*> malloc(MAX_PANELS * sizeof(double))
    cdef double* perr = <double*> malloc(MAX_PANELS * sizeof(double))
    cdef int* depth = <int*> malloc(MAX_PANELS * sizeof(int))
    cdef bint* frozen = <bint*> malloc(MAX_PANELS * sizeof(bint))
    cdef int npan = 1, i, worst, d, status = 0
    cdef double worst_err, mid, pa, pb, q1, q2, p1, p2, total_q, total_p
    cdef double frozen_q, target, fixed, movable
    cdef double complex v1, v2, total
    cdef bint fl1, fl2
    frozen[0] = _gk15(c, a, b, &val[0], &qerr[0], &perr[0]) or c.max_depth <= 0
    lo[0] = a
    hi[0] = b
    depth[0] = 0
    total = val[0]
    total_q = qerr[0]
    total_p = perr[0]
    frozen_q = qerr[0] if frozen[0] else 0.0
    while True:
        target = tol * cabs(total)
        fixed = frozen_q + total_p
        movable = total_q - frozen_q
        if movable + fixed <= target:
            break
        if fixed > target and movable <= fixed:
            status = 1
            break
        worst = -1
        worst_err = -1.0
        for i in range(npan):
            if not frozen[i] and qerr[i] > worst_err:
                worst = i
                worst_err = qerr[i]
        if worst < 0 or npan >= MAX_PANELS:
            status = 1
            break
        pa = lo[worst]
        pb = hi[worst]
        mid = 0.5 * (pa + pb)
        fl1 = _gk15(c, pa, mid, &v1, &q1, &p1)
        fl2 = _gk15(c, mid, pb, &v2, &q2, &p2)
        d = depth[worst] + 1
        fl1 = fl1 or d >= c.max_depth
        fl2 = fl2 or d >= c.max_depth
        total = total + (v1 + v2 - val[worst])
        total_q = total_q + (q1 + q2 - qerr[worst])
        total_p = total_p + (p1 + p2 - perr[worst])
        if fl1:
            frozen_q = frozen_q + q1
        if fl2:
            frozen_q = frozen_q + q2
        hi[worst] = mid
        val[worst] = v1
        qerr[worst] = q1
        perr[worst] = p1
        depth[worst] = d
        frozen[worst] = fl1
        lo[npan] = mid
        hi[npan] = pb
        val[npan] = v2
        qerr[npan] = q2
        perr[npan] = p2
        depth[npan] = d
        frozen[npan] = fl2
        npan += 1
    total = 0
    total_q = 0.0
    for i in range(npan):
        total = total + val[i]
        total_q = total_q + (qerr[i] + perr[i])
    free(lo)
    free(hi)
    free(val)
    free(qerr)
    free(perr)
    free(depth)
    free(frozen)
    out[0] = total
    out_err[0] = total_q
    return status


cdef double _inner_log_bound(double nu, double xr, double u) noexcept nogil:
    cdef double s = sinh(0.5 * u)
    return -2.0 * xr * s * s + _log_cosh(nu * u)


cdef double _outer_log_bound(Ctx* c, double t, long* probes) noexcept nogil:
    cdef double lw, big_x, ek
    cdef double complex sk
    if c.kind == KIND_COSH_POW:
        lw = c.p * log(cosh(t)) if c.p != 0 else 0.0
    elif c.kind == KIND_SINH_POW:
        if c.p == 0:
            lw = 0.0
        elif t > 0.0:
            lw = c.p * log(sinh(t))
        else:
            return -INFINITY
    else:
        lw = _log_cosh(c.p * t)
    big_x = c.z.real * cosh(t)
    _scaled_k(c.nu, big_x, PROBE_TOL, c.max_depth, c.eps, &sk, &ek, probes)
    if sk.real <= 0.0:
        return -INFINITY
    return lw - big_x + log(sk.real)


cdef double _truncate(Ctx* c, bint outer, double step, double* tail, long* probes) noexcept nogil:
    cdef double running = 0.0, u = 0.0, prev, cur
    if outer:
        prev = exp(_outer_log_bound(c, 0.0, probes))
    else:
        prev = exp(_inner_log_bound(c.nu, c.x.real, 0.0))
    while u < U_MAX:
        u += step
        if outer:
            cur = exp(_outer_log_bound(c, u, probes))
        else:
            cur = exp(_inner_log_bound(c.nu, c.x.real, u))
        running += 0.5 * step * (prev + cur)
        if running > 0.0 and cur <= prev and cur <= c.eps * running:
            tail[0] = cur * step
            return u
        prev = cur
    tail[0] = prev * step
    return U_MAX


cdef int _scaled_k(double nu, double complex x, double tol, int max_depth, double eps,
                   double complex* val, double* err, long* nevals) noexcept nogil:
    cdef Ctx c
    cdef double step, upper, tail
    cdef int status
    c.outer = False
    c.nu = nu
    c.x = x
    c.max_depth = max_depth
    c.eps = eps
    c.nevals = 0
    step = 1.0 / sqrt(x.real)
    if step > 0.5:
        step = 0.5
    upper = _truncate(&c, False, step, &tail, nevals)
    status = _adaptive(&c, 0.0, upper, tol, val, err)
    err[0] = err[0] + tail
    nevals[0] += c.nevals
    return status


def k_nu(double nu, double xr, double xi, double tol, int max_depth, double eps):
    cdef double complex s, v, ex
    cdef double e
    cdef long nev = 0
    cdef int status
    cdef double complex x = xr + 1j * xi
    with nogil:
        status = _scaled_k(fabs(nu), x, tol, max_depth, eps, &s, &e, &nev)
    ex = cexp(-x)
    v = ex * s
    return v.real, v.imag, cabs(ex) * e, nev, status


def weighted_k_integral(int kind, double p, double nu, double zr, double zi,
                        double tol, int max_depth, double eps):
    cdef Ctx c
    cdef double step, upper, tail, err
    cdef double complex val
    cdef long probes = 0
    cdef int status
    c.outer = True
    c.nu = fabs(nu)
    c.kind = kind
    c.p = p
    c.z = zr + 1j * zi
    c.inner_tol = INNER_TOL_FRACTION * tol
    c.max_depth = max_depth
    c.eps = eps
    c.nevals = 0
    with nogil:
        step = 1.0 / sqrt(zr)
        if step > 0.5:
            step = 0.5
        upper = _truncate(&c, True, step, &tail, &probes)
        status = _adaptive(&c, 0.0, upper, tol, &val, &err)
    return val.real, val.imag, err + tail, c.nevals + probes, status
