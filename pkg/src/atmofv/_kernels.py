"""Compiled kernels for the spatial operator pipeline.

All kernels work on plain float64 arrays laid out (ni, nj) with i the
x index and j the z index, ghost layers included on every side.
Conserved fields are (4, ni, nj) with components (rho, rho*u, rho*w,
rho*e). Errors are reported through a 4-slot int64 status array
(code, i, j, extra) decoded by the Python wrappers; kernels bail out
on the first failure.

Status codes:
    1 non-positive density          2 non-positive internal energy
    3 non-positive ghost state      4 degenerate hydrostatic profile
    5 non-positive reconstructed face state
    6 Roe sound-speed breakdown     7 degenerate HLLC wave structure
"""

import numpy as np
from numba import njit

# solver ids shared with riemann.SolverChoice
ROE_PIKE = 0
HLLC = 1
AUSM_UP = 2
HLLC_AUSM = 3


# ---------------------------------------------------------------------------
# primitives and hydrostatic profiles
# ---------------------------------------------------------------------------

@njit(cache=True)
def primitives(q, zc, c_v, R, g, rho, u, w, p, T, i0, i1, j0, j1, status):
    for i in range(i0, i1):
        for j in range(j0, j1):
            r = q[0, i, j]
            if not r > 0.0:
                status[0] = 1; status[1] = i; status[2] = j
                return
            ui = q[1, i, j] / r
            wi = q[2, i, j] / r
            U = q[3, i, j] / r - 0.5 * (ui * ui + wi * wi) - g * zc[j]
            if not U > 0.0:
                status[0] = 2; status[1] = i; status[2] = j
                return
            rho[i, j] = r
            u[i, j] = ui
            w[i, j] = wi
            T[i, j] = U / c_v
            p[i, j] = r * R * T[i, j]


@njit(cache=True)
def refresh_profiles(rho, p, gam, rho0, p0, Pc, rgm1, i0, i1, j0, j1):
    # anchor the local polytrope at the current cell averages, so the
    # cell-center perturbations vanish identically
    for i in range(i0, i1):
        for j in range(j0, j1):
            r = rho[i, j]
            rg = r ** (gam - 1.0)
            rho0[i, j] = r
            p0[i, j] = p[i, j]
            rgm1[i, j] = rg
            Pc[i, j] = p[i, j] / (r * rg)


@njit(inline="always")
def _profile_eval(rho0_c, p0_c, rgm1_c, Pc, dz_rel, gam, g):
    """Local polytrope at offset dz_rel from the anchoring cell center.

    Returns (rho0, p0); rho0 < 0 flags a non-positive root argument.
    """
    gdz = g * dz_rel
    if gdz == 0.0:
        return rho0_c, p0_c
    base = rgm1_c - (gam - 1.0) / gam * gdz / Pc
    if base <= 0.0:
        return -1.0, -1.0
    r = base ** (1.0 / (gam - 1.0))
    return r, Pc * base * r


@njit(cache=True)
def fill_ghosts(q, rho, u, w, p, T, rho0, p0, Pc, rgm1, zc,
                ng, c_v, R, g, gam, update_profiles, status):
    ni = rho.shape[0]
    nj = rho.shape[1]

    # x walls: ghost and mirror sit at the same height, so the profile
    # reference cancels and totals are copied with u reflected
    for l in range(ng):
        for side in range(2):
            if side == 0:
                ig = ng - 1 - l
                im = ng + l
            else:
                ig = ni - ng + l
                im = ni - ng - 1 - l
            for j in range(ng, nj - ng):
                rho[ig, j] = rho[im, j]
                u[ig, j] = -u[im, j]
                w[ig, j] = w[im, j]
                p[ig, j] = p[im, j]
                T[ig, j] = T[im, j]
                q[0, ig, j] = q[0, im, j]
                q[1, ig, j] = -q[1, im, j]
                q[2, ig, j] = q[2, im, j]
                q[3, ig, j] = q[3, im, j]
                if update_profiles == 1:
                    rho0[ig, j] = rho0[im, j]
                    p0[ig, j] = p0[im, j]
                    Pc[ig, j] = Pc[im, j]
                    rgm1[ig, j] = rgm1[im, j]

    # z walls: perturbations relative to the wall-adjacent cell profile,
    # extended analytically across the wall, are mirrored; w reflected
    for i in range(ni):
        for l in range(ng):
            for side in range(2):
                if side == 0:
                    jg = ng - 1 - l
                    jm = ng + l
                    ja = ng
                else:
                    jg = nj - ng + l
                    jm = nj - ng - 1 - l
                    ja = nj - ng - 1
                ra, pa = _profile_eval(rho0[i, ja], p0[i, ja], rgm1[i, ja],
                                       Pc[i, ja], zc[jm] - zc[ja], gam, g)
                rg_, pg_ = _profile_eval(rho0[i, ja], p0[i, ja], rgm1[i, ja],
                                         Pc[i, ja], zc[jg] - zc[ja], gam, g)
                if ra < 0.0 or rg_ < 0.0:
                    status[0] = 4; status[1] = i; status[2] = ja
                    return
                rnew = rg_ + (rho[i, jm] - ra)
                pnew = pg_ + (p[i, jm] - pa)
                if rnew <= 0.0 or pnew <= 0.0:
                    status[0] = 3; status[1] = i; status[2] = jg
                    return
                un = u[i, jm]
                wn = -w[i, jm]
                Tn = pnew / (R * rnew)
                rho[i, jg] = rnew
                u[i, jg] = un
                w[i, jg] = wn
                p[i, jg] = pnew
                T[i, jg] = Tn
                q[0, i, jg] = rnew
                q[1, i, jg] = rnew * un
                q[2, i, jg] = rnew * wn
                q[3, i, jg] = rnew * (c_v * Tn + 0.5 * (un * un + wn * wn)
                                      + g * zc[jg])
                if update_profiles == 1:
                    rgn = rnew ** (gam - 1.0)
                    rho0[i, jg] = rnew
                    p0[i, jg] = pnew
                    rgm1[i, jg] = rgn
                    Pc[i, jg] = pnew / (rnew * rgn)


# ---------------------------------------------------------------------------
# MUSCL reconstruction
# ---------------------------------------------------------------------------

@njit(inline="always")
def _mc(a, b):
    # monotonized central limiter: minmod(2a, (a+b)/2, 2b), zero at extrema
    if a * b <= 0.0:
        return 0.0
    m = 0.5 * abs(a + b)
    t = 2.0 * abs(a)
    if t < m:
        m = t
    t = 2.0 * abs(b)
    if t < m:
        m = t
    return m if a > 0.0 else -m


@njit(cache=True)
def slopes_x(rho, u, w, p, dx, ng, sx_rho, sx_u, sx_w, sx_p):
    # horizontal neighbours share z, so the perturbation slope reduces to
    # the plain limited difference of totals
    ni = rho.shape[0]
    nj = rho.shape[1]
    for i in range(1, ni - 1):
        for j in range(ng, nj - ng):
            sx_rho[i, j] = _mc((rho[i, j] - rho[i - 1, j]) / dx,
                               (rho[i + 1, j] - rho[i, j]) / dx)
            sx_u[i, j] = _mc((u[i, j] - u[i - 1, j]) / dx,
                             (u[i + 1, j] - u[i, j]) / dx)
            sx_w[i, j] = _mc((w[i, j] - w[i - 1, j]) / dx,
                             (w[i + 1, j] - w[i, j]) / dx)
            sx_p[i, j] = _mc((p[i, j] - p[i - 1, j]) / dx,
                             (p[i + 1, j] - p[i, j]) / dx)


@njit(cache=True)
def slopes_z(rho, u, w, p, rho0, p0, Pc, rgm1, dz, ng, gam, g,
             sz_rho, sz_u, sz_w, sz_p,
             rho0_dn, p0_dn, rho0_up, p0_up, status):
    """Vertical slopes of (rho', p') plus own-profile values at the two
    cell faces (z_c -+ dz/2), reused by face states and the source term."""
    ni = rho.shape[0]
    nj = rho.shape[1]
    for i in range(ng, ni - ng):
        for j in range(1, nj - 1):
            r0c = rho0[i, j]
            p0c = p0[i, j]
            rc = rgm1[i, j]
            Pcc = Pc[i, j]
            r_dn, q_dn = _profile_eval(r0c, p0c, rc, Pcc, -dz, gam, g)
            r_up, q_up = _profile_eval(r0c, p0c, rc, Pcc, dz, gam, g)
            rf_dn, pf_dn = _profile_eval(r0c, p0c, rc, Pcc, -0.5 * dz, gam, g)
            rf_up, pf_up = _profile_eval(r0c, p0c, rc, Pcc, 0.5 * dz, gam, g)
            if r_dn < 0.0 or r_up < 0.0 or rf_dn < 0.0 or rf_up < 0.0:
                status[0] = 4; status[1] = i; status[2] = j
                return
            rho0_dn[i, j] = rf_dn
            p0_dn[i, j] = pf_dn
            rho0_up[i, j] = rf_up
            p0_up[i, j] = pf_up

            ppc = p[i, j] - p0[i, j]
            rpc = rho[i, j] - rho0[i, j]
            sz_p[i, j] = _mc((ppc - (p[i, j - 1] - q_dn)) / dz,
                             ((p[i, j + 1] - q_up) - ppc) / dz)
            sz_rho[i, j] = _mc((rpc - (rho[i, j - 1] - r_dn)) / dz,
                               ((rho[i, j + 1] - r_up) - rpc) / dz)
            sz_u[i, j] = _mc((u[i, j] - u[i, j - 1]) / dz,
                             (u[i, j + 1] - u[i, j]) / dz)
            sz_w[i, j] = _mc((w[i, j] - w[i, j - 1]) / dz,
                             (w[i, j + 1] - w[i, j]) / dz)


# ---------------------------------------------------------------------------
# Riemann solver cores, written in the face-normal frame
# (un normal velocity, ut tangential; h total enthalpy without gravity)
# ---------------------------------------------------------------------------

@njit(inline="always")
def _roe(rhoL, unL, utL, pL, hL, rhoR, unR, utR, pR, hR, phi, gam):
    fmL = rhoL * unL
    fmR = rhoR * unR
    sqL = np.sqrt(rhoL)
    sqR = np.sqrt(rhoR)
    rs = 1.0 / (sqL + sqR)
    unt = (sqL * unL + sqR * unR) * rs
    utt = (sqL * utL + sqR * utR) * rs
    ht = (sqL * hL + sqR * hR) * rs
    Kt = 0.5 * (unt * unt + utt * utt)
    a2 = (gam - 1.0) * (ht - Kt)
    if a2 <= 0.0:
        return 0.0, 0.0, 0.0, 0.0, False
    at = np.sqrt(a2)
    rhot = sqL * sqR

    dp = pR - pL
    dun = unR - unL
    dut = utR - utL
    drho = rhoR - rhoL
    al1 = (dp - rhot * at * dun) / (2.0 * a2)
    al2 = drho - dp / a2
    al4 = rhot * dut
    al5 = (dp + rhot * at * dun) / (2.0 * a2)
    l1 = abs(unt - at)
    l2 = abs(unt)
    l5 = abs(unt + at)

    w1 = al1 * l1
    w2 = al2 * l2
    w4 = al4 * l2
    w5 = al5 * l5
    d0 = w1 + w2 + w5
    d1 = w1 * (unt - at) + w2 * unt + w5 * (unt + at)
    d2 = (w1 + w2 + w5) * utt + w4
    d3 = (w1 * (ht - unt * at) + w2 * Kt + w4 * utt
          + w5 * (ht + unt * at))

    fm = 0.5 * (fmL + fmR) - 0.5 * d0
    fn = 0.5 * (fmL * unL + pL + fmR * unR + pR) - 0.5 * d1
    ft = 0.5 * (fmL * utL + fmR * utR) - 0.5 * d2
    fe = 0.5 * (fmL * (hL + phi) + fmR * (hR + phi)) - 0.5 * d3
    return fm, fn, ft, fe, True


@njit(inline="always")
def _hllc_waves(rhoL, unL, pL, rhoR, unR, pR, gam):
    aL = np.sqrt(gam * pL / rhoL)
    aR = np.sqrt(gam * pR / rhoR)
    SL = unL - aL
    SR = unR + aR
    num = (pR - pL) + rhoL * unL * (SL - unL) - rhoR * unR * (SR - unR)
    den = rhoL * (SL - unL) - rhoR * (SR - unR)
    Sst = num / den
    pst = rhoR * (unR - SR) * (unR - Sst) + pR
    return SL, SR, Sst, pst


@njit(inline="always")
def _hllc(rhoL, unL, utL, pL, hL, rhoR, unR, utR, pR, hR, phi, gam):
    SL, SR, Sst, pst = _hllc_waves(rhoL, unL, pL, rhoR, unR, pR, gam)
    if SL >= 0.0:
        fm = rhoL * unL
        return fm, fm * unL + pL, fm * utL, fm * (hL + phi), True
    if SR <= 0.0:
        fm = rhoR * unR
        return fm, fm * unR + pR, fm * utR, fm * (hR + phi), True
    if Sst >= 0.0:
        rhoa, una, uta, pa, ha, Sa = rhoL, unL, utL, pL, hL, SL
    else:
        rhoa, una, uta, pa, ha, Sa = rhoR, unR, utR, pR, hR, SR
    if Sa == Sst:
        return 0.0, 0.0, 0.0, 0.0, False
    ea = ha - pa / rhoa + phi
    coef = rhoa * (Sa - una) / (Sa - Sst)
    est = ea + (Sst - una) * (Sst + pa / (rhoa * (Sa - una)))
    fma = rhoa * una
    fm = fma + Sa * (coef - rhoa)
    fn = fma * una + pa + Sa * (coef * Sst - rhoa * una)
    ft = fma * uta + Sa * (coef - rhoa) * uta
    fe = (rhoa * ea + pa) * una + Sa * (coef * est - rhoa * ea)
    return fm, fn, ft, fe, True


@njit(inline="always")
def _mach_split_plus(M, cb):
    if abs(M) >= 1.0:
        return 0.5 * (M + abs(M))
    m2p = 0.25 * (M + 1.0) * (M + 1.0)
    m2m = -0.25 * (M - 1.0) * (M - 1.0)
    return m2p * (1.0 - cb * m2m)


@njit(inline="always")
def _mach_split_minus(M, cb):
    if abs(M) >= 1.0:
        return 0.5 * (M - abs(M))
    m2p = 0.25 * (M + 1.0) * (M + 1.0)
    m2m = -0.25 * (M - 1.0) * (M - 1.0)
    return m2m * (1.0 + cb * m2p)


@njit(inline="always")
def _press_split_plus(M):
    if abs(M) >= 1.0:
        return 0.5 * (M + abs(M)) / M
    m2p = 0.25 * (M + 1.0) * (M + 1.0)
    m2m = -0.25 * (M - 1.0) * (M - 1.0)
    return m2p * ((2.0 - M) - 3.0 * M * m2m)


@njit(inline="always")
def _press_split_minus(M):
    if abs(M) >= 1.0:
        return 0.5 * (M - abs(M)) / M
    m2p = 0.25 * (M + 1.0) * (M + 1.0)
    m2m = -0.25 * (M - 1.0) * (M - 1.0)
    return m2m * ((-2.0 - M) + 3.0 * M * m2p)


@njit(inline="always")
def _ausm_interface(rhoL, unL, pL, rhoR, unR, pR, gam, kp, ku, sig, minf2, cb):
    """Shared AUSM machinery: interface pressure and low-Mach scalings."""
    aL = np.sqrt(gam * pL / rhoL)
    aR = np.sqrt(gam * pR / rhoR)
    a12 = 0.5 * (aL + aR)
    ML = unL / a12
    MR = unR / a12
    M2b = 0.5 * (unL * unL + unR * unR) / (a12 * a12)
    Mo2 = M2b if M2b > minf2 else minf2
    if Mo2 > 1.0:
        Mo2 = 1.0
    Mo = np.sqrt(Mo2)
    fa = Mo * (2.0 - Mo)
    pu = (-ku * _press_split_plus(ML) * _press_split_minus(MR)
          * (rhoL + rhoR) * fa * a12 * (unR - unL))
    pt = _press_split_plus(ML) * pL + _press_split_minus(MR) * pR + pu
    return a12, ML, MR, M2b, fa, pt


@njit(inline="always")
def _ausm_up(rhoL, unL, utL, pL, hL, rhoR, unR, utR, pR, hR, phi, gam,
             kp, ku, sig, minf2, cb):
    a12, ML, MR, M2b, fa, pt = _ausm_interface(
        rhoL, unL, pL, rhoR, unR, pR, gam, kp, ku, sig, minf2, cb)
    dpres = 1.0 - sig * M2b
    if dpres < 0.0:
        dpres = 0.0
    Mp = -(kp / fa) * dpres * (pR - pL) / (0.5 * (rhoL + rhoR) * a12 * a12)
    Mt = _mach_split_plus(ML, cb) + _mach_split_minus(MR, cb) + Mp
    mdot = a12 * Mt * (rhoL if Mt > 0.0 else rhoR)
    mp = 0.5 * (mdot + abs(mdot))
    mm = 0.5 * (mdot - abs(mdot))
    fm = mdot
    fn = mp * unL + mm * unR + pt
    ft = mp * utL + mm * utR
    fe = mp * (hL + phi) + mm * (hR + phi)
    return fm, fn, ft, fe, True


@njit(inline="always")
def _hllc_ausm(rhoL, unL, utL, pL, hL, rhoR, unR, utR, pR, hR, phi, gam,
               kp, ku, sig, minf2, cb):
    SL, SR, Sst, pst = _hllc_waves(rhoL, unL, pL, rhoR, unR, pR, gam)
    a12, ML, MR, M2b, fa, pt = _ausm_interface(
        rhoL, unL, pL, rhoR, unR, pR, gam, kp, ku, sig, minf2, cb)
    if Sst > 0.0:
        if SL == Sst:
            return 0.0, 0.0, 0.0, 0.0, False
        rst = rhoL * (SL - unL) / (SL - Sst)
        mdot = rhoL * unL + SL * (rst - rhoL)
    else:
        if SR == Sst:
            return 0.0, 0.0, 0.0, 0.0, False
        rst = rhoR * (SR - unR) / (SR - Sst)
        mdot = rhoR * unR + SR * (rst - rhoR)
    HL = hL + phi + SL * (pst - pL) / (rhoL * (SL - unL))
    HR = hR + phi + SR * (pst - pR) / (rhoR * (SR - unR))
    mp = 0.5 * (mdot + abs(mdot))
    mm = 0.5 * (mdot - abs(mdot))
    fm = mdot
    fn = mp * unL + mm * unR + pt
    ft = mp * utL + mm * utR
    fe = mp * HL + mm * HR
    return fm, fn, ft, fe, True


@njit(inline="always")
def _solve(solver_id, rhoL, unL, utL, pL, hL, rhoR, unR, utR, pR, hR,
           phi, gam, kp, ku, sig, minf2, cb):
    if solver_id == 0:
        return _roe(rhoL, unL, utL, pL, hL, rhoR, unR, utR, pR, hR, phi, gam)
    elif solver_id == 1:
        return _hllc(rhoL, unL, utL, pL, hL, rhoR, unR, utR, pR, hR, phi, gam)
    elif solver_id == 2:
        return _ausm_up(rhoL, unL, utL, pL, hL, rhoR, unR, utR, pR, hR,
                        phi, gam, kp, ku, sig, minf2, cb)
    else:
        return _hllc_ausm(rhoL, unL, utL, pL, hL, rhoR, unR, utR, pR, hR,
                          phi, gam, kp, ku, sig, minf2, cb)


@njit(cache=True)
def flux_batch(solver_id, rhoL, unL, utL, pL, hL, rhoR, unR, utR, pR, hR,
               phi, gam, kp, ku, sig, minf2, cb, out, status):
    """Face-frame fluxes for a batch of independent Riemann problems."""
    for f in range(rhoL.shape[0]):
        fm, fn, ft, fe, ok = _solve(
            solver_id, rhoL[f], unL[f], utL[f], pL[f], hL[f],
            rhoR[f], unR[f], utR[f], pR[f], hR[f], phi[f],
            gam, kp, ku, sig, minf2, cb)
        if not ok:
            status[0] = 6 if solver_id == 0 else 7
            status[1] = f
            return
        out[0, f] = fm
        out[1, f] = fn
        out[2, f] = ft
        out[3, f] = fe


# ---------------------------------------------------------------------------
# face fluxes on the grid
# ---------------------------------------------------------------------------

@njit(cache=True)
def flux_x(rho, u, w, p, sx_rho, sx_u, sx_w, sx_p, zc, dx,
           ng, c_p, R, g, gam, solver_id, kp, ku, sig, minf2, cb,
           Fx, status):
    """Fluxes through vertical faces; face fi sits between owner cell
    i = ng-1+fi and its right neighbour. Normal is +x, tangent +z."""
    ni = rho.shape[0]
    nj = rho.shape[1]
    hx = 0.5 * dx
    for fi in range(ni - 2 * ng + 1):
        i = ng - 1 + fi
        for j in range(ng, nj - ng):
            rL = rho[i, j] + sx_rho[i, j] * hx
            uL = u[i, j] + sx_u[i, j] * hx
            wL = w[i, j] + sx_w[i, j] * hx
            pL = p[i, j] + sx_p[i, j] * hx
            rR = rho[i + 1, j] - sx_rho[i + 1, j] * hx
            uR = u[i + 1, j] - sx_u[i + 1, j] * hx
            wR = w[i + 1, j] - sx_w[i + 1, j] * hx
            pR = p[i + 1, j] - sx_p[i + 1, j] * hx
            if rL <= 0.0 or pL <= 0.0 or rR <= 0.0 or pR <= 0.0:
                status[0] = 5; status[1] = i; status[2] = j; status[3] = 0
                return
            hL = c_p * pL / (R * rL) + 0.5 * (uL * uL + wL * wL)
            hR = c_p * pR / (R * rR) + 0.5 * (uR * uR + wR * wR)
            phi = g * zc[j]
            fm, fn, ft, fe, ok = _solve(
                solver_id, rL, uL, wL, pL, hL, rR, uR, wR, pR, hR,
                phi, gam, kp, ku, sig, minf2, cb)
            if not ok:
                status[0] = 6 if solver_id == 0 else 7
                status[1] = i; status[2] = j; status[3] = 0
                return
            Fx[0, fi, j - ng] = fm
            Fx[1, fi, j - ng] = fn
            Fx[2, fi, j - ng] = ft
            Fx[3, fi, j - ng] = fe


@njit(cache=True)
def flux_z(rho, u, w, p, rho0, p0, sz_rho, sz_u, sz_w, sz_p,
           rho0_dn, p0_dn, rho0_up, p0_up, z0, dz,
           ng, c_p, R, g, gam, solver_id, kp, ku, sig, minf2, cb,
           Fz, status):
    """Fluxes through horizontal faces; face fj sits between owner cell
    j = ng-1+fj and the cell above. Normal is +z, tangent +x."""
    ni = rho.shape[0]
    nj = rho.shape[1]
    hz = 0.5 * dz
    for i in range(ng, ni - ng):
        for fj in range(nj - 2 * ng + 1):
            j = ng - 1 + fj
            zf = z0 + fj * dz
            # owner reconstructs up to its top face, neighbour down
            rL = rho0_up[i, j] + (rho[i, j] - rho0[i, j]) + sz_rho[i, j] * hz
            pL = p0_up[i, j] + (p[i, j] - p0[i, j]) + sz_p[i, j] * hz
            uL = u[i, j] + sz_u[i, j] * hz
            wL = w[i, j] + sz_w[i, j] * hz
            jn = j + 1
            rR = (rho0_dn[i, jn] + (rho[i, jn] - rho0[i, jn])
                  - sz_rho[i, jn] * hz)
            pR = p0_dn[i, jn] + (p[i, jn] - p0[i, jn]) - sz_p[i, jn] * hz
            uR = u[i, jn] - sz_u[i, jn] * hz
            wR = w[i, jn] - sz_w[i, jn] * hz
            if rL <= 0.0 or pL <= 0.0 or rR <= 0.0 or pR <= 0.0:
                status[0] = 5; status[1] = i; status[2] = j; status[3] = 1
                return
            hL = c_p * pL / (R * rL) + 0.5 * (uL * uL + wL * wL)
            hR = c_p * pR / (R * rR) + 0.5 * (uR * uR + wR * wR)
            phi = g * zf
            # normal velocity is w, tangential is u
            fm, fn, ft, fe, ok = _solve(
                solver_id, rL, wL, uL, pL, hL, rR, wR, uR, pR, hR,
                phi, gam, kp, ku, sig, minf2, cb)
            if not ok:
                status[0] = 6 if solver_id == 0 else 7
                status[1] = i; status[2] = j; status[3] = 1
                return
            Fz[0, i - ng, fj] = fm
            Fz[1, i - ng, fj] = ft
            Fz[2, i - ng, fj] = fn
            Fz[3, i - ng, fj] = fe


@njit(cache=True)
def combine_rhs(Fx, Fz, p0_dn, p0_up, u, w, T, dx, dz, ng,
                mu_a, c_p, Pr, rhs):
    """Flux divergence + well-balanced source + artificial diffusion."""
    ni = u.shape[0]
    nj = u.shape[1]
    diff_e = c_p * mu_a / Pr
    for i in range(ng, ni - ng):
        ii = i - ng
        for j in range(ng, nj - ng):
            jj = j - ng
            for c in range(4):
                rhs[c, i, j] = (-(Fx[c, ii + 1, jj] - Fx[c, ii, jj]) / dx
                                - (Fz[c, ii, jj + 1] - Fz[c, ii, jj]) / dz)
            # gravity source via the own-cell profile at the two z faces
            rhs[2, i, j] += (p0_up[i, j] - p0_dn[i, j]) / dz
            if mu_a > 0.0:
                lap_u = ((u[i + 1, j] - 2.0 * u[i, j] + u[i - 1, j]) / (dx * dx)
                         + (u[i, j + 1] - 2.0 * u[i, j] + u[i, j - 1]) / (dz * dz))
                lap_w = ((w[i + 1, j] - 2.0 * w[i, j] + w[i - 1, j]) / (dx * dx)
                         + (w[i, j + 1] - 2.0 * w[i, j] + w[i, j - 1]) / (dz * dz))
                lap_T = ((T[i + 1, j] - 2.0 * T[i, j] + T[i - 1, j]) / (dx * dx)
                         + (T[i, j + 1] - 2.0 * T[i, j] + T[i, j - 1]) / (dz * dz))
                rhs[1, i, j] += mu_a * lap_u
                rhs[2, i, j] += mu_a * lap_w
                rhs[3, i, j] += diff_e * lap_T


@njit(cache=True)
def rk4_combine(q, k1, k2, k3, k4, dt, out):
    n = q.size
    qf = q.reshape(n)
    a = k1.reshape(n)
    b = k2.reshape(n)
    c = k3.reshape(n)
    d = k4.reshape(n)
    o = out.reshape(n)
    s = dt / 6.0
    for m in range(n):
        o[m] = qf[m] + s * (a[m] + 2.0 * b[m] + 2.0 * c[m] + d[m])


@njit(cache=True)
def axpy(q, a, k, out):
    n = q.size
    qf = q.reshape(n)
    kf = k.reshape(n)
    o = out.reshape(n)
    for m in range(n):
        o[m] = qf[m] + a * kf[m]
