#!/usr/bin/env python3
"""High-precision reference values for the hyperbolic-trig kernel and the
energy evaluator.

Everything here is computed at >= 50 significant digits with mpmath and is
independent of the C++ implementation:

  * right-angled hexagons are solved by SL(2,R) frame marching (walk the six
    sides, turn 90 degrees at each corner, require the composed isometry to
    close up), not by the trig identities the library uses;
  * orthogeodesic feet are found by normalizing a geodesic to the imaginary
    axis and dropping Euclidean-free perpendiculars;
  * the reduced 1-D energy integrand is integrated with tanh-sinh quadrature,
    and cross-checked against a raw 2-D integral over the region.

The frozen values consumed by the C++ tests live in
tests/data/highprec_reference.json.  Regenerate with

    python3 tools/highprec_reference.py --json tests/data/highprec_reference.json

and verify an existing file with

    python3 tools/highprec_reference.py --check tests/data/highprec_reference.json
"""

import argparse
import json
import sys

from mpmath import mp, mpf, mpc, matrix, sqrt, sinh, cosh, tanh, asinh, acosh, atanh, atan, exp, log, sin, cos, tan, pi, quad, findroot, legendre, isfinite

mp.dps = 60

TARGET_DIGITS = 48  # agreement required between independent routes


# ----------------------------------------------------------------------
# closed forms used by the library (to be validated here)
# ----------------------------------------------------------------------

def cf_cosh_o12(l1, l2, l3):
    return cosh(l3 / 2) / (sinh(l1 / 2) * sinh(l2 / 2)) + cosh(l1 / 2) / sinh(l1 / 2) * cosh(l2 / 2) / sinh(l2 / 2)


def cf_arc_p(l1, l2, l3):
    return atanh(sinh(l1 / 2) / (cosh(l3 / 2) / cosh(l2 / 2) + cosh(l1 / 2)))


def cf_front(l1, l2, l3):
    """Full derived-arc chain from the closed forms."""
    p = cf_arc_p(l1, l2, l3)
    q = cf_arc_p(l1, l3, l2)
    o12 = acosh(cf_cosh_o12(l1, l2, l3))
    o13 = acosh(cf_cosh_o12(l1, l3, l2))
    a1 = asinh(cosh(l2 / 2) / sinh(p))
    s = asinh(cosh(p) / sinh(l2 / 2))
    b1p = asinh(sinh(p) * cosh(a1))
    b1q = asinh(sinh(q) * cosh(a1))
    oP = acosh(tanh(b1p) / tanh(p))
    oQ = acosh(tanh(b1q) / tanh(q))
    oR = acosh(tanh(b1p) / tanh(l2 / 2))
    oS = acosh(tanh(b1q) / tanh(l3 / 2))
    return dict(p=p, q=q, o12=o12, o13=o13, a1=a1, s=s, b1p=b1p, b1q=b1q,
                oP=oP, oQ=oQ, oR=oR, oS=oS, arc2=l2 / 2, arc3=l3 / 2)


# ----------------------------------------------------------------------
# independent construction: SL(2,R) marching in the upper half-plane
# ----------------------------------------------------------------------

def mat_T(t):
    """Translation by t along the imaginary axis."""
    return matrix([[exp(t / 2), 0], [0, exp(-t / 2)]])


def mat_R(theta):
    """Rotation by theta about i (counterclockwise on tangent vectors)."""
    c, s = cos(theta / 2), sin(theta / 2)
    return matrix([[c, s], [-s, c]])


def moebius(m, z):
    if z == mpf('inf'):
        return m[0, 0] / m[1, 0] if m[1, 0] != 0 else mpf('inf')
    den = m[1, 0] * z + m[1, 1]
    if den == 0:
        return mpf('inf')
    return (m[0, 0] * z + m[0, 1]) / den


def hexagon_closure(l1, l2, l3, x):
    """Residual of the closed-walk condition for side lengths
    (l1/2, o13, l3/2, o23, l2/2, o12) with right-angle turns."""
    o12, o23, o13 = x
    sides = [l1 / 2, o13, l3 / 2, o23, l2 / 2, o12]
    m = matrix([[1, 0], [0, 1]])
    for t in sides:
        m = m * mat_T(t) * mat_R(pi / 2)
    # m must be +-identity: off-diagonals vanish, diagonals agree
    return [m[0, 1], m[1, 0], m[0, 0] - m[1, 1]]


def solve_hexagon(l1, l2, l3):
    guess = (acosh(cf_cosh_o12(l1, l2, l3)),
             acosh(cf_cosh_o12(l2, l3, l1)),
             acosh(cf_cosh_o12(l1, l3, l2)))
    sol = findroot(lambda a, b, c: hexagon_closure(l1, l2, l3, (a, b, c)),
                   guess, tol=mpf(10) ** (-2 * TARGET_DIGITS))
    return sol[0], sol[1], sol[2]


def hexagon_frames(l1, l2, l3, o12, o23, o13):
    """Frames at the start of each side, walking
    alpha1-half -> o13 -> alpha3-half -> o23 -> alpha2-half -> o12."""
    sides = [l1 / 2, o13, l3 / 2, o23, l2 / 2, o12]
    frames = []
    m = matrix([[1, 0], [0, 1]])
    for t in sides:
        frames.append(m)
        m = m * mat_T(t) * mat_R(pi / 2)
    return sides, frames


def geodesic_endpoints(frame):
    return moebius(frame, mpf(0)), moebius(frame, mpf('inf'))


def dist_pts(z, w):
    return acosh(1 + (abs(z - w) ** 2) / (2 * z.imag * w.imag))


def normalize_to_axis(frame, z):
    """Coordinates of z in the chart where frame*axis is the imaginary axis."""
    inv = matrix([[frame[1, 1], -frame[0, 1]], [-frame[1, 0], frame[0, 0]]])
    return moebius(inv, z)


def common_perp_foot(frame_g1, frame_g2):
    """Foot on g1 of the common perpendicular between disjoint geodesics
    g1 = frame_g1 * axis and g2 = frame_g2 * axis, plus the distance."""
    a = normalize_to_axis(frame_g1, moebius(frame_g2, mpf(0)))
    b = normalize_to_axis(frame_g1, moebius(frame_g2, mpf('inf')))
    # both ideal endpoints are real in this chart
    a, b = a.real if isinstance(a, mpc) else a, b.real if isinstance(b, mpc) else b
    prod = a * b
    assert prod > 0, "geodesics intersect; no common perpendicular"
    foot_local = mpc(0, sqrt(prod))
    # inversive distance between axis (0, inf) and (a, b)
    coshd = abs(a + b) / abs(a - b)
    return moebius(frame_g1, foot_local), acosh(coshd)


def point_to_geodesic(frame_g, w):
    """Foot and distance of the perpendicular from point w to g = frame*axis."""
    z = normalize_to_axis(frame_g, w)
    d = asinh(abs(z.real) / z.imag)
    foot_local = mpc(0, abs(z))
    return moebius(frame_g, foot_local), d


def marching_front(l1, l2, l3):
    """Fully geometric computation of the derived arcs."""
    o12, o23, o13 = solve_hexagon(l1, l2, l3)
    sides, frames = hexagon_frames(l1, l2, l3, o12, o23, o13)
    f_a1h, f_o13, f_a3h, f_o23, f_a2h, f_o12 = frames
    # corners (start point of each side)
    c_a1_o12 = moebius(f_a1h, mpc(0, 1))      # alpha1 ^ o12 (walk start)
    c_a1_o13 = moebius(f_o13, mpc(0, 1))      # alpha1 ^ o13
    c_o23_a2 = moebius(f_a2h, mpc(0, 1))      # o23 ^ alpha2
    c_a2_o12 = moebius(f_o12, mpc(0, 1))      # alpha2 ^ o12

    # a1: common perpendicular alpha1 -> o23
    foot_on_a1, a1 = common_perp_foot(f_a1h, f_o23)
    foot_on_o23, a1_check = common_perp_foot(f_o23, f_a1h)
    assert abs(a1 - a1_check) < mpf(10) ** (-TARGET_DIGITS)

    p = dist_pts(c_a1_o12, foot_on_a1)
    q = dist_pts(c_a1_o13, foot_on_a1)
    s = dist_pts(foot_on_o23, c_o23_a2)

    # b1: perpendicular from (a1 ^ o23) to o12
    foot_on_o12, b1 = point_to_geodesic(f_o12, foot_on_o23)
    oP = dist_pts(c_a1_o12, foot_on_o12)
    oR = dist_pts(c_a2_o12, foot_on_o12)

    return dict(o12=o12, o23=o23, o13=o13, a1=a1, p=p, q=q, s=s,
                b1=b1, oP=oP, oR=oR)


# ----------------------------------------------------------------------
# energy integrals
# ----------------------------------------------------------------------

def d_h(x, p):
    return atanh(tanh(p) * cosh(x))


def quad_energy_1d(p, olen):
    tp = tanh(p)

    def integrand(x):
        u = tp * cosh(x)
        d = atanh(u)
        A = tp * sinh(x) / (1 - u * u)
        return A * A / (3 * d) + 1 / d

    # integrand is steep near x=0 for tiny p; split the range
    return quad(integrand, [0, min(olen, mpf(1)), olen] if olen > 1 else [0, olen])


def quad_energy_2d(p, olen):
    tp = tanh(p)

    def inner(x):
        u = tp * cosh(x)
        d = atanh(u)
        ddx = tp * sinh(x) / (1 - u * u)

        def f(y):
            gx = -y * ddx / (d * d)
            gy = 1 / d
            return gx * gx + gy * gy

        return quad(f, [0, d])

    return quad(inner, [0, olen])


def pants_energy(l1, l2, l3):
    fg = cf_front(l1, l2, l3)
    eP = quad_energy_1d(fg['p'], fg['oP'])
    eR = quad_energy_1d(l2 / 2, fg['oR'])
    eQ = quad_energy_1d(fg['q'], fg['oQ'])
    eS = quad_energy_1d(l3 / 2, fg['oS'])
    return eP, eR, eQ, eS, eP + eR + eQ + eS


# ----------------------------------------------------------------------
# Gauss-Legendre nodes for the C++ quadrature kernel
# ----------------------------------------------------------------------

def gauss_legendre(n):
    out = []
    for k in range(1, n + 1):
        x = cos(pi * (k - mpf(1) / 4) / (n + mpf(1) / 2))
        for _ in range(80):
            Pn = legendre(n, x)
            Pm = legendre(n - 1, x)
            dP = n * (x * Pn - Pm) / (x * x - 1)
            dx = Pn / dP
            x -= dx
            if abs(dx) < mpf(10) ** (-56):
                break
        w = 2 / ((1 - x * x) * dP * dP)
        out.append((x, w))
    out.sort(key=lambda t: t[0])
    return out


# ----------------------------------------------------------------------
# validation sweeps
# ----------------------------------------------------------------------

def check(label, delta, tol_digits=TARGET_DIGITS):
    ok = abs(delta) < mpf(10) ** (-tol_digits)
    print("%-58s %s  (residual %.3e)" % (label, "ok" if ok else "FAIL", float(abs(delta))))
    return ok


def validate(triples):
    all_ok = True
    for (l1, l2, l3) in triples:
        geo = marching_front(l1, l2, l3)
        cf = cf_front(l1, l2, l3)
        tag = "(%g,%g,%g)" % (l1, l2, l3)
        all_ok &= check("hexagon o12 closed form vs marching %s" % tag, geo['o12'] - cf['o12'])
        all_ok &= check("hexagon o13 closed form vs marching %s" % tag, geo['o13'] - cf['o13'])
        all_ok &= check("arc p closed form vs marching %s" % tag, geo['p'] - cf['p'])
        all_ok &= check("p + q = l1/2 %s" % tag, geo['p'] + geo['q'] - l1 / 2)
        all_ok &= check("a1 closed form vs marching %s" % tag, geo['a1'] - cf['a1'])
        all_ok &= check("s closed form vs marching %s" % tag, geo['s'] - cf['s'])
        all_ok &= check("b1 closed form vs marching %s" % tag, geo['b1'] - cf['b1p'])
        all_ok &= check("oP closed form vs marching %s" % tag, geo['oP'] - cf['oP'])
        all_ok &= check("oP + oR = o12 %s" % tag, geo['oP'] + geo['oR'] - geo['o12'])
        all_ok &= check("a1 via q-side: cosh(l3/2)/sinh(q) %s" % tag,
                        sinh(geo['a1']) - cosh(l3 / 2) / sinh(geo['q']))
        all_ok &= check("b1 second form sinh(l2/2)cosh(s) %s" % tag,
                        sinh(geo['b1']) - sinh(l2 / 2) * cosh(geo['s']))
        # R-quadrilateral seed: which cuff arc satisfies tanh b1 = tanh(seed) cosh(oR)?
        seed_half = tanh(l2 / 2) * cosh(geo['oR'])
        all_ok &= check("R seed = l2/2: tanh(l2/2)cosh(oR) = tanh(b1) %s" % tag,
                        seed_half - tanh(geo['b1']))
        swapped = atanh(1 / (cf_cosh_o12(l1, l2, l3) * tanh(l1 / 2)))
        mism = tanh(swapped) * cosh(geo['oR']) - tanh(geo['b1'])
        print("%-58s %s  (mismatch %.3e)" %
              ("R seed swapped-pentagon variant rejected %s" % tag,
               "ok" if abs(mism) > mpf(10) ** (-8) else "FAIL", float(abs(mism))))
        all_ok &= abs(mism) > mpf(10) ** (-8)
        # pentagon residual for the closed forms
        all_ok &= check("pentagon residual %s" % tag,
                        tanh(cf['p']) * cf_cosh_o12(l1, l2, l3) * tanh(l2 / 2) - 1)
        # d_h endpoints
        all_ok &= check("d_h(0) = p %s" % tag, d_h(0, cf['p']) - cf['p'])
        all_ok &= check("d_h(oP) = b1 %s" % tag, d_h(cf['oP'], cf['p']) - cf['b1p'])
    # relative-length monotonicity direction: l2 < l3 pushes p below l1/4
    l1 = mpf('0.1')
    p_small2 = cf_arc_p(l1, mpf('0.02'), mpf('0.08'))
    p_small3 = cf_arc_p(l1, mpf('0.08'), mpf('0.02'))
    print("%-58s %s" % ("l2 < l3  =>  p < l1/4 < q-side arc",
                        "ok" if p_small2 < l1 / 4 < p_small3 else "FAIL"))
    all_ok &= p_small2 < l1 / 4 < p_small3
    # equal-cuff degeneration of cosh(o12) for long cuffs
    big40 = cf_cosh_o12(mpf(40), mpf(40), mpf(40))
    big60 = cf_cosh_o12(mpf(60), mpf(60), mpf(60))
    lim_ok = abs(big40 - 1) < mpf('1e-8') and abs(big60 - 1) < abs(big40 - 1)
    print("%-58s %s  (value-1 = %.3e)" % ("cosh o12 -> 1 for long equal cuffs",
                                          "ok" if lim_ok else "FAIL", float(big40 - 1)))
    all_ok &= lim_ok
    # dilatation quotient equals cosh
    worst = mpf(0)
    for t in [mpf('1e-6'), mpf('0.1'), mpf('0.88137'), mpf(1), mpf(5), mpf(10)]:
        csch = 1 / sinh(t)
        coth = cosh(t) / sinh(t)
        worst = max(worst, abs((1 + csch ** 2) / (coth * csch) - cosh(t)))
    all_ok &= check("dilatation quotient equals cosh(-y)", worst)
    # energy: 2-D region integral vs reduced 1-D form (moderate precision)
    fg = cf_front(mpf('0.1'), mpf('0.1'), mpf('0.1'))
    e1 = quad_energy_1d(fg['p'], fg['oP'])
    old = mp.dps
    mp.dps = 30
    e2 = quad_energy_2d(fg['p'], fg['oP'])
    mp.dps = old
    all_ok &= check("2-D vs reduced 1-D energy (P quad, 0.1 triple)", (e1 - e2) / e1, 20)
    return all_ok


# ----------------------------------------------------------------------
# frozen values
# ----------------------------------------------------------------------

def nstr50(x):
    return mp.nstr(x, 50, strip_zeros=False)


def frozen_values():
    vals = {}
    vals['cosh_o12_0.1'] = nstr50(cf_cosh_o12(mpf('0.1'), mpf('0.1'), mpf('0.1')))
    vals['arc_p_0.1_0.05_0.2'] = nstr50(cf_arc_p(mpf('0.1'), mpf('0.05'), mpf('0.2')))
    fg = cf_front(mpf('0.1'), mpf('0.05'), mpf('0.2'))
    for k in ['p', 'q', 'o12', 'o13', 'a1', 's', 'b1p', 'b1q', 'oP', 'oQ', 'oR', 'oS']:
        vals['front_0.1_0.05_0.2_' + k] = nstr50(fg[k])
    vals['d_h_x1_p0.025'] = nstr50(d_h(mpf(1), mpf('0.025')))
    x = mpf('1e-6')
    vals['b1_limit_small'] = nstr50(asinh(sinh(x) * cosh(asinh(cosh(x) / sinh(x)))))
    vals['asinh_1'] = nstr50(asinh(mpf(1)))
    # energies
    fg1 = cf_front(mpf('0.1'), mpf('0.1'), mpf('0.1'))
    eP = quad_energy_1d(fg1['p'], fg1['oP'])
    vals['energy_P_0.1'] = nstr50(eP)
    eP2, eR2, eQ2, eS2, tot2 = pants_energy(mpf('0.1'), mpf('0.05'), mpf('0.2'))
    vals['energy_P_0.1_0.05_0.2'] = nstr50(eP2)
    vals['energy_R_0.1_0.05_0.2'] = nstr50(eR2)
    vals['energy_Q_0.1_0.05_0.2'] = nstr50(eQ2)
    vals['energy_S_0.1_0.05_0.2'] = nstr50(eS2)
    vals['energy_pants_0.1_0.05_0.2'] = nstr50(tot2)
    # qc
    w = exp(mpf('0.5')) * exp(mpc(0, 1) * atan(1 / sinh(mpf('0.3'))))
    vals['g_0.5_m0.3_re'] = nstr50(w.real)
    vals['g_0.5_m0.3_im'] = nstr50(w.imag)
    vals['cosh_1'] = nstr50(cosh(mpf(1)))
    vals['cosh_0.88137'] = nstr50(cosh(mpf('0.88137')))
    # trig gap samples
    def trig_gap(x, A):
        return sinh(x) / (A + cosh(x)) - tanh(x / (2 * A))
    vals['trig_gap_x0.01_A2'] = nstr50(trig_gap(mpf('0.01'), mpf(2)))
    vals['trig_gap_x0.01_A0.5'] = nstr50(trig_gap(mpf('0.01'), mpf('0.5')))
    # relative lengths
    p = cf_arc_p(mpf('0.1'), mpf('0.01'), mpf('0.02'))
    q = cf_arc_p(mpf('0.1'), mpf('0.02'), mpf('0.01'))
    vals['rel0_0.1_0.01_0.02'] = nstr50(p / mpf('0.05'))
    vals['rel1_0.1_0.01_0.02'] = nstr50(q / mpf('0.05'))
    # quadrature nodes
    for n in (7, 15):
        gl = gauss_legendre(n)
        vals['gl%d_nodes' % n] = [nstr50(x) for x, _ in gl]
        vals['gl%d_weights' % n] = [nstr50(w) for _, w in gl]
    return vals


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument('--json', help='write frozen values to this path')
    ap.add_argument('--check', help='verify frozen values in this path')
    ap.add_argument('--skip-validation', action='store_true')
    args = ap.parse_args()

    ok = True
    if not args.skip_validation:
        triples = [(mpf('0.1'), mpf('0.1'), mpf('0.1')),
                   (mpf('0.1'), mpf('0.05'), mpf('0.2')),
                   (mpf('1.3'), mpf('0.4'), mpf('0.9')),
                   (mpf('0.001'), mpf('0.002'), mpf('0.0005')),
                   (mpf('2'), mpf('1e-4'), mpf('0.3'))]
        ok = validate(triples)
        print()

    vals = frozen_values()
    if args.json:
        with open(args.json, 'w') as f:
            json.dump(vals, f, indent=1, sort_keys=True)
        print("wrote %s" % args.json)
    if args.check:
        with open(args.check) as f:
            ref = json.load(f)
        worst = mpf(0)
        for k, v in vals.items():
            a, b = ref.get(k), v
            if isinstance(v, list):
                for x, y in zip(a, b):
                    worst = max(worst, abs(mpf(x) - mpf(y)))
            else:
                worst = max(worst, abs(mpf(a) - mpf(b)))
        print("max frozen-value drift: %.3e" % float(worst))
        ok &= worst < mpf(10) ** (-45)
    if not ok:
        sys.exit(1)
    print("all reference checks passed")


if __name__ == '__main__':
    main()
