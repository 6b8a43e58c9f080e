#include "ctsurf/foliation.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ctsurf {

namespace {

constexpr double kRegionTol = 1e-12;

// p_len below which the 1/d part of the integrand is split off and
// integrated semi-analytically (d(x) ~ tanh(p) cosh(x) to second order).
constexpr double kTinySeed = 1e-8;

double region_d(double x, const QuadFoliation& f) { return d_h(x, f.p_len); }

// atanh(u) - u without cancellation (series below u = 0.5)
double atanh_minus_u(double u) {
    if (u > 0.5) return std::atanh(u) - u;
    const double u2 = u * u;
    double term = u * u2;
    double sum = 0.0;
    for (int k = 1; k < 60; ++k) {
        const double inc = term / double(2 * k + 1);
        sum += inc;
        if (inc < 1e-18 * sum) break;
        term *= u2;
    }
    return sum;
}

}  // namespace

QuadFoliation::QuadFoliation(double p, double o, double m)
    : p_len(p), o_len(o), mass(m) {
    if (!(p > 0.0) || !std::isfinite(p))
        throw ValidationError("QuadFoliation: seed must be positive");
    if (!(o >= 0.0) || !std::isfinite(o))
        throw ValidationError("QuadFoliation: axis length must be nonnegative");
    if (!(std::tanh(p) * std::cosh(o) < 1.0))
        throw ValidationError(
            "QuadFoliation: tanh(p) cosh(o) reaches 1 in double precision; "
            "the far-side leaf depth is not representable at these lengths");
    if (!(m > 0.0 && m <= 1.0))
        throw ValidationError("QuadFoliation: mass outside (0, 1]");
}

double v_value(double x, double y, const QuadFoliation& f) {
    if (x < -kRegionTol || x > f.o_len * (1.0 + kRegionTol))
        throw DomainError("v_value: x outside [0, o_len]");
    const double d = region_d(std::clamp(x, 0.0, f.o_len), f);
    if (y < -kRegionTol || y > d * (1.0 + kRegionTol))
        throw DomainError("v_value: y outside [0, d_h(x)]");
    return std::clamp(y / d, 0.0, 1.0);
}

GradientSq v_gradient(double x, double y, const QuadFoliation& f) {
    if (x < 0.0 || x > f.o_len) throw DomainError("v_gradient: x outside region");
    const double tp = std::tanh(f.p_len);
    const double u = tp * std::cosh(x);
    const double d = checked_atanh(u);
    if (y < 0.0 || y > d) throw DomainError("v_gradient: y outside region");
    const double dd = tp * std::sinh(x) / (1.0 - u * u);  // d'(x)
    const double gx = y * dd / (d * d);
    return {gx * gx, 1.0 / (d * d)};
}

EnergyEstimate quad_dirichlet(const QuadFoliation& f, double rel_tol) {
    const double tp = std::tanh(f.p_len);

    const auto gx_part = [tp](double x) {
        const double u = tp * std::cosh(x);
        const double d = std::atanh(u);
        const double A = tp * std::sinh(x) / (1.0 - u * u);
        return A * A / (3.0 * d);
    };

    // a tolerance below the default floor lowers the floor with it
    const double floor = std::min(kQuadAbsFloor, rel_tol);
    double value = 0.0, error = 0.0;
    if (f.p_len < kTinySeed) {
        // 1/d = 1/(tp cosh x) + correction; the first part in closed form
        // (integral of sech is the gudermannian), the rest by quadrature.
        const double closed = std::atan(std::sinh(f.o_len)) / tp;
        const auto rest = [tp, &gx_part](double x) {
            const double u = tp * std::cosh(x);
            const double delta = atanh_minus_u(u);  // atanh(u) - u
            return gx_part(x) - delta / (u * (u + delta));
        };
        const QuadResult r = integrate(rest, 0.0, f.o_len, rel_tol, 2000,
                                       std::max(floor, rel_tol * closed));
        value = closed + r.value;
        error = r.error;
    } else {
        const auto integrand = [tp, &gx_part](double x) {
            const double u = tp * std::cosh(x);
            return gx_part(x) + 1.0 / std::atanh(u);
        };
        const QuadResult r = integrate(integrand, 0.0, f.o_len, rel_tol, 2000, floor);
        value = r.value;
        error = r.error;
    }

    const double b_far = d_h(f.o_len, f.p_len);
    const double c4 = std::pow(std::cosh(b_far), 4);
    const double bound = c4 * tp * std::sinh(f.o_len) / 3.0 +
                         0.5 * std::numbers::pi / std::tanh(f.p_len);

    const double m2 = f.mass * f.mass;
    return {m2 * value, m2 * bound, m2 * error};
}

PantsEnergySplit pants_dirichlet_split(const PantsTriple& t, double rel_tol) {
    const FrontGeometry g = front_geometry(t);
    const EnergyEstimate eP = quad_dirichlet({g.p, g.oP, 1.0}, rel_tol);
    const EnergyEstimate eR = quad_dirichlet({g.arc2, g.oR, 1.0}, rel_tol);
    const EnergyEstimate eQ = quad_dirichlet({g.q, g.oQ, 1.0}, rel_tol);
    const EnergyEstimate eS = quad_dirichlet({g.arc3, g.oS, 1.0}, rel_tol);
    PantsEnergySplit out;
    out.pr = {eP.numeric + eR.numeric, eP.analytic_bound + eR.analytic_bound,
              eP.quad_error + eR.quad_error};
    out.qs = {eQ.numeric + eS.numeric, eQ.analytic_bound + eS.analytic_bound,
              eQ.quad_error + eS.quad_error};
    return out;
}

EnergyEstimate pants_dirichlet(const PantsTriple& t, double rel_tol) {
    const PantsEnergySplit s = pants_dirichlet_split(t, rel_tol);
    const double bound =
        kPantsEnergy * (1.0 / t.l1 + 1.0 / t.l2 + 1.0 / t.l3);
    return {s.pr.numeric + s.qs.numeric, bound, s.pr.quad_error + s.qs.quad_error};
}

double side_measure(const QuadFoliation& f) { return f.mass; }

double qc_comparison_factor(double D) {
    if (!(D > 0.0)) throw DomainError("qc_comparison_factor: need D > 0");
    const long double t = D;
    const long double csch = 1.0L / std::sinh(t);
    const long double coth = std::cosh(t) / std::sinh(t);
    return double((1.0L + csch * csch) / (coth * csch));
}

}  // namespace ctsurf
