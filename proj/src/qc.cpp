#include "ctsurf/qc.hpp"

#include <cmath>
#include <string>

namespace ctsurf {

namespace {

long double csch_ext(long double t) {
    // extended precision; |t| < 1e-8 via the leading series of 1/sinh
    if (t < 1e-8L) return 1.0L / t - t / 6.0L;
    return 1.0L / std::sinh(t);
}

}  // namespace

std::complex<double> inverse_map_g(const FlatPoint& z) {
    if (z.y > 0.0) throw DomainError("inverse_map_g: y must be <= 0");
    const double r = std::exp(z.x);
    if (z.y == 0.0) return {0.0, r};
    const double theta = std::atan(double(csch_ext(-(long double)z.y)));
    return std::polar(r, theta);
}

FlatPoint forward_flatten(const std::complex<double>& w) {
    const double a = std::arg(w);
    if (!(a > 0.0 && a <= std::atan2(1.0, 0.0) + 1e-15))
        throw DomainError("forward_flatten: arg(w) outside (0, pi/2]");
    return {std::log(std::abs(w)), std::log(std::tan(0.5 * a))};
}

double dilatation_quoted(double minus_y) {
    const long double t = minus_y;
    const long double csch = csch_ext(t);
    const long double coth = std::cosh(t) / std::sinh(t);
    return double((1.0L + csch * csch) / (coth * csch));
}

double dilatation(const FlatPoint& z) {
    if (z.y > 0.0) throw DomainError("dilatation: y must be <= 0");
    if (z.y == 0.0) return 1.0;
    const double t = -z.y;
    const double quoted = dilatation_quoted(t);
    const double ch = std::cosh(t);
    if (std::abs(quoted - ch) > 1e-12 * std::max(1.0, ch))
        throw ConsistencyError("dilatation forms disagree at -y = " + std::to_string(t));
    return quoted;
}

double k0_bound(double D) {
    if (!(D > 0.0)) throw DomainError("k0_bound: need D > 0");
    return dilatation_quoted(D);
}

double implied_dilatation(double mu_abs) {
    return (1.0 + mu_abs) / (1.0 - mu_abs);
}

double beltrami_estimate(const FlatPoint& z, double h) {
    if (z.y >= 0.0) throw DomainError("beltrami_estimate: need y < 0");
    if (h <= 0.0 || z.y + h > 0.0)
        throw StepTooLarge("beltrami_estimate: step reaches the axis");
    const auto g = [](double x, double y) {
        return inverse_map_g({x, y});
    };
    const std::complex<double> gx = (g(z.x + h, z.y) - g(z.x - h, z.y)) / (2.0 * h);
    const std::complex<double> gy = (g(z.x, z.y + h) - g(z.x, z.y - h)) / (2.0 * h);
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> gz = 0.5 * (gx - i * gy);
    const std::complex<double> gzbar = 0.5 * (gx + i * gy);
    return std::abs(gzbar) / std::abs(gz);
}

}  // namespace ctsurf
