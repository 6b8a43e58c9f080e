#include "ctsurf/hyptrig.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ctsurf {

namespace {

void validate_length(double l, const char* name) {
    if (!std::isfinite(l))
        throw ValidationError(std::string(name) + " is not finite");
    if (l < kMinCuffLength || l > kMaxCuffLength)
        throw ValidationError(std::string(name) + " = " + std::to_string(l) +
                              " outside [1e-12, 50]");
}

}  // namespace

PantsTriple::PantsTriple(double a, double b, double c) : l1(a), l2(b), l3(c) {
    validate_length(l1, "l1");
    validate_length(l2, "l2");
    validate_length(l3, "l3");
}

double checked_atanh(double u) {
    if (!(u >= 0.0 && u < 1.0))
        throw DomainError("atanh argument " + std::to_string(u) + " outside [0, 1)");
    return std::atanh(u);
}

double stable_acosh(double z) {
    if (z < 1.0) {
        if (z > 1.0 - 1e-12) return 0.0;  // round-off below 1
        throw DomainError("acosh argument below 1");
    }
    return stable_acosh1p(z - 1.0);
}

double stable_acosh1p(double e) {
    if (e < 0.0) {
        if (e > -1e-12) return 0.0;  // round-off below 1
        throw DomainError("acosh argument below 1");
    }
    return std::log1p(e + std::sqrt(e * (e + 2.0)));
}

double cosh_o12_excess(const PantsTriple& t) {
    // cosh(o12) - 1; with coth coth - 1 = cosh((l1-l2)/2)/(sinh sinh) every
    // term is positive, so the excess survives even when cosh(o12) rounds
    // to 1 (two long cuffs nearly touching)
    const double sh1 = std::sinh(0.5 * t.l1);
    const double sh2 = std::sinh(0.5 * t.l2);
    return (std::cosh(0.5 * t.l3) + std::cosh(0.5 * (t.l1 - t.l2))) /
           (sh1 * sh2);
}

double cosh_o12(const PantsTriple& t) { return 1.0 + cosh_o12_excess(t); }

double log_cosh_o12(const PantsTriple& t) {
    return std::log1p(cosh_o12_excess(t));
}

double arc_p(const PantsTriple& t) {
    // atanh( sinh(x) / (r + cosh(x)) ) rewritten with cosh(x) +- sinh(x) =
    // e^(+-x): the atanh form saturates at 1 once x > ~18, and the plain
    // log-quotient form loses the arc entirely when r >> e^x; log1p keeps
    // full precision in both corners
    const double x = 0.5 * t.l1;
    const double ratio = std::cosh(0.5 * t.l3) / std::cosh(0.5 * t.l2);
    return 0.5 * std::log1p(2.0 * std::sinh(x) / (ratio + std::exp(-x)));
}

double d_h(double x, double p) {
    if (x < 0.0) throw DomainError("d_h: negative axis coordinate");
    return checked_atanh(std::tanh(p) * std::cosh(x));
}

namespace {

// cosh of the axis piece with tanh(far) = tanh(seed) cosh(axis), via the
// excess  tanh(far)/tanh(seed) - 1 = sinh(far - seed)/(cosh(far) sinh(seed)),
// which keeps the piece resolvable when both tanh factors round to 1
double axis_piece(double far, double seed) {
    return stable_acosh1p(std::sinh(far - seed) /
                          (std::cosh(far) * std::sinh(seed)));
}

}  // namespace

FrontGeometry front_geometry(const PantsTriple& t) {
    FrontGeometry g{};
    g.p = arc_p(t);
    g.q = arc_p(t.swapped23());
    g.arc2 = 0.5 * t.l2;
    g.arc3 = 0.5 * t.l3;

    const double e12 = cosh_o12_excess(t);
    const double e13 = cosh_o12_excess(t.swapped23());
    g.o12 = stable_acosh1p(e12);
    g.o13 = stable_acosh1p(e13);
    g.log_cosh_o12 = std::log1p(e12);
    g.log_cosh_o13 = std::log1p(e13);

    g.a1 = std::asinh(std::cosh(0.5 * t.l2) / std::sinh(g.p));
    g.s = std::asinh(std::cosh(g.p) / std::sinh(0.5 * t.l2));

    const double cosh_a1 = std::cosh(g.a1);
    g.b1p = std::asinh(std::sinh(g.p) * cosh_a1);
    g.b1q = std::asinh(std::sinh(g.q) * cosh_a1);

    const double b1p_alt = std::asinh(std::sinh(0.5 * t.l2) * std::cosh(g.s));
    if (std::abs(g.b1p - b1p_alt) > kConsistencyTol * g.b1p)
        throw ConsistencyError("b1 Lambert forms disagree: " +
                               std::to_string(g.b1p) + " vs " +
                               std::to_string(b1p_alt));

    g.oP = axis_piece(g.b1p, g.p);
    g.oR = axis_piece(g.b1p, g.arc2);
    g.oQ = axis_piece(g.b1q, g.q);
    g.oS = axis_piece(g.b1q, g.arc3);
    return g;
}

RelativeLengths relative_lengths(const PantsTriple& t) {
    const double half = 0.5 * t.l1;
    return {arc_p(t) / half, arc_p(t.swapped23()) / half};
}

double relative_length_margin(const PantsTriple& t, double c2, int n) {
    if (c2 <= 0.0 || n < 1)
        throw PreconditionError("relative_length_margin: need C2 > 0 and n >= 1");
    const double cap = c2 / double((n + 1) * (n + 1));
    if (std::max(t.l2, t.l3) > cap)
        throw PreconditionError("relative_length_margin: max(l2, l3) exceeds C2/(n+1)^2");
    const RelativeLengths rl = relative_lengths(t);
    const double lo = 0.5 * std::exp(-cap);
    const double hi = 0.5 * std::exp(cap);
    return std::min(std::min(rl.l0 - lo, hi - rl.l0),
                    std::min(rl.l1 - lo, hi - rl.l1));
}

AuxInequalities aux_inequalities(const PantsTriple& t, double B,
                                 std::size_t samples) {
    if (std::max(t.l1, t.l2) > B)
        throw PreconditionError("aux_inequalities: max(l1, l2) exceeds B");
    const FrontGeometry g = front_geometry(t);

    const double A = std::max(0.5 * t.l2, g.p);
    const double bound =
        std::asinh(std::sinh(A) * std::cosh(std::asinh(1.0 / std::tanh(A))));

    AuxInequalities r{};
    r.b1 = g.b1p;
    r.b1_bound_ok = g.b1p <= bound * (1.0 + 1e-12);
    r.p_vs_l1_ratio = g.p / t.l1;

    const double tp = std::tanh(g.p);
    r.denom_bound_c = 0.0;
    r.atanh_linear_c = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = g.oP * double(i) / double(samples - 1);
        const double u = tp * std::cosh(x);
        r.denom_bound_c = std::max(r.denom_bound_c, 1.0 / (1.0 - u * u));
        r.atanh_linear_c = std::max(r.atanh_linear_c, std::atanh(u) / u);
    }
    return r;
}

double trig_gap(double x, double A) {
    if (x <= 0.0 || A <= 0.0)
        throw ValidationError("trig_gap: need x > 0 and A > 0");
    return std::sinh(x) / (A + std::cosh(x)) - std::tanh(x / (2.0 * A));
}

}  // namespace ctsurf
