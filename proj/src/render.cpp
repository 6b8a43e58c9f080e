#include "ctsurf/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "ctsurf/constants.hpp"

namespace ctsurf {

namespace {

using cplx = std::complex<double>;

constexpr double kVerticalTol = 1e-11;

/// Geodesic segment through two points of the upper half-plane.
HalfPlaneArc geodesic_segment(cplx z1, cplx z2, ArcRole role) {
    HalfPlaneArc arc{};
    arc.role = role;
    if (std::abs(z1.real() - z2.real()) <
        kVerticalTol * std::max(1.0, std::max(std::abs(z1), std::abs(z2)))) {
        arc.kind = HalfPlaneArc::Kind::Vertical;
        arc.x = z1.real();
        arc.y_start = z1.imag();
        arc.y_end = z2.imag();
        return arc;
    }
    arc.kind = HalfPlaneArc::Kind::Circular;
    arc.center_x = (std::norm(z1) - std::norm(z2)) / (2.0 * (z1.real() - z2.real()));
    arc.radius = std::abs(z1 - cplx(arc.center_x, 0.0));
    arc.angle_start = std::atan2(z1.imag(), z1.real() - arc.center_x);
    arc.angle_end = std::atan2(z2.imag(), z2.real() - arc.center_x);
    return arc;
}

struct CanonicalPants {
    FrontGeometry fg;
    cplx corners[6];   // B0..B5 along o12, a2-half, o23, a3-half, o13, a1-half
    Moebius o23_frame; // frame at B2 heading along o23
    Moebius o13_frame; // frame at B4 heading along o13
};

CanonicalPants canonical_pants(const PantsTriple& t) {
    CanonicalPants cp{.fg = front_geometry(t), .corners = {}, .o23_frame = {}, .o13_frame = {}};
    const double o23 = stable_acosh(cosh_o12(PantsTriple(t.l2, t.l3, t.l1)));
    const double sides[6] = {cp.fg.o12, 0.5 * t.l2, o23,
                             0.5 * t.l3, cp.fg.o13, 0.5 * t.l1};
    Moebius m;
    for (int k = 0; k < 6; ++k) {
        cp.corners[k] = m(cplx(0.0, 1.0));
        if (k == 2) cp.o23_frame = m;
        if (k == 4) cp.o13_frame = m;
        m = m * Moebius::translate(sides[k]) * Moebius::rotate(-std::numbers::pi / 2);
    }
    return cp;
}

void emit_pants(const TreeSurface& tree, const CuffAddress& parent_cuff,
                const Moebius& frame, int depth_left,
                std::vector<HalfPlaneArc>& out) {
    const PantsTriple t = tree.pants_below(parent_cuff);
    const CanonicalPants cp = canonical_pants(t);
    const FrontGeometry& fg = cp.fg;

    const cplx i1(0.0, 1.0);
    const cplx b1_foot = i1 * std::exp(fg.oP);
    const cplx o12_top = i1 * std::exp(fg.o12);
    const cplx a1_foot_cuff = std::polar(1.0, 2.0 * std::atan(std::exp(-fg.p)));
    const cplx a1_foot_o23 = cp.o23_frame(i1 * std::exp(fg.s));

    out.push_back(geodesic_segment(frame(i1), frame(b1_foot), ArcRole::Axis));
    out.push_back(geodesic_segment(frame(b1_foot), frame(o12_top), ArcRole::OrthoArc));
    out.push_back(geodesic_segment(frame(cp.corners[2]), frame(cp.corners[3]),
                                   ArcRole::OrthoArc));  // o23
    out.push_back(geodesic_segment(frame(cp.corners[4]), frame(cp.corners[5]),
                                   ArcRole::OrthoArc));  // o13
    out.push_back(geodesic_segment(frame(cp.corners[5]), frame(cp.corners[0]),
                                   ArcRole::CuffArc));   // cuff-1 front half
    out.push_back(geodesic_segment(frame(a1_foot_cuff), frame(a1_foot_o23),
                                   ArcRole::OrthoArc));  // a1
    out.push_back(geodesic_segment(frame(a1_foot_o23), frame(b1_foot),
                                   ArcRole::OrthoArc));  // b1

    if (depth_left == 0) {
        out.push_back(geodesic_segment(frame(cp.corners[1]), frame(cp.corners[2]),
                                       ArcRole::CuffArc));
        out.push_back(geodesic_segment(frame(cp.corners[3]), frame(cp.corners[4]),
                                       ArcRole::CuffArc));
        return;
    }
    // left child continues the o12 seam, right child continues the o13 seam
    emit_pants(tree, parent_cuff.child(0),
               frame * Moebius::translate(fg.o12), depth_left - 1, out);
    emit_pants(tree, parent_cuff.child(1),
               frame * cp.o13_frame * Moebius::rotate(std::numbers::pi),
               depth_left - 1, out);
}

}  // namespace

std::complex<double> HalfPlaneArc::start() const {
    if (kind == Kind::Vertical) return {x, y_start};
    return cplx(center_x, 0.0) + std::polar(radius, angle_start);
}

std::complex<double> HalfPlaneArc::end() const {
    if (kind == Kind::Vertical) return {x, y_end};
    return cplx(center_x, 0.0) + std::polar(radius, angle_end);
}

std::complex<double> Moebius::operator()(cplx z) const {
    // Im(w) = det * Im(z) / |cz+d|^2 stays positive where naive complex
    // division cancels catastrophically under deep compositions
    const double det = a * d - b * c;
    const double den = std::norm(c * z + d);
    const double re =
        (a * c * std::norm(z) + (a * d + b * c) * z.real() + b * d) / den;
    return {re, det * z.imag() / den};
}

Moebius Moebius::operator*(const Moebius& r) const {
    return {a * r.a + b * r.c, a * r.b + b * r.d,
            c * r.a + d * r.c, c * r.b + d * r.d};
}

Moebius Moebius::translate(double t) {
    return {std::exp(0.5 * t), 0.0, 0.0, std::exp(-0.5 * t)};
}

Moebius Moebius::rotate(double theta) {
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    return {c, s, -s, c};
}

std::vector<HalfPlaneArc> lift_front(const TreeSurface& tree, int depth) {
    if (depth < 0) throw ValidationError("lift_front: negative depth");
    if (depth > kRenderDepthCap)
        throw DepthTooLarge("render depth " + std::to_string(depth) +
                            " above cap " + std::to_string(kRenderDepthCap));
    if (depth + 1 > tree.depth())
        throw ValidationError("lift_front: depth exceeds tree depth");
    std::vector<HalfPlaneArc> arcs;
    emit_pants(tree, CuffAddress(0, 1), Moebius{}, depth, arcs);
    return arcs;
}

Viewport fit_viewport(const std::vector<HalfPlaneArc>& arcs) {
    double xmin = 0.0, xmax = 0.0, ymax = 0.0;
    bool first = true;
    for (const HalfPlaneArc& a : arcs) {
        const cplx pts[2] = {a.start(), a.end()};
        for (const cplx& p : pts) {
            if (first) {
                xmin = xmax = p.real();
                ymax = p.imag();
                first = false;
            }
            xmin = std::min(xmin, p.real());
            xmax = std::max(xmax, p.real());
            ymax = std::max(ymax, p.imag());
        }
        if (a.kind == HalfPlaneArc::Kind::Circular) {
            // the arc may pass the top of its circle
            const double lo = std::min(a.angle_start, a.angle_end);
            const double hi = std::max(a.angle_start, a.angle_end);
            if (lo <= std::numbers::pi / 2 && std::numbers::pi / 2 <= hi)
                ymax = std::max(ymax, a.radius);
            xmin = std::min(xmin, a.center_x - a.radius);
            xmax = std::max(xmax, a.center_x + a.radius);
        }
    }
    const double marg = 0.05 * std::max(xmax - xmin, ymax);
    return {xmin - marg, xmax + marg, ymax + marg};
}

namespace {

void append_num(std::string& s, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    s += buf;
}

}  // namespace

std::string svg_document(const std::vector<HalfPlaneArc>& arcs,
                         const Viewport& vp) {
    if (arcs.empty()) throw ValidationError("svg_document: no arcs");
    const double width = 1000.0;
    const double scale = width / (vp.xmax - vp.xmin);
    const double height = vp.ymax * scale;
    const auto sx = [&](double x) { return (x - vp.xmin) * scale; };
    const auto sy = [&](double y) { return height - y * scale; };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 ";
    append_num(s, width);
    s += " ";
    append_num(s, height);
    s += "\">\n<style>\n"
         ".cuff_arc{stroke:#1a1a1a;stroke-width:1.2;fill:none}\n"
         ".ortho_arc{stroke:#888888;stroke-width:0.7;fill:none}\n"
         ".axis{stroke:#2060c0;stroke-width:1.2;fill:none}\n"
         "</style>\n";
    for (const HalfPlaneArc& a : arcs) {
        const char* cls = a.role == ArcRole::CuffArc   ? "cuff_arc"
                          : a.role == ArcRole::OrthoArc ? "ortho_arc"
                                                        : "axis";
        if (a.kind == HalfPlaneArc::Kind::Vertical) {
            s += "<line class=\"";
            s += cls;
            s += "\" x1=\"";
            append_num(s, sx(a.x));
            s += "\" y1=\"";
            append_num(s, sy(a.y_start));
            s += "\" x2=\"";
            append_num(s, sx(a.x));
            s += "\" y2=\"";
            append_num(s, sy(a.y_end));
            s += "\"/>\n";
        } else {
            const cplx p1 = a.start(), p2 = a.end();
            // pick the sweep whose arc passes the angular midpoint
            const double amid = 0.5 * (a.angle_start + a.angle_end);
            const cplx pm = cplx(a.center_x, 0.0) + std::polar(a.radius, amid);
            const double x1 = sx(p1.real()), y1 = sy(p1.imag());
            const double x2 = sx(p2.real()), y2 = sy(p2.imag());
            const double xm = sx(pm.real()), ym = sy(pm.imag());
            const double cross = (x2 - x1) * (ym - y1) - (y2 - y1) * (xm - x1);
            const int sweep = cross > 0 ? 1 : 0;
            s += "<path class=\"";
            s += cls;
            s += "\" d=\"M ";
            append_num(s, x1);
            s += " ";
            append_num(s, y1);
            s += " A ";
            append_num(s, a.radius * scale);
            s += " ";
            append_num(s, a.radius * scale);
            s += " 0 0 ";
            s += sweep ? '1' : '0';
            s += " ";
            append_num(s, x2);
            s += " ";
            append_num(s, y2);
            s += "\"/>\n";
        }
    }
    s += "</svg>\n";
    return s;
}

void emit_svg(const std::vector<HalfPlaneArc>& arcs, const Viewport& vp,
              const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path);
    const std::string doc = svg_document(arcs, vp);
    f.write(doc.data(), std::streamsize(doc.size()));
    if (!f) throw IoError("write failed: " + path);
}

}  // namespace ctsurf
