#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ctsurf/surface.hpp"

namespace ctsurf {

enum class ArcRole { CuffArc, OrthoArc, Axis };

/// Geodesic segment in the upper half-plane: either a vertical segment or a
/// circular arc centered on the real axis, angles in (0, pi).
struct HalfPlaneArc {
    enum class Kind { Circular, Vertical } kind;
    ArcRole role;
    // circular
    double center_x = 0.0, radius = 0.0, angle_start = 0.0, angle_end = 0.0;
    // vertical
    double x = 0.0, y_start = 0.0, y_end = 0.0;

    std::complex<double> start() const;
    std::complex<double> end() const;
};

/// Real Moebius transformation of the upper half-plane.
struct Moebius {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    std::complex<double> operator()(std::complex<double> z) const;
    Moebius operator*(const Moebius& rhs) const;  // composition, left acts last

    static Moebius translate(double t);   // z -> e^t z (along the axis)
    static Moebius rotate(double theta);  // rotation about i
};

/// Isometric lift of the front of the tree below one side of the root cuff.
/// The root pants' oP sub-arc lands exactly on [i, e^{oP} i]; each child
/// frame continues the parent's seam geodesic straight through the shared
/// cuff (all twists are zero).  Renders pants levels 1..depth+1; per pants 7
/// arcs (cuff, oP axis, oR, o13, o23, a1, b1) plus 2 cuff arcs per deepest
/// pants, so 7 (2^(depth+1) - 1) + 2^(depth+1) arcs in total.
/// Throws DepthTooLarge above kRenderDepthCap.
std::vector<HalfPlaneArc> lift_front(const TreeSurface& tree, int depth);

struct Viewport {
    double xmin, xmax, ymax;  // ymin is the real axis
};

/// Bounding viewport of a set of arcs (small margin included).
Viewport fit_viewport(const std::vector<HalfPlaneArc>& arcs);

/// Serialize arcs to a standalone SVG 1.1 document.  Circular arcs become
/// path arc commands, verticals become lines; roles map to stroke classes.
/// Output is deterministic: identical input yields identical bytes.
std::string svg_document(const std::vector<HalfPlaneArc>& arcs,
                         const Viewport& viewport);

/// svg_document written to a file; IoError on failure.
void emit_svg(const std::vector<HalfPlaneArc>& arcs, const Viewport& viewport,
              const std::string& path);

}  // namespace ctsurf
