#pragma once

#include <string>
#include <vector>

#include "ctsurf/foliation.hpp"
#include "ctsurf/surface.hpp"

namespace ctsurf {

enum class Verdict { NotParabolicCertificate, HypothesisNotSatisfied, Inconclusive };

std::string to_string(Verdict v);

struct LevelEnergy {
    int n;
    double numeric;           // sum over level-n pants of mass^2 * pants energy
    double analytic_majorant; // certified bound from masses + kPantsEnergy
    double quad_error;
};

/// Weighted Dirichlet energy of one tree level.  Each level-n pair of pants
/// is weighted by the squared transverse mass at its entering (level n-1)
/// cuff, which dominates the exact per-channel weights since every relative
/// length is < 1.  genus_cap scales region counts by 4C+1.
LevelEnergy level_energy(const TreeSurface& tree, int n, int genus_cap = 0,
                         double rel_tol = kQuadRelTol);

struct DirichletReport {
    std::vector<LevelEnergy> per_level;
    std::vector<double> partial_sums;       // nondecreasing
    std::vector<double> k_majorants;        // K_calibrated / n^r per level
    double tail_bound = 0.0;                // K_calibrated * N^(1-r) / (r-1)
    double k_calibrated = 0.0;
    double total_with_tail = 0.0;
    Verdict verdict = Verdict::Inconclusive;
    HypothesisReport hypotheses;
    int genus_cap = 0;
    double blooming_factor = 1.0;           // 4C+1
    std::string note;
};

/// Assemble the certificate for a built tree: per-level energies, partial
/// sums, the calibrated constant (1.25x the max of numeric * n^r over levels
/// 5..N), and the integral-test tail.  Verdict:
///   NotParabolicCertificate  -- hypotheses hold and sum + tail is finite
///   HypothesisNotSatisfied   -- a hypothesis flag fails
///   Inconclusive             -- quadrature failed somewhere
DirichletReport dirichlet_certificate(const TreeSurface& tree, int genus_cap = 0,
                                      double rel_tol = kQuadRelTol);

enum class LeafEscape { Escapes, Truncated };

/// Structural check that the foliation's leaves continue across a cuff on
/// both sides: the pants below exists within the truncation and the cuff's
/// front half is split by that pants' (p, q) with p + q = len/2.
LeafEscape leaf_escape_check(const TreeSurface& tree, const CuffAddress& a);

}  // namespace ctsurf
