#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctsurf/hyptrig.hpp"

namespace ctsurf {

/// Address of a cuff in the dyadic tree.  Level n has 2^(n+1) cuffs indexed
/// j = 1..2^(n+1); both level-0 slots (j = 1, 2) alias the single root cuff.
/// In the binary expansion of j-1 (n+1 bits) the top bit picks the side of
/// the root and the remaining n bits are the left/right path choices
/// i_0..i_{n-1}; the whole encoding round-trips.
struct CuffAddress {
    int level = 0;
    std::uint64_t index = 1;  // 1-based

    CuffAddress(int n, std::uint64_t j);

    int side() const { return int((index - 1) >> level); }
    int path_bit(int k) const;              // k in [0, level)
    std::vector<int> path_bits() const;
    CuffAddress parent() const;              // level must be >= 1
    CuffAddress child(int bit) const;        // 0 = left, 1 = right

    static CuffAddress from_path(int side, const std::vector<int>& bits);

    bool operator==(const CuffAddress&) const = default;
};

enum class ProfileKind { Power, Table, Constant };

/// Cuff-length rule.  The power profile assigns, for n >= 1,
///   len(n) = min(C1 n^r / 2^n, C2 / n^2, len(n-1))
/// and len(0) = len(1): the raw lower-bound curve rises before it falls and
/// can exceed the cap at small n, so both clamps are applied explicitly and
/// reported per level; certificates cite the effective constants.
struct CuffProfile {
    ProfileKind kind = ProfileKind::Power;
    double r = 0.0, c1 = 0.0, c2 = 0.0;       // power (and optionally table)
    double constant_length = 0.0;              // constant
    std::map<std::pair<int, std::uint64_t>, double> table;  // (n, j) -> length
    bool has_declared_constants = false;       // table with claimed (r, c1, c2)

    static CuffProfile power(double r, double c1, double c2);
    static CuffProfile constant(double length);
    static CuffProfile from_table(std::map<std::pair<int, std::uint64_t>, double> t);

    /// Parse the JSON document described in docs/profile.schema.json.
    static CuffProfile parse(const std::string& json_text);
};

struct LevelDiagnostics {
    int level;
    double length;
    bool raw_window_empty;   // C1 n^r/2^n > C2/n^2 at this level
    bool upper_clamped;      // cap C2/n^2 engaged
    bool monotone_clamped;   // running-min engaged
};

struct HypothesisReport {
    bool r_flag = false;            // r > 1 claimed
    bool decreasing_ends = false;
    bool window_ok = false;         // every level inside the certified window
    double c1_eff = 0.0;            // min over levels of len * 2^n / n^r
    double c2_eff = 0.0;            // max over levels of len * n^2
    double c2_requirement = 0.0;    // constant feeding the mass bounds
    std::vector<LevelDiagnostics> levels;
    bool all_pass() const { return r_flag && decreasing_ends && window_ok; }
};

/// Truncated Cantor-tree surface: cuff lengths to a fixed depth plus the
/// hypothesis record of the profile that produced them.
class TreeSurface {
  public:
    int depth() const { return depth_; }
    bool level_homogeneous() const { return homogeneous_; }
    const CuffProfile& profile() const { return profile_; }
    const HypothesisReport& validity() const { return validity_; }

    double cuff_length(const CuffAddress& a) const;
    double level_min_length(int n) const;
    double level_max_length(int n) const;

    /// The pair of pants hanging below a cuff: (parent, left child, right
    /// child) lengths.  Requires a.level < depth().
    PantsTriple pants_below(const CuffAddress& a) const;

    friend TreeSurface build_tree(const CuffProfile&, int);

  private:
    int depth_ = 0;
    bool homogeneous_ = true;
    std::vector<double> level_value_;           // [0..depth], homogeneous
    std::vector<std::vector<double>> per_cuff_; // [n][j-1], table profiles
    CuffProfile profile_;
    HypothesisReport validity_;
};

/// Materialize a tree.  Throws InfeasibleProfile for unbuildable input
/// (degenerate parameters, lengths leaving [1e-12, 50], incomplete tables,
/// or a table whose declared window is empty at some level) and NonMonotone
/// for explicit tables that increase along an end.  Constant profiles build
/// with decreasing_ends = false in the validity record.
TreeSurface build_tree(const CuffProfile& profile, int depth);

/// Hypothesis flags without building a queryable tree; never throws for
/// monotonicity failures (the report carries them).
HypothesisReport validate_hypotheses(const CuffProfile& profile, int depth);

/// Product of relative lengths along the path from the root to a cuff, with
/// the certified two-sided bound e^{-+ C2_req T} / 2^n, T = pi^2/6.
struct TransverseMass {
    double value;
    double lower, upper;
};
TransverseMass transverse_mass(const TreeSurface& tree, const CuffAddress& a);

/// Per-level energy majorants for the genus-decorated tree: at most 8C+2
/// sub-regions per unit replace the plain two, so each level-n bound is
///   (4C+1) * 2^n * (mass upper at level n-1)^2
///           * kPantsEnergy * (1/len(n-1) + 2/len(n))
/// evaluated with the level-minimal lengths.  C = 0 reproduces the plain
/// tree bound exactly.
std::vector<double> blooming_bound(int genus_cap, const CuffProfile& profile,
                                   int depth);

}  // namespace ctsurf
