#include "ctsurf/surface.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "ctsurf/constants.hpp"

namespace ctsurf {

namespace {

using nlohmann::json;

std::uint64_t level_cuff_count(int n) { return std::uint64_t(1) << (n + 1); }

double power_raw(double r, double c1, int n) {
    return c1 * std::pow(double(n), r) / std::ldexp(1.0, n);
}

double power_cap(double c2, int n) { return c2 / (double(n) * double(n)); }

}  // namespace

CuffAddress::CuffAddress(int n, std::uint64_t j) : level(n), index(j) {
    if (n < 0 || n > 62)
        throw ValidationError("CuffAddress: level outside [0, 62]");
    if (j < 1 || j > level_cuff_count(n))
        throw ValidationError("CuffAddress: index outside [1, 2^(n+1)]");
}

int CuffAddress::path_bit(int k) const {
    if (k < 0 || k >= level) throw ValidationError("path_bit: k outside [0, level)");
    return int(((index - 1) >> (level - 1 - k)) & 1u);
}

std::vector<int> CuffAddress::path_bits() const {
    std::vector<int> bits(level);
    for (int k = 0; k < level; ++k) bits[k] = path_bit(k);
    return bits;
}

CuffAddress CuffAddress::parent() const {
    if (level == 0) throw ValidationError("parent of root cuff");
    return {level - 1, ((index - 1) >> 1) + 1};
}

CuffAddress CuffAddress::child(int bit) const {
    return {level + 1, 2 * index - 1 + std::uint64_t(bit)};
}

CuffAddress CuffAddress::from_path(int side, const std::vector<int>& bits) {
    const int n = int(bits.size());
    std::uint64_t m = std::uint64_t(side) << n;
    for (int k = 0; k < n; ++k) m |= std::uint64_t(bits[k] & 1) << (n - 1 - k);
    return {n, m + 1};
}

CuffProfile CuffProfile::power(double r, double c1, double c2) {
    CuffProfile p;
    p.kind = ProfileKind::Power;
    p.r = r;
    p.c1 = c1;
    p.c2 = c2;
    return p;
}

CuffProfile CuffProfile::constant(double length) {
    CuffProfile p;
    p.kind = ProfileKind::Constant;
    p.constant_length = length;
    return p;
}

CuffProfile CuffProfile::from_table(std::map<std::pair<int, std::uint64_t>, double> t) {
    CuffProfile p;
    p.kind = ProfileKind::Table;
    p.table = std::move(t);
    return p;
}

CuffProfile CuffProfile::parse(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("profile: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("kind"))
        throw ValidationError("profile: missing \"kind\"");
    const std::string kind = doc.at("kind").get<std::string>();
    try {
        if (kind == "power") {
            return power(doc.at("r").get<double>(), doc.at("c1").get<double>(),
                         doc.at("c2").get<double>());
        }
        if (kind == "constant") {
            return constant(doc.at("length").get<double>());
        }
        if (kind == "table") {
            std::map<std::pair<int, std::uint64_t>, double> t;
            for (const auto& [key, val] : doc.at("lengths").items()) {
                const auto colon = key.find(':');
                if (colon == std::string::npos)
                    throw ValidationError("profile: table key \"" + key +
                                          "\" is not \"n:j\"");
                const int n = std::stoi(key.substr(0, colon));
                const std::uint64_t j = std::stoull(key.substr(colon + 1));
                t[{n, j}] = val.get<double>();
            }
            CuffProfile p = from_table(std::move(t));
            if (doc.contains("r")) {
                p.r = doc.at("r").get<double>();
                p.c1 = doc.value("c1", 1.0);
                p.c2 = doc.value("c2", 1.0);
                p.has_declared_constants = true;
            }
            return p;
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("profile: ") + e.what());
    }
    throw ValidationError("profile: unknown kind \"" + kind + "\"");
}

namespace {

struct Materialized {
    bool homogeneous;
    std::vector<double> level_value;
    std::vector<std::vector<double>> per_cuff;
    HypothesisReport report;
};

void check_representable(double len, int level) {
    if (!std::isfinite(len) || len < kMinCuffLength || len > kMaxCuffLength)
        throw InfeasibleProfile("cuff length " + std::to_string(len) +
                                " at level " + std::to_string(level) +
                                " outside [1e-12, 50]");
}

Materialized materialize(const CuffProfile& profile, int depth) {
    if (depth < 1) throw ValidationError("depth must be >= 1");
    Materialized m;
    m.report = HypothesisReport{};

    switch (profile.kind) {
        case ProfileKind::Power: {
            if (!(profile.r > 0.0) || !(profile.c1 > 0.0) || !(profile.c2 > 0.0))
                throw InfeasibleProfile("power profile needs r, C1, C2 > 0");
            m.homogeneous = true;
            m.level_value.resize(depth + 1);
            double prev = kMaxCuffLength;
            double c1_eff = profile.c1, c2_eff = 0.0;
            for (int n = 1; n <= depth; ++n) {
                const double raw = power_raw(profile.r, profile.c1, n);
                const double cap = power_cap(profile.c2, n);
                double len = std::min(raw, cap);
                const bool upper_clamped = cap < raw;
                const bool monotone_clamped = prev < len;
                len = std::min(len, prev);
                check_representable(len, n);
                m.level_value[n] = len;
                prev = len;
                c1_eff = std::min(c1_eff, len / power_raw(profile.r, 1.0, n));
                c2_eff = std::max(c2_eff, len * double(n) * double(n));
                m.report.levels.push_back(
                    {n, len, upper_clamped, upper_clamped, monotone_clamped});
            }
            m.level_value[0] = m.level_value[1];
            m.report.r_flag = profile.r > 1.0;
            m.report.decreasing_ends = true;
            m.report.window_ok = c1_eff > 0.0;
            m.report.c1_eff = c1_eff;
            m.report.c2_eff = c2_eff;
            m.report.c2_requirement = c2_eff;
            break;
        }
        case ProfileKind::Constant: {
            check_representable(profile.constant_length, 0);
            m.homogeneous = true;
            m.level_value.assign(depth + 1, profile.constant_length);
            m.report.r_flag = false;
            m.report.decreasing_ends = false;  // constant along each end
            m.report.window_ok = false;
            m.report.c2_requirement =
                profile.constant_length * double(depth) * double(depth);
            for (int n = 1; n <= depth; ++n)
                m.report.levels.push_back({n, profile.constant_length, false, false, false});
            break;
        }
        case ProfileKind::Table: {
            m.homogeneous = false;
            m.per_cuff.resize(depth + 1);
            double c2_req = 0.0;
            bool decreasing = true;
            for (int n = 0; n <= depth; ++n) {
                m.per_cuff[n].resize(level_cuff_count(n));
                double lmax = 0.0;
                for (std::uint64_t j = 1; j <= level_cuff_count(n); ++j) {
                    auto it = profile.table.find({n, j});
                    if (n == 0 && it == profile.table.end())
                        it = profile.table.find({0, 1});  // root aliasing
                    if (it == profile.table.end())
                        throw InfeasibleProfile("table profile missing cuff " +
                                                std::to_string(n) + ":" +
                                                std::to_string(j));
                    check_representable(it->second, n);
                    m.per_cuff[n][j - 1] = it->second;
                    lmax = std::max(lmax, it->second);
                }
                if (n >= 1) c2_req = std::max(c2_req, lmax * double(n) * double(n));
            }
            for (int n = 0; n < depth; ++n)
                for (std::uint64_t j = 1; j <= level_cuff_count(n); ++j) {
                    const double parent = m.per_cuff[n][j - 1];
                    if (m.per_cuff[n + 1][2 * j - 2] > parent ||
                        m.per_cuff[n + 1][2 * j - 1] > parent)
                        decreasing = false;
                }
            m.report.decreasing_ends = decreasing;
            m.report.c2_requirement = c2_req;
            if (profile.has_declared_constants) {
                m.report.r_flag = profile.r > 1.0;
                bool window_ok = true;
                for (int n = 1; n <= depth; ++n) {
                    const double lo = power_raw(profile.r, profile.c1, n);
                    const double hi = power_cap(profile.c2, n);
                    if (lo > hi)
                        throw InfeasibleProfile(
                            "declared window empty at level " + std::to_string(n));
                    double lmin = m.per_cuff[n][0], lmax = m.per_cuff[n][0];
                    for (double v : m.per_cuff[n]) {
                        lmin = std::min(lmin, v);
                        lmax = std::max(lmax, v);
                    }
                    const bool ok = lmin >= lo * (1.0 - 1e-12) &&
                                    lmax <= hi * (1.0 + 1e-12);
                    window_ok = window_ok && ok;
                    m.report.levels.push_back({n, lmax, !ok, false, false});
                }
                m.report.window_ok = window_ok;
                m.report.c1_eff = profile.c1;
                m.report.c2_eff = profile.c2;
            }
            break;
        }
    }
    return m;
}

}  // namespace

TreeSurface build_tree(const CuffProfile& profile, int depth) {
    Materialized m = materialize(profile, depth);
    if (profile.kind == ProfileKind::Table && !m.report.decreasing_ends)
        throw NonMonotone("table profile increases along an end");
    TreeSurface t;
    t.depth_ = depth;
    t.homogeneous_ = m.homogeneous;
    t.level_value_ = std::move(m.level_value);
    t.per_cuff_ = std::move(m.per_cuff);
    t.profile_ = profile;
    t.validity_ = std::move(m.report);
    return t;
}

HypothesisReport validate_hypotheses(const CuffProfile& profile, int depth) {
    return materialize(profile, depth).report;
}

double TreeSurface::cuff_length(const CuffAddress& a) const {
    if (a.level > depth_) throw ValidationError("cuff level beyond tree depth");
    return homogeneous_ ? level_value_[a.level] : per_cuff_[a.level][a.index - 1];
}

double TreeSurface::level_min_length(int n) const {
    if (n > depth_) throw ValidationError("level beyond tree depth");
    if (homogeneous_) return level_value_[n];
    return *std::min_element(per_cuff_[n].begin(), per_cuff_[n].end());
}

double TreeSurface::level_max_length(int n) const {
    if (n > depth_) throw ValidationError("level beyond tree depth");
    if (homogeneous_) return level_value_[n];
    return *std::max_element(per_cuff_[n].begin(), per_cuff_[n].end());
}

PantsTriple TreeSurface::pants_below(const CuffAddress& a) const {
    if (a.level >= depth_) throw ValidationError("pants_below: children beyond depth");
    return {cuff_length(a), cuff_length(a.child(0)), cuff_length(a.child(1))};
}

TransverseMass transverse_mass(const TreeSurface& tree, const CuffAddress& a) {
    if (a.level > tree.depth()) throw ValidationError("address beyond tree depth");
    double value = 1.0;
    for (int k = 0; k < a.level; ++k) {
        // ancestor cuff at level k and the choice made when crossing it
        const std::uint64_t anc_index = ((a.index - 1) >> (a.level - k)) + 1;
        const CuffAddress anc(k, anc_index);
        const RelativeLengths rl = relative_lengths(tree.pants_below(anc));
        value *= a.path_bit(k) == 0 ? rl.l0 : rl.l1;
    }
    const double c2t = tree.validity().c2_requirement * kMassT;
    const double half_n = std::ldexp(1.0, -a.level);
    return {value, std::exp(-c2t) * half_n, std::exp(c2t) * half_n};
}

std::vector<double> blooming_bound(int genus_cap, const CuffProfile& profile,
                                   int depth) {
    if (genus_cap < 0) throw ValidationError("genus cap must be >= 0");
    const TreeSurface tree = build_tree(profile, depth);
    const double c2t = tree.validity().c2_requirement * kMassT;
    std::vector<double> bounds;
    bounds.reserve(depth);
    for (int n = 1; n <= depth; ++n) {
        const double mass_upper = std::exp(c2t) * std::ldexp(1.0, -(n - 1));
        const double pair_bound =
            kPantsEnergy * (1.0 / tree.level_min_length(n - 1) +
                            2.0 / tree.level_min_length(n));
        bounds.push_back(double(4 * genus_cap + 1) * std::ldexp(1.0, n) *
                         mass_upper * mass_upper * pair_bound);
    }
    return bounds;
}

}  // namespace ctsurf
