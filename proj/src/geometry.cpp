#include "resyn/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace resyn {

namespace {

void check_unit(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0))
        throw InvalidActionError(std::string(name) + " must lie in [0,1]");
}

double lerp(double t, double lo, double hi) { return t * hi + (1.0 - t) * lo; }

Vec2 clamp_to_region(Vec2 p, const Rect& r) {
    p.x = std::clamp(p.x, r.x_lo, r.x_hi);
    p.y = std::clamp(p.y, r.y_lo, r.y_hi);
    return p;
}

}  // namespace

void CircuitDesign::validate() const {
    if (n() < 2) throw ContractViolation("CircuitDesign: need at least 2 resonators");
    const double s_max = std::tanh(1.0) / 8.0;
    for (const Resonator& r : resonators) {
        if (!(r.side > 0.0)) throw ContractViolation("Resonator: side must be positive");
        if (r.slit_dir < 0 || r.slit_dir > 3)
            throw ContractViolation("Resonator: slit_dir out of range");
        if (std::abs(r.slit_offset) > s_max + 1e-15)
            throw ContractViolation("Resonator: slit_offset exceeds tanh(1)/8");
        if (!boundary.center_region.contains(r.center))
            throw ContractViolation("CircuitDesign: center outside center region");
        if (!boundary.contains_square(r.center, r.side))
            throw ContractViolation("CircuitDesign: square outside outer boundary");
    }
}

std::vector<double> CompoundAction::flatten() const {
    std::vector<double> flat;
    flat.reserve(flat_size(n()));
    flat.push_back(a_l);
    for (const SlitAction& s : slits) {
        flat.push_back(static_cast<double>(s.a_u));
        flat.push_back(s.a_s);
    }
    for (const PlacementAction& p : placements) {
        flat.push_back(static_cast<double>(p.a_d));
        flat.push_back(static_cast<double>(p.a_f));
        flat.push_back(p.a_us);
        flat.push_back(p.a_ug);
        flat.push_back(p.a_x);
        flat.push_back(p.a_y);
    }
    return flat;
}

CompoundAction CompoundAction::unflatten(const std::vector<double>& flat, int n) {
    if (n < 2) throw InvalidActionError("CompoundAction: N must be at least 2");
    if (static_cast<int>(flat.size()) != flat_size(n))
        throw InvalidActionError("CompoundAction: flat length must be 8N-5");
    CompoundAction act;
    size_t k = 0;
    act.a_l = flat[k++];
    act.slits.resize(n);
    for (SlitAction& s : act.slits) {
        s.a_u = static_cast<int>(std::lround(flat[k++]));
        s.a_s = flat[k++];
    }
    act.placements.resize(n - 1);
    for (PlacementAction& p : act.placements) {
        p.a_d = static_cast<int>(std::lround(flat[k++]));
        p.a_f = static_cast<int>(std::lround(flat[k++]));
        p.a_us = flat[k++];
        p.a_ug = flat[k++];
        p.a_x = flat[k++];
        p.a_y = flat[k++];
    }
    act.validate();
    return act;
}

CompoundAction CompoundAction::uniform_random(int n, Rng& rng) {
    if (n < 2) throw InvalidActionError("CompoundAction: N must be at least 2");
    CompoundAction act;
    act.a_l = rng.uniform();
    act.slits.resize(n);
    for (SlitAction& s : act.slits) {
        s.a_u = static_cast<int>(rng.below(4));
        s.a_s = rng.uniform();
    }
    act.placements.resize(n - 1);
    for (PlacementAction& p : act.placements) {
        p.a_d = static_cast<int>(rng.below(3));
        p.a_f = static_cast<int>(rng.below(3));
        p.a_us = rng.uniform();
        p.a_ug = rng.uniform();
        p.a_x = rng.uniform();
        p.a_y = rng.uniform();
    }
    return act;
}

void CompoundAction::validate() const {
    if (n() < 2) throw InvalidActionError("CompoundAction: N must be at least 2");
    if (static_cast<int>(placements.size()) != n() - 1)
        throw InvalidActionError("CompoundAction: need N-1 placements");
    check_unit(a_l, "a_l");
    for (const SlitAction& s : slits) {
        if (s.a_u < 0 || s.a_u > 3) throw InvalidActionError("a_u must lie in {0,1,2,3}");
        check_unit(s.a_s, "a_s");
    }
    for (const PlacementAction& p : placements) {
        if (p.a_d < 0 || p.a_d > 2) throw InvalidActionError("a_d must lie in {0,1,2}");
        if (p.a_f < 0 || p.a_f > 2) throw InvalidActionError("a_f must lie in {0,1,2}");
        check_unit(p.a_us, "a_us");
        check_unit(p.a_ug, "a_ug");
        check_unit(p.a_x, "a_x");
        check_unit(p.a_y, "a_y");
    }
}

void GeometryConfig::validate() const {
    if (!(length_scale > 0.0)) throw ConfigError("geometry.length_scale must be positive");
    if (!(g_min_ratio > 0.0) || !(g_min_ratio <= g_max_ratio))
        throw ConfigError("geometry gap ratios must satisfy 0 < g_min <= g_max");
    if (n_budget < 0) throw ConfigError("geometry.n_budget must be >= 0");
}

std::array<double, 4> slit_direction(int a_u) {
    if (a_u < 0 || a_u > 3) throw InvalidActionError("slit_direction: a_u must lie in {0,1,2,3}");
    std::array<double, 4> u{};
    u[a_u] = 1.0;
    return u;
}

std::array<double, 4> slit_offset(int a_u, double a_s) {
    if (a_u < 0 || a_u > 3) throw InvalidActionError("slit_offset: a_u must lie in {0,1,2,3}");
    check_unit(a_s, "a_s");
    std::array<double, 4> s{};
    s[a_u] = std::tanh(2.0 * a_s - 1.0) / 8.0;
    return s;
}

double resonator_length(double a_l, double L) {
    check_unit(a_l, "a_l");
    if (!(L > 0.0)) throw ContractViolation("resonator_length: L must be positive");
    return L * (a_l + 1.0);
}

BoundarySpec make_boundary(int n_budget, double a, double g_min_ratio, double g_max_ratio) {
    if (n_budget < 2) throw ContractViolation("make_boundary: budget must be >= 2");
    if (!(a > 0.0)) throw ContractViolation("make_boundary: a must be positive");
    if (!(g_min_ratio > 0.0) || !(g_min_ratio <= g_max_ratio))
        throw ContractViolation("make_boundary: need 0 < g_min_ratio <= g_max_ratio");

    BoundarySpec spec;
    spec.a = a;
    spec.g_min_ratio = g_min_ratio;
    spec.g_max_ratio = g_max_ratio;
    const double g = a * g_max_ratio;
    spec.B = a * n_budget + g * (n_budget - 1);

    const double cx_hi = spec.B - a;
    const double cy_hi = cx_hi / 2.0;
    spec.center_region = {0.0, cx_hi, -cy_hi, cy_hi};

    // outer = [-a/2, (2B-a)/2] x [-B/2, B/2]; the upper bounds are built as
    // center bound + a/2 so corner checks stay consistent under rounding.
    const double half = a / 2.0;
    spec.outer = {-half, cx_hi + half, -(cy_hi + half), cy_hi + half};
    return spec;
}

double shift_factor(int a_f) {
    switch (a_f) {
        case 0: return 0.0;
        case 1: return 0.2;
        case 2: return 0.5;
        default: throw InvalidActionError("shift_factor: a_f must lie in {0,1,2}");
    }
}

double deviation_shift(double a_us, double a, double f) {
    check_unit(a_us, "a_us");
    if (!(a > 0.0)) throw ContractViolation("deviation_shift: a must be positive");
    return a_us * a * f;
}

double deviation_gap(double a_ug, double a, double g_min_ratio, double g_max_ratio) {
    check_unit(a_ug, "a_ug");
    if (!(a > 0.0)) throw ContractViolation("deviation_gap: a must be positive");
    if (!(g_min_ratio > 0.0) || !(g_min_ratio <= g_max_ratio))
        throw ContractViolation("deviation_gap: need 0 < g_min_ratio <= g_max_ratio");
    const double lo = a * g_min_ratio;
    const double hi = a * g_max_ratio;
    return lo * std::pow(hi / lo, a_ug);
}

namespace {

// Shared Theorem-2/3 case table; x_cap is B-2a-d_g for intermediates and
// B-a for the final resonator. Results are clamped into the center region,
// which the formulas already guarantee mathematically; the clamp only
// absorbs last-ulp rounding.
Vec2 place_impl(const Vec2& prev, int a_d, double a_x, double a_y, double d_s, double d_g,
                double a, const BoundarySpec& spec, double x_cap) {
    if (a_d < 0 || a_d > 2) throw InvalidActionError("placement: a_d must lie in {0,1,2}");
    check_unit(a_x, "a_x");
    check_unit(a_y, "a_y");
    const double y_hi = spec.center_region.y_hi;
    const double y_lo = spec.center_region.y_lo;

    Vec2 p;
    if (a_d == 2) {
        p.x = std::min(prev.x + a + d_g, x_cap);
        p.y = lerp(a_y, std::max(prev.y - d_s, y_lo), std::min(prev.y + d_s, y_hi));
    } else {
        p.x = lerp(a_x, prev.x, std::min(prev.x + d_s, x_cap));
        p.y = (a_d == 0) ? std::min(prev.y + a + d_g, y_hi)
                         : std::max(prev.y - a - d_g, y_lo);
    }
    return clamp_to_region(p, spec.center_region);
}

}  // namespace

Vec2 place_intermediate(const Vec2& prev, int a_d, double a_x, double a_y, double d_s,
                        double d_g, double a, const BoundarySpec& spec) {
    return place_impl(prev, a_d, a_x, a_y, d_s, d_g, a, spec, spec.B - 2.0 * a - d_g);
}

Vec2 place_final(const Vec2& prev, int a_d, double a_x, double a_y, double d_s,
                 double d_g, double a, const BoundarySpec& spec) {
    return place_impl(prev, a_d, a_x, a_y, d_s, d_g, a, spec, spec.B - a);
}

CircuitDesign map_actions(const CompoundAction& action, const GeometryConfig& cfg) {
    cfg.validate();
    action.validate();
    const int n = action.n();
    const int budget = cfg.n_budget == 0 ? n : cfg.n_budget;
    if (budget < n) throw ConfigError("geometry.n_budget must be at least N");

    const double a = resonator_length(action.a_l, cfg.length_scale);
    CircuitDesign design;
    design.boundary = make_boundary(budget, a, cfg.g_min_ratio, cfg.g_max_ratio);
    design.resonators.resize(n);

    for (int i = 0; i < n; ++i) {
        Resonator& r = design.resonators[i];
        r.side = a;
        r.slit_dir = action.slits[i].a_u;
        r.slit_offset = slit_offset(r.slit_dir, action.slits[i].a_s)[r.slit_dir];
    }

    design.resonators[0].center = {0.0, 0.0};
    const double span = design.boundary.B - a;
    for (int i = 1; i < n; ++i) {
        const PlacementAction& p = action.placements[i - 1];
        if (cfg.mapping == MappingMode::kDirect) {
            design.resonators[i].center = clamp_to_region(
                {p.a_x * span, p.a_y * span - span / 2.0}, design.boundary.center_region);
            continue;
        }
        const Vec2 prev = design.resonators[i - 1].center;
        const double f = shift_factor(p.a_f);
        const double d_s = deviation_shift(p.a_us, a, f);
        const double d_g = deviation_gap(p.a_ug, a, cfg.g_min_ratio, cfg.g_max_ratio);
        design.resonators[i].center =
            (i == n - 1)
                ? place_final(prev, p.a_d, p.a_x, p.a_y, d_s, d_g, a, design.boundary)
                : place_intermediate(prev, p.a_d, p.a_x, p.a_y, d_s, d_g, a, design.boundary);
    }
    design.validate();
    return design;
}

CircuitDesign map_actions(const CompoundAction& action, double L, double g_min_ratio,
                          double g_max_ratio, int n_budget) {
    GeometryConfig cfg;
    cfg.length_scale = L;
    cfg.g_min_ratio = g_min_ratio;
    cfg.g_max_ratio = g_max_ratio;
    cfg.n_budget = n_budget;
    return map_actions(action, cfg);
}

}  // namespace resyn
