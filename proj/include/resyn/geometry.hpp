#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "resyn/common.hpp"
#include "resyn/rng.hpp"

namespace resyn {

struct Rect {
    double x_lo = 0.0;
    double x_hi = 0.0;
    double y_lo = 0.0;
    double y_hi = 0.0;

    bool contains(const Vec2& p) const {
        return p.x >= x_lo && p.x <= x_hi && p.y >= y_lo && p.y <= y_hi;
    }
};

// Rectangles confining a circuit of side-a squares: centers live in
// center_region, squares in outer. Bounds are derived so that the canonical
// corner check fl(c +/- a/2) never spills past `outer` by rounding alone
// (outer is computed with the same expressions, and rounding is monotone).
struct BoundarySpec {
    double B = 0.0;
    double a = 0.0;
    double g_min_ratio = 0.0;
    double g_max_ratio = 0.0;
    Rect outer;
    Rect center_region;

    bool contains_square(const Vec2& center, double side) const {
        const double h = side / 2.0;
        return center.x - h >= outer.x_lo && center.x + h <= outer.x_hi &&
               center.y - h >= outer.y_lo && center.y + h <= outer.y_hi;
    }
};

struct Resonator {
    Vec2 center;
    double side = 0.0;
    int slit_dir = 0;         // 0 up, 1 left, 2 down, 3 right
    double slit_offset = 0.0; // signed offset along the slit edge, fraction of side
};

struct CircuitDesign {
    std::vector<Resonator> resonators;
    BoundarySpec boundary;

    int n() const { return static_cast<int>(resonators.size()); }
    void validate() const;
};

struct SlitAction {
    int a_u = 0;      // slit direction, {0,1,2,3}
    double a_s = 0.0; // slit position, [0,1]
};

struct PlacementAction {
    int a_d = 0;       // relative position: 0 above, 1 below, 2 right
    int a_f = 0;       // shift-factor selector, {0,1,2}
    double a_us = 0.0; // shift deviation, [0,1]
    double a_ug = 0.0; // gap deviation, [0,1]
    double a_x = 0.0;  // x interpolation, [0,1]
    double a_y = 0.0;  // y interpolation, [0,1]
};

// Raw compound action for an N-resonator design. Canonical flattening order:
// [a_l; (a_u^1, a_s^1), ..., (a_u^N, a_s^N);
//  (a_d^2, a_f^2, a_us^2, a_ug^2, a_x^2, a_y^2), ..., (...^N)]
// giving 1 + 2N + 6(N-1) = 8N - 5 entries.
struct CompoundAction {
    double a_l = 0.0;
    std::vector<SlitAction> slits;           // one per resonator
    std::vector<PlacementAction> placements; // resonators 2..N

    int n() const { return static_cast<int>(slits.size()); }
    static int flat_size(int n) { return 8 * n - 5; }

    std::vector<double> flatten() const;
    static CompoundAction unflatten(const std::vector<double>& flat, int n);
    static CompoundAction uniform_random(int n, Rng& rng);

    void validate() const;
};

enum class MappingMode {
    kInterdependent, // placement chained through the previous center
    kDirect,         // x = a_x (B-a), y = a_y (B-a) + (a-B)/2, no chaining
};

struct GeometryConfig {
    double length_scale = 0.6; // L; resonator side in [L, 2L]
    double g_min_ratio = 0.1;
    double g_max_ratio = 0.5;
    int n_budget = 0; // 0: use N; larger budgets widen the region
    MappingMode mapping = MappingMode::kInterdependent;

    void validate() const;
};

// One-hot slit direction vector.
std::array<double, 4> slit_direction(int a_u);

// Slit position vector; entry a_u carries tanh(2 a_s - 1) / 8.
std::array<double, 4> slit_offset(int a_u, double a_s);

// Shared resonator side a = L (a_l + 1).
double resonator_length(double a_l, double L);

BoundarySpec make_boundary(int n_budget, double a, double g_min_ratio, double g_max_ratio);

// Shift factor f: 0, 0.2 or 0.5.
double shift_factor(int a_f);

// Shift deviation d_s = a_us * a * f.
double deviation_shift(double a_us, double a, double f);

// Gap deviation: geometric interpolation between a*g_min and a*g_max.
double deviation_gap(double a_ug, double a, double g_min_ratio, double g_max_ratio);

// Center of a non-final resonator relative to the previous one.
Vec2 place_intermediate(const Vec2& prev, int a_d, double a_x, double a_y, double d_s,
                        double d_g, double a, const BoundarySpec& spec);

// Center of the rightmost resonator; x clamps relax to B - a.
Vec2 place_final(const Vec2& prev, int a_d, double a_x, double a_y, double d_s,
                 double d_g, double a, const BoundarySpec& spec);

CircuitDesign map_actions(const CompoundAction& action, const GeometryConfig& cfg);

// Convenience overload with explicit knobs.
CircuitDesign map_actions(const CompoundAction& action, double L, double g_min_ratio,
                          double g_max_ratio, int n_budget);

}  // namespace resyn
