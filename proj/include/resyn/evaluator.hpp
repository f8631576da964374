#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "resyn/common.hpp"
#include "resyn/geometry.hpp"

namespace resyn {

// |s21| values are floored here before any log, identically for target and
// candidate responses.
inline constexpr double kMagnitudeFloor = 1e-6;

struct TransferFunction {
    std::vector<double> freqs;              // Hz, strictly increasing
    std::vector<std::complex<double>> s21;

    size_t size() const { return freqs.size(); }
    void validate() const;

    // 20 log10 of the floored magnitude at sample i.
    double mag_db(size_t i) const;
};

// Deterministic coupled-resonator narrowband model standing in for a field
// simulator. Frequencies in Hz; lengths in the geometry's length unit.
struct SurrogateConfig {
    double f_scale = 1.0e12;  // Hz * length; resonance f_i = f_scale / (4 a)
    double frac_bw = 0.08;    // fractional bandwidth of the prototype
    double k0 = 1.0;          // base inter-resonator coupling
    double decay = 0.6;       // coupling decay length, in units of a
    double q_e = 1.0;         // external coupling at ports (first/last resonator)
    double slit_detune = 0.15; // relative frequency shift per unit slit offset
    int grid_points = 64;
    double f_lo = 2.0e11;
    double f_hi = 4.0e11;

    void validate() const;
    std::vector<double> make_grid() const;
};

TransferFunction surrogate_eval(const CircuitDesign& design, const SurrogateConfig& cfg);
TransferFunction surrogate_eval(const CircuitDesign& design, const SurrogateConfig& cfg,
                                const std::vector<double>& freqs);

// Mean absolute dB-magnitude error, (20/m) sum |log10|Y_i| - log10|Yhat_i||.
double error_db(const TransferFunction& target, const TransferFunction& candidate);

// Intersection-over-union of the two pass-bands; a pass-band is the index
// set within threshold_db of that response's own peak.
double passband_iou(const TransferFunction& target, const TransferFunction& candidate,
                    double threshold_db);

struct IndexRange {
    size_t first = 0;
    size_t last = 0; // inclusive
};

// Loss at the best in-band point: -max over the band of the dB magnitude.
double insertion_loss(const TransferFunction& candidate, const IndexRange& band);

// Pass-band of a single response as an index set (sorted).
std::vector<size_t> passband_indices(const TransferFunction& tf, double threshold_db);

}  // namespace resyn
