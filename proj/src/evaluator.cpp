#include "resyn/evaluator.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace resyn {

void TransferFunction::validate() const {
    if (freqs.size() < 2) throw ContractViolation("TransferFunction: need at least 2 samples");
    if (freqs.size() != s21.size())
        throw ContractViolation("TransferFunction: freqs/s21 length mismatch");
    for (size_t i = 0; i < freqs.size(); ++i) {
        if (!(freqs[i] > 0.0)) throw ContractViolation("TransferFunction: freqs must be positive");
        if (i > 0 && !(freqs[i] > freqs[i - 1]))
            throw ContractViolation("TransferFunction: freqs must be strictly increasing");
    }
}

double TransferFunction::mag_db(size_t i) const {
    return 20.0 * std::log10(std::max(std::abs(s21[i]), kMagnitudeFloor));
}

void SurrogateConfig::validate() const {
    if (!(f_scale > 0.0) || !(frac_bw > 0.0) || !(k0 > 0.0) || !(decay > 0.0) ||
        !(q_e > 0.0) || !(slit_detune > 0.0))
        throw ConfigError("surrogate: all model constants must be positive");
    if (grid_points < 2) throw ConfigError("surrogate.grid_points must be >= 2");
    if (!(f_lo > 0.0) || !(f_lo < f_hi)) throw ConfigError("surrogate: need 0 < f_lo < f_hi");
}

std::vector<double> SurrogateConfig::make_grid() const {
    validate();
    std::vector<double> freqs(grid_points);
    const double step = (f_hi - f_lo) / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i) freqs[i] = f_lo + step * i;
    freqs.back() = f_hi;
    return freqs;
}

namespace {

// Orientation factor between slit directions: cos of the right-angle
// multiple, with perpendicular pairs kept weakly coupled at 0.3.
double orientation_factor(int dir_i, int dir_j) {
    switch ((dir_i - dir_j + 4) % 4) {
        case 0: return 1.0;
        case 2: return -1.0;
        default: return 0.3;
    }
}

}  // namespace

TransferFunction surrogate_eval(const CircuitDesign& design, const SurrogateConfig& cfg) {
    return surrogate_eval(design, cfg, cfg.make_grid());
}

TransferFunction surrogate_eval(const CircuitDesign& design, const SurrogateConfig& cfg,
                                const std::vector<double>& freqs) {
    cfg.validate();
    const int n = design.n();
    if (n < 2) throw ContractViolation("surrogate_eval: need at least 2 resonators");

    // Per-resonator resonance, detuned by the slit offset.
    Eigen::VectorXd f_res(n);
    for (int i = 0; i < n; ++i) {
        const Resonator& r = design.resonators[i];
        if (!(r.side > 0.0)) throw ContractViolation("surrogate_eval: side must be positive");
        f_res[i] = cfg.f_scale / (4.0 * r.side) * (1.0 + cfg.slit_detune * r.slit_offset);
    }
    const double f0 = std::exp(f_res.array().log().mean());

    // Static coupling matrix M and port loading R.
    Eigen::MatrixXd coupling = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Resonator& ri = design.resonators[i];
            const Resonator& rj = design.resonators[j];
            const double dist = std::hypot(ri.center.x - rj.center.x, ri.center.y - rj.center.y);
            const double gap = std::max(0.0, dist - ri.side);
            const double k = cfg.k0 * std::exp(-gap / (cfg.decay * ri.side)) *
                             orientation_factor(ri.slit_dir, rj.slit_dir);
            coupling(i, j) = k;
            coupling(j, i) = k;
        }
    }

    Eigen::VectorXd detune(n);
    for (int i = 0; i < n; ++i)
        detune[i] = (1.0 / cfg.frac_bw) * (f0 / f_res[i] - f_res[i] / f0);

    TransferFunction out;
    out.freqs = freqs;
    out.s21.resize(freqs.size());
    const std::complex<double> j_unit(0.0, 1.0);

    Eigen::MatrixXcd base = coupling.cast<std::complex<double>>();
    for (int i = 0; i < n; ++i) base(i, i) = detune[i];
    base(0, 0) -= j_unit / cfg.q_e;
    base(n - 1, n - 1) -= j_unit / cfg.q_e;

    Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(n);
    e1[0] = 1.0;

    for (size_t w = 0; w < freqs.size(); ++w) {
        const double omega = freqs[w];
        if (!(omega > 0.0)) throw ContractViolation("surrogate_eval: frequencies must be positive");
        double lambda = (1.0 / cfg.frac_bw) * (omega / f0 - f0 / omega);

        Eigen::MatrixXcd A = base;
        A.diagonal().array() += lambda;
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(A);
        if (!lu.isInvertible()) {
            // Nudge the sweep variable once; a second singular hit is fatal.
            lambda += 1e-9;
            A = base;
            A.diagonal().array() += lambda;
            lu.compute(A);
            if (!lu.isInvertible())
                throw EvalError("surrogate_eval: singular system matrix");
        }
        const Eigen::VectorXcd x = lu.solve(e1);
        out.s21[w] = -2.0 * j_unit * (1.0 / cfg.q_e) * x[n - 1];
    }
    return out;
}

namespace {

void check_grids(const TransferFunction& a, const TransferFunction& b, const char* op) {
    a.validate();
    b.validate();
    if (a.freqs != b.freqs)
        throw ContractViolation(std::string(op) + ": frequency grids differ");
}

}  // namespace

double error_db(const TransferFunction& target, const TransferFunction& candidate) {
    check_grids(target, candidate, "error_db");
    const size_t m = target.size();
    double acc = 0.0;
    for (size_t i = 0; i < m; ++i) {
        const double lt = std::log10(std::max(std::abs(target.s21[i]), kMagnitudeFloor));
        const double lc = std::log10(std::max(std::abs(candidate.s21[i]), kMagnitudeFloor));
        acc += std::abs(lt - lc);
    }
    return 20.0 / static_cast<double>(m) * acc;
}

std::vector<size_t> passband_indices(const TransferFunction& tf, double threshold_db) {
    tf.validate();
    double peak = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < tf.size(); ++i) peak = std::max(peak, tf.mag_db(i));
    std::vector<size_t> band;
    for (size_t i = 0; i < tf.size(); ++i)
        if (tf.mag_db(i) >= peak - threshold_db) band.push_back(i);
    return band;
}

double passband_iou(const TransferFunction& target, const TransferFunction& candidate,
                    double threshold_db) {
    check_grids(target, candidate, "passband_iou");
    const std::vector<size_t> bt = passband_indices(target, threshold_db);
    const std::vector<size_t> bc = passband_indices(candidate, threshold_db);
    std::vector<size_t> inter, uni;
    std::set_intersection(bt.begin(), bt.end(), bc.begin(), bc.end(), std::back_inserter(inter));
    std::set_union(bt.begin(), bt.end(), bc.begin(), bc.end(), std::back_inserter(uni));
    if (uni.empty()) return 1.0;
    return static_cast<double>(inter.size()) / static_cast<double>(uni.size());
}

double insertion_loss(const TransferFunction& candidate, const IndexRange& band) {
    candidate.validate();
    if (band.last < band.first || band.last >= candidate.size())
        throw ContractViolation("insertion_loss: empty or out-of-range band");
    double best = -std::numeric_limits<double>::infinity();
    for (size_t i = band.first; i <= band.last; ++i)
        best = std::max(best, candidate.mag_db(i));
    return -best;
}

}  // namespace resyn
