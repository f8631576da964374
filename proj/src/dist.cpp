#include "resyn/dist.hpp"

#include <algorithm>
#include <cmath>

#include "resyn/special.hpp"

namespace resyn {

namespace {

double clamp_unit(double x) { return std::clamp(x, kPdfClamp, 1.0 - kPdfClamp); }

double logsumexp(const Eigen::VectorXd& v) {
    const double m = v.maxCoeff();
    return m + std::log((v.array() - m).exp().sum());
}

}  // namespace

void BetaParams::validate() const {
    if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta))
        throw ContractViolation("BetaParams: alpha and beta must be positive and finite");
}

void CategoricalParams::validate() const {
    if (logits.size() < 2) throw ContractViolation("CategoricalParams: need at least 2 logits");
    if (!logits.allFinite()) throw ContractViolation("CategoricalParams: logits must be finite");
}

Eigen::VectorXd CategoricalParams::probs() const {
    const double lse = logsumexp(logits);
    return (logits.array() - lse).exp();
}

double gamma_sample(double shape, Rng& rng) {
    if (!(shape > 0.0)) throw ContractViolation("gamma_sample: shape must be positive");
    if (shape < 1.0) {
        // Gamma(a) = Gamma(a + 1) * U^{1/a}.
        const double u = rng.uniform_pos();
        return gamma_sample(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
    }
    // Marsaglia-Tsang squeeze method.
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform_pos();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double beta_sample(const BetaParams& p, Rng& rng) {
    p.validate();
    const double ga = gamma_sample(p.alpha, rng);
    const double gb = gamma_sample(p.beta, rng);
    const double x = ga / (ga + gb);
    // Keep the result strictly inside (0, 1) even when one draw underflows.
    return std::clamp(x, 1e-15, 1.0 - 1e-15);
}

double beta_log_pdf(const BetaParams& p, double x) {
    p.validate();
    const double xc = clamp_unit(x);
    return (p.alpha - 1.0) * std::log(xc) + (p.beta - 1.0) * std::log1p(-xc) -
           log_beta_fn(p.alpha, p.beta);
}

BetaGrad beta_log_pdf_grad(const BetaParams& p, double x) {
    p.validate();
    const double xc = clamp_unit(x);
    const double psi_ab = digamma_fn(p.alpha + p.beta);
    return {std::log(xc) - digamma_fn(p.alpha) + psi_ab,
            std::log1p(-xc) - digamma_fn(p.beta) + psi_ab};
}

double beta_kl(const BetaParams& p, const BetaParams& q) {
    p.validate();
    q.validate();
    const double psi_ab = digamma_fn(p.alpha + p.beta);
    return log_beta_fn(q.alpha, q.beta) - log_beta_fn(p.alpha, p.beta) +
           (p.alpha - q.alpha) * (digamma_fn(p.alpha) - psi_ab) +
           (p.beta - q.beta) * (digamma_fn(p.beta) - psi_ab);
}

double beta_entropy(const BetaParams& p) {
    p.validate();
    return log_beta_fn(p.alpha, p.beta) - (p.alpha - 1.0) * digamma_fn(p.alpha) -
           (p.beta - 1.0) * digamma_fn(p.beta) +
           (p.alpha + p.beta - 2.0) * digamma_fn(p.alpha + p.beta);
}

int cat_sample(const CategoricalParams& p, Rng& rng) {
    p.validate();
    const Eigen::VectorXd probs = p.probs();
    const double u = rng.uniform();
    double acc = 0.0;
    for (int k = 0; k < probs.size(); ++k) {
        acc += probs[k];
        if (u < acc) return k;
    }
    return static_cast<int>(probs.size()) - 1;
}

double cat_log_pmf(const CategoricalParams& p, int k) {
    p.validate();
    if (k < 0 || k >= p.logits.size())
        throw ContractViolation("cat_log_pmf: index out of range");
    return p.logits[k] - logsumexp(p.logits);
}

Eigen::VectorXd cat_log_pmf_grad(const CategoricalParams& p, int k) {
    p.validate();
    if (k < 0 || k >= p.logits.size())
        throw ContractViolation("cat_log_pmf_grad: index out of range");
    Eigen::VectorXd g = -p.probs();
    g[k] += 1.0;
    return g;
}

double cat_kl(const CategoricalParams& p, const CategoricalParams& q) {
    p.validate();
    q.validate();
    if (p.logits.size() != q.logits.size())
        throw ContractViolation("cat_kl: dimension mismatch");
    const double lse_p = logsumexp(p.logits);
    const double lse_q = logsumexp(q.logits);
    const Eigen::VectorXd probs = (p.logits.array() - lse_p).exp();
    double kl = 0.0;
    for (int k = 0; k < probs.size(); ++k)
        kl += probs[k] * ((p.logits[k] - lse_p) - (q.logits[k] - lse_q));
    return kl;
}

double cat_entropy(const CategoricalParams& p) {
    p.validate();
    const double lse = logsumexp(p.logits);
    const Eigen::VectorXd probs = (p.logits.array() - lse).exp();
    double h = 0.0;
    for (int k = 0; k < probs.size(); ++k) h -= probs[k] * (p.logits[k] - lse);
    return h;
}

}  // namespace resyn
