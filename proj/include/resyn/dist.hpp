#pragma once

#include <Eigen/Core>

#include "resyn/common.hpp"
#include "resyn/rng.hpp"

namespace resyn {

// Log-density arguments are clamped into [kPdfClamp, 1 - kPdfClamp] so
// endpoint samples never produce infinities.
inline constexpr double kPdfClamp = 1e-6;

struct BetaParams {
    double alpha = 1.0;
    double beta = 1.0;

    void validate() const;
};

struct BetaGrad {
    double d_alpha = 0.0;
    double d_beta = 0.0;
};

struct CategoricalParams {
    Eigen::VectorXd logits;

    void validate() const;
    Eigen::VectorXd probs() const;
};

// Sampling. Two gamma draws (Marsaglia-Tsang squeeze for shape >= 1, with
// the boost trick below 1); result lies in the open interval (0, 1).
double beta_sample(const BetaParams& p, Rng& rng);

double beta_log_pdf(const BetaParams& p, double x);
BetaGrad beta_log_pdf_grad(const BetaParams& p, double x);

// KL(p || q) in closed form via log-beta and digamma.
double beta_kl(const BetaParams& p, const BetaParams& q);
double beta_entropy(const BetaParams& p);

int cat_sample(const CategoricalParams& p, Rng& rng);
double cat_log_pmf(const CategoricalParams& p, int k);
Eigen::VectorXd cat_log_pmf_grad(const CategoricalParams& p, int k);
double cat_kl(const CategoricalParams& p, const CategoricalParams& q);
double cat_entropy(const CategoricalParams& p);

// Gamma(shape, 1) deviate, shape > 0.
double gamma_sample(double shape, Rng& rng);

}  // namespace resyn
