#include "resyn/tape.hpp"

#include <cmath>

#include "resyn/special.hpp"

namespace resyn {

namespace {

double softplus_scalar(double x) {
    return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
}

double sigmoid_scalar(double x) {
    return x >= 0.0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x));
}

}  // namespace

Tape::Ref Tape::push(Mat v, bool needs_grad) {
    values_.push_back(std::move(v));
    needs_grad_.push_back(needs_grad);
    grads_.emplace_back();
    return static_cast<Ref>(values_.size() - 1);
}

double Tape::scalar(Ref r) const {
    const Mat& v = values_[r];
    if (v.rows() != 1 || v.cols() != 1) throw ContractViolation("Tape::scalar: node is not 1x1");
    return v(0, 0);
}

const Mat& Tape::grad(Ref r) const {
    if (!ran_backward_) throw ContractViolation("Tape::grad: backward() has not run");
    return grads_[r];
}

void Tape::record(Ref out, std::function<void()> fn) {
    if (recording_ && needs_grad_[out]) back_ops_.emplace_back(out, std::move(fn));
}

#define RESYN_TRACK1(a) (recording_ && tracked(a))
#define RESYN_TRACK2(a, b) (recording_ && (tracked(a) || tracked(b)))

Tape::Ref Tape::matmul(Ref a, Ref b) {
    Ref out = push(values_[a] * values_[b], RESYN_TRACK2(a, b));
    record(out, [this, a, b, out] {
        if (tracked(a)) g(a).noalias() += g(out) * values_[b].transpose();
        if (tracked(b)) g(b).noalias() += values_[a].transpose() * g(out);
    });
    return out;
}

Tape::Ref Tape::matmul_nt(Ref a, Ref b) {
    Ref out = push(values_[a] * values_[b].transpose(), RESYN_TRACK2(a, b));
    record(out, [this, a, b, out] {
        if (tracked(a)) g(a).noalias() += g(out) * values_[b];
        if (tracked(b)) g(b).noalias() += g(out).transpose() * values_[a];
    });
    return out;
}

Tape::Ref Tape::add(Ref a, Ref b) {
    Ref out = push(values_[a] + values_[b], RESYN_TRACK2(a, b));
    record(out, [this, a, b, out] {
        if (tracked(a)) g(a) += g(out);
        if (tracked(b)) g(b) += g(out);
    });
    return out;
}

Tape::Ref Tape::sub(Ref a, Ref b) {
    Ref out = push(values_[a] - values_[b], RESYN_TRACK2(a, b));
    record(out, [this, a, b, out] {
        if (tracked(a)) g(a) += g(out);
        if (tracked(b)) g(b) -= g(out);
    });
    return out;
}

Tape::Ref Tape::add_rowvec(Ref a, Ref r) {
    Mat v = values_[a];
    v.rowwise() += values_[r].row(0);
    Ref out = push(std::move(v), RESYN_TRACK2(a, r));
    record(out, [this, a, r, out] {
        if (tracked(a)) g(a) += g(out);
        if (tracked(r)) g(r) += g(out).colwise().sum();
    });
    return out;
}

Tape::Ref Tape::cwise_mul(Ref a, Ref b) {
    Ref out = push(values_[a].cwiseProduct(values_[b]), RESYN_TRACK2(a, b));
    record(out, [this, a, b, out] {
        if (tracked(a)) g(a) += g(out).cwiseProduct(values_[b]);
        if (tracked(b)) g(b) += g(out).cwiseProduct(values_[a]);
    });
    return out;
}

Tape::Ref Tape::mul_const(Ref a, double c) {
    Ref out = push(values_[a] * c, RESYN_TRACK1(a));
    record(out, [this, a, c, out] {
        if (tracked(a)) g(a) += g(out) * c;
    });
    return out;
}

Tape::Ref Tape::add_scalar(Ref a, double c) {
    Ref out = push(values_[a].array() + c, RESYN_TRACK1(a));
    record(out, [this, a, out] {
        if (tracked(a)) g(a) += g(out);
    });
    return out;
}

Tape::Ref Tape::cwise_mul_mask(Ref a, const Mat& mask) {
    Ref out = push(values_[a].cwiseProduct(mask), RESYN_TRACK1(a));
    record(out, [this, a, out, mask] {
        if (tracked(a)) g(a) += g(out).cwiseProduct(mask);
    });
    return out;
}

Tape::Ref Tape::add_constmat(Ref a, const Mat& m) {
    Ref out = push(values_[a] + m, RESYN_TRACK1(a));
    record(out, [this, a, out] {
        if (tracked(a)) g(a) += g(out);
    });
    return out;
}

Tape::Ref Tape::tanh_op(Ref a) {
    Ref out = push(values_[a].array().tanh(), RESYN_TRACK1(a));
    record(out, [this, a, out] {
        if (tracked(a))
            g(a).array() += g(out).array() * (1.0 - values_[out].array().square());
    });
    return out;
}

Tape::Ref Tape::softplus(Ref a) {
    Ref out = push(values_[a].unaryExpr(&softplus_scalar), RESYN_TRACK1(a));
    record(out, [this, a, out] {
        if (tracked(a))
            g(a).array() += g(out).array() * values_[a].unaryExpr(&sigmoid_scalar).array();
    });
    return out;
}

Tape::Ref Tape::exp_op(Ref a) {
    Ref out = push(values_[a].array().exp(), RESYN_TRACK1(a));
    record(out, [this, a, out] {
        if (tracked(a)) g(a).array() += g(out).array() * values_[out].array();
    });
    return out;
}

Tape::Ref Tape::log_op(Ref a) {
    Ref out = push(values_[a].array().log(), RESYN_TRACK1(a));
    record(out, [this, a, out] {
        if (tracked(a)) g(a).array() += g(out).array() / values_[a].array();
    });
    return out;
}

Tape::Ref Tape::lgamma_op(Ref a) {
    Ref out = push(values_[a].unaryExpr([](double x) { return lgamma_fn(x); }), RESYN_TRACK1(a));
    record(out, [this, a, out] {
        if (tracked(a))
            g(a).array() += g(out).array() *
                            values_[a].unaryExpr([](double x) { return digamma_fn(x); }).array();
    });
    return out;
}

Tape::Ref Tape::digamma_op(Ref a) {
    Ref out = push(values_[a].unaryExpr([](double x) { return digamma_fn(x); }), RESYN_TRACK1(a));
    record(out, [this, a, out] {
        if (tracked(a))
            g(a).array() += g(out).array() *
                            values_[a].unaryExpr([](double x) { return trigamma_fn(x); }).array();
    });
    return out;
}

Tape::Ref Tape::sum(Ref a) {
    Mat s(1, 1);
    s(0, 0) = values_[a].sum();
    Ref out = push(std::move(s), RESYN_TRACK1(a));
    record(out, [this, a, out] {
        if (tracked(a)) g(a).array() += g(out)(0, 0);
    });
    return out;
}

Tape::Ref Tape::rowsum(Ref a) {
    Ref out = push(values_[a].rowwise().sum(), RESYN_TRACK1(a));
    record(out, [this, a, out] {
        if (tracked(a)) g(a).colwise() += g(out).col(0);
    });
    return out;
}

Tape::Ref Tape::row_logsumexp(Ref a) {
    const Mat& v = values_[a];
    Mat out_v(v.rows(), 1);
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        const double m = v.row(i).maxCoeff();
        out_v(i, 0) = m + std::log((v.row(i).array() - m).exp().sum());
    }
    Ref out = push(std::move(out_v), RESYN_TRACK1(a));
    record(out, [this, a, out] {
        if (!tracked(a)) return;
        const Mat& v2 = values_[a];
        const Mat& lse = values_[out];
        for (Eigen::Index i = 0; i < v2.rows(); ++i)
            g(a).row(i).array() +=
                g(out)(i, 0) * (v2.row(i).array() - lse(i, 0)).exp();
    });
    return out;
}

Tape::Ref Tape::softmax_rows(Ref a) {
    const Mat& v = values_[a];
    Mat out_v(v.rows(), v.cols());
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        const double m = v.row(i).maxCoeff();
        Eigen::ArrayXd e = (v.row(i).array() - m).exp();
        out_v.row(i) = (e / e.sum()).matrix();
    }
    Ref out = push(std::move(out_v), RESYN_TRACK1(a));
    record(out, [this, a, out] {
        if (!tracked(a)) return;
        const Mat& y = values_[out];
        for (Eigen::Index i = 0; i < y.rows(); ++i) {
            const double dot = g(out).row(i).dot(y.row(i));
            g(a).row(i).array() += y.row(i).array() * (g(out).row(i).array() - dot);
        }
    });
    return out;
}

Tape::Ref Tape::col(Ref a, int j) {
    Ref out = push(values_[a].col(j), RESYN_TRACK1(a));
    record(out, [this, a, j, out] {
        if (tracked(a)) g(a).col(j) += g(out).col(0);
    });
    return out;
}

Tape::Ref Tape::row(Ref a, int i) {
    Ref out = push(values_[a].row(i), RESYN_TRACK1(a));
    record(out, [this, a, i, out] {
        if (tracked(a)) g(a).row(i) += g(out).row(0);
    });
    return out;
}

Tape::Ref Tape::dot_const(Ref a, const Mat& m) {
    Mat s(1, 1);
    s(0, 0) = values_[a].cwiseProduct(m).sum();
    Ref out = push(std::move(s), RESYN_TRACK1(a));
    record(out, [this, a, out, m] {
        if (tracked(a)) g(a) += g(out)(0, 0) * m;
    });
    return out;
}

void Tape::backward(Ref root) {
    if (!recording_) throw ContractViolation("Tape::backward: tape is not recording");
    if (values_[root].rows() != 1 || values_[root].cols() != 1)
        throw ContractViolation("Tape::backward: root must be 1x1");
    for (size_t i = 0; i < values_.size(); ++i)
        if (needs_grad_[i]) grads_[i] = Mat::Zero(values_[i].rows(), values_[i].cols());
    if (grads_[root].size() == 0) grads_[root] = Mat::Zero(1, 1);
    grads_[root](0, 0) = 1.0;
    for (auto it = back_ops_.rbegin(); it != back_ops_.rend(); ++it) it->second();
    ran_backward_ = true;
}

#undef RESYN_TRACK1
#undef RESYN_TRACK2

}  // namespace resyn
