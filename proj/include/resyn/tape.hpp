#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "resyn/common.hpp"

namespace resyn {

using Mat = Eigen::MatrixXd;

// Small reverse-mode tape over dense matrices. Ops record a backward
// closure when the tape is recording and any input depends on a parameter;
// backward() replays them in reverse. One tape per scalar evaluation;
// tapes are single-threaded and cheap to rebuild.
class Tape {
public:
    using Ref = int;

    explicit Tape(bool recording = true) : recording_(recording) {}
    Tape(const Tape&) = delete;
    Tape& operator=(const Tape&) = delete;

    Ref constant(Mat v) { return push(std::move(v), false); }
    Ref param(Mat v) { return push(std::move(v), recording_); }

    const Mat& val(Ref r) const { return values_[r]; }
    double scalar(Ref r) const;
    const Mat& grad(Ref r) const;

    // C = A B
    Ref matmul(Ref a, Ref b);
    // C = A B^T
    Ref matmul_nt(Ref a, Ref b);
    Ref add(Ref a, Ref b);
    Ref sub(Ref a, Ref b);
    // A + ones * r, r is a 1 x k row (bias broadcast over rows).
    Ref add_rowvec(Ref a, Ref r);
    Ref cwise_mul(Ref a, Ref b);
    Ref mul_const(Ref a, double c);
    Ref add_scalar(Ref a, double c);
    Ref cwise_mul_mask(Ref a, const Mat& mask);
    Ref add_constmat(Ref a, const Mat& m);

    Ref tanh_op(Ref a);
    Ref softplus(Ref a);
    Ref exp_op(Ref a);
    Ref log_op(Ref a);
    Ref lgamma_op(Ref a);
    Ref digamma_op(Ref a);

    Ref sum(Ref a);          // -> 1x1
    Ref rowsum(Ref a);       // m x k -> m x 1
    Ref row_logsumexp(Ref a); // m x k -> m x 1
    Ref softmax_rows(Ref a);
    Ref col(Ref a, int j);
    Ref row(Ref a, int i);
    // sum(A .* M) -> 1x1
    Ref dot_const(Ref a, const Mat& m);
    // A - c * ones_row, c is m x 1 (broadcast subtraction over columns).
    Ref sub_colvec(Ref a, Ref c);
    // Stacks 1 x k rows into an n x k matrix.
    Ref stack_rows(const std::vector<Ref>& rows);

    // Seeds d(root)=1 (root must be 1x1) and accumulates leaf gradients.
    void backward(Ref root);

    size_t size() const { return values_.size(); }

private:
    Ref push(Mat v, bool needs_grad);
    bool tracked(Ref r) const { return needs_grad_[r]; }
    Mat& g(Ref r) { return grads_[r]; }
    void record(Ref out, std::function<void()> fn);

    bool recording_;
    std::vector<Mat> values_;
    std::vector<Mat> grads_;
    std::vector<bool> needs_grad_;
    std::vector<std::pair<Ref, std::function<void()>>> back_ops_;
    bool ran_backward_ = false;
};

}  // namespace resyn
