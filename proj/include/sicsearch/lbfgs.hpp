#pragma once

#include <functional>

#include <Eigen/Dense>

namespace sic {

/// Objective callback: value at x, gradient written into grad.
using ObjectiveFn = std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)>;

struct LbfgsOptions {
    int memory = 10;
    int max_iters = 20000;
    double grad_tol = 1e-10;
    // strong Wolfe constants
    double c1 = 1e-4;
    double c2 = 0.9;
    int max_line_evals = 60;
};

enum class LbfgsStatus { GradientConverged, IterationCap, LineSearchFailed };

struct LbfgsResult {
    Eigen::VectorXd x;
    double f = 0.0;
    double grad_norm = 0.0;
    int iterations = 0;
    int evaluations = 0;
    LbfgsStatus status = LbfgsStatus::IterationCap;
};

/// Limited-memory BFGS with a strong-Wolfe bracketing line search. Accepted
/// objective values are monotone non-increasing.
LbfgsResult lbfgs_minimize(const ObjectiveFn& fn, const Eigen::VectorXd& x0,
                           const LbfgsOptions& opts = {});

}  // namespace sic
