#include "sicsearch/lbfgs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace sic {

namespace {

struct Pair {
    Eigen::VectorXd s, y;
    double rho;
};

Eigen::VectorXd two_loop_direction(const Eigen::VectorXd& g, const std::deque<Pair>& hist) {
    Eigen::VectorXd q = g;
    std::vector<double> alpha(hist.size());
    for (std::size_t i = hist.size(); i-- > 0;) {
        alpha[i] = hist[i].rho * hist[i].s.dot(q);
        q -= alpha[i] * hist[i].y;
    }
    if (!hist.empty()) {
        const Pair& last = hist.back();
        q *= last.s.dot(last.y) / last.y.squaredNorm();
    }
    for (std::size_t i = 0; i < hist.size(); ++i) {
        double beta = hist[i].rho * hist[i].y.dot(q);
        q += (alpha[i] - beta) * hist[i].s;
    }
    return -q;
}

struct LinePoint {
    double a, f, df;
};

}  // namespace

LbfgsResult lbfgs_minimize(const ObjectiveFn& fn, const Eigen::VectorXd& x0,
                           const LbfgsOptions& opts) {
    LbfgsResult res;
    res.x = x0;
    Eigen::VectorXd g(x0.size());
    res.f = fn(res.x, g);
    res.evaluations = 1;
    res.grad_norm = g.norm();

    std::deque<Pair> hist;
    Eigen::VectorXd x_trial(x0.size()), g_trial(x0.size());

    auto eval_line = [&](const Eigen::VectorXd& x, const Eigen::VectorXd& p,
                         double a) -> LinePoint {
        x_trial = x + a * p;
        double f = fn(x_trial, g_trial);
        ++res.evaluations;
        return LinePoint{a, f, g_trial.dot(p)};
    };

    for (int iter = 0; iter < opts.max_iters; ++iter) {
        res.iterations = iter;
        if (res.grad_norm <= opts.grad_tol) {
            res.status = LbfgsStatus::GradientConverged;
            return res;
        }

        Eigen::VectorXd p = two_loop_direction(g, hist);
        double dphi0 = g.dot(p);
        if (!(dphi0 < 0.0)) {  // not a descent direction; reset to steepest descent
            hist.clear();
            p = -g;
            dphi0 = g.dot(p);
        }

        const double phi0 = res.f;
        double a = hist.empty() ? std::min(1.0, 1.0 / std::max(res.grad_norm, 1e-12)) : 1.0;

        // strong Wolfe: bracketing phase then zoom
        LinePoint best{0.0, phi0, dphi0};
        Eigen::VectorXd best_g = g;
        bool accepted = false;
        LinePoint prev{0.0, phi0, dphi0};
        LinePoint lo{0.0, phi0, dphi0}, hi{0.0, phi0, dphi0};
        bool bracketed = false;
        int line_evals = 0;

        while (line_evals < opts.max_line_evals) {
            LinePoint cur = eval_line(res.x, p, a);
            ++line_evals;
            if (cur.f < best.f) { best = cur; best_g = g_trial; }
            if (cur.f > phi0 + opts.c1 * cur.a * dphi0 || (line_evals > 1 && cur.f >= prev.f)) {
                lo = prev; hi = cur; bracketed = true;
                break;
            }
            if (std::abs(cur.df) <= -opts.c2 * dphi0) {
                best = cur; best_g = g_trial; accepted = true;
                break;
            }
            if (cur.df >= 0.0) {
                lo = cur; hi = prev; bracketed = true;
                break;
            }
            prev = cur;
            a = std::min(2.0 * a, 1e12);
        }

        if (!accepted && bracketed) {
            while (line_evals < opts.max_line_evals) {
                // quadratic interpolation with a bisection safeguard
                double span = hi.a - lo.a;
                double denom = 2.0 * (hi.f - lo.f - lo.df * span);
                double cand = std::abs(denom) > 1e-300
                                  ? lo.a - lo.df * span * span / denom
                                  : lo.a + 0.5 * span;
                double lo_bound = std::min(lo.a, hi.a), hi_bound = std::max(lo.a, hi.a);
                double margin = 0.1 * (hi_bound - lo_bound);
                if (!(cand > lo_bound + margin) || !(cand < hi_bound - margin))
                    cand = 0.5 * (lo_bound + hi_bound);

                LinePoint cur = eval_line(res.x, p, cand);
                ++line_evals;
                if (cur.f < best.f) { best = cur; best_g = g_trial; }
                if (cur.f > phi0 + opts.c1 * cur.a * dphi0 || cur.f >= lo.f) {
                    hi = cur;
                } else {
                    if (std::abs(cur.df) <= -opts.c2 * dphi0) {
                        best = cur; best_g = g_trial; accepted = true;
                        break;
                    }
                    if (cur.df * (hi.a - lo.a) >= 0.0) hi = lo;
                    lo = cur;
                }
                if (std::abs(hi.a - lo.a) <= 1e-14 * std::max(1.0, std::abs(lo.a))) break;
            }
        }

        if (!accepted && !(best.f < phi0)) {
            // no strict decrease available along p at working precision
            res.status = LbfgsStatus::LineSearchFailed;
            return res;
        }

        // move to the accepted (or best-decrease) point
        Eigen::VectorXd x_new = res.x + best.a * p;
        Eigen::VectorXd s = x_new - res.x;
        Eigen::VectorXd y = best_g - g;
        double sy = s.dot(y);
        if (sy > 1e-12 * s.norm() * y.norm()) {
            hist.push_back(Pair{std::move(s), std::move(y), 1.0 / sy});
            if (static_cast<int>(hist.size()) > opts.memory) hist.pop_front();
        }

        res.x = std::move(x_new);
        res.f = best.f;
        g = best_g;
        res.grad_norm = g.norm();
    }
    res.iterations = opts.max_iters;
    res.status =
        res.grad_norm <= opts.grad_tol ? LbfgsStatus::GradientConverged : LbfgsStatus::IterationCap;
    return res;
}

}  // namespace sic
