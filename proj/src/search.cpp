#include "sicsearch/search.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace sic {

SearchSpace SearchSpace::full(const Dim& dim) {
    SearchSpace s;
    s.dim_ = dim;
    s.reduced_ = false;
    return s;
}

SearchSpace SearchSpace::reduced(SubspaceBasis basis) {
    SearchSpace s;
    s.dim_ = basis.dim;
    s.reduced_ = true;
    s.basis_ = std::move(basis);
    return s;
}

Int SearchSpace::real_dim() const {
    return reduced_ ? basis_.real_dim() : 2 * dim_.d;
}

Vector SearchSpace::to_ambient(const Eigen::VectorXd& params) const {
    if (!reduced_) {
        const Int d = dim_.d;
        Vector x(d);
        for (Int k = 0; k < d; ++k) x(k) = Complex(params(k), params(d + k));
        return x;
    }
    const Int s = basis_.size();
    Vector coords(s);
    if (basis_.antiunitary_mode) {
        for (Int i = 0; i < s; ++i) coords(i) = Complex(params(i), 0.0);
    } else {
        for (Int i = 0; i < s; ++i) coords(i) = Complex(params(i), params(s + i));
    }
    return lift_coordinates(basis_, coords);
}

Eigen::VectorXd SearchSpace::random_start(RandomStream& rng) const {
    Eigen::VectorXd params(real_dim());
    if (!reduced_) {
        Vector v = haar_random_state(dim_.d, rng);
        for (Int k = 0; k < dim_.d; ++k) {
            params(k) = v(k).real();
            params(dim_.d + k) = v(k).imag();
        }
    } else if (basis_.antiunitary_mode) {
        Vector v = real_sphere_state(basis_.size(), rng);
        for (Int i = 0; i < basis_.size(); ++i) params(i) = v(i).real();
    } else {
        Vector v = haar_random_state(basis_.size(), rng);
        const Int s = basis_.size();
        for (Int i = 0; i < s; ++i) {
            params(i) = v(i).real();
            params(s + i) = v(i).imag();
        }
    }
    return params;
}

double SearchSpace::value_gradient(const Eigen::VectorXd& params, Eigen::VectorXd& grad) const {
    Vector x = to_ambient(params);
    Vector w;
    double value = welch_value_gradient(x, w);
    grad.resize(real_dim());
    if (!reduced_) {
        const Int d = dim_.d;
        for (Int k = 0; k < d; ++k) {
            grad(k) = 2.0 * w(k).real();
            grad(d + k) = -2.0 * w(k).imag();
        }
        return value;
    }
    // chain rule through the linear lift x = B c (B enters untransposed
    // because conj(x) depends only on conj(c))
    Vector wc = basis_.vectors.transpose() * w;
    const Int s = basis_.size();
    if (basis_.antiunitary_mode) {
        for (Int i = 0; i < s; ++i) grad(i) = 2.0 * wc(i).real();
    } else {
        for (Int i = 0; i < s; ++i) {
            grad(i) = 2.0 * wc(i).real();
            grad(s + i) = -2.0 * wc(i).imag();
        }
    }
    return value;
}

ObjectiveFn SearchSpace::objective() const {
    return [this](const Eigen::VectorXd& x, Eigen::VectorXd& g) {
        return value_gradient(x, g);
    };
}

std::string to_string(Convergence c) {
    switch (c) {
        case Convergence::Fiducial: return "fiducial";
        case Convergence::LocalMin: return "local-min";
        case Convergence::IterationCap: return "iteration-cap";
    }
    return "?";
}

namespace {

std::string space_tag(const SearchSpace& space) {
    if (!space.is_reduced()) return "";
    const SubspaceBasis& b = space.basis();
    std::string kind = b.source_kind ? to_string(*b.source_kind) : "custom";
    if (b.antiunitary_mode) return kind + ":coneigen";
    return kind + ":m=" + std::to_string(b.eigenvalue_index);
}

FiducialCandidate make_candidate(const SearchSpace& space, const Eigen::VectorXd& params,
                                 double gap, std::uint64_t seed) {
    Vector x = space.to_ambient(params);
    FiducialCandidate c;
    c.dim = space.dim();
    c.components = x / x.norm();
    c.norm_gap = std::abs(c.components.norm() - 1.0);
    c.objective_gap = gap;
    c.seed = seed;
    std::string tag = space_tag(space);
    if (!tag.empty()) c.subspace_tag = tag;
    return c;
}

constexpr double kGrayZoneCeiling = 1e-8;

}  // namespace

SearchResult local_minimize(const SearchSpace& space, const Eigen::VectorXd& start,
                            const SearchConfig& config, Int trial_index) {
    LbfgsOptions opts;
    opts.max_iters = static_cast<int>(config.max_iters);
    opts.grad_tol = config.grad_tol;
    LbfgsResult run = lbfgs_minimize(space.objective(), start, opts);

    // gray zone: polish before deciding what this trial found
    if (run.f > config.gap_tol && run.f <= kGrayZoneCeiling) {
        LbfgsOptions tight = opts;
        tight.max_iters = 5000;
        tight.grad_tol = 1e-13;
        LbfgsResult polish = lbfgs_minimize(space.objective(), run.x, tight);
        polish.iterations += run.iterations;
        run = polish;
    }
    SearchResult result;
    result.trial_index = trial_index;
    result.iterations = run.iterations;
    result.candidate = make_candidate(space, run.x, run.f, config.master_seed);

    // quasi-Newton stalls at the functional's roundoff floor with the vector
    // still ~1e-8 off the solution set; the residual-system polish closes that
    if (run.f <= kGrayZoneCeiling) {
        result.candidate.components = equiangularity_polish(result.candidate.components);
        result.candidate.objective_gap = welch_functional(result.candidate.components);
    }
    const double gap = result.candidate.objective_gap;

    if (gap <= config.gap_tol && verify_sic(result.candidate.components, kGrayZoneCeiling).pass) {
        result.converged_to = Convergence::Fiducial;
    } else if (run.status == LbfgsStatus::IterationCap) {
        result.converged_to = Convergence::IterationCap;
    } else {
        result.converged_to = Convergence::LocalMin;
    }
    return result;
}

Int resolve_worker_count(Int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SIC_WORKERS")) {
        Int n = std::atoll(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<Int>(hw) : 1;
}

namespace {

void validate(const SearchConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (!(config.gap_tol > 0.0) || !(config.grad_tol > 0.0))
        throw std::invalid_argument("tolerances must be positive");
    if (config.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
}

std::vector<SearchResult> run_sector(const SearchSpace& space, const SearchConfig& config,
                                     Int sector, Int stream_offset, const EventSink& sink) {
    const Int trials = config.trials;
    std::vector<SearchResult> results(trials);
    std::atomic<Int> next{0};
    std::mutex sink_mu;
    Int workers = std::min<Int>(resolve_worker_count(config.workers), trials);

    auto work = [&]() {
        for (;;) {
            Int t = next.fetch_add(1);
            if (t >= trials) return;
            Int stream_id = stream_offset + t;
            RandomStream rng(config.master_seed, static_cast<std::uint64_t>(stream_id));
            Eigen::VectorXd start = space.random_start(rng);
            SearchResult r = local_minimize(space, start, config, stream_id);
            results[t] = r;
            if (sink) {
                std::lock_guard<std::mutex> lock(sink_mu);
                sink(TrialEvent{stream_id, sector, r.converged_to, r.candidate.objective_gap,
                                r.iterations});
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (Int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return results;
}

}  // namespace

std::vector<SearchResult> multi_start_search(const SearchConfig& config, const EventSink& sink) {
    validate(config);

    if (!config.symmetry) {
        return run_sector(SearchSpace::full(config.dim), config, 0, 0, sink);
    }

    SymmetrySpec sym = build_symmetry(*config.symmetry, config.dim);
    if (sym.antiunitary()) {
        if (config.eigenvalue && *config.eigenvalue != 0)
            throw std::invalid_argument("anti-unitary sectors carry no eigenvalue index");
        return run_sector(SearchSpace::reduced(make_search_basis(sym, 0)), config, 0, 0, sink);
    }

    std::vector<Int> sectors;
    if (config.eigenvalue) {
        if (*config.eigenvalue < 0 || *config.eigenvalue >= sym.order)
            throw std::invalid_argument("eigenvalue index out of range for symmetry order " +
                                        std::to_string(sym.order));
        sectors.push_back(*config.eigenvalue);
    } else {
        for (Int m = 0; m < sym.order; ++m) sectors.push_back(m);
    }

    std::vector<SearchResult> all;
    for (Int m : sectors) {
        SubspaceBasis basis = make_search_basis(sym, m);
        if (basis.size() == 0) continue;
        auto batch = run_sector(SearchSpace::reduced(std::move(basis)), config, m,
                                m * config.trials, sink);
        bool found = false;
        for (const auto& r : batch)
            if (r.converged_to == Convergence::Fiducial) found = true;
        all.insert(all.end(), std::make_move_iterator(batch.begin()),
                   std::make_move_iterator(batch.end()));
        if (found) break;  // sector heuristic: stop at the first productive sector
    }
    return all;
}

RefineResult refine(const FiducialCandidate& candidate) {
    SearchSpace space = SearchSpace::full(candidate.dim);
    const Int d = candidate.dim.d;
    Eigen::VectorXd params(2 * d);
    for (Int k = 0; k < d; ++k) {
        params(k) = candidate.components(k).real();
        params(d + k) = candidate.components(k).imag();
    }
    LbfgsOptions opts;
    opts.max_iters = 20000;
    opts.grad_tol = 1e-13;
    LbfgsResult run = lbfgs_minimize(space.objective(), params, opts);

    Vector x = space.to_ambient(run.x);
    Vector polished = equiangularity_polish(x / x.norm());
    double gap = welch_functional(polished);

    RefineResult out;
    out.candidate = candidate;
    if (gap > candidate.objective_gap) {  // no improvement; keep the input
        out.polished = false;
        return out;
    }
    out.candidate.components = polished;
    out.candidate.objective_gap = gap;
    out.candidate.norm_gap = std::abs(polished.norm() - 1.0);
    out.polished = gap <= 1e-14;
    return out;
}

}  // namespace sic
