#pragma once

#include <functional>

#include "sicsearch/lbfgs.hpp"
#include "sicsearch/objective.hpp"
#include "sicsearch/rng.hpp"
#include "sicsearch/subspace.hpp"

namespace sic {

/// Parameter space for the optimizer: either all of C^d over real/imag parts,
/// or a symmetry-reduced coordinate space over a SubspaceBasis.
class SearchSpace {
public:
    static SearchSpace full(const Dim& dim);
    static SearchSpace reduced(SubspaceBasis basis);

    Int real_dim() const;
    const Dim& dim() const { return dim_; }
    bool is_reduced() const { return reduced_; }
    const SubspaceBasis& basis() const { return basis_; }

    Vector to_ambient(const Eigen::VectorXd& params) const;
    Eigen::VectorXd random_start(RandomStream& rng) const;
    double value_gradient(const Eigen::VectorXd& params, Eigen::VectorXd& grad) const;
    ObjectiveFn objective() const;

private:
    Dim dim_{2, 2};
    bool reduced_ = false;
    SubspaceBasis basis_;
};

struct SearchConfig {
    Dim dim;
    std::optional<SymmetryKind> symmetry;
    std::optional<Int> eigenvalue;  // nullopt: try sector 0 first, then the rest
    Int trials = 50;
    std::uint64_t master_seed = 0;
    double gap_tol = 1e-13;
    double grad_tol = 1e-10;
    Int max_iters = 20000;
    Int workers = 0;  // 0: SIC_WORKERS env var, else hardware concurrency
};

enum class Convergence { Fiducial, LocalMin, IterationCap };

std::string to_string(Convergence c);

struct SearchResult {
    FiducialCandidate candidate;
    Int trial_index = 0;
    Int iterations = 0;
    Convergence converged_to = Convergence::LocalMin;
};

struct TrialEvent {
    Int trial = 0;
    Int sector = 0;
    Convergence status = Convergence::LocalMin;
    double gap = 0.0;
    Int iterations = 0;
};
using EventSink = std::function<void(const TrialEvent&)>;

/// One quasi-Newton descent from the given start; gray-zone results are
/// re-polished in place before classification.
SearchResult local_minimize(const SearchSpace& space, const Eigen::VectorXd& start,
                            const SearchConfig& config, Int trial_index);

/// Deterministic multi-start search. Per-trial streams are derived from
/// (master_seed, trial index), so the worker count never changes the results.
/// Fiducial-grade results are gated through verify_sic before being reported.
std::vector<SearchResult> multi_start_search(const SearchConfig& config,
                                             const EventSink& sink = nullptr);

struct RefineResult {
    FiducialCandidate candidate;
    bool polished = false;  // true when the double-precision floor was reached
};

/// Full-space gradient polish of a near-converged candidate.
RefineResult refine(const FiducialCandidate& candidate);

Int resolve_worker_count(Int requested);

}  // namespace sic
