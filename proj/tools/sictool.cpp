#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <iostream>

#include "sicsearch/classify.hpp"
#include "sicsearch/search.hpp"
#include "sicsearch/solution_io.hpp"

namespace fs = std::filesystem;
using namespace sic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoSolution = 3;

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

std::string applicability_hint(SymmetryKind kind) {
    switch (kind) {
        case SymmetryKind::Fa: return "d != 9k+3";
        case SymmetryKind::Fb: return "d+1 not a square";
        case SymmetryKind::Fc: return "d-3 not of the form (3k+-1)^2";
        case SymmetryKind::Fd: return "d != (k+3)k^2-1";
        case SymmetryKind::Fe: return "d != 9k^2+3";
        case SymmetryKind::Fep: return "d-3 not a square";
        default: return "always applicable";
    }
}

std::string applicable_set(const Dim& dim) {
    std::string out = "fz";
    for (const auto& s : applicable_symmetries(dim))
        if (s.kind != SymmetryKind::Fz) out += ", " + to_string(s.kind);
    out += ", j, none";
    return out;
}

std::string matrix_text(const SymplecticExt& F) {
    return "[[" + std::to_string(F.a) + "," + std::to_string(F.b) + "],[" + std::to_string(F.c) +
           "," + std::to_string(F.e) + "]]";
}

void print_block_form(std::ostream& os, const CliffordElement& g, const std::string& indent) {
    os << indent << "[ " << g.F.a << " " << g.F.b << " | " << g.p1 << " ]\n";
    os << indent << "[ " << g.F.c << " " << g.F.e << " | " << g.p2 << " ]\n";
}

SolutionFile load_any(const std::string& path) {
    if (!fs::exists(path)) throw std::invalid_argument("cannot open: " + path);
    try {
        return parse_solution_file(path);
    } catch (const ParseError& e) {
        if (e.line > 1) throw;  // a real syntax error, not just a missing header
        return import_solution_file(path);
    }
}

int cmd_search(Int d, const std::string& symmetry, Int eigenvalue, bool eigenvalue_set,
               Int trials, std::uint64_t seed, Int workers, const std::string& out_dir,
               double gap_tol, Int max_iters, bool no_timestamp, int digits) {
    Dim dim = Dim::of(d);
    SearchConfig config;
    config.dim = dim;
    config.trials = trials;
    config.master_seed = seed;
    config.workers = workers;
    config.gap_tol = gap_tol;
    config.max_iters = max_iters;

    if (symmetry != "none") {
        auto kind = symmetry_kind_from_string(symmetry);
        if (!kind) {
            std::cerr << "error: unknown symmetry '" << symmetry << "'\n";
            return kExitUsage;
        }
        if (!symmetry_applicable(*kind, dim)) {
            std::cerr << "error: " << symmetry << " inapplicable: " << applicability_hint(*kind)
                      << " (applicable here: " << applicable_set(dim) << ")\n";
            return kExitUsage;
        }
        config.symmetry = *kind;
        if (eigenvalue_set) config.eigenvalue = eigenvalue;
    } else if (eigenvalue_set) {
        std::cerr << "error: --eigenvalue requires --symmetry\n";
        return kExitUsage;
    }

    auto sink = [](const TrialEvent& ev) {
        std::cout << "trial=" << ev.trial << " sector=" << ev.sector
                  << " status=" << to_string(ev.status) << " gap=" << ev.gap
                  << " iters=" << ev.iterations << "\n";
    };

    std::vector<SearchResult> results = multi_start_search(config, sink);

    // keep fiducial-grade results, deduplicated up to a global phase
    std::vector<const SearchResult*> fiducials;
    for (const auto& r : results) {
        if (r.converged_to != Convergence::Fiducial) continue;
        bool duplicate = false;
        for (const auto* kept : fiducials) {
            if (std::abs(kept->candidate.components.dot(r.candidate.components)) > 1.0 - 1e-10) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) fiducials.push_back(&r);
    }

    fs::create_directories(out_dir);
    std::string stamp = no_timestamp ? "" : iso_timestamp();
    int index = 0;
    for (const auto* r : fiducials) {
        std::string label(1, static_cast<char>('a' + (index % 26)));
        if (index >= 26) label += std::to_string(index / 26);
        ++index;
        SolutionFile sol = solution_from_candidate(r->candidate, label, digits);
        sol.timestamp = stamp;
        fs::path path = fs::path(out_dir) / solution_filename(dim.d, label, digits);
        write_solution_file(path.string(), sol);
        std::cout << "solution=" << path.string() << " trial=" << r->trial_index
                  << " gap=" << r->candidate.objective_gap << "\n";
    }
    std::cout << "dim=" << dim.d << " trials_run=" << results.size()
              << " fiducials=" << fiducials.size() << "\n";
    return fiducials.empty() ? kExitNoSolution : kExitOk;
}

int cmd_verify(const std::vector<std::string>& files, double tol, Int expect_dim) {
    bool all_pass = true;
    for (const auto& path : files) {
        SolutionFile sol = load_any(path);
        if (expect_dim > 0 && sol.dim != expect_dim) {
            std::cerr << "error: " << path << " has dim " << sol.dim << ", expected "
                      << expect_dim << "\n";
            return kExitUsage;
        }
        Vector phi = sol.components / sol.components.norm();
        SicReport rep = verify_sic(phi, tol);
        double gap = welch_functional(phi);
        std::cout << "file=" << path << " dim=" << sol.dim << " max_dev=" << rep.max_dev
                  << " gap=" << gap << " pass=" << (rep.pass ? "true" : "false") << "\n";
        all_pass = all_pass && rep.pass;
    }
    return all_pass ? kExitOk : 1;
}

int cmd_classify(const std::vector<std::string>& files, Int expect_dim, double tol) {
    std::vector<FiducialCandidate> candidates;
    Int d = expect_dim;
    for (const auto& path : files) {
        SolutionFile sol = load_any(path);
        if (d == 0) d = sol.dim;
        if (sol.dim != d) {
            std::cerr << "error: " << path << " has dim " << sol.dim << ", expected " << d
                      << "\n";
            return kExitUsage;
        }
        FiducialCandidate c;
        c.dim = Dim::of(sol.dim);
        c.components = sol.components / sol.components.norm();
        c.objective_gap = welch_functional(c.components);
        candidates.push_back(std::move(c));
    }
    Dim dim = Dim::of(d);
    if (dim.d > kClassifyDimCap) {
        std::cerr << "error: classification is capped at d <= " << kClassifyDimCap << "\n";
        return kExitUsage;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!verify_sic(candidates[i].components, 1e-8).pass) {
            std::cerr << "error: " << files[i] << " is not a fiducial at tol 1e-8\n";
            return kExitUsage;
        }
    }

    auto orbits = classify_all(candidates, dim, tol);
    std::cout << "dim=" << dim.d << " orbits=" << orbits.size() << " pec_order=" << pec_order(dim)
              << "\n";
    for (const auto& orbit : orbits) {
        std::cout << "orbit=" << orbit.label << " stabiliser_order=" << orbit.stabiliser_order
                  << " orbit_size=" << orbit.orbit_size << " members=";
        for (std::size_t i = 0; i < orbit.member_indices.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << files[static_cast<std::size_t>(orbit.member_indices[i])];
        }
        std::cout << "\n";
        for (const auto& g : orbit.stabiliser_generators) {
            std::cout << "generator order=" << pec_element_order(g, dim)
                      << " antiunitary=" << (g.antiunitary() ? "true" : "false") << "\n";
            print_block_form(std::cout, g, "  ");
        }
    }
    return kExitOk;
}

int cmd_info(Int d) {
    Dim dim = Dim::of(d);
    std::cout << "dim=" << dim.d << " dbar=" << dim.dbar << "\n";
    std::cout << "pc_order=" << pec_order(dim) / 2 << " pec_order=" << pec_order(dim) << "\n";
    std::cout << "zauner_dims=" << (dim.d + 3) / 3 << "," << (dim.d + 1) / 3 << ","
              << (dim.d - 1) / 3 << "\n";
    for (const auto& s : applicable_symmetries(dim)) {
        std::cout << "symmetry=" << to_string(s.kind) << " order=" << s.order
                  << " antiunitary=" << (s.antiunitary() ? "true" : "false");
        if (s.k != 0) std::cout << " k=" << s.k;
        if (s.l != 0) std::cout << " l=" << s.l;
        if (s.kappa != 0) std::cout << " kappa=" << s.kappa;
        std::cout << " matrix=" << matrix_text(s.matrix) << "\n";
    }
    for (const auto& c : verify_conjugacies(dim).checks) {
        std::cout << "conjugacy=\"" << c.name << "\" witness=" << matrix_text(c.witness)
                  << " mod_d=" << (c.holds_mod_d ? "pass" : "fail")
                  << " mod_dbar=" << (c.holds_mod_dbar ? "pass" : "fail") << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical search and classification of Weyl-Heisenberg SIC fiducial vectors"};
    app.require_subcommand(1);

    // search
    auto* search = app.add_subcommand("search", "Multi-start minimization of the SIC functional");
    Int s_dim = 0;
    std::string s_symmetry = "none";
    Int s_eigenvalue = 0;
    Int s_trials = 50;
    std::uint64_t s_seed = 1;
    Int s_workers = 0;
    std::string s_out = ".";
    double s_gap_tol = 1e-13;
    Int s_max_iters = 20000;
    bool s_no_timestamp = false;
    int s_digits = kDefaultDigits;
    search->add_option("--dim", s_dim, "Hilbert-space dimension")->required();
    search->add_option("--symmetry", s_symmetry,
                       "Symmetry restriction: fz,fa,fb,fc,fd,fe,fep,j,none");
    auto* eig_opt = search->add_option("--eigenvalue", s_eigenvalue, "Eigenvalue sector index m");
    search->add_option("--trials", s_trials, "Number of random starts");
    search->add_option("--seed", s_seed, "Master seed for the trial streams");
    search->add_option("--workers", s_workers, "Worker threads (default: SIC_WORKERS or cores)");
    search->add_option("--out", s_out, "Output directory for solution files");
    search->add_option("--gap-tol", s_gap_tol, "Objective gap below which a trial is a fiducial");
    search->add_option("--max-iters", s_max_iters, "Iteration cap per trial");
    search->add_flag("--no-timestamp", s_no_timestamp, "Omit the timestamp header field");
    search->add_option("--digits", s_digits, "Significant digits written to solution files");

    // verify
    auto* verify = app.add_subcommand("verify", "Check solution files against the SIC condition");
    std::vector<std::string> v_files;
    double v_tol = kDefaultSicTol;
    Int v_dim = 0;
    verify->add_option("files", v_files, "Solution files")->required();
    verify->add_option("--tol", v_tol, "Maximum allowed overlap deviation");
    verify->add_option("--dim", v_dim, "Expected dimension");

    // classify
    auto* classify = app.add_subcommand("classify", "Group fiducials into extended-Clifford orbits");
    std::vector<std::string> c_files;
    Int c_dim = 0;
    double c_tol = kOrbitOverlapTol;
    classify->add_option("files", c_files, "Solution files")->required();
    classify->add_option("--dim", c_dim, "Expected dimension");
    classify->add_option("--tol", c_tol, "Overlap-modulus tolerance");

    // info
    auto* info = app.add_subcommand("info", "Group orders, eigenspace dimensions, symmetries");
    Int i_dim = 0;
    info->add_option("--dim", i_dim, "Hilbert-space dimension")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*search) {
            if (s_trials < 1) {
                std::cerr << "error: --trials must be >= 1\n";
                return kExitUsage;
            }
            return cmd_search(s_dim, s_symmetry, s_eigenvalue, eig_opt->count() > 0, s_trials,
                              s_seed, s_workers, s_out, s_gap_tol, s_max_iters, s_no_timestamp,
                              s_digits);
        }
        if (*verify) return cmd_verify(v_files, v_tol, v_dim);
        if (*classify) return cmd_classify(c_files, c_dim, c_tol);
        if (*info) return cmd_info(i_dim);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
