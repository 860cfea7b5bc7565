#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sicsearch/classify.hpp"
#include "sicsearch/search.hpp"
#include "sicsearch/solution_io.hpp"

namespace py = pybind11;
using namespace sic;

namespace {

SymmetryKind kind_from_name(const std::string& name) {
    auto kind = symmetry_kind_from_string(name);
    if (!kind) throw std::invalid_argument("unknown symmetry '" + name + "'");
    return *kind;
}

py::dict result_to_dict(const SearchResult& r) {
    py::dict d;
    d["vector"] = r.candidate.components;
    d["gap"] = r.candidate.objective_gap;
    d["trial"] = r.trial_index;
    d["iterations"] = r.iterations;
    d["status"] = to_string(r.converged_to);
    d["subspace"] = r.candidate.subspace_tag ? py::cast(*r.candidate.subspace_tag) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Search and classification of Weyl-Heisenberg SIC fiducial vectors";

    m.def("welch_functional", [](const Vector& phi) { return welch_functional(phi); },
          py::arg("phi"),
          "Welch-bound functional; zero exactly on SIC fiducial vectors.");
    m.def("welch_gradient", [](const Vector& phi) { return welch_gradient(phi); },
          py::arg("phi"),
          "Gradient with respect to [Re phi, Im phi] of the normalized functional.");
    m.def(
        "verify_sic",
        [](const Vector& phi, double tol) {
            SicReport rep = verify_sic(phi, tol);
            return py::make_tuple(rep.max_dev, rep.pass);
        },
        py::arg("phi"), py::arg("tol") = kDefaultSicTol,
        "Returns (max_dev, pass) for the direct equiangularity check.");

    m.def(
        "displacement_matrix",
        [](Int d, Int p1, Int p2) {
            Dim dim = Dim::of(d);
            return displacement_matrix(DisplacementIndex::reduce(p1, p2, dim), dim);
        },
        py::arg("d"), py::arg("p1"), py::arg("p2"));
    m.def("zauner_matrix", [](Int d) { return zauner_matrix(Dim::of(d)); }, py::arg("d"));
    m.def(
        "realize",
        [](Int d, std::array<std::array<Int, 2>, 2> F, std::array<Int, 2> p) {
            Dim dim = Dim::of(d);
            CliffordElement g{make_symplectic(F[0][0], F[0][1], F[1][0], F[1][1], dim.dbar),
                              p[0], p[1]};
            RealizedOperator op = realize(g, dim);
            return py::make_tuple(op.matrix, op.conjugate_first);
        },
        py::arg("d"), py::arg("F"), py::arg("p"),
        "Realize (F|p): returns (matrix, conjugate_first).");

    m.def("sl2_group_order", &sl2_group_order, py::arg("modulus"));
    m.def("pec_order", [](Int d) { return pec_order(Dim::of(d)); }, py::arg("d"));
    m.def(
        "zauner_subspace_dims",
        [](Int d) {
            return std::vector<Int>{(d + 3) / 3, (d + 1) / 3, (d - 1) / 3};
        },
        py::arg("d"));

    m.def(
        "applicable_symmetries",
        [](Int d) {
            std::vector<py::dict> out;
            for (const auto& s : applicable_symmetries(Dim::of(d))) {
                py::dict e;
                e["kind"] = to_string(s.kind);
                e["order"] = s.order;
                e["antiunitary"] = s.antiunitary();
                e["matrix"] = std::vector<std::vector<Int>>{{s.matrix.a, s.matrix.b},
                                                            {s.matrix.c, s.matrix.e}};
                out.push_back(std::move(e));
            }
            return out;
        },
        py::arg("d"));

    m.def(
        "symmetry_basis",
        [](Int d, const std::string& kind, Int m) {
            Dim dim = Dim::of(d);
            SymmetrySpec sym = build_symmetry(kind_from_name(kind), dim);
            SubspaceBasis basis = make_search_basis(sym, m);
            return py::make_tuple(basis.vectors, basis.antiunitary_mode);
        },
        py::arg("d"), py::arg("kind"), py::arg("m") = 0,
        "Orthonormal search basis for a symmetry sector: (columns, antiunitary_mode).");

    m.def(
        "search",
        [](Int d, py::object symmetry, py::object eigenvalue, Int trials, std::uint64_t seed,
           Int workers, double gap_tol, Int max_iters) {
            SearchConfig config;
            config.dim = Dim::of(d);
            if (!symmetry.is_none())
                config.symmetry = kind_from_name(symmetry.cast<std::string>());
            if (!eigenvalue.is_none()) config.eigenvalue = eigenvalue.cast<Int>();
            config.trials = trials;
            config.master_seed = seed;
            config.workers = workers;
            config.gap_tol = gap_tol;
            config.max_iters = max_iters;
            std::vector<py::dict> out;
            for (const auto& r : multi_start_search(config)) out.push_back(result_to_dict(r));
            return out;
        },
        py::arg("d"), py::arg("symmetry") = py::none(), py::arg("eigenvalue") = py::none(),
        py::arg("trials") = 50, py::arg("seed") = 1, py::arg("workers") = 0,
        py::arg("gap_tol") = 1e-13, py::arg("max_iters") = 20000,
        "Deterministic multi-start search; returns one record per trial.");

    m.def(
        "refine",
        [](const Vector& phi) {
            FiducialCandidate c;
            c.dim = Dim::of(phi.size());
            c.components = phi / phi.norm();
            c.objective_gap = welch_functional(c.components);
            RefineResult r = refine(c);
            return py::make_tuple(r.candidate.components, r.candidate.objective_gap, r.polished);
        },
        py::arg("phi"), "Gradient polish: returns (vector, gap, polished).");

    m.def(
        "classify",
        [](const std::vector<Vector>& vectors, Int d) {
            Dim dim = Dim::of(d);
            std::vector<FiducialCandidate> candidates;
            for (const auto& v : vectors) {
                FiducialCandidate c;
                c.dim = dim;
                c.components = v / v.norm();
                c.objective_gap = welch_functional(c.components);
                candidates.push_back(std::move(c));
            }
            std::vector<py::dict> out;
            for (const auto& orbit : classify_all(candidates, dim)) {
                py::dict e;
                e["label"] = orbit.label;
                e["stabiliser_order"] = orbit.stabiliser_order;
                e["orbit_size"] = orbit.orbit_size;
                e["members"] = orbit.member_indices;
                std::vector<py::tuple> gens;
                for (const auto& g : orbit.stabiliser_generators)
                    gens.push_back(py::make_tuple(
                        std::vector<std::vector<Int>>{{g.F.a, g.F.b}, {g.F.c, g.F.e}},
                        py::make_tuple(g.p1, g.p2), g.antiunitary()));
                e["generators"] = gens;
                out.push_back(std::move(e));
            }
            return out;
        },
        py::arg("vectors"), py::arg("d"));

    m.attr("__version__") = "0.1.0";
}
