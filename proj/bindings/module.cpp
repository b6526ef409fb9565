#include "umdnorms/ideal_norms.hpp"
#include "umdnorms/kernels.hpp"
#include "umdnorms/literals.hpp"
#include "umdnorms/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace umdnorms;

namespace {

VectorTuple make_tuple(const NormedSpace& sp, const std::vector<Vec>& entries) {
    return VectorTuple(sp, entries);
}

GridFunction make_function(const NormedSpace& sp, const QuadratureGrid& g, const Mat& samples) {
    return GridFunction::from_matrix(sp, g, samples);
}

OptimizerConfig config_from_kwargs(int restarts, int max_iterations, double grad_tol,
                                   std::uint64_t seed, bool force_iterative, int threads) {
    OptimizerConfig cfg;
    cfg.restarts = restarts;
    cfg.max_iterations = max_iterations;
    cfg.grad_tol = grad_tol;
    cfg.seed = seed;
    cfg.force_iterative = force_iterative;
    cfg.threads = threads;
    return cfg;
}

py::dict estimate_to_dict(const IdealNormEstimate& est) {
    py::dict d;
    d["value"] = est.value;
    d["exact"] = est.exact;
    d["restarts_used"] = est.restarts_used;
    d["iterations"] = est.iterations;
    d["best_per_restart"] = est.best_per_restart;
    if (est.certificate_tuple) d["certificate_tuple"] = est.certificate_tuple->as_matrix();
    if (est.certificate_function)
        d["certificate_function"] = est.certificate_function->as_matrix();
    if (est.branches) d["branches"] = py::make_tuple(est.branches->first, est.branches->second);
    return d;
}

py::dict check_to_dict(const CheckResult& r) {
    static const char* cls_names[] = {"identity", "constructive", "estimate", "informational"};
    static const char* verdict_names[] = {"pass", "fail", "informational"};
    py::dict d;
    d["id"] = r.id;
    d["instance"] = r.instance;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["constant"] = r.constant;
    d["ratio"] = r.ratio;
    d["tolerance"] = r.tolerance;
    d["class"] = cls_names[static_cast<int>(r.cls)];
    d["verdict"] = verdict_names[static_cast<int>(r.verdict)];
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "trigonometric system norms and UMD ideal-norm estimation";

    py::class_<NormedSpace>(m, "NormedSpace")
        .def_static("parse", &parse_space, py::arg("literal"))
        .def_property_readonly("dim", &NormedSpace::dim)
        .def_property_readonly("is_hilbert", &NormedSpace::is_hilbert)
        .def("norm", &NormedSpace::norm, py::arg("x"))
        .def("subgradient", &NormedSpace::subgradient, py::arg("x"))
        .def("dual", &NormedSpace::dual)
        .def("describe", &NormedSpace::describe)
        .def("__repr__", [](const NormedSpace& s) { return "NormedSpace(" + s.describe() + ")"; });

    py::class_<LinearOperator>(m, "LinearOperator")
        .def(py::init<NormedSpace, NormedSpace, Mat>(), py::arg("domain"), py::arg("codomain"),
             py::arg("matrix"))
        .def_static("identity", &LinearOperator::identity, py::arg("space"))
        .def_property_readonly("matrix", &LinearOperator::matrix)
        .def("apply", &LinearOperator::apply, py::arg("x"))
        .def("adjoint", &LinearOperator::adjoint);

    py::class_<TrigSystem>(m, "TrigSystem")
        .def_static("exponential", &TrigSystem::exponential, py::arg("n"))
        .def_static("exponential_range", &TrigSystem::exponential_range, py::arg("lo"),
                    py::arg("hi"))
        .def_static("cosine", &TrigSystem::cosine, py::arg("n"))
        .def_static("sine", &TrigSystem::sine, py::arg("n"))
        .def("conjugate", &TrigSystem::conjugate)
        .def_property_readonly("size", &TrigSystem::size)
        .def_property_readonly("max_frequency", &TrigSystem::max_frequency)
        .def("evaluate", &TrigSystem::evaluate, py::arg("k"), py::arg("t"))
        .def("describe", &TrigSystem::describe)
        .def("__repr__", [](const TrigSystem& s) { return "TrigSystem(" + s.describe() + ")"; });

    py::class_<TensorSystem>(m, "TensorSystem")
        .def(py::init<TrigSystem, TrigSystem>(), py::arg("left"), py::arg("right"))
        .def_property_readonly("size", &TensorSystem::size)
        .def("evaluate", &TensorSystem::evaluate, py::arg("k"), py::arg("s"), py::arg("t"))
        .def("describe", &TensorSystem::describe);

    py::class_<QuadratureGrid>(m, "QuadratureGrid")
        .def(py::init<int>(), py::arg("n_nodes"))
        .def_static("default_for", &QuadratureGrid::default_for, py::arg("max_frequency"))
        .def_property_readonly("size", &QuadratureGrid::size)
        .def("node", &QuadratureGrid::node, py::arg("j"))
        .def_property_readonly("weight", &QuadratureGrid::weight)
        .def("doubled", &QuadratureGrid::doubled);

    py::class_<VectorTuple>(m, "VectorTuple")
        .def(py::init(&make_tuple), py::arg("space"), py::arg("entries"))
        .def_property_readonly("entries", [](const VectorTuple& t) { return t.entries; })
        .def_property_readonly("size", &VectorTuple::size)
        .def("as_matrix", &VectorTuple::as_matrix);

    py::class_<GridFunction>(m, "GridFunction")
        .def(py::init(&make_function), py::arg("space"), py::arg("grid"), py::arg("samples"))
        .def("as_matrix", &GridFunction::as_matrix);

    m.def("parse_system", [](const std::string& lit) { return parse_system(lit); },
          py::arg("literal"));
    m.def("gram_deviation",
          py::overload_cast<const TrigSystem&, const QuadratureGrid&>(&gram_deviation),
          py::arg("system"), py::arg("grid"));
    m.def("system_norm",
          py::overload_cast<const VectorTuple&, const TrigSystem&, const QuadratureGrid&>(
              &system_norm),
          py::arg("tuple"), py::arg("system"), py::arg("grid"));
    m.def("system_norm",
          py::overload_cast<const VectorTuple&, const TensorSystem&, const QuadratureGrid&>(
              &system_norm),
          py::arg("tuple"), py::arg("system"), py::arg("grid"));
    m.def("doubling_residual", &doubling_residual, py::arg("tuple"), py::arg("system"),
          py::arg("grid"));
    m.def("l2_norm", &l2_norm, py::arg("f"));
    m.def("fourier_coefficients", &fourier_coefficients, py::arg("f"), py::arg("system"));
    m.def("modulate", &modulate, py::arg("f"), py::arg("l"));

    m.def("vp_coefficient", &vp_coefficient, py::arg("m"), py::arg("k"));
    m.def("vp_l1_norm", &vp_l1_norm, py::arg("m"), py::arg("grid"));
    m.def("vp_apply", &vp_apply, py::arg("m"), py::arg("f"));

    m.def(
        "rho_estimate",
        [](const LinearOperator& T, const TrigSystem& to, const TrigSystem& from,
           const QuadratureGrid& grid, int restarts, int max_iterations, double grad_tol,
           std::uint64_t seed, bool force_iterative, int threads) {
            return estimate_to_dict(rho_estimate(
                T, to, from, grid,
                config_from_kwargs(restarts, max_iterations, grad_tol, seed, force_iterative,
                                   threads)));
        },
        py::arg("operator"), py::arg("to_system"), py::arg("from_system"), py::arg("grid"),
        py::arg("restarts") = 32, py::arg("max_iterations") = 500, py::arg("grad_tol") = 1e-9,
        py::arg("seed") = 0, py::arg("force_iterative") = false, py::arg("threads") = 0);
    m.def(
        "delta_estimate",
        [](const LinearOperator& T, const TrigSystem& to, const TrigSystem& from,
           const QuadratureGrid& grid, int restarts, int max_iterations, double grad_tol,
           std::uint64_t seed, bool force_iterative, int threads) {
            return estimate_to_dict(delta_estimate(
                T, to, from, grid,
                config_from_kwargs(restarts, max_iterations, grad_tol, seed, force_iterative,
                                   threads)));
        },
        py::arg("operator"), py::arg("to_system"), py::arg("from_system"), py::arg("grid"),
        py::arg("restarts") = 32, py::arg("max_iterations") = 500, py::arg("grad_tol") = 1e-9,
        py::arg("seed") = 0, py::arg("force_iterative") = false, py::arg("threads") = 0);
    m.def(
        "mu_estimate",
        [](const LinearOperator& T, int n, const QuadratureGrid& grid, int restarts,
           int max_iterations, double grad_tol, std::uint64_t seed, bool force_iterative,
           int threads) {
            return estimate_to_dict(mu_estimate(
                T, n, grid,
                config_from_kwargs(restarts, max_iterations, grad_tol, seed, force_iterative,
                                   threads)));
        },
        py::arg("operator"), py::arg("n"), py::arg("grid"), py::arg("restarts") = 32,
        py::arg("max_iterations") = 500, py::arg("grad_tol") = 1e-9, py::arg("seed") = 0,
        py::arg("force_iterative") = false, py::arg("threads") = 0);
    m.def("brute_force_rho", &brute_force_rho, py::arg("operator"), py::arg("to_system"),
          py::arg("from_system"), py::arg("grid"), py::arg("net_resolution"));

    m.def(
        "verify",
        [](const std::string& suite, int trials, std::uint64_t seed, int n_max, int restarts) {
            std::vector<NormedSpace> spaces = {NormedSpace::lp(2, 1.0), NormedSpace::lp(3, 2.0),
                                               NormedSpace::lp(
                                                   2, std::numeric_limits<double>::infinity())};
            OptimizerConfig cfg;
            cfg.restarts = restarts;
            cfg.seed = seed;
            std::vector<CheckResult> results;
            auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
            if (want("identities")) {
                auto r = check_identities(trials, seed);
                results.insert(results.end(), r.begin(), r.end());
            }
            if (want("tuple")) {
                auto r = check_tuple_inequalities(trials, spaces, n_max, seed);
                results.insert(results.end(), r.begin(), r.end());
            }
            if (want("chain")) {
                std::vector<int> ns;
                for (int n = 2; n <= n_max; n *= 2) ns.push_back(n);
                auto r = check_constant_chain(spaces, ns, cfg);
                results.insert(results.end(), r.begin(), r.end());
            }
            if (want("duality")) {
                auto r = check_duality_and_injectivity(cfg);
                results.insert(results.end(), r.begin(), r.end());
            }
            py::list out;
            for (const CheckResult& r : results) out.append(check_to_dict(r));
            return out;
        },
        py::arg("suite") = "all", py::arg("trials") = 100, py::arg("seed") = 0,
        py::arg("n_max") = 8, py::arg("restarts") = 16);
}
