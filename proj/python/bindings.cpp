#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "symgraph/cli.hpp"
#include "symgraph/errors.hpp"
#include "symgraph/extraction.hpp"
#include "symgraph/graph_series.hpp"
#include "symgraph/oracle.hpp"

namespace py = pybind11;
using namespace symgraph;

namespace {

py::object to_py(const Integer& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

py::object to_py(const Rational& q) {
    return py::module_::import("fractions").attr("Fraction")(q.get_str());
}

py::tuple parts_tuple(const Partition& lambda) {
    py::tuple t(lambda.length());
    for (std::size_t i = 0; i < lambda.length(); ++i) t[i] = py::int_(lambda.parts()[i]);
    return t;
}

WeightProfile profile(const std::set<int>& J, bool loops) {
    return WeightProfile{J, loops ? LoopPolicy::WeightedLoops : LoopPolicy::NoLoops};
}

SymSeries build(const std::set<int>& J, int max_degree, bool loops, bool f_only) {
    return f_only ? build_F(J, max_degree) : build_G(profile(J, loops), max_degree);
}

}  // namespace

PYBIND11_MODULE(_symgraph, m) {
    m.doc() = "Exact symmetric-function enumeration of weighted graphs";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    m.def("partitions_of", [](int n) {
        py::list out;
        for (const auto& lambda : partitions_of(n)) out.append(parts_tuple(lambda));
        return out;
    }, py::arg("n"));

    m.def("z_of", [](const std::vector<int>& parts) { return to_py(z_of(Partition(parts))); },
          py::arg("parts"));

    m.def("a_coeffs", [](const std::set<int>& J, int N, const std::string& method) {
        ACoeffs a;
        if (method == "compositions") {
            a = a_coeffs_compositions(J, N);
        } else if (method == "log") {
            a = a_coeffs_log(J, N);
        } else {
            throw DomainError("method must be 'compositions' or 'log'");
        }
        py::list out;
        for (const auto& v : a.values) out.append(to_py(v));
        return out;
    }, py::arg("J"), py::arg("N"), py::arg("method") = "compositions");

    m.def("expand", [](const std::set<int>& J, int max_degree, bool loops, bool f_only) {
        py::dict out;
        const SymSeries m = p_to_m(build(J, max_degree, loops, f_only));
        for (const auto& [lambda, c] : m.terms()) {
            out[parts_tuple(lambda)] = to_py(c);
        }
        return out;
    }, py::arg("J"), py::arg("max_degree"), py::arg("loops") = false, py::arg("f_only") = false,
       "Monomial-basis coefficients of G_J (or F_J) keyed by partition tuple.");

    m.def("series_json", [](const std::set<int>& J, int max_degree, bool loops, bool f_only,
                            const std::string& basis) {
        SymSeries s = build(J, max_degree, loops, f_only);
        if (basis == "m") s = p_to_m(s);
        else if (basis != "p") throw DomainError("basis must be 'p' or 'm'");
        return to_json(s).dump();
    }, py::arg("J"), py::arg("max_degree"), py::arg("loops") = false, py::arg("f_only") = false,
       py::arg("basis") = "p");

    m.def("count_degree_sequence", [](const std::set<int>& J, const std::vector<int>& degrees, bool loops) {
        return to_py(count_degree_sequence(profile(J, loops), degrees));
    }, py::arg("J"), py::arg("degrees"), py::arg("loops") = false);

    m.def("count_table", [](const std::set<int>& J, const std::set<int>& K, int n_max, bool loops,
                            const std::string& extractor) {
        Extractor kind = Extractor::Sequences;
        if (extractor == "multisets") kind = Extractor::Multisets;
        else if (extractor != "sequences") throw DomainError("extractor must be 'sequences' or 'multisets'");
        py::list out;
        for (const auto& c : count_table(profile(J, loops), K, n_max, kind).counts) out.append(to_py(c));
        return out;
    }, py::arg("J"), py::arg("K"), py::arg("n_max"), py::arg("loops") = false,
       py::arg("extractor") = "sequences");

    m.def("count_matrices", [](const std::set<int>& off_diagonal, const std::set<int>& diagonal,
                               py::object row_sums, int n) {
        OracleConfig cfg;
        cfg.off_diagonal = off_diagonal;
        cfg.diagonal = diagonal;
        if (py::isinstance<py::set>(row_sums) || py::isinstance<py::frozenset>(row_sums)) {
            cfg.row_sums = row_sums.cast<std::set<int>>();
        } else {
            cfg.row_sums = row_sums.cast<std::vector<int>>();
        }
        cfg.n = n;
        return to_py(count_matrices(cfg));
    }, py::arg("off_diagonal"), py::arg("diagonal"), py::arg("row_sums"), py::arg("n"),
       "Brute-force matrix count; row_sums is a set of targets or a per-row list.");

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
