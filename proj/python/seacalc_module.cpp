#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seacalc/b_expansion.hpp"
#include "seacalc/combinatorics.hpp"
#include "seacalc/golden.hpp"
#include "seacalc/render.hpp"
#include "seacalc/verifier.hpp"

namespace py = pybind11;
using namespace seacalc;

namespace {

SeriesId series_or_throw(const std::string& name) {
    const auto id = parse_series_id(name);
    if (!id) throw py::value_error("unknown series '" + name + "'");
    return *id;
}

OutputFormat format_or_throw(const std::string& name) {
    const auto f = parse_format(name);
    if (!f) throw py::value_error("unknown format '" + name + "'");
    return *f;
}

Mutation mutation_or_throw(const std::string& name) {
    if (name == "none") return Mutation::None;
    for (Mutation m : all_mutations()) {
        if (mutation_name(m) == name) return m;
    }
    throw py::value_error("unknown mutation '" + name + "'");
}

std::string render_series(const std::string& series, int order, const std::string& layer, const std::string& wrapper,
                          const std::string& format) {
    if (order < 0) throw py::value_error("order must be >= 0");
    const SeriesId id = series_or_throw(series);
    const OutputFormat f = format_or_throw(format);
    const SeriesBuilder builder;
    const std::string name(series_name(id));
    if (layer == "pk") {
        if (wrapper != "plain" && wrapper != "checked") throw py::value_error("wrapper must be 'plain' or 'checked'");
        return render_poly(wrapper == "checked" ? builder.build(id, order) : builder.canonical(id, order), name, f);
    }
    if (layer == "b") {
        if (wrapper != "plain") throw py::value_error("the b layer only supports the plain wrapper");
        return render_poly(expand_named(builder, id, order), name, f);
    }
    throw py::value_error("layer must be 'pk' or 'b'");
}

py::tuple as_pair(const Rational& q) { return py::make_tuple(q.numerator().str(), q.denominator().str()); }

}  // namespace

PYBIND11_MODULE(_seacalc, m) {
    m.doc() = "Exact expansions of the fixed-mass operator series";

    m.def("series_names", [] {
        std::vector<std::string> out;
        for (SeriesId id : all_series()) out.emplace_back(series_name(id));
        return out;
    });
    m.def("suite_names", [] { return suite_names(); });

    m.def("render", &render_series, py::arg("series"), py::arg("order"), py::arg("layer") = "pk",
          py::arg("wrapper") = "plain", py::arg("format") = "text");

    m.def(
        "verify",
        [](const std::string& suite, int order_pk, int order_b, const std::string& golden_path,
           const std::string& mutation, bool timing) {
            VerifyOptions o;
            o.order_pk = order_pk;
            o.order_b = order_b;
            o.golden_path = golden_path;
            o.mutation = mutation_or_throw(mutation);
            std::vector<VerifyReport> reports;
            {
                py::gil_scoped_release release;
                reports = run_suite(suite, o);
            }
            return render_reports(reports, OutputFormat::Json, timing);
        },
        py::arg("suite"), py::arg("order_pk") = 6, py::arg("order_b") = 5, py::arg("golden_path") = "",
        py::arg("mutation") = "none", py::arg("timing") = false);

    m.def(
        "golden_check",
        [](const std::string& path, int order) {
            const SeriesBuilder builder;
            return render_reports({check_golden(builder, load_golden(path, order))}, OutputFormat::Json);
        },
        py::arg("path"), py::arg("order") = 3);

    m.def("c", [](int n) { return as_pair(sqrt_coefficient(n)); }, py::arg("n"));
    m.def("e", [](int n) { return as_pair(inv_sqrt_coefficient(n)); }, py::arg("n"));
    m.def("f", [](int l, int r) { return as_pair(f_lr(l, r)); }, py::arg("l"), py::arg("r"));
    m.def("gamma_ratio_half", [](int r, int rho) { return as_pair(gamma_ratio_half(r, rho)); }, py::arg("r"),
          py::arg("rho"));

    py::register_exception<GoldenParseError>(m, "GoldenParseError", PyExc_ValueError);
}
