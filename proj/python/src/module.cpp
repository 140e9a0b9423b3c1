#include <bipolar_aba/bipolar_aba.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace baba;

namespace {

using NameList = std::vector<std::string>;

std::vector<NameList> to_names(const Framework & f, ExtensionCollection e)
{
    if (!e.canonical())
        e.canonicalize(f);
    std::vector<NameList> out;
    for (const auto & s : e)
        out.push_back(f.names_of(s));
    return out;
}

Semantics semantics_of(const std::string & name)
{
    auto s = parse_semantics(name);
    if (!s)
        throw py::value_error("unknown semantics '" + name + "'; expected adm, prf or sstb");
    return *s;
}

Variant variant_of(const std::string & name)
{
    auto v = parse_variant(name);
    if (!v)
        throw py::value_error("unknown algorithm '" + name + "'; expected basic or improved");
    return *v;
}

SearchOptions options_for(std::optional<double> timeout)
{
    SearchOptions o;
    if (timeout)
        o.deadline = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*timeout));
    return o;
}

Framework from_graph(const std::string & text, const std::string & format, std::optional<std::string> support)
{
    if (format == "af")
        return map_to_bipolar_aba(parse_af(text));
    if (format != "baf")
        throw py::value_error("unknown graph format '" + format + "'; expected af or baf");
    auto g = parse_baf(text);
    if (support) {
        auto i = parse_support(*support);
        if (!i)
            throw py::value_error("unknown support interpretation '" + *support + "'");
        g.interpretation = *i;
    }
    return map_to_bipolar_aba(g);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Bipolar assumption-based argumentation solver";

    // Kept alive for the interpreter's lifetime; the translator raises instances carrying `code`.
    static PyObject * error_type = py::exception<Error>(m, "Error", PyExc_ValueError).inc_ref().ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        }
        catch (const Error & e) {
            py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
            inst.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type, inst.ptr());
        }
    });

    py::class_<Framework>(m, "Framework")
        .def(py::init([](const NameList & language, const NameList & assumptions, const std::vector<std::pair<std::string, std::string>> & contraries,
                         const std::vector<std::pair<std::string, std::string>> & rules) {
                 return build_framework({language, assumptions, contraries, rules});
             }),
             py::arg("language"), py::arg("assumptions"), py::arg("contraries"), py::arg("rules"),
             "Build from declarations; contraries are (assumption, contrary) and rules (head, body) pairs.")
        .def_property_readonly("num_sentences", &Framework::num_sentences)
        .def_property_readonly("num_assumptions", &Framework::num_assumptions)
        .def_property_readonly("num_rules", &Framework::num_rules)
        .def_property_readonly("assumptions",
                               [](const Framework & f) {
                                   NameList out;
                                   for (AssumptionId a = 0; a < f.num_assumptions(); ++a)
                                       out.push_back(f.assumption_name(a));
                                   return out;
                               })
        .def("closure", [](const Framework & f, const NameList & s) { return f.names_of(closure(f, f.make_set(s))); })
        .def("attacks", [](const Framework & f, const NameList & a, const NameList & b) { return attacks(f, f.make_set(a), f.make_set(b)); })
        .def("derivable", [](const Framework & f, const NameList & s, const std::string & phi) { return derivable_query(f, f.make_set(s), phi); })
        .def("to_text", [](const Framework & f) { return print_aba(f); })
        .def("__eq__", [](const Framework & a, const Framework & b) { return structurally_equal(a, b); })
        .def("__repr__", [](const Framework & f) {
            return "<Framework sentences=" + std::to_string(f.num_sentences()) + " assumptions=" + std::to_string(f.num_assumptions()) +
                   " rules=" + std::to_string(f.num_rules()) + ">";
        });

    m.def("parse_aba", [](const std::string & text) { return parse_aba(text); }, py::arg("text"));
    m.def("parse_graph", &from_graph, py::arg("text"), py::arg("format") = "af", py::arg("support") = py::none(),
          "Parse an AF or BAF and map it to a bipolar framework.");

    m.def(
        "enumerate",
        [](const Framework & f, const std::string & semantics, const std::string & algorithm, std::optional<double> timeout) {
            return to_names(f, enumerate(f, semantics_of(semantics), variant_of(algorithm), options_for(timeout)));
        },
        py::arg("framework"), py::arg("semantics"), py::arg("algorithm") = "improved", py::arg("timeout") = py::none(),
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "oracle_enumerate", [](const Framework & f, const std::string & semantics) { return to_names(f, oracle_enumerate(f, semantics_of(semantics))); },
        py::arg("framework"), py::arg("semantics"));
    m.def(
        "format_extensions",
        [](const Framework & f, const std::vector<NameList> & sets, bool json) {
            ExtensionCollection e;
            for (const auto & s : sets)
                e.insert(f.make_set(s));
            e.canonicalize(f);
            return write_extensions(f, e, json ? OutputFormat::Json : OutputFormat::Lines);
        },
        py::arg("framework"), py::arg("extensions"), py::arg("json") = false);

    m.def(
        "exists", [](const Framework & f, const std::string & s, std::optional<double> t) { return exists(f, semantics_of(s), options_for(t)); },
        py::arg("framework"), py::arg("semantics"), py::arg("timeout") = py::none());
    m.def(
        "exists_nonempty", [](const Framework & f, const std::string & s, std::optional<double> t) { return exists_nonempty(f, semantics_of(s), options_for(t)); },
        py::arg("framework"), py::arg("semantics"), py::arg("timeout") = py::none());
    m.def(
        "verify", [](const Framework & f, const std::string & s, const NameList & set) { return verify(f, semantics_of(s), f.make_set(set)); },
        py::arg("framework"), py::arg("semantics"), py::arg("candidate"));
    m.def(
        "credulous",
        [](const Framework & f, const std::string & s, const std::string & q, std::optional<double> t) { return credulous(f, semantics_of(s), q, options_for(t)); },
        py::arg("framework"), py::arg("semantics"), py::arg("query"), py::arg("timeout") = py::none());
    m.def(
        "sceptical",
        [](const Framework & f, const std::string & s, const std::string & q, std::optional<double> t) { return sceptical(f, semantics_of(s), q, options_for(t)); },
        py::arg("framework"), py::arg("semantics"), py::arg("query"), py::arg("timeout") = py::none());

    m.def(
        "generate",
        [](std::size_t sentences, double ratio, std::size_t rule_heads, std::size_t rules_min, std::size_t rules_max, std::uint64_t seed) {
            return generate(GeneratorParams{sentences, ratio, rule_heads, rules_min, rules_max, seed});
        },
        py::arg("sentences"), py::arg("ratio") = 0.37, py::arg("rule_heads"), py::arg("rules_min") = 2, py::arg("rules_max") = 2, py::arg("seed") = 1);
}
