// Python bindings for the core operations. Words and oc-sequences cross the
// boundary as plain strings; big integers come back as Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ocseq/oracle.hpp"
#include "ocseq/reconstruct.hpp"
#include "ocseq/sturmian.hpp"
#include "ocseq/word_core.hpp"

namespace py = pybind11;

namespace {

ocseq::OcSequence parse_oc(const std::string& bits) {
    return ocseq::OcSequence::parse(bits);
}

ocseq::DirectiveSequence parse_directive(const std::vector<std::uint64_t>& digits) {
    return ocseq::DirectiveSequence(digits);
}

py::int_ to_py_int(const ocseq::BigUint& value) {
    return py::int_(py::str(value.str()));
}

py::dict classification_dict(const ocseq::Classification& c) {
    py::dict d;
    const auto put = [&](const char* key, const std::optional<bool>& flag) {
        if (flag.has_value())
            d[key] = *flag;
        else
            d[key] = py::none();
    };
    d["word"] = c.word;
    put("balanced", c.balanced);
    put("central", c.central);
    put("semicentral", c.semicentral);
    put("left_special", c.left_special);
    put("right_special", c.right_special);
    put("strictly_bispecial", c.strictly_bispecial);
    d["closed"] = c.closed;
    d["period"] = c.period;
    if (c.exponent.has_value())
        d["exponent"] = py::make_tuple(c.exponent->num, c.exponent->den);
    else
        d["exponent"] = py::none();
    d["oc"] = c.oc;
    return d;
}

}  // namespace

PYBIND11_MODULE(ocseq, m) {
    m.doc() = "open/closed prefix sequences of words and Sturmian word machinery";

    py::register_exception<ocseq::InvalidOcStart>(m, "InvalidOcStart", PyExc_ValueError);
    py::register_exception<ocseq::NotSturmianOc>(m, "NotSturmianOc", PyExc_ValueError);

    m.def("compute_border_array",
          [](const std::string& w) { return ocseq::compute_border_array(w); },
          py::arg("word"), "Longest-border length for every prefix.");
    m.def("compute_oc_sequence",
          [](const std::string& w) { return ocseq::compute_oc_sequence(w).str(); },
          py::arg("word"), "The oc-sequence as a '0'/'1' string.");
    m.def("is_closed", [](const std::string& w) { return ocseq::is_closed(w); },
          py::arg("word"));
    m.def("longest_border",
          [](const std::string& w) { return ocseq::longest_border(w); }, py::arg("word"));
    m.def("period", [](const std::string& w) { return ocseq::period(w); },
          py::arg("word"));
    m.def("exponent",
          [](const std::string& w) {
              const auto e = ocseq::exponent(w);
              return py::make_tuple(e.num, e.den);
          },
          py::arg("word"), "Exact exponent as a (numerator, denominator) pair.");
    m.def("closed_extension",
          [](const std::string& w, const std::string& alphabet) -> py::object {
              const auto x = ocseq::closed_extension(w, alphabet);
              if (!x.has_value())
                  return py::none();
              return py::str(std::string(1, *x));
          },
          py::arg("word"), py::arg("alphabet"));
    m.def("complete_return_root",
          [](const std::string& w) -> py::object {
              const auto root = ocseq::complete_return_root(w);
              if (!root.has_value())
                  return py::none();
              return py::str(*root);
          },
          py::arg("word"));
    m.def("runs",
          [](const std::string& bits) {
              std::vector<std::pair<int, std::uint64_t>> out;
              for (const auto& run : ocseq::runs(parse_oc(bits)))
                  out.emplace_back(run.bit, run.length);
              return out;
          },
          py::arg("oc"), "Maximal runs as (bit, length) pairs.");
    m.def("check_run_inequality",
          [](const std::string& bits) { return ocseq::check_run_inequality(parse_oc(bits)); },
          py::arg("oc"));

    m.def("standard_prefix",
          [](const std::vector<std::uint64_t>& d, std::uint64_t n) {
              return ocseq::standard_prefix(parse_directive(d), n);
          },
          py::arg("directive"), py::arg("length"));
    m.def("standard_words",
          [](const std::vector<std::uint64_t>& d, int n_max) {
              return ocseq::standard_words(parse_directive(d), n_max);
          },
          py::arg("directive"), py::arg("n_max"),
          "The standard sequence from index -1 up to n_max.");
    m.def("standard_cores",
          [](const std::vector<std::uint64_t>& d, int n_max) {
              return ocseq::standard_cores(parse_directive(d), n_max);
          },
          py::arg("directive"), py::arg("n_max"),
          "Standard words with their final two letters removed, from index 1.");
    m.def("continuant",
          [](const std::vector<std::uint64_t>& entries) {
              return to_py_int(ocseq::continuant(entries));
          },
          py::arg("entries"));
    m.def("run_lengths_closed_form",
          [](const std::vector<std::uint64_t>& d, std::size_t count) {
              py::list out;
              for (const auto& k :
                   ocseq::run_lengths_closed_form(parse_directive(d), count))
                  out.append(to_py_int(k));
              return out;
          },
          py::arg("directive"), py::arg("count"));
    m.def("oc_closed_form",
          [](const std::vector<std::uint64_t>& d, std::uint64_t n) {
              return ocseq::oc_closed_form(parse_directive(d), n).str();
          },
          py::arg("directive"), py::arg("length"));
    m.def("semicentral_prefixes",
          [](const std::vector<std::uint64_t>& d, std::uint64_t n) {
              return ocseq::semicentral_prefixes(parse_directive(d), n);
          },
          py::arg("directive"), py::arg("max_length"));
    m.def("central_prefixes",
          [](const std::vector<std::uint64_t>& d, std::uint64_t n) {
              return ocseq::central_prefixes(parse_directive(d), n);
          },
          py::arg("directive"), py::arg("max_length"));
    m.def("run_boundaries",
          [](const std::vector<std::uint64_t>& d, std::uint64_t n) {
              std::vector<std::pair<std::uint64_t, std::string>> out;
              for (const auto& flip : ocseq::run_boundaries(parse_directive(d), n)) {
                  out.emplace_back(flip.position,
                                   flip.kind == ocseq::FlipKind::closed_to_open
                                       ? "closed->open"
                                       : "open->closed");
              }
              return out;
          },
          py::arg("directive"), py::arg("max_position"));
    m.def("square_factorization",
          [](const std::vector<std::uint64_t>& d, std::size_t terms) {
              const auto f = ocseq::square_factorization(parse_directive(d), terms);
              return py::make_tuple(f.head, f.half_factors);
          },
          py::arg("directive"), py::arg("terms"),
          "Head word and the half factors; each factor of the product is half+half.");

    m.def("is_balanced", [](const std::string& w) { return ocseq::is_balanced(w); },
          py::arg("word"));
    m.def("is_central", [](const std::string& w) { return ocseq::is_central(w); },
          py::arg("word"));
    m.def("is_semicentral",
          [](const std::string& w) { return ocseq::is_semicentral(w); }, py::arg("word"));
    m.def("is_left_special_sturmian",
          [](const std::string& w) { return ocseq::is_left_special_sturmian(w); },
          py::arg("word"));
    m.def("is_right_special_sturmian",
          [](const std::string& w) { return ocseq::is_right_special_sturmian(w); },
          py::arg("word"));
    m.def("is_strictly_bispecial",
          [](const std::string& w) { return ocseq::is_strictly_bispecial(w); },
          py::arg("word"));
    m.def("is_standard_oc_shape",
          [](const std::string& bits) {
              return ocseq::is_standard_oc_shape(parse_oc(bits));
          },
          py::arg("oc"));
    m.def("classify",
          [](const std::string& w) { return classification_dict(ocseq::classify(w)); },
          py::arg("word"));

    m.def("reconstruct",
          [](const std::string& bits, bool validate) {
              return ocseq::reconstruct(parse_oc(bits), validate);
          },
          py::arg("oc"), py::arg("validate") = true);
    m.def("validate_roundtrip",
          [](const std::string& bits, const std::string& w) {
              return ocseq::validate_roundtrip(parse_oc(bits), w);
          },
          py::arg("oc"), py::arg("word"));

    m.def("naive_is_closed",
          [](const std::string& w) { return ocseq::oracle::naive_is_closed(w); },
          py::arg("word"));
    m.def("naive_is_balanced",
          [](const std::string& w) { return ocseq::oracle::naive_is_balanced(w); },
          py::arg("word"));
    m.def("uniqueness_census", [](std::size_t n) {
        const auto report = ocseq::oracle::uniqueness_census(n);
        py::dict d;
        d["max_length"] = report.max_length;
        d["classes_per_length"] = report.classes_per_length;
        py::list violations;
        for (const auto& v : report.violations) {
            py::dict entry;
            entry["oc"] = v.oc;
            entry["members"] = v.members;
            violations.append(entry);
        }
        d["violations"] = violations;
        return d;
    });

    m.attr("__version__") = "0.1.0";
}
