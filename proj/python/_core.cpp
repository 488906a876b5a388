#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <sstream>

#include "zinbiel/algebra_io.hpp"
#include "zinbiel/cli.hpp"
#include "zinbiel/envelope.hpp"
#include "zinbiel/gsb.hpp"
#include "zinbiel/rb_embed.hpp"
#include "zinbiel/reduction.hpp"
#include "zinbiel/sexpr.hpp"
#include "zinbiel/zinbiel_free.hpp"

namespace py = pybind11;
using namespace zinbiel;

namespace {

RelationFile load(const std::string& text, std::optional<std::size_t> letters) {
  auto file = parse_relation_file(text);
  if (letters) {
    if (file.alphabet.size() == 0) {
      file.alphabet = Alphabet::standard(*letters);
    } else if (file.alphabet.size() != *letters) {
      throw Error("letters=" + std::to_string(*letters) + " conflicts with the relation file alphabet");
    }
  }
  if (file.alphabet.size() == 0) throw Error("no letters: declare (alphabet ...) or pass letters");
  return file;
}

py::dict gsb_dict(const GsbReport& r) {
  py::dict d;
  d["verified"] = r.verified();
  d["ambiguities"] = r.ambiguities_checked;
  d["failures"] = r.failures.size();
  return d;
}

std::string reduce_text(const std::string& relations, const std::string& input, std::optional<std::size_t> bound) {
  auto expr = parse_sexpr(input);
  auto file = parse_relation_file(relations, collect_letters(expr));
  auto p = poly_from_sexpr(expr, file.alphabet);
  std::size_t b = p.max_length();
  for (const auto& s : file.schemas) {
    if (!s.is_family()) b = std::max(b, s.poly().max_length());
  }
  Reducer reducer(RelationSet(file.schemas), bound.value_or(b));
  return format_poly(reducer.normal_form(p), file.alphabet);
}

template <class Op>
std::string zinb_op(const std::string& left, const std::string& right, std::optional<std::vector<std::string>> letters,
                    Op op) {
  auto l = parse_sexpr(left), r = parse_sexpr(right);
  std::vector<std::string> names;
  if (letters) {
    names = *letters;
  } else {
    names = collect_letters(l);
    for (auto& n : collect_letters(r)) {
      if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
    }
    natural_sort(names);
  }
  Alphabet alphabet(names);
  return format_zinb(op(zinb_from_sexpr(l, alphabet), zinb_from_sexpr(r, alphabet)), alphabet);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Normal forms, Groebner-Shirshov bases and Zinbiel embeddings";

  auto base = py::register_exception<Error>(m, "ZinbielError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BoundExceeded>(m, "BoundExceeded", base.ptr());

  m.def("reduce", &reduce_text, py::arg("relations"), py::arg("poly"), py::arg("bound") = py::none(),
        "Normal form of a polynomial modulo a relation file.");

  m.def(
      "complete",
      [](const std::string& relations, std::size_t bound, std::optional<std::size_t> letters, bool reduce_tails) {
        auto file = load(relations, letters);
        auto result = complete(file.schemas, file.alphabet.size(), bound);
        auto out = reduce_tails ? interreduce(result.relations, bound) : result.relations;
        return format_relation_file({file.alphabet, out});
      },
      py::arg("relations"), py::arg("bound"), py::arg("letters") = py::none(), py::arg("interreduce") = false,
      "Bounded completion; returns a relation file.");

  m.def(
      "irreducible_counts",
      [](const std::string& relations, std::size_t max_length, std::optional<std::size_t> letters) {
        auto file = load(relations, letters);
        return irreducible_counts(file.schemas, file.alphabet.size(), max_length);
      },
      py::arg("relations"), py::arg("max_length"), py::arg("letters") = py::none());

  m.def(
      "irreducible_words",
      [](const std::string& relations, std::size_t length, std::optional<std::size_t> letters) {
        auto file = load(relations, letters);
        std::vector<std::string> out;
        if (length == 0) return out;
        auto words = irreducible_words(file.schemas, file.alphabet.size(), length);
        for (const auto& w : words.back()) out.push_back(format_word(w, file.alphabet));
        return out;
      },
      py::arg("relations"), py::arg("length"), py::arg("letters") = py::none());

  m.def(
      "verify_gsb",
      [](const std::string& relations, std::size_t bound, std::optional<std::size_t> letters) {
        auto file = load(relations, letters);
        return gsb_dict(verify_gsb(file.schemas, file.alphabet.size(), bound));
      },
      py::arg("relations"), py::arg("bound"), py::arg("letters") = py::none());

  m.def(
      "verify_thm1",
      [](std::size_t letters, std::size_t bound) {
        auto r = verify_thm1(letters, bound);
        py::dict d = gsb_dict(r.gsb);
        d["passed"] = r.passed();
        d["counts"] = r.counts;
        d["expected_counts"] = r.expected_counts;
        d["completion_counts"] = r.completion_counts;
        return d;
      },
      py::arg("letters"), py::arg("bound"), "GSB check and irreducible counts of the trivial envelope.");

  m.def(
      "verify_thm2", [](std::size_t letters, std::size_t bound) { return gsb_dict(verify_thm2(letters, bound)); },
      py::arg("letters"), py::arg("bound"), "GSB check of the Zinbiel family.");

  m.def("corollary_count", &corollary_count, py::arg("d"), py::arg("n"));

  m.def(
      "zinbiel_product",
      [](const std::string& l, const std::string& r, std::optional<std::vector<std::string>> letters) {
        return zinb_op(l, r, letters, [](const ZinbElement& a, const ZinbElement& b) { return zinbiel_product(a, b); });
      },
      py::arg("left"), py::arg("right"), py::arg("letters") = py::none());

  m.def(
      "star",
      [](const std::string& l, const std::string& r, std::optional<std::vector<std::string>> letters) {
        return zinb_op(l, r, letters, [](const ZinbElement& a, const ZinbElement& b) { return star(a, b); });
      },
      py::arg("left"), py::arg("right"), py::arg("letters") = py::none());

  m.def(
      "embed",
      [](const std::string& algebra_json, std::uint32_t truncation) {
        auto file = parse_algebra_json(algebra_json);
        FilteredAlgebra algebra =
            file.levels ? FilteredAlgebra(file.algebra, *file.levels) : standard_filtration(file.algebra);
        auto r = verify_embedding(algebra, truncation);
        py::dict d;
        d["verified"] = r.verified();
        d["pairs"] = r.pairs_checked;
        d["residues"] = r.homomorphism_failures.size();
        d["zinbiel_failures"] = r.zinbiel_failures;
        d["relations"] = r.relation_count;
        d["basis"] = r.basis_size;
        d["certified_to"] = r.injectivity_certified_to;
        return d;
      },
      py::arg("algebra_json"), py::arg("truncation"), "Checks the series embedding of an algebra given as JSON.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool; returns (exit code, stdout, stderr).");
}
