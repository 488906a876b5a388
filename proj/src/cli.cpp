#include "zinbiel/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "zinbiel/algebra_io.hpp"
#include "zinbiel/envelope.hpp"
#include "zinbiel/rb_embed.hpp"
#include "zinbiel/sexpr.hpp"

namespace zinbiel::cli {

namespace {

using json = nlohmann::json;

struct Report {
  std::string command;
  json parameters = json::object();
  std::string status;
  json counts = json::object();
  json failures = json::array();
};

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class F>
auto with_file_context(const std::string& path, F parse) {
  try {
    return parse(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_path(const TreePath& path) {
  if (path.empty()) return "root";
  std::string s;
  for (Side side : path) s += side == Side::Left ? 'L' : 'R';
  return s;
}

template <class T>
json to_json_list(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x);
  return out;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string label_of(const std::vector<RelationSchema>& schemas, std::size_t index) {
  const auto& label = schemas[index].label();
  return label.empty() ? "#" + std::to_string(index) : label;
}

Alphabet resolve_alphabet(const Alphabet& declared, std::optional<std::size_t> letters) {
  if (letters) {
    if (*letters == 0) throw InputError("--letters must be positive");
    if (declared.size() == 0) return Alphabet::standard(*letters);
    if (declared.size() != *letters) {
      throw InputError("--letters " + std::to_string(*letters) + " conflicts with the " +
                       std::to_string(declared.size()) + " letters of the relation file");
    }
    return declared;
  }
  if (declared.size() == 0) throw InputError("no letters: declare (alphabet ...) in the file or pass --letters");
  return declared;
}

int report_gsb(const GsbReport& g, const std::vector<RelationSchema>& schemas, const Alphabet& alphabet,
               Report& report, std::ostream& out) {
  out << "ambiguities checked: " << g.ambiguities_checked << "\n";
  out << "relation instances: " << g.instances << "\n";
  out << "nontrivial compositions: " << g.failures.size() << "\n";
  report.counts["ambiguities_checked"] = g.ambiguities_checked;
  report.counts["instances"] = g.instances;
  report.counts["nontrivial_compositions"] = g.failures.size();
  for (const auto& f : g.failures) {
    out << "  " << label_of(schemas, f.f_schema) << " / " << label_of(schemas, f.g_schema) << " at "
        << format_word(f.ambiguity, alphabet) << " [" << format_path(f.path)
        << "] -> " << format_poly(f.normal_form, alphabet) << "\n";
    report.failures.push_back({{"f", label_of(schemas, f.f_schema)},
                               {"g", label_of(schemas, f.g_schema)},
                               {"ambiguity", format_word(f.ambiguity, alphabet)},
                               {"path", format_path(f.path)},
                               {"normal_form", format_poly(f.normal_form, alphabet)}});
  }
  return g.verified() ? kSuccess : kVerificationFailed;
}

struct Options {
  std::string relations;
  std::string input;
  std::string algebra;
  std::string left;
  std::string right;
  std::string alphabet;
  std::size_t bound = 0;
  std::size_t odd_max = 0;
  std::size_t even_max = 0;
  std::size_t n = 0;
  std::uint32_t truncation = 0;
  std::optional<std::size_t> letters;
  bool list = false;
  bool interreduce = false;
  bool star = false;
};

int cmd_reduce(const Options& o, CLI::App& app, Report& report, std::ostream& out) {
  SExpr input;
  try {
    input = parse_sexpr(o.input);
  } catch (const ParseError& e) {
    throw InputError(std::string("--input: ") + e.what());
  }
  auto file = with_file_context(o.relations, [&](const std::string& text) {
    return parse_relation_file(text, collect_letters(input));
  });
  MagmaPoly p;
  try {
    p = poly_from_sexpr(input, file.alphabet);
  } catch (const ParseError& e) {
    throw InputError(std::string("--input: ") + e.what());
  }
  std::size_t bound = p.max_length();
  for (const auto& s : file.schemas) {
    if (!s.is_family()) bound = std::max(bound, s.poly().max_length());
  }
  if (app.count("--bound")) bound = o.bound;
  report.parameters = {{"relations", o.relations}, {"input", o.input}, {"bound", bound}};
  Reducer reducer(RelationSet(file.schemas), bound);
  MagmaPoly nf = reducer.normal_form(p);
  out << format_poly(nf, file.alphabet) << "\n";
  report.counts["terms"] = nf.size();
  report.counts["normal_form"] = format_poly(nf, file.alphabet);
  return kSuccess;
}

int cmd_complete(const Options& o, Report& report, std::ostream& out) {
  auto file = with_file_context(o.relations, [](const std::string& text) { return parse_relation_file(text); });
  Alphabet alphabet = resolve_alphabet(file.alphabet, o.letters);
  report.parameters = {{"relations", o.relations}, {"bound", o.bound}, {"letters", alphabet.size()},
                       {"interreduce", o.interreduce}};
  auto result = complete(file.schemas, alphabet.size(), o.bound);
  auto relations = o.interreduce ? interreduce(result.relations, o.bound) : result.relations;
  out << format_relation_file({alphabet, relations});
  out << "; added " << result.added << " relations in " << result.rounds << " rounds\n";
  report.counts["added"] = result.added;
  report.counts["rounds"] = result.rounds;
  report.counts["relations"] = relations.size();
  std::ostringstream gsb;
  int code = report_gsb(result.report, result.relations, alphabet, report, gsb);
  std::istringstream lines(gsb.str());
  for (std::string line; std::getline(lines, line);) out << "; " << line << "\n";
  return code;
}

int cmd_irr(const Options& o, Report& report, std::ostream& out) {
  auto file = with_file_context(o.relations, [](const std::string& text) { return parse_relation_file(text); });
  Alphabet alphabet = resolve_alphabet(file.alphabet, o.letters);
  report.parameters = {{"relations", o.relations}, {"bound", o.bound}, {"letters", alphabet.size()}};
  auto words = irreducible_words(file.schemas, alphabet.size(), o.bound);
  std::vector<std::size_t> counts;
  for (std::size_t len = 1; len <= words.size(); ++len) {
    counts.push_back(words[len - 1].size());
    out << "length " << len << ": " << words[len - 1].size() << "\n";
    if (o.list) {
      for (const auto& w : words[len - 1]) out << "  " << format_word(w, alphabet) << "\n";
    }
  }
  report.counts["irreducible"] = to_json_list(counts);
  return kSuccess;
}

int cmd_thm1(const Options& o, Report& report, std::ostream& out) {
  if (!o.letters || *o.letters == 0) throw InputError("--letters must be positive");
  const std::size_t d = *o.letters;
  report.parameters = {{"letters", d}, {"bound", o.bound}};
  auto r = verify_thm1(d, o.bound);
  auto schemas = trivial_gsb(d);
  report_gsb(r.gsb, schemas, Alphabet::standard(d), report, out);
  out << "irreducible counts: " << join(r.counts) << "\n";
  out << "expected counts: " << join(r.expected_counts) << "\n";
  out << "counts after completing the envelope relations (" << r.completion_added
      << " added): " << join(r.completion_counts) << "\n";
  report.counts["irreducible"] = to_json_list(r.counts);
  report.counts["expected"] = to_json_list(r.expected_counts);
  report.counts["completion"] = to_json_list(r.completion_counts);
  report.counts["completion_added"] = r.completion_added;
  if (!r.counts_match) report.failures.push_back({{"kind", "counts differ from the closed formula"}});
  if (!r.completion_matches) report.failures.push_back({{"kind", "completion counts differ"}});
  return r.passed() ? kSuccess : kVerificationFailed;
}

int cmd_thm2(const Options& o, Report& report, std::ostream& out) {
  if (!o.letters || *o.letters == 0) throw InputError("--letters must be positive");
  report.parameters = {{"letters", *o.letters}, {"bound", o.bound}};
  return report_gsb(verify_thm2(*o.letters, o.bound), {zinbiel_family()}, Alphabet::standard(*o.letters), report,
                    out);
}

int cmd_lemma(const Options& o, Report& report, std::ostream& out) {
  if (!o.letters || *o.letters == 0) throw InputError("--letters must be positive");
  report.parameters = {{"letters", *o.letters}, {"odd_max", o.odd_max}, {"even_max", o.even_max}};
  LemmaReport r;
  try {
    r = lemma_odd_even_check(*o.letters, o.odd_max, o.even_max);
  } catch (const BoundExceeded&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  auto alphabet = Alphabet::standard(*o.letters);
  out << "pairs checked: " << r.pairs_checked << "\n";
  out << "violations: " << r.violations.size() << "\n";
  report.counts["pairs_checked"] = r.pairs_checked;
  report.counts["violations"] = r.violations.size();
  for (const auto& v : r.violations) {
    out << "  " << format_word(v.a, alphabet) << " . " << format_word(v.b, alphabet) << " -> "
        << format_poly(v.normal_form, alphabet) << "\n";
    report.failures.push_back({{"a", format_word(v.a, alphabet)},
                               {"b", format_word(v.b, alphabet)},
                               {"normal_form", format_poly(v.normal_form, alphabet)}});
  }
  return r.passed() ? kSuccess : kVerificationFailed;
}

int cmd_gsb(const Options& o, Report& report, std::ostream& out) {
  auto file = with_file_context(o.relations, [](const std::string& text) { return parse_relation_file(text); });
  Alphabet alphabet = resolve_alphabet(file.alphabet, o.letters);
  report.parameters = {{"relations", o.relations}, {"bound", o.bound}, {"letters", alphabet.size()}};
  return report_gsb(verify_gsb(file.schemas, alphabet.size(), o.bound), file.schemas, alphabet, report, out);
}

void print_collapse(const CollapseReport& r, const Alphabet& alphabet, Report& report, std::ostream& out) {
  out << format_relation_file({alphabet, r.completed});
  out << "; added by completion: " << r.completion_added << "\n";
  out << "; irreducible counts: " << join(r.counts) << "\n";
  for (const auto& e : r.star_table) {
    out << "; " << alphabet.name(static_cast<Rank>(e.i)) << " * " << alphabet.name(static_cast<Rank>(e.j))
        << " = " << format_poly(e.induced, alphabet) << "  (algebra: " << format_poly(e.expected, alphabet) << ")\n";
  }
  out << "; star table matches: " << (r.star_table_matches ? "yes" : "no") << "\n";
  out << "; generators independent: " << (r.generators_independent ? "yes" : "no") << "\n";
  report.counts["completion_added"] = r.completion_added;
  report.counts["irreducible"] = to_json_list(r.counts);
  report.counts["relations"] = r.completed.size();
  report.counts["star_table_matches"] = r.star_table_matches;
  report.counts["generators_independent"] = r.generators_independent;
}

int cmd_collapse(const Options& o, Report& report, std::ostream& out) {
  auto file = with_file_context(o.algebra, [](const std::string& text) { return parse_algebra_json(text); });
  report.parameters = {{"algebra", o.algebra}, {"bound", o.bound}};
  if (!file.algebra.is_associative()) throw InputError(o.algebra + ": the algebra is not associative");
  auto r = collapse_check(file.algebra, o.bound);
  print_collapse(r, file.algebra.basis(), report, out);
  std::ostringstream ignored;
  Report scratch;
  int code = report_gsb(r.report, r.completed, file.algebra.basis(), scratch, ignored);
  report.failures = scratch.failures;
  return code;
}

int cmd_truncpoly(const Options& o, Report& report, std::ostream& out) {
  if (o.n == 0) throw InputError("--n must be positive");
  report.parameters = {{"n", o.n}, {"bound", o.bound}};
  auto r = truncpoly_check(o.n, o.bound);
  const Alphabet alphabet = CommAlgebra::truncated_polynomial(o.n).basis();
  print_collapse(r.collapse, alphabet, report, out);
  for (const auto& p : r.missing) {
    out << "; missing: " << format_poly(p, alphabet) << "\n";
    report.failures.push_back({{"missing", format_poly(p, alphabet)}});
  }
  for (const auto& p : r.unexpected) {
    out << "; unexpected: " << format_poly(p, alphabet) << "\n";
    report.failures.push_back({{"unexpected", format_poly(p, alphabet)}});
  }
  return r.passed() ? kSuccess : kVerificationFailed;
}

int cmd_zmul(const Options& o, Report& report, std::ostream& out) {
  SExpr left, right;
  try {
    left = parse_sexpr(o.left);
    right = parse_sexpr(o.right);
  } catch (const ParseError& e) {
    throw InputError(e.what());
  }
  std::vector<std::string> names;
  if (!o.alphabet.empty()) {
    std::stringstream in(o.alphabet);
    for (std::string name; std::getline(in, name, ',');) names.push_back(name);
  } else {
    names = collect_letters(left);
    for (auto& n : collect_letters(right)) {
      if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
    }
    natural_sort(names);
  }
  Alphabet alphabet(names);
  ZinbElement a, b;
  try {
    a = zinb_from_sexpr(left, alphabet);
    b = zinb_from_sexpr(right, alphabet);
  } catch (const ParseError& e) {
    throw InputError(e.what());
  }
  report.parameters = {{"left", o.left}, {"right", o.right}, {"star", o.star}};
  ZinbElement c = o.star ? star(a, b) : zinbiel_product(a, b);
  out << format_zinb(c, alphabet) << "\n";
  report.counts["terms"] = c.size();
  report.counts["product"] = format_zinb(c, alphabet);
  return kSuccess;
}

int cmd_embed(const Options& o, Report& report, std::ostream& out) {
  auto file = with_file_context(o.algebra, [](const std::string& text) { return parse_algebra_json(text); });
  report.parameters = {{"algebra", o.algebra}, {"N", o.truncation}};
  if (!file.algebra.is_associative()) throw InputError(o.algebra + ": the algebra is not associative");
  FilteredAlgebra filtered = [&] {
    try {
      return file.levels ? FilteredAlgebra(file.algebra, *file.levels) : standard_filtration(file.algebra);
    } catch (const Error& e) {
      throw InputError(o.algebra + ": " + e.what());
    }
  }();
  EmbeddingReport r;
  try {
    r = verify_embedding(filtered, o.truncation);
  } catch (const BoundExceeded&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  const auto& basis = filtered.basis();
  out << "basis:";
  for (std::size_t i = 0; i < filtered.dimension(); ++i) {
    out << " " << basis.name(static_cast<Rank>(i)) << "@" << filtered.level(i);
  }
  out << "\n";
  out << "relations: " << r.relation_count << ", groebner basis: " << r.basis_size << "\n";
  out << "pairs checked: " << r.pairs_checked << ", residues: " << r.homomorphism_failures.size() << "\n";
  out << "zinbiel triples checked: " << r.zinbiel_triples_checked << ", failures: " << r.zinbiel_failures << "\n";
  out << "linear leading monomials: " << r.buchberger.linear_leading.size() << "\n";
  out << "injectivity certified to weight: " << r.injectivity_certified_to << "\n";
  for (const auto& note : r.notes) out << "note: " << note << "\n";
  report.counts["relations"] = r.relation_count;
  report.counts["groebner_basis"] = r.basis_size;
  report.counts["pairs_checked"] = r.pairs_checked;
  report.counts["zinbiel_triples_checked"] = r.zinbiel_triples_checked;
  report.counts["zinbiel_failures"] = r.zinbiel_failures;
  report.counts["linear_leading"] = r.buchberger.linear_leading.size();
  report.counts["injectivity_certified_to"] = r.injectivity_certified_to;
  report.counts["levels"] = to_json_list(filtered.levels());
  for (const auto& f : r.homomorphism_failures) {
    std::string residue = format_compoly(f.residue, basis);
    out << "  residue " << basis.name(static_cast<Rank>(f.left)) << " " << basis.name(static_cast<Rank>(f.right))
        << " t^" << f.degree << ": " << residue << "\n";
    report.failures.push_back({{"left", basis.name(static_cast<Rank>(f.left))},
                               {"right", basis.name(static_cast<Rank>(f.right))},
                               {"degree", f.degree},
                               {"residue", residue}});
  }
  for (const auto& m : r.buchberger.linear_leading) {
    report.failures.push_back({{"linear_leading", format_monomial(m, basis)}});
  }
  if (r.zinbiel_failures) report.failures.push_back({{"zinbiel_failures", r.zinbiel_failures}});
  return r.verified() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner-Shirshov and embedding checks for Zinbiel algebras", "zinbiel"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string report_path;
  bool timings = false;
  app.add_option("--report", report_path, "Write a JSON report to this path");
  app.add_flag("--timings", timings, "Include wall-clock timings in the report");

  Options o;
  auto add_bound = [&](CLI::App* sub, const char* what) {
    sub->add_option("--bound", o.bound, what)->required()->check(CLI::PositiveNumber);
  };
  auto add_letters = [&](CLI::App* sub, bool required) {
    auto opt = sub->add_option("--letters", o.letters, "Alphabet size");
    if (required) opt->required();
  };

  auto* reduce = app.add_subcommand("reduce", "Normal form modulo a relation file");
  reduce->add_option("--relations", o.relations, "Relation file (S-expressions)")->required();
  reduce->add_option("--input", o.input, "Polynomial to reduce, e.g. \"(x (y z))\"")->required();
  reduce->add_option("--bound", o.bound, "Longest monomial allowed (default: longest input)")
      ->check(CLI::PositiveNumber);

  auto* comp = app.add_subcommand("complete", "Bounded Shirshov completion of a relation file");
  comp->add_option("--relations", o.relations, "Relation file")->required();
  add_bound(comp, "Longest ambiguity considered");
  add_letters(comp, false);
  comp->add_flag("--interreduce", o.interreduce, "Interreduce the completed set");

  auto* irr = app.add_subcommand("irr", "Irreducible words modulo a relation file");
  irr->add_option("--relations", o.relations, "Relation file")->required();
  add_bound(irr, "Longest word");
  add_letters(irr, false);
  irr->add_flag("--list", o.list, "Print the words");

  auto* verify = app.add_subcommand("verify", "Verification drivers");
  verify->require_subcommand(1);
  auto* thm1 = verify->add_subcommand("thm1", "Trivial-algebra envelope basis, counts and completion");
  add_letters(thm1, true);
  add_bound(thm1, "Longest ambiguity");
  auto* thm2 = verify->add_subcommand("thm2", "Zinbiel family alone");
  add_letters(thm2, true);
  add_bound(thm2, "Longest ambiguity");
  auto* lemma = verify->add_subcommand("lemma", "Odd left comb times even left comb reduces to zero");
  add_letters(lemma, true);
  lemma->add_option("--odd-max", o.odd_max, "Longest odd factor")->required();
  lemma->add_option("--even-max", o.even_max, "Longest even factor")->required();
  auto* gsb = verify->add_subcommand("gsb", "Composition check for a relation file");
  gsb->add_option("--relations", o.relations, "Relation file")->required();
  add_bound(gsb, "Longest ambiguity");
  add_letters(gsb, false);
  auto* collapse = verify->add_subcommand("collapse", "Complete the envelope of an algebra file");
  collapse->add_option("--algebra", o.algebra, "Algebra file (JSON)")->required();
  add_bound(collapse, "Longest ambiguity");
  auto* truncpoly = verify->add_subcommand("truncpoly", "Envelope of t k[t]/(t^{n+1})");
  truncpoly->add_option("--n", o.n, "Nilpotency degree")->required()->check(CLI::PositiveNumber);
  add_bound(truncpoly, "Longest ambiguity");

  auto* zmul = app.add_subcommand("zmul", "Product in the free Zinbiel algebra");
  zmul->add_option("--left", o.left, "Left factor, e.g. \"(+ [x y] (* 2 [y]))\"")->required();
  zmul->add_option("--right", o.right, "Right factor")->required();
  zmul->add_option("--alphabet", o.alphabet, "Comma-separated letter order");
  zmul->add_flag("--star", o.star, "Anti-commutator instead of the Zinbiel product");

  auto* embed = app.add_subcommand("embed", "Rota-Baxter embedding check for a nilpotent algebra");
  embed->add_option("--algebra", o.algebra, "Algebra file (JSON)")->required();
  embed->add_option("--N", o.truncation, "Truncation degree")->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  Report report;
  int code = kSuccess;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (reduce->parsed()) {
      report.command = "reduce";
      code = cmd_reduce(o, *reduce, report, out);
    } else if (comp->parsed()) {
      report.command = "complete";
      code = cmd_complete(o, report, out);
    } else if (irr->parsed()) {
      report.command = "irr";
      code = cmd_irr(o, report, out);
    } else if (zmul->parsed()) {
      report.command = "zmul";
      code = cmd_zmul(o, report, out);
    } else if (embed->parsed()) {
      report.command = "embed";
      code = cmd_embed(o, report, out);
    } else if (thm1->parsed()) {
      report.command = "verify thm1";
      code = cmd_thm1(o, report, out);
    } else if (thm2->parsed()) {
      report.command = "verify thm2";
      code = cmd_thm2(o, report, out);
    } else if (lemma->parsed()) {
      report.command = "verify lemma";
      code = cmd_lemma(o, report, out);
    } else if (gsb->parsed()) {
      report.command = "verify gsb";
      code = cmd_gsb(o, report, out);
    } else if (collapse->parsed()) {
      report.command = "verify collapse";
      code = cmd_collapse(o, report, out);
    } else if (truncpoly->parsed()) {
      report.command = "verify truncpoly";
      code = cmd_truncpoly(o, report, out);
    }
    report.status = code == kSuccess ? "ok" : "failed";
  } catch (const BoundExceeded& e) {
    err << "error: bound exceeded: " << e.what() << "\n";
    report.status = "input-error";
    report.failures = json::array({{{"error", std::string("bound exceeded: ") + e.what()}}});
    code = kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    report.status = "input-error";
    report.failures = json::array({{{"error", e.what()}}});
    code = kInputError;
  }

  if (!report_path.empty()) {
    json doc = {{"command", report.command}, {"parameters", report.parameters}, {"status", report.status},
                {"counts", report.counts},   {"failures", report.failures},     {"timings", json::object()}};
    if (timings) {
      doc["timings"]["total_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    std::ofstream file(report_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << report_path << "'\n";
      return kInputError;
    }
    file << doc.dump(2) << "\n";
  }
  return code;
}

}  // namespace zinbiel::cli
