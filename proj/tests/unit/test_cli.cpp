#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "zinbiel/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = zinbiel::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ZINBIEL_DATA_DIR) + "/" + name; }

fs::path temp_file(const std::string& name, const std::string& contents) {
  auto path = fs::temp_directory_path() / ("zinbiel_cli_" + name);
  std::ofstream(path) << contents;
  return path;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("reduce") {
  auto r = run({"reduce", "--relations", data("zinbiel.sexp"), "--input", "(x (y z))"});
  CHECK(r.code == 0);
  CHECK(r.out == "(+ ((x y) z) ((y x) z))\n");
  auto inferred = run({"reduce", "--relations", temp_file("r1.sexp", "(family R1)\n").string(), "--input", "(a (b c))"});
  CHECK(inferred.code == 0);
  CHECK(inferred.out == "(+ ((a b) c) ((b a) c))\n");
  auto bound = run({"reduce", "--relations", data("zinbiel.sexp"), "--input", "(x (y z))", "--bound", "2"});
  CHECK(bound.code == 2);
  CHECK(bound.err.find("bound exceeded") != std::string::npos);
  auto bad = run({"reduce", "--relations", data("zinbiel.sexp"), "--input", "(x (y w))"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 1, column 7") != std::string::npos);
  CHECK(run({"reduce", "--relations", "/nonexistent", "--input", "x"}).code == 2);
}

TEST_CASE("verify drivers") {
  auto thm1 = run({"verify", "thm1", "--letters", "2", "--bound", "6"});
  CHECK(thm1.code == 0);
  CHECK(thm1.out.find("irreducible counts: 2 1 2 1 2 1") != std::string::npos);
  CHECK(run({"verify", "thm2", "--letters", "2", "--bound", "5"}).code == 0);
  CHECK(run({"verify", "lemma", "--letters", "2", "--odd-max", "5", "--even-max", "4"}).code == 0);
  CHECK(run({"verify", "lemma", "--letters", "2", "--odd-max", "4", "--even-max", "4"}).code == 2);
  CHECK(run({"verify", "gsb", "--relations", data("zinbiel.sexp"), "--bound", "5"}).code == 0);
  CHECK(run({"verify", "truncpoly", "--n", "3", "--bound", "5"}).code == 0);
  auto trivial = run({"verify", "gsb", "--relations", data("trivial2.sexp"), "--bound", "4"});
  CHECK(trivial.code == 1);
  CHECK(trivial.out.find("nontrivial compositions: 0") == std::string::npos);
  auto collapse = run({"verify", "collapse", "--algebra", data("idempotent.json"), "--bound", "4"});
  CHECK(collapse.code == 0);
  CHECK(collapse.out.find("irreducible counts: 0 0 0 0") != std::string::npos);
}

TEST_CASE("bounds are mandatory") {
  CHECK(run({"verify", "thm1", "--letters", "2"}).code == 2);
  CHECK(run({"embed", "--algebra", data("truncpoly3.json")}).code == 2);
  CHECK(run({"complete", "--relations", data("trivial2.sexp")}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("complete and irr") {
  auto c = run({"complete", "--relations", data("trivial2.sexp"), "--bound", "5", "--interreduce"});
  CHECK(c.code == 0);
  CHECK(c.out.find("(((y x) x) x)") != std::string::npos);
  auto i = run({"irr", "--relations", data("trivial2.sexp"), "--bound", "3", "--list"});
  CHECK(i.code == 0);
  CHECK(i.out.find("length 1: 2") != std::string::npos);
  CHECK(run({"irr", "--relations", temp_file("r1only.sexp", "(family R1)").string(), "--bound", "3"}).code == 2);
  auto letters = run({"irr", "--relations", temp_file("r1only.sexp", "(family R1)").string(), "--bound", "3",
                      "--letters", "2"});
  CHECK(letters.code == 0);
  CHECK(letters.out.find("length 3: 8") != std::string::npos);
}

TEST_CASE("zmul") {
  CHECK(run({"zmul", "--left", "[x]", "--right", "[y z]"}).out == "(+ [y x z] [x y z])\n");
  CHECK(run({"zmul", "--left", "[x]", "--right", "[x]", "--star"}).out == "(* 2 [x x])\n");
  CHECK(run({"zmul", "--left", "[x", "--right", "[x]"}).code == 2);
}

TEST_CASE("embed") {
  auto r = run({"embed", "--algebra", data("truncpoly3.json"), "--N", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("residues: 0") != std::string::npos);
  CHECK(r.out.find("injectivity certified to weight: 4") != std::string::npos);
  CHECK(run({"embed", "--algebra", data("truncpoly4.json"), "--N", "6"}).code == 0);
  CHECK(run({"embed", "--algebra", data("idempotent.json"), "--N", "4"}).code == 2);
  auto forced = temp_file("forced.json", R"({"basis": ["e"], "levels": [1], "products": ["e e -> e"]})");
  auto f = run({"embed", "--algebra", forced.string(), "--N", "4"});
  CHECK(f.code == 2);
  CHECK(f.err.find("not a positive filtration") != std::string::npos);
}

TEST_CASE("structured reports are deterministic") {
  auto a = fs::temp_directory_path() / "zinbiel_report_a.json";
  auto b = fs::temp_directory_path() / "zinbiel_report_b.json";
  CHECK(run({"embed", "--algebra", data("truncpoly3.json"), "--N", "4", "--report", a.string()}).code == 0);
  CHECK(run({"embed", "--algebra", data("truncpoly3.json"), "--N", "4", "--report", b.string()}).code == 0);
  CHECK(slurp(a) == slurp(b));
  auto doc = nlohmann::json::parse(slurp(a));
  for (const char* key : {"command", "parameters", "status", "counts", "failures", "timings"}) CHECK(doc.contains(key));
  CHECK(doc["command"] == "embed");
  CHECK(doc["status"] == "ok");
  CHECK(doc["failures"].empty());
  CHECK(doc["timings"].empty());

  CHECK(run({"--report", a.string(), "--timings", "verify", "thm2", "--letters", "1", "--bound", "4"}).code == 0);
  CHECK(nlohmann::json::parse(slurp(a))["timings"].contains("total_seconds"));

  CHECK(run({"verify", "gsb", "--relations", data("trivial2.sexp"), "--bound", "4", "--report", a.string()}).code == 1);
  auto failed = nlohmann::json::parse(slurp(a));
  CHECK(failed["status"] == "failed");
  CHECK_FALSE(failed["failures"].empty());
}
