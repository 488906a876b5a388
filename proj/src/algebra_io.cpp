#include "zinbiel/algebra_io.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

#include "zinbiel/sexpr.hpp"

namespace zinbiel {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Position of the n-th occurrence of a JSON string literal, for messages.
class Locator {
 public:
  explicit Locator(std::string_view text) : text_(text) {}

  ParseError error(const std::string& quoted, const std::string& message) const {
    std::string needle = json(quoted).dump();
    auto at = text_.find(needle);
    if (at == std::string_view::npos) return ParseError(message, 1, 1);
    auto [l, c] = position(text_, at);
    return ParseError(message, l, c);
  }

  ParseError error_at_key(const std::string& key, const std::string& message) const {
    return error(key, message);
  }

 private:
  std::string_view text_;
};

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

// "c1 n1 + c2 n2 - n3" -> coefficients.
Vector parse_rhs(const std::string& rhs, const Alphabet& basis, const std::string& entry, const Locator& where) {
  Vector out(basis.size());
  auto tokens = split_ws(rhs);
  if (tokens.size() == 1 && tokens[0] == "0") return out;
  auto bad = [&](const std::string& message) { return where.error(entry, message + " in '" + entry + "'"); };
  if (tokens.empty()) throw bad("missing right-hand side");
  auto element = [&](const std::string& name) {
    auto r = basis.find(name);
    if (!r) throw bad("unknown basis element '" + name + "'");
    return *r;
  };
  std::size_t i = 0;
  bool first = true;
  while (i < tokens.size()) {
    Rational c = 1;
    if (!first) {
      if (tokens[i] != "+" && tokens[i] != "-") throw bad("expected '+' or '-' before '" + tokens[i] + "'");
      if (tokens[i] == "-") c = -1;
      if (++i == tokens.size()) throw bad("dangling sign");
    }
    first = false;
    std::string t = tokens[i++];
    if (t.size() > 1 && t[0] == '-' && is_identifier(t.substr(1))) {
      c = -c;
      t = t.substr(1);
    }
    if (!is_identifier(t)) {
      try {
        c *= parse_rational(t);
      } catch (const Error& err) {
        throw bad(err.what());
      }
      if (i == tokens.size()) throw bad("coefficient without basis element");
      t = tokens[i++];
    }
    out[element(t)] += c;
  }
  return out;
}

}  // namespace

AlgebraFile parse_algebra_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [l, c] = position(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("malformed JSON: ") + e.what(), l, c);
  }
  Locator where(text);
  if (!doc.is_object()) throw ParseError("top level must be an object", 1, 1);
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "basis" && it.key() != "levels" && it.key() != "products") {
      throw where.error_at_key(it.key(), "unknown field '" + it.key() + "'");
    }
  }
  if (!doc.contains("basis") || !doc["basis"].is_array()) throw ParseError("missing array field 'basis'", 1, 1);

  std::vector<std::string> names;
  for (const auto& n : doc["basis"]) {
    if (!n.is_string() || !is_identifier(n.get<std::string>())) {
      throw where.error_at_key("basis", "basis entries must be identifiers");
    }
    auto s = n.get<std::string>();
    if (std::find(names.begin(), names.end(), s) != names.end()) {
      throw where.error(s, "duplicate basis element '" + s + "'");
    }
    names.push_back(s);
  }
  AlgebraFile out;
  out.algebra = CommAlgebra(Alphabet(names));
  const Alphabet& basis = out.algebra.basis();

  if (doc.contains("levels")) {
    const auto& lv = doc["levels"];
    if (!lv.is_array() || lv.size() != names.size()) {
      throw where.error_at_key("levels", "'levels' must list one level per basis element");
    }
    std::vector<std::uint32_t> levels;
    for (const auto& v : lv) {
      if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1000000) {
        throw where.error_at_key("levels", "levels must be positive integers");
      }
      levels.push_back(static_cast<std::uint32_t>(v.get<long long>()));
    }
    out.levels = std::move(levels);
  }

  if (doc.contains("products")) {
    if (!doc["products"].is_array()) throw where.error_at_key("products", "'products' must be an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& p : doc["products"]) {
      if (!p.is_string()) throw where.error_at_key("products", "product entries must be strings");
      const auto entry = p.get<std::string>();
      auto arrow = entry.find("->");
      if (arrow == std::string::npos) throw where.error(entry, "missing '->' in '" + entry + "'");
      auto lhs = split_ws(entry.substr(0, arrow));
      if (lhs.size() != 2) throw where.error(entry, "left side must name two basis elements in '" + entry + "'");
      std::size_t idx[2];
      for (int k = 0; k < 2; ++k) {
        auto r = basis.find(lhs[k]);
        if (!r) throw where.error(entry, "unknown basis element '" + lhs[k] + "' in '" + entry + "'");
        idx[k] = *r;
      }
      auto key = std::minmax(idx[0], idx[1]);
      if (!seen.insert(key).second) throw where.error(entry, "product given twice: '" + entry + "'");
      out.algebra.set_product(idx[0], idx[1], parse_rhs(entry.substr(arrow + 2), basis, entry, where));
    }
  }
  return out;
}

std::string format_algebra_json(const AlgebraFile& file) {
  const auto& a = file.algebra;
  json doc = json::object();
  doc["basis"] = a.basis().names();
  if (file.levels) doc["levels"] = *file.levels;
  json products = json::array();
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = i; j < a.dimension(); ++j) {
      const Vector& v = a.product(i, j);
      std::string rhs;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        Rational c = v[k];
        if (!rhs.empty()) {
          rhs += c < 0 ? " - " : " + ";
          if (c < 0) c = -c;
        }
        if (c != 1) rhs += to_string(c) + " ";
        rhs += a.basis().name(static_cast<Rank>(k));
      }
      if (rhs.empty()) continue;
      products.push_back(a.basis().name(static_cast<Rank>(i)) + " " + a.basis().name(static_cast<Rank>(j)) + " -> " + rhs);
    }
  }
  doc["products"] = products;
  return doc.dump(2) + "\n";
}

}  // namespace zinbiel
