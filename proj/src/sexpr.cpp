#include "zinbiel/sexpr.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "zinbiel/envelope.hpp"

namespace zinbiel {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<SExpr> all() {
    std::vector<SExpr> out;
    skip();
    while (pos_ < text_.size()) {
      out.push_back(form());
      skip();
    }
    return out;
  }

 private:
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = peek();
      if (c == ';') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  static bool delimiter(char c) {
    return c == '(' || c == ')' || c == '[' || c == ']' || c == ';' || std::isspace(static_cast<unsigned char>(c));
  }

  SExpr form() {
    SExpr e;
    e.line = line_;
    e.column = column_;
    char c = peek();
    if (c == ')' || c == ']') throw ParseError(std::string("unexpected '") + c + "'", line_, column_);
    if (c == '(' || c == '[') {
      e.bracket = c == '(' ? Bracket::Round : Bracket::Square;
      const char close = c == '(' ? ')' : ']';
      advance();
      while (true) {
        skip();
        if (pos_ >= text_.size()) throw ParseError(std::string("missing '") + close + "'", e.line, e.column);
        if (peek() == close) {
          advance();
          return e;
        }
        if (peek() == ')' || peek() == ']') {
          throw ParseError(std::string("expected '") + close + "'", line_, column_);
        }
        e.items.push_back(form());
      }
    }
    e.is_atom = true;
    while (pos_ < text_.size() && !delimiter(peek())) {
      e.atom += peek();
      advance();
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

[[noreturn]] void fail(const SExpr& e, const std::string& message) { throw ParseError(message, e.line, e.column); }

Rank letter_rank(const SExpr& e, const Alphabet& alphabet) {
  if (!is_identifier(e.atom)) fail(e, "'" + e.atom + "' is not a letter");
  auto r = alphabet.find(e.atom);
  if (!r) fail(e, "unknown letter '" + e.atom + "'");
  return *r;
}

Rational coefficient_of(const SExpr& e) {
  if (!e.is_atom) fail(e, "expected a rational coefficient");
  try {
    return parse_rational(e.atom);
  } catch (const Error& err) {
    fail(e, err.what());
  }
}

bool has_head(const SExpr& e, std::string_view head) {
  return !e.is_atom && e.bracket == Bracket::Round && !e.items.empty() && e.items[0].is_atom &&
         e.items[0].atom == head;
}

void collect(const SExpr& e, std::vector<std::string>& out, std::set<std::string>& seen) {
  if (e.is_atom) {
    if (is_identifier(e.atom) && seen.insert(e.atom).second) out.push_back(e.atom);
    return;
  }
  std::size_t start = 0;
  if (has_head(e, "+") || has_head(e, "*") || has_head(e, "alphabet") || has_head(e, "family")) {
    if (has_head(e, "family")) return;
    start = 1;
  }
  for (std::size_t i = start; i < e.items.size(); ++i) collect(e.items[i], out, seen);
}

AWord aword_from_sexpr(const SExpr& e, const Alphabet& alphabet) {
  if (e.is_atom || e.bracket != Bracket::Square) fail(e, "expected an associative word [x y ...]");
  if (e.items.empty()) fail(e, "empty associative word");
  AWord w;
  for (const auto& item : e.items) {
    if (!item.is_atom) fail(item, "expected a letter");
    w.push_back(letter_rank(item, alphabet));
  }
  return w;
}

template <class Poly, class Monomial>
Poly sum_from_sexpr(const SExpr& e, Monomial monomial) {
  Poly out;
  auto term = [&](const SExpr& t) {
    if (has_head(t, "*")) {
      if (t.items.size() != 3) fail(t, "expected (* coefficient monomial)");
      Poly p;
      p.add_term(monomial(t.items[2]), coefficient_of(t.items[1]));
      out += p;
    } else if (has_head(t, "+")) {
      fail(t, "nested sums are not allowed");
    } else {
      Poly p;
      p.add_term(monomial(t), 1);
      out += p;
    }
  };
  if (e.is_atom && e.atom == "0") return out;
  if (has_head(e, "+")) {
    for (std::size_t i = 1; i < e.items.size(); ++i) term(e.items[i]);
  } else {
    term(e);
  }
  return out;
}

template <class Terms, class Format>
std::string format_sum(const Terms& terms, Format format) {
  if (terms.empty()) return "0";
  auto term = [&](const auto& entry) {
    if (entry.second == 1) return format(entry.first);
    return "(* " + to_string(entry.second) + " " + format(entry.first) + ")";
  };
  if (terms.size() == 1) return term(*terms.begin());
  std::string out = "(+";
  for (const auto& entry : terms) out += " " + term(entry);
  return out + ")";
}

}  // namespace

std::vector<SExpr> parse_sexprs(std::string_view text) { return Lexer(text).all(); }

SExpr parse_sexpr(std::string_view text) {
  auto forms = parse_sexprs(text);
  if (forms.empty()) throw ParseError("empty input", 1, 1);
  if (forms.size() > 1) fail(forms[1], "unexpected extra input");
  return forms.front();
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto c0 = static_cast<unsigned char>(name[0]);
  if (!std::isalpha(c0) && name[0] != '_') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

std::vector<std::string> collect_letters(const SExpr& expr) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect(expr, out, seen);
  return out;
}

void natural_sort(std::vector<std::string>& names) {
  auto split = [](const std::string& s) {
    std::size_t cut = s.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(s[cut - 1]))) --cut;
    return std::pair<std::string_view, std::string_view>(std::string_view(s).substr(0, cut),
                                                         std::string_view(s).substr(cut));
  };
  std::sort(names.begin(), names.end(), [&](const std::string& a, const std::string& b) {
    auto [pa, na] = split(a);
    auto [pb, nb] = split(b);
    if (pa != pb) return pa < pb;
    auto strip = [](std::string_view n) {
      while (n.size() > 1 && n[0] == '0') n.remove_prefix(1);
      return n;
    };
    auto sa = strip(na), sb = strip(nb);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
    return a < b;
  });
}

Word word_from_sexpr(const SExpr& e, const Alphabet& alphabet) {
  if (e.is_atom) return Word::leaf(letter_rank(e, alphabet));
  if (e.bracket != Bracket::Round || e.items.size() != 2) fail(e, "a word is a letter or a pair (u v)");
  return Word::node(word_from_sexpr(e.items[0], alphabet), word_from_sexpr(e.items[1], alphabet));
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return word_from_sexpr(parse_sexpr(text), alphabet);
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.is_leaf()) return alphabet.name(w.letter());
  return "(" + format_word(w.left(), alphabet) + " " + format_word(w.right(), alphabet) + ")";
}

MagmaPoly poly_from_sexpr(const SExpr& e, const Alphabet& alphabet) {
  return sum_from_sexpr<MagmaPoly>(e, [&](const SExpr& m) { return word_from_sexpr(m, alphabet); });
}

MagmaPoly parse_poly(std::string_view text, const Alphabet& alphabet) {
  return poly_from_sexpr(parse_sexpr(text), alphabet);
}

std::string format_poly(const MagmaPoly& p, const Alphabet& alphabet) {
  return format_sum(p.terms(), [&](const Word& w) { return format_word(w, alphabet); });
}

ZinbElement zinb_from_sexpr(const SExpr& e, const Alphabet& alphabet) {
  return sum_from_sexpr<ZinbElement>(e, [&](const SExpr& m) { return aword_from_sexpr(m, alphabet); });
}

ZinbElement parse_zinb(std::string_view text, const Alphabet& alphabet) {
  return zinb_from_sexpr(parse_sexpr(text), alphabet);
}

std::string format_zinb(const ZinbElement& z, const Alphabet& alphabet) {
  // Descending, to match polynomial output.
  std::vector<std::pair<AWord, Rational>> terms(z.terms().rbegin(), z.terms().rend());
  return format_sum(terms, [&](const AWord& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + alphabet.name(w[i]);
    return s + "]";
  });
}

RelationSchema family_by_label(std::string_view label) {
  if (label == "R1") return zinbiel_family();
  if (label == "R3") return anticommuting_tail_family();
  if (label == "R3'") return square_tail_family();
  throw Error("unknown relation family '" + std::string(label) + "' (known: R1, R3, R3')");
}

RelationFile parse_relation_file(std::string_view text, const std::vector<std::string>& extra_letters) {
  auto forms = parse_sexprs(text);
  const SExpr* declared = nullptr;
  for (const auto& f : forms) {
    if (!has_head(f, "alphabet")) continue;
    if (declared) fail(f, "alphabet declared twice");
    declared = &f;
  }

  RelationFile out;
  if (declared) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i < declared->items.size(); ++i) {
      const auto& item = declared->items[i];
      if (!item.is_atom || !is_identifier(item.atom)) fail(item, "expected a letter name");
      if (std::find(names.begin(), names.end(), item.atom) != names.end()) {
        fail(item, "duplicate letter '" + item.atom + "'");
      }
      names.push_back(item.atom);
    }
    out.alphabet = Alphabet(std::move(names));
  } else {
    std::set<std::string> seen(extra_letters.begin(), extra_letters.end());
    for (const auto& f : forms) {
      for (auto& n : collect_letters(f)) seen.insert(n);
    }
    std::vector<std::string> names(seen.begin(), seen.end());
    natural_sort(names);
    out.alphabet = Alphabet(std::move(names));
  }

  std::size_t explicit_count = 0;
  for (const auto& f : forms) {
    if (has_head(f, "alphabet")) continue;
    if (has_head(f, "family")) {
      if (f.items.size() != 2 || !f.items[1].is_atom) fail(f, "expected (family LABEL)");
      try {
        out.schemas.push_back(family_by_label(f.items[1].atom));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& err) {
        fail(f.items[1], err.what());
      }
      continue;
    }
    MagmaPoly p = poly_from_sexpr(f, out.alphabet);
    if (p.is_zero()) fail(f, "zero relation");
    out.schemas.push_back(RelationSchema::explicit_relation(p, "r" + std::to_string(++explicit_count)));
  }
  return out;
}

std::string format_relation_file(const RelationFile& file) {
  std::string out = "(alphabet";
  for (const auto& n : file.alphabet.names()) out += " " + n;
  out += ")\n";
  for (const auto& s : file.schemas) {
    if (s.is_family()) {
      out += "(family " + s.label() + ")\n";
    } else {
      out += format_poly(s.poly(), file.alphabet) + "\n";
    }
  }
  return out;
}

}  // namespace zinbiel
