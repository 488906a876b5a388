#include "zinbiel/compoly.hpp"

#include <algorithm>
#include <iterator>
#include <tuple>

namespace zinbiel {

GenSymbol make_symbol(Rank base, std::uint32_t level, std::uint32_t weight) {
  if (level < 1 || weight < level) {
    throw Error("symbol x_" + std::to_string(weight) + "^(" + std::to_string(level) + ") needs weight >= level >= 1");
  }
  return {base, level, weight};
}

ComMonomial::ComMonomial(std::vector<GenSymbol> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  for (const auto& s : factors_) weight_ += s.weight;
}

bool ComMonomial::divides(const ComMonomial& other) const {
  return std::includes(other.factors_.begin(), other.factors_.end(), factors_.begin(), factors_.end());
}

ComMonomial ComMonomial::quotient_of(const ComMonomial& other) const {
  std::vector<GenSymbol> out;
  std::set_difference(other.factors_.begin(), other.factors_.end(), factors_.begin(), factors_.end(),
                      std::back_inserter(out));
  return ComMonomial(std::move(out));
}

ComMonomial ComMonomial::lcm(const ComMonomial& other) const {
  std::vector<GenSymbol> out;
  std::set_union(factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end(),
                 std::back_inserter(out));
  return ComMonomial(std::move(out));
}

bool ComMonomial::coprime(const ComMonomial& other) const {
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

ComMonomial operator*(const ComMonomial& a, const ComMonomial& b) {
  std::vector<GenSymbol> out;
  out.reserve(a.degree() + b.degree());
  std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(), std::back_inserter(out));
  return ComMonomial(std::move(out));
}

std::strong_ordering com_compare(const ComMonomial& a, const ComMonomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.factors().begin(), a.factors().end(), b.factors().begin(),
                                                b.factors().end());
}

ComPoly::ComPoly(const ComMonomial& m, const Rational& c) { add_term(m, c); }

void ComPoly::add_term(const ComMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational ComPoly::coefficient(const ComMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const ComMonomial& ComPoly::leading() const {
  if (terms_.empty()) throw Error("no leading monomial");
  return terms_.begin()->first;
}

const Rational& ComPoly::leading_coefficient() const {
  if (terms_.empty()) throw Error("no leading monomial");
  return terms_.begin()->second;
}

ComPoly ComPoly::monic() const {
  ComPoly out = *this;
  Rational inv = 1 / leading_coefficient();
  return out *= inv;
}

bool ComPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto w = terms_.begin()->first.weight();
  return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return t.first.weight() == w; });
}

ComPoly& ComPoly::operator+=(const ComPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ComPoly& ComPoly::operator-=(const ComPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ComPoly& ComPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

ComPoly operator*(const ComPoly& a, const ComPoly& b) {
  ComPoly out;
  for (const auto& [m, c] : a.terms_) {
    for (const auto& [n, d] : b.terms_) out.add_term(m * n, c * d);
  }
  return out;
}

ComPoly operator*(const ComPoly& a, const ComMonomial& m) {
  ComPoly out;
  for (const auto& [n, c] : a.terms_) out.add_term(n * m, c);
  return out;
}

ComPoly com_reduce(const ComPoly& p, const std::vector<ComPoly>& basis, std::vector<ComRewriteStep>* trace) {
  ComPoly work = p;
  ComPoly result;
  while (!work.is_zero()) {
    ComMonomial m = work.terms().begin()->first;
    Rational c = work.terms().begin()->second;
    auto g = std::find_if(basis.begin(), basis.end(), [&](const ComPoly& b) { return b.leading().divides(m); });
    if (g == basis.end()) {
      result.add_term(m, c);
      work.add_term(m, -c);
      continue;
    }
    ComMonomial mult = g->leading().quotient_of(m);
    work -= (*g * mult) * c;
    if (trace) trace->push_back({c, mult, static_cast<std::size_t>(g - basis.begin())});
  }
  return result;
}

ComPoly s_polynomial(const ComPoly& f, const ComPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error("S-polynomial of a zero polynomial");
  ComPoly mf = f.monic();
  ComPoly mg = g.monic();
  ComMonomial l = mf.leading().lcm(mg.leading());
  return mf * mf.leading().quotient_of(l) - mg * mg.leading().quotient_of(l);
}

BuchbergerResult buchberger_bounded(const std::vector<ComPoly>& generators, std::uint64_t weight_bound,
                                    std::size_t factor_bound) {
  BuchbergerResult out;
  for (const auto& g : generators) {
    if (!g.is_zero()) out.basis.push_back(g.monic());
  }
  struct Pair {
    ComMonomial lcm;
    std::size_t i;
    std::size_t j;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) pairs.push_back({out.basis[i].leading().lcm(out.basis[j].leading()), i, j});
  };
  for (std::size_t j = 1; j < out.basis.size(); ++j) add_pairs_for(j);

  auto later = [](const Pair& a, const Pair& b) {
    if (auto c = com_compare(a.lcm, b.lcm); c != 0) return c > 0;
    return std::tie(a.i, a.j) > std::tie(b.i, b.j);
  };
  while (!pairs.empty()) {
    auto next = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) { return later(b, a); });
    Pair p = *next;
    pairs.erase(next);
    ++out.report.pairs_considered;
    if (p.lcm.weight() > weight_bound || p.lcm.degree() > factor_bound) {
      ++out.report.pairs_skipped_by_bound;
      continue;
    }
    const ComPoly& f = out.basis[p.i];
    const ComPoly& g = out.basis[p.j];
    if (f.leading().coprime(g.leading())) {
      ++out.report.pairs_skipped_coprime;
      continue;
    }
    ComPoly r = com_reduce(s_polynomial(f, g), out.basis);
    if (r.is_zero()) continue;
    out.basis.push_back(r.monic());
    out.report.new_leading.push_back(out.basis.back().leading());
    add_pairs_for(out.basis.size() - 1);
  }
  for (const auto& g : out.basis) {
    if (g.leading().degree() <= 1) out.report.linear_leading.push_back(g.leading());
  }
  return out;
}

std::string format_symbol(const GenSymbol& s, const Alphabet& alphabet) {
  return alphabet.name(s.base) + "_" + std::to_string(s.weight) + "^(" + std::to_string(s.level) + ")";
}

std::string format_monomial(const ComMonomial& m, const Alphabet& alphabet) {
  if (m.degree() == 0) return "1";
  std::string out;
  for (const auto& s : m.factors()) {
    if (!out.empty()) out += "*";
    out += format_symbol(s, alphabet);
  }
  return out;
}

std::string format_compoly(const ComPoly& p, const Alphabet& alphabet) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    Rational a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1) {
      out += to_string(a);
      if (m.degree() > 0) out += "*";
      out += m.degree() > 0 ? format_monomial(m, alphabet) : "";
    } else {
      out += format_monomial(m, alphabet);
    }
  }
  return out;
}

}  // namespace zinbiel
