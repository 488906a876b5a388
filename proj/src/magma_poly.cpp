#include "zinbiel/magma_poly.hpp"

namespace zinbiel {

MagmaPoly::MagmaPoly(const Word& w, const Rational& c) { add_term(w, c); }

void MagmaPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational MagmaPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Word& MagmaPoly::leading() const {
  if (terms_.empty()) throw Error("no leading monomial");
  return terms_.begin()->first;
}

const Rational& MagmaPoly::leading_coefficient() const {
  if (terms_.empty()) throw Error("no leading monomial");
  return terms_.begin()->second;
}

MagmaPoly MagmaPoly::monic() const {
  MagmaPoly out = *this;
  Rational inv = 1 / leading_coefficient();
  return out *= inv;
}

std::size_t MagmaPoly::max_length() const {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.length());
  return m;
}

MagmaPoly& MagmaPoly::operator+=(const MagmaPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

MagmaPoly& MagmaPoly::operator-=(const MagmaPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

MagmaPoly& MagmaPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

MagmaPoly magma_product(const MagmaPoly& p, const MagmaPoly& q) {
  MagmaPoly out;
  for (const auto& [u, a] : p.terms()) {
    for (const auto& [v, b] : q.terms()) out.add_term(Word::node(u, v), a * b);
  }
  return out;
}

std::pair<Word, MagmaPoly> leading_and_monic(const MagmaPoly& p) {
  MagmaPoly m = p.monic();
  return {m.leading(), std::move(m)};
}

}  // namespace zinbiel
