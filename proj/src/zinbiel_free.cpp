#include "zinbiel/zinbiel_free.hpp"

#include "zinbiel/reduction.hpp"

namespace zinbiel {

ZinbElement::ZinbElement(const AWord& w, const Rational& c) { add_term(w, c); }

void ZinbElement::add_term(const AWord& w, const Rational& c) {
  if (w.empty()) throw Error("associative words are nonempty");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational ZinbElement::coefficient(const AWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

ZinbElement& ZinbElement::operator+=(const ZinbElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

ZinbElement& ZinbElement::operator-=(const ZinbElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

ZinbElement& ZinbElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

namespace {

// Appends every interleaving of u[i..] and v[j..] to `prefix`, one term each.
void interleave(const AWord& u, std::size_t i, const AWord& v, std::size_t j, AWord& prefix,
                const std::optional<Rank>& suffix, const Rational& c, ZinbElement& out) {
  if (i == u.size() && j == v.size()) {
    if (suffix) {
      prefix.push_back(*suffix);
      out.add_term(prefix, c);
      prefix.pop_back();
    } else {
      out.add_term(prefix, c);
    }
    return;
  }
  if (i < u.size()) {
    prefix.push_back(u[i]);
    interleave(u, i + 1, v, j, prefix, suffix, c, out);
    prefix.pop_back();
  }
  if (j < v.size()) {
    prefix.push_back(v[j]);
    interleave(u, i, v, j + 1, prefix, suffix, c, out);
    prefix.pop_back();
  }
}

}  // namespace

ZinbElement shuffle(const AWord& u, const AWord& v) {
  ZinbElement out;
  AWord prefix;
  prefix.reserve(u.size() + v.size() + 1);
  interleave(u, 0, v, 0, prefix, std::nullopt, 1, out);
  return out;
}

ZinbElement zinbiel_product(const AWord& u, const AWord& v) {
  if (u.empty() || v.empty()) throw Error("associative words are nonempty");
  ZinbElement out;
  AWord head(v.begin(), v.end() - 1);
  AWord prefix;
  prefix.reserve(u.size() + v.size());
  interleave(u, 0, head, 0, prefix, v.back(), 1, out);
  return out;
}

ZinbElement zinbiel_product(const ZinbElement& f, const ZinbElement& g) {
  ZinbElement out;
  for (const auto& [u, a] : f.terms()) {
    for (const auto& [v, b] : g.terms()) {
      AWord head(v.begin(), v.end() - 1);
      AWord prefix;
      prefix.reserve(u.size() + v.size());
      interleave(u, 0, head, 0, prefix, v.back(), a * b, out);
    }
  }
  return out;
}

ZinbElement star(const ZinbElement& f, const ZinbElement& g) { return zinbiel_product(f, g) + zinbiel_product(g, f); }

Word left_comb(const AWord& w) { return bracket(w, Bracketing::Left); }

MagmaPoly to_magma(const ZinbElement& z) {
  MagmaPoly out;
  for (const auto& [w, c] : z.terms()) out.add_term(left_comb(w), c);
  return out;
}

ZinbElement to_left_comb(const MagmaPoly& p) {
  if (p.is_zero()) return {};
  MagmaPoly nf = normal_form(p, {zinbiel_family()}, p.max_length());
  ZinbElement out;
  for (const auto& [w, c] : nf.terms()) {
    if (!w.is_left_combed()) throw Error("normal form modulo the Zinbiel family is not a left comb");
    out.add_term(w.leaves(), c);
  }
  return out;
}

PermAlgebra PermAlgebra::standard(std::size_t dimension) {
  std::vector<std::vector<Vector>> table(dimension, std::vector<Vector>(dimension, Vector(dimension)));
  for (std::size_t i = 0; i < dimension; ++i) {
    for (std::size_t j = 0; j < dimension; ++j) table[i][j][j] = 1;
  }
  return PermAlgebra(dimension, std::move(table));
}

PermAlgebra::PermAlgebra(std::size_t dimension, std::vector<std::vector<Vector>> table)
    : dimension_(dimension), table_(std::move(table)) {
  if (table_.size() != dimension_) throw Error("Perm product table has the wrong number of rows");
  for (const auto& row : table_) {
    if (row.size() != dimension_) throw Error("Perm product table has a row of the wrong size");
    for (const auto& v : row) {
      if (v.size() != dimension_) throw Error("Perm product table entry has the wrong dimension");
    }
  }
}

PermAlgebra::Vector PermAlgebra::multiply(const Vector& a, const Vector& b) const {
  Vector out(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dimension_; ++j) {
      if (b[j] == 0) continue;
      for (std::size_t k = 0; k < dimension_; ++k) out[k] += a[i] * b[j] * table_[i][j][k];
    }
  }
  return out;
}

void PermAlgebra::validate() const {
  auto unit = [&](std::size_t i) {
    Vector v(dimension_);
    v[i] = 1;
    return v;
  };
  auto name = [](std::size_t i, std::size_t j, std::size_t k) {
    return "(e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ", e" + std::to_string(k + 1) + ")";
  };
  for (std::size_t i = 0; i < dimension_; ++i) {
    for (std::size_t j = 0; j < dimension_; ++j) {
      for (std::size_t k = 0; k < dimension_; ++k) {
        Vector ei = unit(i), ej = unit(j), ek = unit(k);
        Vector right = multiply(ei, multiply(ej, ek));
        if (multiply(multiply(ei, ej), ek) != right) {
          throw Error("Perm identity (x1x2)x3 = x1(x2x3) fails on " + name(i, j, k));
        }
        if (right != multiply(ej, multiply(ei, ek))) {
          throw Error("Perm identity x1(x2x3) = x2(x1x3) fails on " + name(i, j, k));
        }
      }
    }
  }
}

namespace {

void add_scaled(PermTensor& out, std::size_t index, const ZinbElement& z, const Rational& c) {
  if (c == 0 || z.is_zero()) return;
  auto& slot = out[index];
  slot += z * c;
  if (slot.is_zero()) out.erase(index);
}

}  // namespace

PermTensor perm_tensor_product(const PermAlgebra& perm, const PermTensor& x, const PermTensor& y) {
  PermTensor out;
  for (const auto& [p, a] : x) {
    for (const auto& [q, b] : y) {
      ZinbElement succ = zinbiel_product(a, b);
      ZinbElement prec = zinbiel_product(b, a);
      const auto& pq = perm.product(p, q);
      const auto& qp = perm.product(q, p);
      for (std::size_t r = 0; r < perm.dimension(); ++r) {
        add_scaled(out, r, succ, pq[r]);
        add_scaled(out, r, prec, qp[r]);
      }
    }
  }
  return out;
}

PermTensorReport perm_tensor_check(const PermAlgebra& perm, const std::vector<std::array<PermTensor, 3>>& samples) {
  perm.validate();
  PermTensorReport report;
  for (const auto& [x, y, z] : samples) {
    ++report.triples_checked;
    if (perm_tensor_product(perm, x, y) != perm_tensor_product(perm, y, x)) ++report.commutativity_violations;
    auto left = perm_tensor_product(perm, perm_tensor_product(perm, x, y), z);
    auto right = perm_tensor_product(perm, x, perm_tensor_product(perm, y, z));
    if (left != right) ++report.associativity_violations;
  }
  return report;
}

ZinbElement random_zinb_element(std::mt19937_64& rng, std::size_t alphabet_size, std::size_t max_degree,
                                std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> terms(1, max_terms);
  std::uniform_int_distribution<std::size_t> degree(1, max_degree);
  std::uniform_int_distribution<Rank> letter(0, static_cast<Rank>(alphabet_size - 1));
  std::uniform_int_distribution<int> coeff(-3, 3);
  ZinbElement out;
  for (std::size_t t = terms(rng); t > 0; --t) {
    AWord w(degree(rng));
    for (auto& r : w) r = letter(rng);
    int c = 0;
    while (c == 0) c = coeff(rng);
    out.add_term(w, c);
  }
  return out;
}

PermTensor random_perm_tensor(std::mt19937_64& rng, std::size_t perm_dimension, std::size_t alphabet_size,
                              std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> index(0, perm_dimension - 1);
  PermTensor out;
  for (int k = 0; k < 2; ++k) {
    auto z = random_zinb_element(rng, alphabet_size, max_degree, 2);
    add_scaled(out, index(rng), z, 1);
  }
  return out;
}

}  // namespace zinbiel
