#include "zinbiel/rb_embed.hpp"

#include <algorithm>

namespace zinbiel {

FilteredAlgebra::FilteredAlgebra(CommAlgebra algebra, std::vector<std::uint32_t> levels)
    : algebra_(std::move(algebra)), levels_(std::move(levels)) {
  if (levels_.size() != algebra_.dimension()) throw Error("one level per basis element is required");
  for (auto l : levels_) {
    if (l < 1) throw Error("filtration levels start at 1");
  }
  for (std::size_t i = 0; i < dimension(); ++i) change_of_basis_.push_back(unit_vector(dimension(), i));
}

std::uint32_t FilteredAlgebra::max_level() const {
  return levels_.empty() ? 0 : *std::max_element(levels_.begin(), levels_.end());
}

std::vector<FiltrationViolation> validate_filtration(const FilteredAlgebra& algebra) {
  std::vector<FiltrationViolation> out;
  const std::size_t d = algebra.dimension();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const auto required = algebra.level(i) + algebra.level(j);
      const Vector& p = algebra.algebra().product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        if (p[k] != 0 && algebra.level(k) < required) out.push_back({i, j, k, required, algebra.level(k)});
      }
    }
  }
  return out;
}

namespace {

bool in_span(const std::vector<Vector>& rows, const Vector& v) {
  auto extended = rows;
  extended.push_back(v);
  return row_reduce(std::move(extended)).size() == row_reduce(rows).size();
}

std::string unique_name(const Alphabet& original, const std::vector<std::string>& taken, std::size_t index) {
  std::string base = "f" + std::to_string(index + 1);
  std::string name = base;
  while (original.find(name) || std::find(taken.begin(), taken.end(), name) != taken.end()) name += "'";
  return name;
}

}  // namespace

FilteredAlgebra standard_filtration(const CommAlgebra& algebra) {
  const std::size_t d = algebra.dimension();
  if (d == 0) throw Error("empty algebra");
  // powers[k] spans A^{k+1}.
  std::vector<std::vector<Vector>> powers;
  std::vector<Vector> current;
  for (std::size_t i = 0; i < d; ++i) current.push_back(unit_vector(d, i));
  current = row_reduce(std::move(current));
  while (!current.empty()) {
    powers.push_back(current);
    std::vector<Vector> products;
    for (const auto& v : current) {
      for (std::size_t j = 0; j < d; ++j) products.push_back(algebra.multiply(v, unit_vector(d, j)));
    }
    auto next = row_reduce(std::move(products));
    if (next.size() == current.size()) throw Error("no positive filtration: algebra not nilpotent");
    current = std::move(next);
  }

  // Adapted basis, deepest level first, then listed by ascending level.
  std::vector<Vector> chosen;
  std::vector<std::uint32_t> chosen_levels;
  for (std::size_t k = powers.size(); k-- > 0;) {
    for (const auto& row : powers[k]) {
      if (in_span(chosen, row)) continue;
      chosen.push_back(row);
      chosen_levels.push_back(static_cast<std::uint32_t>(k + 1));
    }
  }
  std::vector<std::size_t> order(chosen.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return chosen_levels[a] < chosen_levels[b]; });
  std::vector<Vector> basis;
  std::vector<std::uint32_t> levels;
  std::vector<std::string> names;
  for (std::size_t idx : order) {
    basis.push_back(chosen[idx]);
    levels.push_back(chosen_levels[idx]);
    const Vector& v = chosen[idx];
    auto nonzero = std::count_if(v.begin(), v.end(), [](const Rational& c) { return c != 0; });
    auto first = std::find_if(v.begin(), v.end(), [](const Rational& c) { return c != 0; });
    if (nonzero == 1 && *first == 1) {
      names.push_back(algebra.basis().name(static_cast<Rank>(first - v.begin())));
    } else {
      names.push_back(unique_name(algebra.basis(), names, names.size()));
    }
  }

  CommAlgebra adapted{Alphabet(names)};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      adapted.set_product(i, j, coordinates(basis, algebra.multiply(basis[i], basis[j])));
    }
  }
  FilteredAlgebra out(std::move(adapted), std::move(levels));
  out.set_change_of_basis(std::move(basis));
  return out;
}

ComPoly hat_relation(const FilteredAlgebra& algebra, std::size_t i, std::size_t j, std::uint32_t l) {
  const auto k = algebra.level(i);
  const auto m = algebra.level(j);
  if (l < k + m) throw Error("s_l needs l >= level(x) + level(y)");
  ComPoly out;
  for (std::uint32_t a = k; a + m <= l; ++a) {
    out.add_term(ComMonomial({make_symbol(static_cast<Rank>(i), k, a), make_symbol(static_cast<Rank>(j), m, l - a)}), 1);
  }
  const Vector& p = algebra.algebra().product(i, j);
  for (std::size_t z = 0; z < p.size(); ++z) {
    if (p[z] == 0) continue;
    const auto level = algebra.level(z);
    if (level < k + m) throw Error("product leaves the filtration; validate the algebra first");
    if (level <= l) out.add_term(ComMonomial::of(make_symbol(static_cast<Rank>(z), level, l)), -p[z]);
  }
  return out;
}

std::vector<ComPoly> hat_relations(const FilteredAlgebra& algebra, std::uint32_t weight_bound) {
  std::vector<ComPoly> out;
  const std::size_t d = algebra.dimension();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      for (auto l = algebra.level(i) + algebra.level(j); l <= weight_bound; ++l) {
        out.push_back(hat_relation(algebra, i, j, l).monic());
      }
    }
  }
  return out;
}

TruncSeries::TruncSeries(std::uint32_t truncation) : coeffs_(truncation) {
  if (truncation < 1) throw Error("truncation degree must be at least 1");
}

void TruncSeries::check_index(std::uint32_t n) const {
  if (n < 1 || n > coeffs_.size()) {
    throw Error("series degree " + std::to_string(n) + " outside 1.." + std::to_string(coeffs_.size()));
  }
}

const ComPoly& TruncSeries::coefficient(std::uint32_t n) const {
  check_index(n);
  return coeffs_[n - 1];
}

void TruncSeries::set_coefficient(std::uint32_t n, ComPoly value) {
  check_index(n);
  coeffs_[n - 1] = std::move(value);
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ComPoly& p) { return p.is_zero(); });
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
  if (other.truncation() != truncation()) throw Error("series with different truncation degrees");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
  if (other.truncation() != truncation()) throw Error("series with different truncation degrees");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

TruncSeries rb_apply(const TruncSeries& s) {
  TruncSeries out(s.truncation());
  for (std::uint32_t n = 1; n <= s.truncation(); ++n) {
    out.set_coefficient(n, s.coefficient(n) * Rational(1, n));
  }
  return out;
}

TruncSeries series_product(const TruncSeries& s, const TruncSeries& u, const std::vector<ComPoly>& reduction) {
  if (s.truncation() != u.truncation()) throw Error("series with different truncation degrees");
  const auto N = s.truncation();
  TruncSeries out(N);
  for (std::uint32_t n = 2; n <= N; ++n) {
    ComPoly c;
    for (std::uint32_t a = 1; a < n; ++a) {
      const ComPoly& left = s.coefficient(a);
      const ComPoly& right = u.coefficient(n - a);
      if (left.is_zero() || right.is_zero()) continue;
      c += left * right;
    }
    out.set_coefficient(n, reduction.empty() ? std::move(c) : com_reduce(c, reduction));
  }
  return out;
}

TruncSeries succ_product(const TruncSeries& a, const TruncSeries& b, const std::vector<ComPoly>& reduction) {
  return series_product(rb_apply(a), b, reduction);
}

TruncSeries star_b(const TruncSeries& s, const TruncSeries& u, const std::vector<ComPoly>& reduction) {
  return series_product(rb_apply(s), u, reduction) + series_product(s, rb_apply(u), reduction);
}

TruncSeries phi(const FilteredAlgebra& algebra, std::size_t basis_index, std::uint32_t truncation) {
  const auto k = algebra.level(basis_index);
  if (truncation < k) throw Error("truncation below level");
  TruncSeries out(truncation);
  for (std::uint32_t i = k; i <= truncation; ++i) {
    out.set_coefficient(i, ComPoly(ComMonomial::of(make_symbol(static_cast<Rank>(basis_index), k, i)), i));
  }
  return out;
}

TruncSeries phi(const FilteredAlgebra& algebra, const Vector& element, std::uint32_t truncation) {
  TruncSeries out(truncation);
  for (std::size_t z = 0; z < element.size(); ++z) {
    if (element[z] == 0 || algebra.level(z) > truncation) continue;
    TruncSeries term = phi(algebra, z, truncation);
    term *= element[z];
    out += term;
  }
  return out;
}

EmbeddingReport verify_embedding(const FilteredAlgebra& algebra, std::uint32_t truncation) {
  auto violations = validate_filtration(algebra);
  if (!violations.empty()) {
    const auto& v = violations.front();
    const auto& names = algebra.basis();
    throw Error("not a positive filtration: " + names.name(static_cast<Rank>(v.left)) + "*" +
                names.name(static_cast<Rank>(v.right)) + " has a component on " +
                names.name(static_cast<Rank>(v.component)) + " of level " + std::to_string(v.actual_level) +
                " < " + std::to_string(v.required_level));
  }
  if (truncation < 2 * algebra.max_level()) throw Error("truncation must be at least twice the largest level");

  EmbeddingReport report;
  report.truncation = truncation;
  auto relations = hat_relations(algebra, truncation);
  report.relation_count = relations.size();
  auto completed = buchberger_bounded(relations, truncation, truncation);
  report.buchberger = completed.report;
  report.basis_size = completed.basis.size();
  const auto& basis = completed.basis;
  report.notes.push_back("relations reduced by a Groebner basis complete up to weight " + std::to_string(truncation));

  const std::size_t d = algebra.dimension();
  std::vector<TruncSeries> images;
  for (std::size_t i = 0; i < d; ++i) images.push_back(phi(algebra, i, truncation));

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      ++report.pairs_checked;
      TruncSeries lhs = star_b(images[i], images[j], basis);
      TruncSeries rhs = phi(algebra, algebra.algebra().product(i, j), truncation);
      for (std::uint32_t l = 1; l <= truncation; ++l) {
        ComPoly residue = com_reduce(lhs.coefficient(l) - rhs.coefficient(l), basis);
        if (!residue.is_zero()) report.homomorphism_failures.push_back({i, j, l, std::move(residue)});
      }
    }
  }

  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t c = 0; c < d; ++c) {
        ++report.zinbiel_triples_checked;
        const auto& x = images[a];
        const auto& y = images[b];
        const auto& z = images[c];
        TruncSeries lhs = succ_product(x, succ_product(y, z, basis), basis);
        TruncSeries rhs = succ_product(succ_product(x, y, basis), z, basis) + succ_product(succ_product(y, x, basis), z, basis);
        if (!(lhs == rhs)) ++report.zinbiel_failures;
      }
    }
  }

  if (!report.buchberger.linear_alarm()) {
    report.injectivity_certified_to = truncation;
  } else {
    report.notes.push_back("a linear leading monomial appeared: injectivity not certified");
  }
  return report;
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

CommAlgebra random_nilpotent_algebra(std::mt19937_64& rng) {
  constexpr std::size_t d = 3;
  // Model in the basis e0, e1, e2.
  CommAlgebra model{Alphabet({"e0", "e1", "e2"})};
  std::uniform_int_distribution<int> kind(0, 1);
  if (kind(rng) == 0) {
    // A^3 = 0: all products land in e2, which annihilates everything.
    Rational a, b, c;
    do {
      a = random_rational(rng);
      b = random_rational(rng);
      c = random_rational(rng);
    } while (a == 0 && b == 0 && c == 0);
    model.set_product(0, 0, {0, 0, a});
    model.set_product(0, 1, {0, 0, b});
    model.set_product(1, 1, {0, 0, c});
  } else {
    // e0^2 = e1 + a e2, e0 e1 = b e2.
    model.set_product(0, 0, {0, 1, random_rational(rng)});
    model.set_product(0, 1, {0, 0, random_rational(rng)});
  }

  std::uniform_int_distribution<int> entry(-2, 2);
  std::vector<Vector> change;
  do {
    change.assign(d, Vector(d));
    for (auto& row : change) {
      for (auto& c : row) c = entry(rng);
    }
  } while (row_reduce(change).size() != d);

  CommAlgebra out{Alphabet({"u", "v", "w"})};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      out.set_product(i, j, coordinates(change, model.multiply(change[i], change[j])));
    }
  }
  if (!out.is_associative()) throw Error("random algebra generator produced a non-associative algebra");
  return out;
}

}  // namespace zinbiel
