#include "zinbiel/word.hpp"

#include <algorithm>
#include <unordered_set>

namespace zinbiel {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty letter name");
    if (!seen.insert(n).second) throw Error("duplicate letter '" + n + "'");
  }
}

Alphabet Alphabet::standard(std::size_t size) {
  std::vector<std::string> names;
  if (size <= 3) {
    static const char* kSmall[] = {"x", "y", "z"};
    names.assign(kSmall, kSmall + size);
  } else {
    for (std::size_t i = 1; i <= size; ++i) names.push_back("x" + std::to_string(i));
  }
  return Alphabet(std::move(names));
}

const std::string& Alphabet::name(Rank rank) const {
  if (rank >= names_.size()) throw Error("letter rank " + std::to_string(rank) + " outside alphabet");
  return names_[rank];
}

std::optional<Rank> Alphabet::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Rank>(it - names_.begin());
}

Rank Alphabet::rank_of(std::string_view name) const {
  if (auto r = find(name)) return *r;
  throw Error("unknown letter '" + std::string(name) + "'");
}

bool WordView::is_left_combed() const {
  WordView w = *this;
  while (!w.is_leaf()) {
    if (!w.right().is_leaf()) return false;
    w = w.left();
  }
  return true;
}

bool operator==(WordView a, WordView b) {
  auto ca = a.code();
  auto cb = b.code();
  return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::strong_ordering operator<=>(WordView a, WordView b) {
  auto ca = a.code();
  auto cb = b.code();
  return std::lexicographical_compare_three_way(ca.begin(), ca.end(), cb.begin(), cb.end());
}

Word Word::leaf(Rank rank) {
  Word w;
  w.code_.push_back(static_cast<std::int32_t>(rank) + detail::kLeafBase);
  return w;
}

Word Word::node(const Word& left, const Word& right) {
  Word w;
  w.code_.reserve(1 + left.code_.size() + right.code_.size());
  w.code_.push_back(static_cast<std::int32_t>(left.length() + right.length()));
  w.code_.insert(w.code_.end(), right.code_.begin(), right.code_.end());
  w.code_.insert(w.code_.end(), left.code_.begin(), left.code_.end());
  return w;
}

Word::Word(WordView view) {
  auto c = view.code();
  code_.assign(c.begin(), c.end());
}

namespace {

void collect_leaves(WordView w, std::vector<Rank>& out) {
  if (w.is_leaf()) {
    out.push_back(w.letter());
    return;
  }
  collect_leaves(w.left(), out);
  collect_leaves(w.right(), out);
}

}  // namespace

std::vector<Rank> Word::leaves() const {
  std::vector<Rank> out;
  out.reserve(length());
  collect_leaves(view(), out);
  return out;
}

WordView Word::at(const TreePath& path) const {
  WordView w = view();
  for (Side s : path) {
    if (w.is_leaf()) throw Error("tree path descends below a leaf");
    w = s == Side::Left ? w.left() : w.right();
  }
  return w;
}

Word Word::graft(const TreePath& path, const Word& replacement) const {
  std::vector<std::size_t> ancestors;
  ancestors.reserve(path.size());
  std::size_t offset = 0;
  for (Side s : path) {
    const std::int32_t* p = code_.data() + offset;
    if (detail::is_leaf_code(*p)) throw Error("tree path descends below a leaf");
    ancestors.push_back(offset);
    offset += 1;
    if (s == Side::Left) offset += detail::code_size(code_.data() + offset);
  }
  const std::size_t old_size = detail::code_size(code_.data() + offset);
  const auto delta = static_cast<std::int32_t>(replacement.length()) -
                     static_cast<std::int32_t>(WordView(code_.data() + offset).length());
  Word out;
  out.code_.reserve(code_.size() - old_size + replacement.code_.size());
  out.code_.insert(out.code_.end(), code_.begin(), code_.begin() + static_cast<std::ptrdiff_t>(offset));
  out.code_.insert(out.code_.end(), replacement.code_.begin(), replacement.code_.end());
  out.code_.insert(out.code_.end(), code_.begin() + static_cast<std::ptrdiff_t>(offset + old_size), code_.end());
  for (std::size_t a : ancestors) out.code_[a] += delta;
  return out;
}

std::size_t Word::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::int32_t c : code_) {
    h ^= static_cast<std::uint32_t>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::strong_ordering compare_words(const Word& u, const Word& v) { return u <=> v; }

Word bracket(std::span<const Rank> letters, Bracketing direction) {
  if (letters.empty()) throw Error("cannot bracket an empty letter sequence");
  if (direction == Bracketing::Left) {
    Word w = Word::leaf(letters.front());
    for (std::size_t i = 1; i < letters.size(); ++i) w = Word::node(w, Word::leaf(letters[i]));
    return w;
  }
  Word w = Word::leaf(letters.back());
  for (std::size_t i = letters.size() - 1; i-- > 0;) w = Word::node(Word::leaf(letters[i]), w);
  return w;
}

std::vector<Word> all_words(std::size_t alphabet_size, std::size_t length) {
  std::vector<std::vector<Word>> by_length(length + 1);
  if (length == 0) return {};
  for (Rank r = 0; r < alphabet_size; ++r) by_length[1].push_back(Word::leaf(r));
  for (std::size_t n = 2; n <= length; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      for (const auto& u : by_length[k]) {
        for (const auto& v : by_length[n - k]) by_length[n].push_back(Word::node(u, v));
      }
    }
  }
  auto out = std::move(by_length[length]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zinbiel
