#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zinbiel/rational.hpp"

namespace zinbiel {

/// Position of a letter in the alphabet order. Letters are interned by rank so
/// that word comparison never touches names.
using Rank = std::uint32_t;

struct Letter {
  std::string name;
  Rank rank = 0;
};

/// An ordered alphabet: names[i] is the letter of rank i.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  /// x, y, z for up to three letters, x1 ... xd otherwise.
  static Alphabet standard(std::size_t size);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Rank rank) const;
  Letter letter(Rank rank) const { return {name(rank), rank}; }
  std::optional<Rank> find(std::string_view name) const;
  Rank rank_of(std::string_view name) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

enum class Side : std::uint8_t { Left, Right };

/// Moves from the root to a subtree.
using TreePath = std::vector<Side>;

namespace detail {

// Words are stored as a flat prefix code, right factor first:
//   code(x)     = [rank(x) + kLeafBase]          (always negative)
//   code((u v)) = [|uv|] ++ code(v) ++ code(u)    (always >= 2)
// The code is prefix-free, so plain lexicographic comparison of codes is the
// weight order: length, then right factor, then left factor, then letter rank.
inline constexpr std::int32_t kLeafBase = -(std::int32_t{1} << 30);

inline bool is_leaf_code(std::int32_t c) { return c < 0; }

inline std::size_t code_size(const std::int32_t* p) {
  return is_leaf_code(*p) ? 1 : static_cast<std::size_t>(2 * *p - 1);
}

}  // namespace detail

/// Non-owning view of a word (or of a subtree of one).
class WordView {
 public:
  explicit WordView(const std::int32_t* data) : data_(data) {}

  bool is_leaf() const { return detail::is_leaf_code(*data_); }
  std::size_t length() const { return is_leaf() ? 1 : static_cast<std::size_t>(*data_); }
  Rank letter() const { return static_cast<Rank>(*data_ - detail::kLeafBase); }
  WordView right() const { return WordView(data_ + 1); }
  WordView left() const { return WordView(data_ + 1 + detail::code_size(data_ + 1)); }
  std::span<const std::int32_t> code() const { return {data_, detail::code_size(data_)}; }

  /// True for x and for (((z1 z2) z3) ... zm).
  bool is_left_combed() const;

  friend bool operator==(WordView a, WordView b);
  friend std::strong_ordering operator<=>(WordView a, WordView b);

 private:
  const std::int32_t* data_;
};

/// A non-associative word: a binary tree with letters at the leaves.
class Word {
 public:
  static Word leaf(Rank rank);
  static Word node(const Word& left, const Word& right);

  explicit Word(WordView view);

  WordView view() const { return WordView(code_.data()); }
  bool is_leaf() const { return view().is_leaf(); }
  std::size_t length() const { return view().length(); }
  Rank letter() const { return view().letter(); }
  Word left() const { return Word(view().left()); }
  Word right() const { return Word(view().right()); }
  bool is_left_combed() const { return view().is_left_combed(); }
  const std::vector<std::int32_t>& code() const { return code_; }

  /// Leaf ranks from left to right.
  std::vector<Rank> leaves() const;

  /// Subtree addressed by `path`; throws Error when the path leaves the tree.
  WordView at(const TreePath& path) const;

  /// Copy of this word with the subtree at `path` replaced.
  Word graft(const TreePath& path, const Word& replacement) const;

  std::size_t hash() const;

  friend bool operator==(const Word& a, const Word& b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) { return a.view() <=> b.view(); }

 private:
  Word() = default;
  std::vector<std::int32_t> code_;
};

/// The weight order on words.
std::strong_ordering compare_words(const Word& u, const Word& v);

/// Transparent less-than over Word and WordView.
struct WordLess {
  using is_transparent = void;
  template <class A, class B>
  bool operator()(const A& a, const B& b) const {
    return as_view(a) < as_view(b);
  }

 private:
  static WordView as_view(const Word& w) { return w.view(); }
  static WordView as_view(WordView w) { return w; }
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

enum class Bracketing { Left, Right };

/// Left: (((z1 z2) z3) ... zm). Right: z1 (z2 (... zm)). Throws on empty input.
Word bracket(std::span<const Rank> letters, Bracketing direction);

/// Every word of exactly `length` letters over the first `alphabet_size` ranks, ascending.
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t length);

/// An associative word; never empty.
using AWord = std::vector<Rank>;

}  // namespace zinbiel

template <>
struct std::hash<zinbiel::Word> {
  std::size_t operator()(const zinbiel::Word& w) const { return w.hash(); }
};
