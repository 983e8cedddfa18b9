#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vincular {

// A permutation of [n], stored as its word a_1 a_2 ... a_n (1-based letters).
// The empty permutation (n = 0) is allowed.
class Permutation {
 public:
  Permutation() = default;
  // Validates that letters is a bijection on [n]; throws std::invalid_argument.
  explicit Permutation(std::vector<int> letters);

  // Accepts either a contiguous digit string ("491273865", letters 1..9 only)
  // or whitespace/comma-separated integers ("4 9 1" / "4,9,1").
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }
  // letter at 1-based position
  int at(int pos) const { return letters_.at(static_cast<size_t>(pos) - 1); }

  Permutation reversed() const;
  // each letter a becomes n+1-a
  Permutation complemented() const;

  std::string to_string() const;  // "4 9 1" style for n > 9, contiguous otherwise

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> letters_;
};

// A generalized (vincular) pattern: blocks of letters separated by dashes in
// the text form. Letters within a block must sit in adjacent positions of the
// permutation; dashes allow arbitrary gaps. The concatenated letters form a
// permutation of [k].
class GeneralizedPattern {
 public:
  // Validates block shape; throws std::invalid_argument.
  explicit GeneralizedPattern(std::vector<std::vector<int>> blocks);

  // Parses "12-3", "2-13", "1-2-3", ... Errors name the offending block.
  static GeneralizedPattern parse(std::string_view text);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int letter_count() const;
  std::vector<int> flattened() const;
  // block sizes, e.g. "12-3" -> {2, 1}
  std::vector<int> type() const;
  std::string to_string() const;

  bool operator==(const GeneralizedPattern&) const = default;

 private:
  std::vector<std::vector<int>> blocks_;
};

// Order-isomorphic projection of a word with distinct letters onto [k]:
// proj(word)(i) = |{j : word_j <= word_i}|. Throws on repeated letters.
Permutation proj(const std::vector<int>& word);

// Number of occurrences of pattern in perm. An occurrence picks one letter of
// perm per pattern position, order-isomorphic to the pattern, with letters of
// the same block adjacent in perm. Dispatches to an O(n^2) scan for the
// one-dash length-3 types (the (2,1) type via the reverse identity
// (xy-z) pi = (z-yx) reverse(pi)); other shapes use the generic matcher.
// The count fits comfortably in 64 bits: it is at most C(n, k).
std::int64_t count_occurrences(const GeneralizedPattern& pattern,
                               const Permutation& perm);

// Backtracking reference matcher for any block structure. Used as the oracle
// the specialized counters are tested against, and for patterns with more
// than one dash.
std::int64_t count_occurrences_generic(const GeneralizedPattern& pattern,
                                       const Permutation& perm);

}  // namespace vincular
