#include "vincular/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace vincular {

namespace {

// true iff (a1, a2, a3) and (b1, b2, b3) are order-isomorphic (all distinct)
bool same_order3(int a1, int a2, int a3, int b1, int b2, int b3) {
  return (a1 < a2) == (b1 < b2) && (a2 < a3) == (b2 < b3) &&
         (a1 < a3) == (b1 < b3);
}

// occurrences of the type-(1,2) pattern x-yz: subwords a_i a_j a_{j+1} with
// i < j and proj(a_i a_j a_{j+1}) = xyz
std::int64_t count_type_1_2(int x, int y, int z, const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::int64_t total = 0;
  for (int j = 1; j + 1 < n; ++j) {
    if ((p[j] < p[j + 1]) != (y < z)) continue;
    for (int i = 0; i < j; ++i)
      if (same_order3(p[i], p[j], p[j + 1], x, y, z)) ++total;
  }
  return total;
}

}  // namespace

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
  const int n = static_cast<int>(letters_.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int a : letters_) {
    if (a < 1 || a > n)
      throw std::invalid_argument("permutation: letter " + std::to_string(a) +
                                  " outside 1.." + std::to_string(n));
    if (seen[static_cast<size_t>(a)])
      throw std::invalid_argument("permutation: letter " + std::to_string(a) +
                                  " repeated");
    seen[static_cast<size_t>(a)] = 1;
  }
}

Permutation Permutation::parse(std::string_view text) {
  const bool has_separator =
      std::any_of(text.begin(), text.end(), [](unsigned char c) {
        return std::isspace(c) || c == ',';
      });
  std::vector<int> letters;
  if (!has_separator) {
    // contiguous digit string, one letter per digit
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument(
            std::string("permutation: unexpected character '") + c + "'");
      letters.push_back(c - '0');
    }
  } else {
    std::string normalized(text);
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream in(normalized);
    int value = 0;
    while (in >> value) letters.push_back(value);
    if (!in.eof())
      throw std::invalid_argument("permutation: malformed integer list");
  }
  return Permutation(std::move(letters));
}

Permutation Permutation::reversed() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  return Permutation(std::move(out));
}

Permutation Permutation::complemented() const {
  const int n = size();
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int a : letters_) out.push_back(n + 1 - a);
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool contiguous = size() <= 9;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (!contiguous && i > 0) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

GeneralizedPattern::GeneralizedPattern(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty())
    throw std::invalid_argument("pattern: no blocks");
  std::vector<int> flat;
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty())
      throw std::invalid_argument("pattern: block " + std::to_string(b + 1) +
                                  " is empty");
    flat.insert(flat.end(), blocks_[b].begin(), blocks_[b].end());
  }
  const int k = static_cast<int>(flat.size());
  std::vector<char> seen(static_cast<size_t>(k) + 1, 0);
  for (size_t b = 0, pos = 0; b < blocks_.size(); ++b)
    for (int a : blocks_[b]) {
      ++pos;
      if (a < 1 || a > k || seen[static_cast<size_t>(a)])
        throw std::invalid_argument(
            "pattern: block " + std::to_string(b + 1) +
            (a < 1 || a > k ? " has letter outside 1..k" : " repeats a letter"));
      seen[static_cast<size_t>(a)] = 1;
    }
}

GeneralizedPattern GeneralizedPattern::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks(1);
  size_t block_no = 1;
  for (char c : text) {
    if (c == '-') {
      if (blocks.back().empty())
        throw std::invalid_argument("pattern: block " +
                                    std::to_string(block_no) + " is empty");
      blocks.emplace_back();
      ++block_no;
    } else if (c >= '1' && c <= '9') {
      blocks.back().push_back(c - '0');
    } else {
      throw std::invalid_argument(
          std::string("pattern: unexpected character '") + c + "' in block " +
          std::to_string(block_no));
    }
  }
  if (blocks.back().empty())
    throw std::invalid_argument("pattern: block " + std::to_string(block_no) +
                                " is empty");
  return GeneralizedPattern(std::move(blocks));
}

int GeneralizedPattern::letter_count() const {
  int k = 0;
  for (const auto& b : blocks_) k += static_cast<int>(b.size());
  return k;
}

std::vector<int> GeneralizedPattern::flattened() const {
  std::vector<int> flat;
  for (const auto& b : blocks_) flat.insert(flat.end(), b.begin(), b.end());
  return flat;
}

std::vector<int> GeneralizedPattern::type() const {
  std::vector<int> sizes;
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  return sizes;
}

std::string GeneralizedPattern::to_string() const {
  std::string out;
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) out += '-';
    for (int a : blocks_[b]) out += static_cast<char>('0' + a);
  }
  return out;
}

Permutation proj(const std::vector<int>& word) {
  const int k = static_cast<int>(word.size());
  std::vector<int> out(word.size());
  for (int i = 0; i < k; ++i) {
    int rank = 0;
    for (int j = 0; j < k; ++j) {
      if (i != j && word[j] == word[i])
        throw std::invalid_argument("proj: repeated letter " +
                                    std::to_string(word[i]));
      if (word[j] <= word[i]) ++rank;
    }
    out[static_cast<size_t>(i)] = rank;
  }
  return Permutation(std::move(out));
}

std::int64_t count_occurrences(const GeneralizedPattern& pattern,
                               const Permutation& perm) {
  const auto& blocks = pattern.blocks();
  if (blocks.size() == 2 && blocks[0].size() == 1 && blocks[1].size() == 2) {
    return count_type_1_2(blocks[0][0], blocks[1][0], blocks[1][1],
                          perm.letters());
  }
  if (blocks.size() == 2 && blocks[0].size() == 2 && blocks[1].size() == 1) {
    // (xy-z) pi = (z-yx) reverse(pi)
    const auto reversed = perm.reversed();
    return count_type_1_2(blocks[1][0], blocks[0][1], blocks[0][0],
                          reversed.letters());
  }
  return count_occurrences_generic(pattern, perm);
}

std::int64_t count_occurrences_generic(const GeneralizedPattern& pattern,
                                       const Permutation& perm) {
  const auto& blocks = pattern.blocks();
  const auto flat = pattern.flattened();
  const auto& p = perm.letters();
  const int n = perm.size();
  const int k = pattern.letter_count();
  if (k > n) return 0;

  std::vector<int> chosen;
  chosen.reserve(static_cast<size_t>(k));
  std::int64_t total = 0;

  // choose a start position for each block; a block occupies consecutive
  // positions, and successive blocks may not overlap or reorder
  auto recurse = [&](auto&& self, size_t block, int min_start) -> void {
    if (block == blocks.size()) {
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if ((chosen[static_cast<size_t>(i)] < chosen[static_cast<size_t>(j)]) !=
              (flat[static_cast<size_t>(i)] < flat[static_cast<size_t>(j)]))
            return;
      ++total;
      return;
    }
    const int len = static_cast<int>(blocks[block].size());
    for (int s = min_start; s + len <= n; ++s) {
      for (int t = 0; t < len; ++t)
        chosen.push_back(p[static_cast<size_t>(s + t)]);
      self(self, block + 1, s + len);
      chosen.resize(chosen.size() - static_cast<size_t>(len));
    }
  };
  recurse(recurse, 0, 0);
  return total;
}

}  // namespace vincular
