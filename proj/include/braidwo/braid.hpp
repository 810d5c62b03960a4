#ifndef BRAIDWO_BRAID_HPP
#define BRAIDWO_BRAID_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "braidwo/bignat.hpp"

namespace braidwo {

enum class Cmp { less, equal, greater };

inline const char* to_string(Cmp c) {
  switch (c) {
    case Cmp::less: return "LESS";
    case Cmp::equal: return "EQUAL";
    case Cmp::greater: return "GREATER";
  }
  return "?";
}

/// A positive braid word: generator indices, each in [1, strands-1].
/// The empty word is the trivial braid.
struct BraidWord {
  std::vector<int> letters;
  int strands = 3;

  BraidWord() = default;
  BraidWord(std::vector<int> ls, int n = 3) : letters(std::move(ls)), strands(n) {}

  bool ok() const {
    for (int g : letters)
      if (g < 1 || g >= strands) return false;
    return true;
  }
  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const BraidWord& o) const { return letters == o.letters; }
  bool operator<(const BraidWord& o) const { return letters < o.letters; }

  BraidWord& append(const BraidWord& o) {
    letters.insert(letters.end(), o.letters.begin(), o.letters.end());
    return *this;
  }

  // Compact digit string when all generators are single digits ("1121"),
  // whitespace-separated integers otherwise.
  std::string str() const;
  static BraidWord parse(const std::string& text, int strands = 3);
};

/// Exponent sequence (e_p,...,e_1) of a 3-braid, stored leading-first.
/// A trailing zero entry is permitted only in the last position.
class ExpSeq {
 public:
  std::vector<BigNat> e;  // e[0] = e_p, e.back() = e_1

  ExpSeq() = default;
  explicit ExpSeq(std::vector<BigNat> entries) : e(std::move(entries)) {}
  ExpSeq(std::initializer_list<long> entries) {
    for (long v : entries) e.emplace_back(v);
  }

  std::size_t breadth() const { return e.size(); }
  bool trivial() const { return e.empty(); }

  // Entry at position r counted from the right, 1-based: at(1) = e_1.
  const BigNat& at(std::size_t r) const { return e[e.size() - r]; }
  BigNat& at(std::size_t r) { return e[e.size() - r]; }

  BigNat word_len() const {
    BigNat s = 0;
    for (const auto& x : e) s += x;
    return s;
  }

  bool is_normal() const;

  bool operator==(const ExpSeq& o) const { return e == o.e; }
  bool operator!=(const ExpSeq& o) const { return !(*this == o); }

  std::string str() const;  // "(e_p,...,e_1)", "()" when trivial
  static ExpSeq parse(const std::string& text);
};

/// Minimal legal block size e_k^min: 0, 1, 2 for k = 1, 2, >=3.
inline int exp_min(std::size_t k) { return k == 1 ? 0 : (k == 2 ? 1 : 2); }

/// Block decomposition of a word over {1,2}: the raw sequence
/// (e_p,...,e_1) with minimal p; e_1 may be 0, interior entries nonzero.
std::vector<BigNat> block_decompose(const BraidWord& w);

/// The unique phi-normal exponent sequence of the braid represented by w.
ExpSeq normalize(const BraidWord& w);

/// The phi-normal word of a normal exponent sequence.
BraidWord word_of(const ExpSeq& e);

/// Full congruence class of w under the relation sigma1 sigma2 sigma1 =
/// sigma2 sigma1 sigma2 (all relations preserve length, so the class is
/// finite). nullopt once the class exceeds `budget` words.
std::optional<std::set<std::vector<int>>> congruence_class(const BraidWord& w,
                                                           std::size_t budget);

/// ShortLex comparison of normal exponent sequences: shorter breadth first,
/// then first difference scanning from the leading end.
Cmp compare(const ExpSeq& a, const ExpSeq& b);

/// Exponent sequence of Delta_3^k: (1, 2^(k-1), 1, k) for k >= 1.
ExpSeq delta3(unsigned long k);

/// Exponent sequence of delta_p: (1, 2^(p-1), 1, 0) for p >= 1; delta_0 = 1.
ExpSeq delta_p(unsigned long p);

/// A word in sigma_i^{+-1} (letters +-1, +-2) representing a^{-1} b in which
/// the highest-index generator that occurs does so only positively.
/// Returns nullopt (inconclusive) when the bounded construction finds none;
/// a returned witness certifies a < b.
std::optional<std::vector<int>> sigma_positive_witness(const ExpSeq& a,
                                                       const ExpSeq& b,
                                                       std::size_t budget = 1 << 20);

/// Render a signed witness word like "1 2 -1".
std::string signed_word_str(const std::vector<int>& w);

}  // namespace braidwo

#endif
