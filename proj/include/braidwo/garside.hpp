#ifndef BRAIDWO_GARSIDE_HPP
#define BRAIDWO_GARSIDE_HPP

#include <array>
#include <vector>

#include "braidwo/braid.hpp"

namespace braidwo {

/// Right greedy (Garside) decomposition of a 3-braid:
///   b = w_r ... w_1 (sigma1 sigma2 sigma1)^d,
/// each w_k in {sigma1, sigma2, sigma1 sigma2, sigma2 sigma1}, the last
/// letter of w_{k+1} equal to the first letter of w_k, and d maximal.
/// The factor chain is kept in grouped block form (the block decomposition
/// of the word w_r...w_1); the factor count r follows from it.
struct GreedyNF {
  BigNat d;
  std::vector<BigNat> chain_blocks;  // leading-first; last entry may be 0

  BigNat factor_count() const;  // r
  BigNat complexity() const;    // r + d
};

/// Two-letter greedy factors, materialized for small chains.
struct GreedyFactor {
  std::array<int, 2> letters;  // second entry 0 for one-letter factors
  int first() const { return letters[0]; }
  int last() const { return letters[1] ? letters[1] : letters[0]; }
  bool operator==(const GreedyFactor& o) const { return letters == o.letters; }
};

/// Greedy normal form computed from a word by the local sliding automaton.
GreedyNF greedy_of_word(const BraidWord& w);

/// Greedy normal form recovered arithmetically from a normal sequence.
GreedyNF greedy_nf(const ExpSeq& b);

/// The normal exponent sequence of chain * Delta^d (the Mairesse bridge).
ExpSeq exp_from_greedy(const GreedyNF& g);

/// Explicit factor list w_r ... w_1 (throws if r does not fit memory).
std::vector<GreedyFactor> greedy_factors(const GreedyNF& g);

/// Garside complexity ||b||: least l such that b left-divides Delta_3^l.
BigNat complexity(const ExpSeq& b);

/// Maximal d with Delta_3^d a divisor of b, read off the exponent-sequence
/// suffix pattern (e_1 >= d, e_2 = 1, e_3 = ... = e_{d+1} = 2, e_{d+2} >= 1).
long d_of(const ExpSeq& b);

/// C = ||b|| - |b| + p + d(b); lands in {0,1,2} for nontrivial b.
int bridge_constant(const ExpSeq& b);

/// Word-level left-divisibility u | v in B_3^+, decided by subword
/// reversing.  Independent of the normal-form machinery.
bool divides_word(const BraidWord& u, const BraidWord& v);

/// True iff b left-divides Delta_3^l.  Word-search oracle.
bool divides_delta_pow(const ExpSeq& b, unsigned long ell);

/// min { l : b | Delta_3^l } found by upward word search.
unsigned long complexity_by_search(const ExpSeq& b);

/// Literal word (sigma1 sigma2 sigma1)^l.
BraidWord delta_word(unsigned long ell);

}  // namespace braidwo

#endif
