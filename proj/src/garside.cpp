#include "braidwo/garside.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>

namespace braidwo {

namespace {

// Nontrivial simple elements of B_3^+ other than Delta.
enum : int { EMPTY = 0, S1 = 1, S2 = 2, S12 = 3, S21 = 4, DELTA = 5 };

const std::vector<int> kSimpleWord[6] = {{}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}};

int flip_simple(int s) {
  switch (s) {
    case S1: return S2;
    case S2: return S1;
    case S12: return S21;
    case S21: return S12;
    default: return s;
  }
}

struct RW {
  int left;   // EMPTY..S21
  int right;  // S1..S21 or DELTA
};

// Right-weighted rewriting of a product of two simples, built once by brute
// closure over the (tiny) word classes.
const RW& rw_table(int x, int y) {
  static const auto table = [] {
    std::array<std::array<RW, 5>, 5> t{};
    auto ends_with = [](const std::vector<int>& w, const std::vector<int>& s) {
      if (s.size() > w.size()) return false;
      return std::equal(s.rbegin(), s.rend(), w.rbegin());
    };
    auto braid_of = [](const std::vector<int>& w) -> int {
      if (w.empty()) return EMPTY;
      for (int s = S1; s <= DELTA; ++s) {
        auto cls = congruence_class(BraidWord{kSimpleWord[s]}, 64);
        if (cls->count(w)) return s;
      }
      throw std::logic_error("rw table: unexpected quotient");
    };
    for (int x = S1; x <= S21; ++x)
      for (int y = S1; y <= S21; ++y) {
        std::vector<int> prod = kSimpleWord[x];
        prod.insert(prod.end(), kSimpleWord[y].begin(), kSimpleWord[y].end());
        auto cls = congruence_class(BraidWord{prod}, 256);
        // maximal simple right divisor: Delta, then two-letter, then letters
        const int order[5] = {DELTA, S12, S21, S1, S2};
        for (int cand : order) {
          for (const auto& rep : *congruence_class(BraidWord{kSimpleWord[cand]}, 64)) {
            for (const auto& member : *cls) {
              if (ends_with(member, rep)) {
                std::vector<int> head(member.begin(), member.end() - rep.size());
                t[x - 1][y - 1] = RW{braid_of(head), cand};
                goto done;
              }
            }
          }
        }
        throw std::logic_error("rw table: no right divisor");
      done:;
      }
    return t;
  }();
  return table[x - 1][y - 1];
}

// Normalize the factor chain in place, extracting Delta factors into d.
// Pairwise right-weightedness is restored by local rewriting; each Delta
// migrates to the right end, flipping everything it passes.
void fix_chain(std::vector<int>& chain, unsigned long& d) {
  if (chain.size() < 2) return;
  long p = static_cast<long>(chain.size()) - 2;
  unsigned long guard = 64 + chain.size() * chain.size() * 8;
  while (p >= 0) {
    if (guard-- == 0) throw std::logic_error("fix_chain: no fixpoint");
    if (p > static_cast<long>(chain.size()) - 2) {
      p = static_cast<long>(chain.size()) - 2;
      continue;
    }
    const RW& r = rw_table(chain[p], chain[p + 1]);
    if (r.right == DELTA) {
      for (std::size_t j = p + 2; j < chain.size(); ++j) chain[j] = flip_simple(chain[j]);
      ++d;
      if (r.left == EMPTY) {
        chain.erase(chain.begin() + p, chain.begin() + p + 2);
      } else {
        chain[p] = r.left;
        chain.erase(chain.begin() + p + 1);
      }
      p = std::min(p + 1, static_cast<long>(chain.size()) - 2);
    } else if (r.left == EMPTY) {
      chain[p] = r.right;
      chain.erase(chain.begin() + p + 1);
      p = std::min(p + 1, static_cast<long>(chain.size()) - 2);
    } else if (r.left != chain[p] || r.right != chain[p + 1]) {
      chain[p] = r.left;
      chain[p + 1] = r.right;
      p = std::min(p + 1, static_cast<long>(chain.size()) - 2);
    } else {
      --p;
    }
  }
}

std::vector<BigNat> blocks_of_chain(const std::vector<int>& chain) {
  BraidWord w;
  for (int s : chain)
    for (int g : kSimpleWord[s]) w.letters.push_back(g);
  return block_decompose(w);
}

}  // namespace

GreedyNF greedy_of_word(const BraidWord& w) {
  std::vector<int> chain;
  unsigned long d = 0;
  for (int g : w.letters) {
    if (g != 1 && g != 2) throw std::invalid_argument("greedy_of_word: 3-strand words only");
    chain.push_back((d % 2 == 1) ? 3 - g : g);
    fix_chain(chain, d);
  }
  return GreedyNF{BigNat(d), blocks_of_chain(chain)};
}

ExpSeq exp_from_greedy(const GreedyNF& g) {
  const auto& blocks = g.chain_blocks;
  if (sgn(g.d) == 0) return ExpSeq{blocks};
  if (!g.d.fits_ulong_p()) throw std::overflow_error("exp_from_greedy: d too large");
  unsigned long d = g.d.get_ui();

  auto assemble = [&](std::vector<BigNat> head, const BigNat& tail) {
    for (unsigned long i = 0; i + 1 < d; ++i) head.emplace_back(2);
    head.emplace_back(1);
    head.push_back(tail);
    return ExpSeq{std::move(head)};
  };
  if (blocks.empty()) {
    std::vector<BigNat> h{1};
    return assemble(std::move(h), BigNat(d));
  }
  BigNat d1 = blocks.back();
  std::vector<BigNat> head(blocks.begin(), blocks.end() - 1);
  if (d % 2 == 0) {
    if (head.empty())
      head.emplace_back(1);
    else
      head.back() += 1;
    return assemble(std::move(head), d1 + d);
  }
  if (sgn(d1) > 0) {
    head.push_back(d1 + 1);
    return assemble(std::move(head), BigNat(d));
  }
  // d odd, chain word ends with a sigma_2 block
  BigNat d2 = head.back();
  head.pop_back();
  if (head.empty())
    head.emplace_back(1);
  else
    head.back() += 1;
  return assemble(std::move(head), d2 + d);
}

long d_of(const ExpSeq& b) {
  std::size_t p = b.breadth();
  if (p < 2 || b.at(2) != 1) return 0;
  long twos = 0;
  for (std::size_t k = 3; k <= p && b.at(k) == 2; ++k) ++twos;
  long d = std::min<long>(twos + 1, static_cast<long>(p) - 2);
  if (b.at(1) < d) d = static_cast<long>(b.at(1).get_si());
  return d < 0 ? 0 : d;
}

GreedyNF greedy_nf(const ExpSeq& b) {
  if (!b.is_normal()) throw std::invalid_argument("greedy_nf: input not normal");
  long d = d_of(b);
  if (d == 0) return GreedyNF{BigNat(0), b.e};
  std::size_t p = b.breadth();
  std::vector<BigNat> above(b.e.begin(), b.e.begin() + (p - d - 1));  // e_p..e_{d+2}
  BigNat e1 = b.at(1);
  std::vector<BigNat> blocks;
  if (d % 2 == 0) {
    BigNat d1 = e1 - d;
    blocks = above;
    blocks.back() -= 1;
    if (sgn(blocks.back()) == 0) blocks.pop_back();
    if (!blocks.empty() || sgn(d1) > 0) blocks.push_back(d1);
  } else if (e1 == d) {
    blocks = above;
    blocks.back() -= 1;
    if (sgn(blocks.back()) == 0) blocks.pop_back();
  } else {
    BigNat s = e1 - d;
    blocks = above;
    blocks.back() -= 1;
    if (sgn(blocks.back()) == 0) blocks.pop_back();
    blocks.push_back(s);
    blocks.emplace_back(0);
  }
  return GreedyNF{BigNat(d), std::move(blocks)};
}

BigNat GreedyNF::factor_count() const {
  if (chain_blocks.empty()) return 0;
  BigNat len = 0;
  for (const auto& x : chain_blocks) len += x;
  std::size_t nb = chain_blocks.size();
  if (sgn(chain_blocks.back()) == 0) --nb;
  if (nb == 0) return 0;
  return len - static_cast<unsigned long>(nb - 1);
}

BigNat GreedyNF::complexity() const { return factor_count() + d; }

std::vector<GreedyFactor> greedy_factors(const GreedyNF& g) {
  std::vector<GreedyFactor> out;
  const auto& blocks = g.chain_blocks;
  std::size_t q = blocks.size();
  std::size_t nb = q;
  if (q && sgn(blocks.back()) == 0) --nb;
  if (nb == 0) return out;
  auto letter = [&](std::size_t i) {  // generator of block at index i
    std::size_t pos = q - i;
    return pos % 2 == 1 ? 1 : 2;
  };
  for (std::size_t i = 0; i < nb; ++i) {
    if (!blocks[i].fits_ulong_p()) throw std::overflow_error("greedy_factors: chain too long");
    unsigned long sz = blocks[i].get_ui();
    unsigned long singles = sz - (i > 0 ? 1 : 0) - (i + 1 < nb ? 1 : 0);
    for (unsigned long j = 0; j < singles; ++j) out.push_back({{letter(i), 0}});
    if (i + 1 < nb) out.push_back({{letter(i), letter(i + 1)}});
  }
  return out;
}

BigNat complexity(const ExpSeq& b) { return greedy_nf(b).complexity(); }

int bridge_constant(const ExpSeq& b) {
  if (b.trivial()) throw std::invalid_argument("bridge_constant: trivial braid");
  GreedyNF g = greedy_nf(b);
  BigNat c = g.complexity() - b.word_len() + b.breadth() + g.d;
  if (!c.fits_slong_p()) throw std::overflow_error("bridge_constant");
  return static_cast<int>(c.get_si());
}

BraidWord delta_word(unsigned long ell) {
  BraidWord w;
  for (unsigned long i = 0; i < ell; ++i) {
    w.letters.push_back(1);
    w.letters.push_back(2);
    w.letters.push_back(1);
  }
  return w;
}

bool divides_word(const BraidWord& u, const BraidWord& v) {
  if (u.size() > v.size()) return false;
  // right-reverse u^{-1} v until no (negative, positive) adjacency remains
  std::list<int> w;
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) w.push_back(-*it);
  for (int g : v.letters) w.push_back(g);
  unsigned long guard = 1ul << 26;
  auto it = w.begin();
  while (it != w.end()) {
    auto next = std::next(it);
    if (next == w.end()) break;
    if (*it < 0 && *next > 0) {
      if (guard-- == 0) throw std::runtime_error("divides_word: reversing budget exceeded");
      int i = -*it, j = *next;
      if (i == j) {
        auto after = std::next(next);
        w.erase(it, after);
        it = after == w.begin() ? after : std::prev(after);
      } else {
        // sigma_i^{-1} sigma_j -> sigma_j sigma_i sigma_j^{-1} sigma_i^{-1}
        *it = j;
        *next = i;
        auto after = std::next(next);
        w.insert(after, -j);
        w.insert(after, -i);
        // result: ..., j, i, -j, -i, ...
      }
      if (it != w.begin()) --it;
    } else {
      ++it;
    }
  }
  for (int g : w)
    if (g < 0) return false;
  return true;
}

bool divides_delta_pow(const ExpSeq& b, unsigned long ell) {
  if (b.word_len() > 3 * BigNat(ell)) return false;
  return divides_word(word_of(b), delta_word(ell));
}

unsigned long complexity_by_search(const ExpSeq& b) {
  for (unsigned long ell = 0;; ++ell) {
    if (divides_delta_pow(b, ell)) return ell;
  }
}

}  // namespace braidwo
