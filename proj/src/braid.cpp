#include "braidwo/braid.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "braidwo/garside.hpp"

namespace braidwo {

std::string BraidWord::str() const {
  if (letters.empty()) return "1";
  bool digits = std::all_of(letters.begin(), letters.end(),
                            [](int g) { return g >= 1 && g <= 9; });
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (digits)
      out += char('0' + letters[i]);
    else {
      if (i) out += ' ';
      out += std::to_string(letters[i]);
    }
  }
  return out;
}

BraidWord BraidWord::parse(const std::string& text, int strands) {
  BraidWord w;
  w.strands = strands;
  if (text == "1" && strands == 3) {
    // lone "1" over {1,2} is ambiguous with sigma_1; treat as sigma_1
    w.letters = {1};
    return w;
  }
  bool spaced = text.find_first_of(" \t,") != std::string::npos;
  if (spaced) {
    std::istringstream in(text);
    int g;
    while (in >> g) w.letters.push_back(g);
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad word: " + text);
      w.letters.push_back(c - '0');
    }
  }
  if (!w.ok()) throw std::invalid_argument("letter out of range in: " + text);
  return w;
}

bool ExpSeq::is_normal() const {
  if (e.empty()) return true;
  if (sgn(e.front()) <= 0) return false;
  std::size_t p = breadth();
  for (std::size_t k = 1; k < p; ++k)
    if (at(k) < exp_min(k)) return false;
  for (const auto& x : e)
    if (sgn(x) < 0) return false;
  return true;
}

std::string ExpSeq::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += e[i].get_str();
  }
  return out + ")";
}

ExpSeq ExpSeq::parse(const std::string& text) {
  std::string t = text;
  if (!t.empty() && t.front() == '(') t = t.substr(1);
  if (!t.empty() && t.back() == ')') t.pop_back();
  ExpSeq s;
  std::string cur;
  std::istringstream in(t);
  while (std::getline(in, cur, ',')) {
    cur.erase(std::remove_if(cur.begin(), cur.end(), ::isspace), cur.end());
    if (cur.empty()) continue;
    s.e.emplace_back(cur);
  }
  return s;
}

std::vector<BigNat> block_decompose(const BraidWord& w) {
  for (int g : w.letters)
    if (g != 1 && g != 2) throw std::invalid_argument("block_decompose: 3-strand words only");
  std::vector<BigNat> rev;  // e_1, e_2, ... built from the right
  long i = static_cast<long>(w.letters.size()) - 1;
  int want = 1;  // block k uses generator [k]: 1 for odd k, 2 for even k
  while (i >= 0) {
    long run = 0;
    while (i >= 0 && w.letters[i] == want) {
      ++run;
      --i;
    }
    rev.emplace_back(run);
    want = 3 - want;
  }
  while (!rev.empty() && sgn(rev.back()) == 0) rev.pop_back();
  return {rev.rbegin(), rev.rend()};
}

ExpSeq normalize(const BraidWord& w) { return exp_from_greedy(greedy_of_word(w)); }

BraidWord word_of(const ExpSeq& s) {
  BraidWord w;
  std::size_t p = s.breadth();
  for (std::size_t i = 0; i < p; ++i) {
    std::size_t k = p - i;  // position of entry i
    int gen = (k % 2 == 1) ? 1 : 2;
    if (!s.e[i].fits_ulong_p()) throw std::overflow_error("word_of: entry too large");
    unsigned long c = s.e[i].get_ui();
    w.letters.insert(w.letters.end(), c, gen);
  }
  return w;
}

std::optional<std::set<std::vector<int>>> congruence_class(const BraidWord& w,
                                                           std::size_t budget) {
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  seen.insert(w.letters);
  queue.push_back(w.letters);
  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 2 < cur.size(); ++i) {
      int a = cur[i], b = cur[i + 1], c = cur[i + 2];
      if (a == c && a != b && (a == 1 || a == 2) && (b == 1 || b == 2)) {
        std::vector<int> next = cur;
        next[i] = b;
        next[i + 1] = a;
        next[i + 2] = b;
        if (seen.insert(next).second) {
          if (seen.size() > budget) return std::nullopt;
          queue.push_back(next);
        }
      }
    }
  }
  return seen;
}

Cmp compare(const ExpSeq& a, const ExpSeq& b) {
  if (a.breadth() != b.breadth())
    return a.breadth() < b.breadth() ? Cmp::less : Cmp::greater;
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    int c = cmp(a.e[i], b.e[i]);
    if (c != 0) return c < 0 ? Cmp::less : Cmp::greater;
  }
  return Cmp::equal;
}

ExpSeq delta3(unsigned long k) {
  if (k == 0) return ExpSeq{};
  ExpSeq s;
  s.e.emplace_back(1);
  for (unsigned long i = 0; i + 1 < k; ++i) s.e.emplace_back(2);
  s.e.emplace_back(1);
  s.e.emplace_back(k);
  return s;
}

ExpSeq delta_p(unsigned long p) {
  if (p == 0) return ExpSeq{};
  ExpSeq s;
  s.e.emplace_back(1);
  for (unsigned long i = 0; i + 1 < p; ++i) s.e.emplace_back(2);
  s.e.emplace_back(1);
  s.e.emplace_back(0);
  return s;
}

std::string signed_word_str(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

namespace {

void push_power(std::vector<int>& out, int gen, long exp) {
  int letter = exp >= 0 ? gen : -gen;
  for (long i = 0; i < std::labs(exp); ++i) out.push_back(letter);
}

long small(const BigNat& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("witness: exponent too large");
  return x.get_si();
}

void free_reduce(std::vector<int>& w) {
  std::vector<int> out;
  for (int g : w) {
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  w.swap(out);
}

// Word for a^{-1} delta_p, sigma_2-positive, following the push-through
// rewriting of the delta_p boundary argument; requires breadth(a) <= p+1.
std::vector<int> word_to_delta(const ExpSeq& a, unsigned long p) {
  std::vector<long> e(p + 2, 0);  // e[k] for k = 1..p+1
  for (std::size_t r = 1; r <= a.breadth(); ++r) e[r] = small(a.at(r));
  std::vector<int> out;
  if (p == 0) {
    push_power(out, 1, -e[1]);
    return out;
  }
  push_power(out, 1, 1 - e[1]);
  out.push_back(2);
  for (unsigned long k = 2; k <= p; ++k) {
    push_power(out, 1, 2 - e[k]);
    out.push_back(2);
  }
  push_power(out, 1, 1 - e[p + 1]);
  push_power(out, 1, -static_cast<long>(p));
  return out;
}

// Word for delta_p^{-1} b, with no sigma_2^{-1}; requires breadth(b) >= p+2.
std::vector<int> word_from_delta(unsigned long p, const ExpSeq& b) {
  std::size_t q = b.breadth();
  std::vector<int> out;
  push_power(out, 1, static_cast<long>(p));
  // flipped word of the blocks above position p+2
  for (std::size_t i = 0; i < q - (p + 2); ++i) {
    std::size_t k = q - i;                 // position of entry i
    int gen = (k % 2 == 1) ? 2 : 1;        // flipped generator
    push_power(out, gen, small(b.e[i]));
  }
  push_power(out, 2, small(b.at(p + 2)) - 1);
  for (std::size_t k = p + 1; k >= 3; --k) {
    out.push_back(-1);
    push_power(out, 2, small(b.at(k)) - 2);
  }
  if (p + 2 >= 3) {
    out.push_back(-1);
    push_power(out, 2, small(b.at(2)) - 1);
  }
  push_power(out, 1, small(b.at(1)));
  return out;
}

}  // namespace

std::optional<std::vector<int>> sigma_positive_witness(const ExpSeq& a,
                                                       const ExpSeq& b,
                                                       std::size_t budget) {
  if (a == b) throw std::invalid_argument("sigma_positive_witness: a = b");
  if (compare(a, b) != Cmp::less) return std::nullopt;  // inconclusive by design
  std::vector<int> w;
  if (a.trivial()) {
    for (int g : word_of(b).letters) w.push_back(g);
    return w;
  }
  if (a.breadth() == b.breadth()) {
    // strip the common leading entries; the quotient is untouched
    std::size_t i = 0;
    while (a.e[i] == b.e[i]) ++i;
    ExpSeq a1, b1;
    // a1 keeps entries strictly below the first difference; b1 keeps the
    // difference at its leading entry
    a1.e.assign(a.e.begin() + i + 1, a.e.end());
    b1.e.assign(b.e.begin() + i, b.e.end());
    b1.e[0] = b.e[i] - a.e[i];
    std::size_t r = b1.breadth();  // breadth(a1) = r - 1
    unsigned long p = r >= 2 ? static_cast<unsigned long>(r - 2) : 0;
    w = word_to_delta(a1, p);
    ExpSeq dp = delta_p(p);
    if (b1 != dp) {
      auto tail = word_from_delta(p, b1);
      w.insert(w.end(), tail.begin(), tail.end());
    }
  } else {
    unsigned long p = static_cast<unsigned long>(b.breadth() - 2);
    w = word_to_delta(a, p);
    ExpSeq dp = delta_p(p);
    if (b != dp) {
      auto tail = word_from_delta(p, b);
      w.insert(w.end(), tail.begin(), tail.end());
    }
  }
  free_reduce(w);
  if (w.size() > budget) return std::nullopt;
  // one-sidedness: the construction must not have produced sigma_2^{-1}
  for (int g : w)
    if (g == -2) return std::nullopt;
  return w;
}

}  // namespace braidwo
