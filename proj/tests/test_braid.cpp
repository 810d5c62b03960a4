#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "braidwo/braid.hpp"
#include "braidwo/burau.hpp"
#include "braidwo/garside.hpp"

using namespace braidwo;

namespace {

// all positive 3-strand words of length n
std::vector<BraidWord> all_words(std::size_t n) {
  std::vector<BraidWord> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    BraidWord w;
    for (std::size_t i = 0; i < n; ++i) w.letters.push_back((mask >> i & 1) ? 2 : 1);
    out.push_back(std::move(w));
  }
  return out;
}

// one normal word per braid of word length <= n, via class closure (oracle)
std::vector<ExpSeq> braids_up_to(std::size_t n) {
  std::set<std::vector<BigNat>> seen;
  std::vector<ExpSeq> out;
  out.push_back(ExpSeq{});
  seen.insert({});
  for (std::size_t len = 1; len <= n; ++len)
    for (const auto& w : all_words(len)) {
      ExpSeq s = normalize(w);
      if (seen.insert(s.e).second) out.push_back(s);
    }
  return out;
}

std::vector<int> as_signed(const BraidWord& w) { return w.letters; }

}  // namespace

TEST_CASE("block decomposition") {
  CHECK(block_decompose(BraidWord{{2, 1, 2}}) == std::vector<BigNat>{1, 1, 1, 0});
  CHECK(block_decompose(BraidWord{}).empty());
  CHECK(block_decompose(BraidWord{{1, 1, 2, 2, 1, 1}}) == std::vector<BigNat>{2, 2, 2});
  // reconstruction
  BraidWord w{{1, 1, 2, 2, 1, 1}};
  CHECK(word_of(ExpSeq{block_decompose(w)}) == w);
}

TEST_CASE("normalize: pinned values") {
  CHECK(normalize(BraidWord{{2, 1, 2}}) == ExpSeq{1, 1, 1});
  CHECK(normalize(BraidWord{{1, 2, 1, 1, 2, 1}}) == ExpSeq{1, 2, 1, 2});
  CHECK(normalize(BraidWord{{1, 1, 1, 1, 1}}) == ExpSeq{5});
  CHECK(normalize(BraidWord{}) == ExpSeq{});
  // delta_3^k sequence shape for a few k
  for (unsigned long k = 1; k <= 4; ++k) {
    BraidWord w;
    for (unsigned long i = 0; i < k; ++i) w.append(BraidWord{{1, 2, 1}});
    CHECK(normalize(w) == delta3(k));
  }
}

TEST_CASE("congruence classes") {
  auto c1 = congruence_class(BraidWord{{2, 1, 2}}, 100);
  REQUIRE(c1.has_value());
  CHECK(c1->size() == 2);
  CHECK(c1->count({1, 2, 1}) == 1);

  auto c2 = congruence_class(BraidWord{{1}}, 100);
  CHECK(c2->size() == 1);

  auto c3 = congruence_class(BraidWord{{1, 2, 1, 1, 2, 1}}, 100);
  REQUIRE(c3.has_value());
  CHECK(c3->size() == 5);
  CHECK(c3->count({2, 1, 2, 2, 1, 2}) == 1);

  // explicit overflow signal
  CHECK_FALSE(congruence_class(BraidWord{{1, 2, 1, 1, 2, 1}}, 3).has_value());
}

TEST_CASE("uniqueness of the normal word (oracle, |w| <= 8 here)") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& w : all_words(n)) {
      auto cls = congruence_class(w, 1 << 14);
      REQUIRE(cls.has_value());
      ExpSeq nf = normalize(w);
      BraidWord nfw = word_of(nf);
      std::size_t normal_count = 0;
      for (const auto& member : *cls) {
        auto blocks = block_decompose(BraidWord{member});
        if (ExpSeq{blocks}.is_normal()) ++normal_count;
        // length conservation inside the class
        CHECK(member.size() == w.size());
      }
      CHECK(normal_count == 1);
      CHECK(cls->count(nfw.letters) == 1);
    }
}

TEST_CASE("compare: pinned values and laws") {
  ExpSeq s2 = normalize(BraidWord{{2}});
  ExpSeq s12 = normalize(BraidWord{{1, 2}});
  CHECK(compare(s2, s12) == Cmp::less);
  CHECK(compare(s12, s12) == Cmp::equal);

  // delta_p boundary dichotomy
  auto pop = braids_up_to(9);
  for (unsigned long p = 1; p <= 5; ++p) {
    ExpSeq dp = delta_p(p);
    for (const auto& b : pop) {
      if (b.breadth() <= p + 1)
        CHECK(compare(b, dp) == Cmp::less);
      else
        CHECK(compare(dp, b) != Cmp::greater);
    }
  }
}

TEST_CASE("delta3 / delta_p") {
  CHECK(delta3(1) == ExpSeq{1, 1, 1});
  CHECK(delta3(0) == ExpSeq{});
  CHECK(delta_p(2) == ExpSeq{1, 2, 1, 0});
  CHECK(delta_p(0) == ExpSeq{});
  // Delta_3^p = delta_p sigma_1^p
  for (unsigned long p = 1; p <= 5; ++p) {
    BraidWord w = word_of(delta_p(p));
    for (unsigned long i = 0; i < p; ++i) w.letters.push_back(1);
    CHECK(normalize(w) == delta3(p));
  }
}

TEST_CASE("word_of: pinned values and round trip") {
  CHECK(word_of(ExpSeq{1, 1, 1}) == BraidWord{{1, 2, 1}});
  CHECK(word_of(ExpSeq{}) == BraidWord{});
  CHECK(word_of(ExpSeq{2, 3, 1, 0}) == BraidWord{{2, 2, 1, 1, 1, 2}});
  for (const auto& b : braids_up_to(8)) CHECK(normalize(word_of(b)) == b);
}

TEST_CASE("burau representation sanity") {
  CHECK(braid_eq_b3({1, 2, 1}, {2, 1, 2}));
  CHECK_FALSE(braid_eq_b3({1}, {2}));
  CHECK(braid_eq_b3({1, -1}, {}));
  CHECK(braid_eq_b3({2, -2}, {}));
  // burau equality agrees with class membership on positive words
  for (const auto& w : all_words(6)) {
    auto cls = congruence_class(w, 1 << 12);
    for (const auto& m : *cls) CHECK(braid_eq_b3(w.letters, m));
  }
}

TEST_CASE("sigma-positive witness: pinned values") {
  ExpSeq s2 = normalize(BraidWord{{2}});
  ExpSeq s12 = normalize(BraidWord{{1, 2}});
  auto w = sigma_positive_witness(s2, s12);
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<int>{1, 2, -1});

  ExpSeq s1 = normalize(BraidWord{{1}});
  ExpSeq s11 = normalize(BraidWord{{1, 1}});
  auto w2 = sigma_positive_witness(s1, s11);
  REQUIRE(w2.has_value());
  CHECK(*w2 == std::vector<int>{1});

  // above delta_1: breadth-3 braid
  ExpSeq d1 = delta_p(1);
  ExpSeq b = normalize(BraidWord{{1, 2, 2, 1}});
  REQUIRE(compare(d1, b) == Cmp::less);
  auto w3 = sigma_positive_witness(d1, b);
  REQUIRE(w3.has_value());
}

TEST_CASE("witness one-sidedness (exhaustive |w| <= 7)") {
  auto pop = braids_up_to(7);
  for (std::size_t i = 0; i < pop.size(); ++i)
    for (std::size_t j = 0; j < pop.size(); ++j) {
      if (i == j) continue;
      const ExpSeq &a = pop[i], &b = pop[j];
      auto w = sigma_positive_witness(a, b);
      if (compare(a, b) == Cmp::less) {
        REQUIRE(w.has_value());
        // no sigma_2^{-1}; sigma_2 or, failing that, only positive sigma_1
        bool has_neg2 = false, has_pos2 = false, has_neg1 = false;
        for (int g : *w) {
          has_neg2 |= g == -2;
          has_pos2 |= g == 2;
          has_neg1 |= g == -1;
        }
        CHECK_FALSE(has_neg2);
        if (!has_pos2) CHECK_FALSE(has_neg1);
        // the witness expresses a^{-1} b
        std::vector<int> left = as_signed(word_of(a));
        left.insert(left.end(), w->begin(), w->end());
        CHECK(braid_eq_b3(left, as_signed(word_of(b))));
      } else {
        CHECK_FALSE(w.has_value());
      }
    }
}

TEST_CASE("left invariance (sampled here; exhaustive range in acceptance)") {
  auto pop = braids_up_to(6);
  for (const auto& u : pop) {
    if (u.trivial()) continue;
    BraidWord uw = word_of(u);
    if (uw.size() > 3) continue;
    for (const auto& a : pop)
      for (const auto& b : pop) {
        BraidWord ua = uw, ub = uw;
        ua.append(word_of(a));
        ub.append(word_of(b));
        CHECK(compare(a, b) == compare(normalize(ua), normalize(ub)));
      }
  }
}

TEST_CASE("text round trips") {
  CHECK(BraidWord::parse("1121") == BraidWord{{1, 1, 2, 1}});
  CHECK(BraidWord::parse("1 2 1") == BraidWord{{1, 2, 1}});
  CHECK(ExpSeq::parse("(1,2,1,2)") == ExpSeq{1, 2, 1, 2});
  CHECK(ExpSeq::parse("()") == ExpSeq{});
  CHECK(ExpSeq{1, 2, 1, 2}.str() == "(1,2,1,2)");
  CHECK(BraidWord{{1, 2, 1}}.str() == "121");
}
