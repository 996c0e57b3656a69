#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

#include "holobraid/braid.hpp"
#include "holobraid/garside.hpp"

using namespace holobraid;

namespace {

BraidWord w(int n, std::vector<int> ls) { return BraidWord(n, std::move(ls)); }

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<int> ls;
  for (int j = 0; j < len; ++j) ls.push_back(idx(rng) * (sgn(rng) ? 1 : -1));
  return BraidWord(n, std::move(ls));
}

// Scramble by the defining relations plus free insertions; the element is
// unchanged by construction.
BraidWord scramble(std::mt19937& rng, BraidWord word, int moves) {
  std::uniform_int_distribution<int> kind(0, 2);
  for (int m = 0; m < moves; ++m) {
    auto& ls = word.letters;
    switch (kind(rng)) {
      case 0: {  // far commutation somewhere, if possible
        std::vector<std::size_t> spots;
        for (std::size_t j = 0; j + 1 < ls.size(); ++j) {
          if (std::abs(std::abs(ls[j]) - std::abs(ls[j + 1])) >= 2) spots.push_back(j);
        }
        if (!spots.empty()) {
          const auto j = spots[std::uniform_int_distribution<std::size_t>(
              0, spots.size() - 1)(rng)];
          std::swap(ls[j], ls[j + 1]);
        }
        break;
      }
      case 1: {  // braid relation on a same-sign triple
        std::vector<std::size_t> spots;
        for (std::size_t j = 0; j + 2 < ls.size(); ++j) {
          if (ls[j] == ls[j + 2] && std::abs(std::abs(ls[j]) - std::abs(ls[j + 1])) == 1 &&
              (ls[j] > 0) == (ls[j + 1] > 0)) {
            spots.push_back(j);
          }
        }
        if (!spots.empty()) {
          const auto j = spots[std::uniform_int_distribution<std::size_t>(
              0, spots.size() - 1)(rng)];
          std::swap(ls[j], ls[j + 1]);
          ls[j + 2] = ls[j];
        }
        break;
      }
      default: {  // free insertion
        std::uniform_int_distribution<int> gen(1, word.strands - 1);
        std::uniform_int_distribution<std::size_t> at(0, ls.size());
        const int g = gen(rng) * (std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1);
        const auto j = at(rng);
        ls.insert(ls.begin() + j, {g, -g});
        break;
      }
    }
  }
  return word;
}

// Independent conjugacy oracle: close the element under conjugation by single
// generators to depth `depth` (all conjugators of that length), normalize,
// and keep the max-inf, min-r slice.
std::vector<NormalForm> brute_force_summit_set(const BraidWord& word, int depth) {
  std::map<std::string, NormalForm> seen;
  auto key = [](const NormalForm& nf) { return serialize_normal_form(nf); };
  std::vector<BraidWord> frontier{word};
  seen.emplace(key(left_normal_form(word)), left_normal_form(word));
  for (int d = 0; d < depth; ++d) {
    std::vector<BraidWord> next;
    for (const auto& cur : frontier) {
      for (int g = 1; g <= word.strands - 1; ++g) {
        for (int s : {g, -g}) {
          const auto conj = compose(compose(w(word.strands, {-s}), cur),
                                    w(word.strands, {s}));
          const auto nf = left_normal_form(conj);
          if (seen.emplace(key(nf), nf).second) next.push_back(conj);
        }
      }
    }
    frontier = std::move(next);
  }
  int best_inf = -1 << 20;
  for (const auto& [k, nf] : seen) best_inf = std::max(best_inf, nf.inf);
  int best_len = 1 << 20;
  for (const auto& [k, nf] : seen) {
    if (nf.inf == best_inf) best_len = std::min(best_len, nf.canonical_length());
  }
  std::vector<NormalForm> out;
  for (const auto& [k, nf] : seen) {
    if (nf.inf == best_inf && nf.canonical_length() == best_len) out.push_back(nf);
  }
  return out;
}

std::set<std::string> keys_of(const std::vector<NormalForm>& nfs) {
  std::set<std::string> out;
  for (const auto& nf : nfs) out.insert(serialize_normal_form(nf));
  return out;
}

}  // namespace

TEST_CASE("tau implements the weak commutativity relation") {
  CHECK(tau(w(3, {1})) == w(3, {2}));
  CHECK(tau(w(4, {2})) == w(4, {2}));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const auto word = random_word(rng, n, 1 + trial % 10);
    CHECK(words_equal(tau(tau(word)), word));
    // tau(w) = Delta^{-1} w Delta
    const auto conj = compose(compose(invert(delta(n)), word), delta(n));
    CHECK(words_equal(tau(word), conj));
  }
}

TEST_CASE("negative_split produces Delta = U_i sigma_i") {
  {
    const auto [neg, u] = negative_split(1, 2);
    CHECK(neg == w(2, {-1}));
    CHECK(u.word.empty());
  }
  {
    const auto [neg, u] = negative_split(1, 3);
    CHECK(neg == invert(delta(3)));
    CHECK(words_equal(u.word, w(3, {1, 2})));
    CHECK(words_equal(compose(neg, u.word), w(3, {-1})));
  }
  {
    const auto [neg, u] = negative_split(2, 3);
    CHECK(words_equal(u.word, w(3, {2, 1})));
    CHECK(words_equal(compose(neg, u.word), w(3, {-2})));
  }
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i <= n - 1; ++i) {
      const auto [neg, u] = negative_split(i, n);
      CHECK(words_equal(compose(u.word, w(n, {i})), delta(n)));
    }
  }
  CHECK_THROWS_AS(negative_split(3, 3), Error);
}

TEST_CASE("left normal form on the worked examples") {
  {
    const auto nf = left_normal_form(w(3, {1, 2, 1}));
    CHECK(nf.inf == 1);
    CHECK(nf.canonical_length() == 0);
  }
  {
    const auto nf = left_normal_form(w(3, {-1}));
    CHECK(nf.inf == -1);
    REQUIRE(nf.canonical_length() == 1);
    CHECK(nf.factors[0].word == w(3, {1, 2}));
  }
  {
    const auto nf = left_normal_form(w(3, {1, 2, 1, 2}));
    CHECK(nf.inf == 1);
    REQUIRE(nf.canonical_length() == 1);
    CHECK(nf.factors[0].word == w(3, {2}));
  }
  {
    // In B_2 the only generator is Delta_2 itself, so a positive power is a
    // pure Delta power (k maximal forces r = 0).
    const auto nf = left_normal_form(w(2, {1, 1, 1}));
    CHECK(nf.inf == 3);
    CHECK(nf.canonical_length() == 0);
  }
  {
    const auto nf = left_normal_form(w(1, {}));
    CHECK(nf.inf == 0);
    CHECK(nf.canonical_length() == 0);
  }
}

TEST_CASE("normal form factors are sound") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 4;
    const auto word = random_word(rng, n, 1 + trial % 16);
    const auto nf = left_normal_form(word);
    CHECK(words_equal(to_word(nf), word));
    for (std::size_t j = 0; j < nf.factors.size(); ++j) {
      const auto& f = nf.factors[j];
      CHECK_FALSE(f.perm.is_identity());
      CHECK_FALSE(f.perm.is_reversal());
      auto frag = is_delta_fragment(f.word);
      REQUIRE(frag.has_value());
      CHECK(*frag == f.perm);
    }
    // Left-weightedness: every generator starting P_{j+1} finishes P_j.
    for (std::size_t j = 0; j + 1 < nf.factors.size(); ++j) {
      const auto& a = nf.factors[j].perm;
      const auto binv = nf.factors[j + 1].perm.inverse();
      for (int i = 1; i <= n - 1; ++i) {
        if (in_starting_set(nf.factors[j + 1].perm, binv, i)) {
          CHECK(in_finishing_set(a, i));
        }
      }
    }
  }
}

TEST_CASE("normal form is invariant under scrambling") {
  std::mt19937 rng(23);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 120; ++trial) {
      const auto word = random_word(rng, n, 1 + trial % 20);
      const auto scrambled = scramble(rng, word, 50);
      CHECK(left_normal_form(word) == left_normal_form(scrambled));
    }
  }
}

TEST_CASE("words_equal on the worked examples") {
  CHECK(words_equal(w(3, {1, 2, 1}), w(3, {2, 1, 2})));
  CHECK(words_equal(w(3, {1, -1}), w(3, {})));
  CHECK_FALSE(words_equal(w(3, {1}), w(3, {2})));
  CHECK_THROWS_AS(words_equal(w(3, {1}), w(4, {1})), StrandMismatchError);
}

TEST_CASE("central square: Delta^2 conjugation fixes normal forms") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 4;
    const auto word = random_word(rng, n, 1 + trial % 12);
    const auto d2 = compose(delta(n), delta(n));
    const auto conj = compose(compose(d2, word), invert(d2));
    CHECK(left_normal_form(conj) == left_normal_form(word));
  }
}

TEST_CASE("cycling and decycling basics") {
  {  // pure Delta power is fixed
    const auto nf = left_normal_form(w(3, {1, 2, 1}));
    CHECK(cycling(nf).first == nf);
    CHECK(decycling(nf).first == nf);
  }
  {  // sigma1 sigma2 is a fragment: cycling keeps (0, 1)
    const auto nf = left_normal_form(w(3, {1, 2}));
    const auto [cycled, conj] = cycling(nf);
    CHECK(cycled.inf == 0);
    CHECK(cycled.canonical_length() == 1);
    CHECK(words_equal(compose(compose(invert(conj.word), to_word(nf)), conj.word),
                      to_word(cycled)));
  }
  {  // (sigma1)(sigma1) already has minimal length
    const auto nf = left_normal_form(w(3, {1, 1}));
    CHECK(decycling(nf).first == nf);
  }
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const auto nf = left_normal_form(random_word(rng, n, 1 + trial % 12));
    const auto [cycled, cconj] = cycling(nf);
    CHECK(exponent_sum(to_word(cycled)) == exponent_sum(to_word(nf)));
    CHECK(cycled.inf >= nf.inf);
    CHECK(cycled.canonical_length() <= nf.canonical_length());
    const auto [decycled, dconj] = decycling(nf);
    CHECK(exponent_sum(to_word(decycled)) == exponent_sum(to_word(nf)));
    CHECK(decycled.inf >= nf.inf);
    CHECK(decycled.canonical_length() <= nf.canonical_length());
    if (!nf.factors.empty()) {
      // decycling = conjugation by the inverse of the final factor
      const auto last = nf.factors.back().word;
      const auto conj = compose(compose(last, to_word(nf)), invert(last));
      CHECK(left_normal_form(conj) == decycled);
    }
  }
}

TEST_CASE("summit_form reaches the brute-force optimum with verified witness") {
  {
    const auto res = summit_form(w(3, {1}));
    CHECK(res.form.inf == 0);
    CHECK(res.form.canonical_length() == 1);
  }
  {
    const auto res = summit_form(w(3, {1, 1}));
    CHECK(res.form.inf == 0);
    CHECK(res.form.canonical_length() == 2);
  }
  std::mt19937 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3;
    const auto word = random_word(rng, n, 1 + trial % 6);
    const auto res = summit_form(word);
    const auto oracle = brute_force_summit_set(word, 6);
    REQUIRE(!oracle.empty());
    CHECK(res.form.inf == oracle.front().inf);
    CHECK(res.form.canonical_length() == oracle.front().canonical_length());
    // witness verification: W^{-1} w W = summit form
    const auto W = res.witness.word(n);
    for (const auto& step : res.witness.steps) {
      CHECK(is_delta_fragment(step.word).has_value());
    }
    CHECK(words_equal(compose(compose(invert(W), word), W), to_word(res.form)));
  }
}

TEST_CASE("summit form is constant on conjugacy classes (Delta^2 twist)") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    const auto word = random_word(rng, n, 1 + trial % 8);
    const auto d2 = compose(delta(n), delta(n));
    const auto conj = compose(compose(d2, word), invert(d2));
    CHECK(summit_form(word).form == summit_form(conj).form);
  }
}

TEST_CASE("summit_set on the worked examples") {
  {
    // lexicographic order sorts the sigma2 representative first
    const auto set = summit_set(w(3, {1}));
    REQUIRE(set.size() == 2);
    CHECK(set[0].canonical_length() == 1);
    CHECK(set[0].factors[0].word == w(3, {2}));
    CHECK(set[1].factors[0].word == w(3, {1}));
  }
  {
    const auto set = summit_set(w(3, {1, 1}));
    REQUIRE(set.size() == 2);
    CHECK(set[0].factors[0].word == w(3, {2}));
    CHECK(set[0].factors[1].word == w(3, {2}));
    CHECK(set[1].factors[0].word == w(3, {1}));
    CHECK(set[1].factors[1].word == w(3, {1}));
  }
  {
    const auto set = summit_set(w(3, {1, 2, 1}));
    REQUIRE(set.size() == 1);
    CHECK(set[0].inf == 1);
    CHECK(set[0].canonical_length() == 0);
  }
  CHECK_THROWS_AS(summit_set(w(8, {1})), CapExceededError);
}

TEST_CASE("summit_set matches brute force on all short B_3 elements") {
  // All words of length <= 5 on {s1^{+-1}, s2^{+-1}}, deduplicated by element.
  std::vector<BraidWord> words{w(3, {})};
  std::vector<BraidWord> frontier{w(3, {})};
  for (int len = 1; len <= 5; ++len) {
    std::vector<BraidWord> next;
    for (const auto& word : frontier) {
      for (int l : {1, -1, 2, -2}) {
        auto ext = word;
        ext.letters.push_back(l);
        next.push_back(ext);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::map<std::string, BraidWord> elements;
  for (const auto& word : words) {
    elements.emplace(serialize_normal_form(left_normal_form(word)), word);
  }
  int checked = 0;
  for (const auto& [key, word] : elements) {
    const auto computed = keys_of(summit_set(word));
    const auto oracle = keys_of(brute_force_summit_set(word, 6));
    CHECK(computed == oracle);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("conjugation invariants across summit sets") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3;
    const auto word = random_word(rng, n, 1 + trial % 6);
    const auto set = summit_set(word);
    const int es = exponent_sum(free_reduce(word));
    for (const auto& nf : set) {
      CHECK(exponent_sum(to_word(nf)) == es);
    }
  }
}

TEST_CASE("conjugate_test on the worked examples") {
  {
    const auto witness = conjugate_test(w(3, {1}), w(3, {2}));
    REQUIRE(witness.has_value());
    const auto conj = compose(compose(invert(*witness), w(3, {1})), *witness);
    CHECK(words_equal(conj, w(3, {2})));
  }
  CHECK_FALSE(conjugate_test(w(3, {1, 2}), w(3, {1, 1})).has_value());
  {
    const auto word = w(3, {1, -2, 1});
    const auto witness = conjugate_test(word, word);
    REQUIRE(witness.has_value());
    CHECK(witness->empty());
  }
}

TEST_CASE("conjugate_test finds witnesses for random conjugate pairs") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    const auto word = random_word(rng, n, 1 + trial % 8);
    const auto c = random_word(rng, n, 1 + trial % 5);
    const auto conjugated = compose(compose(invert(c), word), c);
    const auto witness = conjugate_test(word, conjugated);
    REQUIRE(witness.has_value());
    CHECK(words_equal(compose(compose(invert(*witness), word), *witness), conjugated));
  }
}

TEST_CASE("normal form serialization") {
  CHECK(serialize_normal_form(left_normal_form(w(3, {1, 2, 1}))) == "Δ^1 |");
  CHECK(serialize_normal_form(left_normal_form(w(3, {-1}))) == "Δ^-1 | 1 2");
  CHECK(serialize_normal_form(left_normal_form(w(2, {1, 1, 1}))) == "Δ^3 |");
  CHECK(serialize_normal_form(left_normal_form(w(4, {1, 2, 1, 3, 2, 1}))) == "Δ^1 |");
  for (const auto& word : {w(3, {1, 2, 1}), w(3, {-1}), w(2, {1, 1, 1}), w(4, {3, -2, 1})}) {
    const auto nf = left_normal_form(word);
    CHECK(parse_normal_form(serialize_normal_form(nf), word.strands) == nf);
  }
  CHECK_THROWS_AS(parse_normal_form("garbage", 3), ParseError);
}
