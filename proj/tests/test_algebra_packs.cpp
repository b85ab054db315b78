#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "tgrw/algebra_packs.hpp"
#include "tgrw/errors.hpp"

using namespace tgrw;

namespace {

using Expansion = std::map<std::pair<int, int>, std::int64_t>;

// "b^i a^j" keys to (i, j); "" is the constant term.
Expansion as_expansion(const std::map<std::string, std::int64_t>& normal) {
  Expansion out;
  for (const auto& [key, c] : normal) {
    const int i = static_cast<int>(std::count(key.begin(), key.end(), 'b'));
    const int j = static_cast<int>(std::count(key.begin(), key.end(), 'a'));
    REQUIRE(key == std::string(static_cast<std::size_t>(i), 'b') + std::string(static_cast<std::size_t>(j), 'a'));
    out[{i, j}] += c;
  }
  return out;
}

std::map<std::string, std::int64_t> symbol_counts(const std::string& w) {
  std::map<std::string, std::int64_t> out;
  for (const auto& s : utf8_symbols(w)) ++out[s];
  return out;
}

}  // namespace

TEST_CASE("Weyl normal ordering of babab") {
  const auto n = weyl_normal_order("babab");
  CHECK(n == std::map<std::string, std::int64_t>{{"bbbaa", 1}, {"bba", 3}, {"b", 1}});
  CHECK(n.count("") == 0);
  CHECK(weyl_normal_order("ab") == std::map<std::string, std::int64_t>{{"ba", 1}, {"", 1}});
  CHECK(weyl_normal_order("ba") == std::map<std::string, std::int64_t>{{"ba", 1}});
  CHECK_THROWS_AS(weyl_normal_order("abx"), InputError);
}

TEST_CASE("Weyl normal ordering agrees with the operator representation") {
  std::size_t words = 0;
  for (const auto& w : oracle::words_over("ab", 7)) {
    const auto lib = as_expansion(weyl_normal_order(w));
    CHECK(lib == oracle::weyl_expansion(w));
    CHECK(oracle::operator_matrix(lib, 10) == oracle::word_matrix(w, 10));
    const auto nb = std::count(w.begin(), w.end(), 'b');
    const auto na = std::count(w.begin(), w.end(), 'a');
    for (const auto& [ij, c] : lib) {
      CHECK(c > 0);
      CHECK(nb - na == ij.first - ij.second);
    }
    ++words;
  }
  CHECK(words == 254);
}

TEST_CASE("central Weyl letters") {
  CHECK(weyl_letter("cab", true) == weyl_letter("acb", true));
  CHECK(weyl_letter("abc", true) == "cab");
  auto sys = weyl_system(true);
  const auto rules = sys.letter_rewrites(weyl_letter("cab", true));
  REQUIRE(rules.size() == 1);
  CHECK(rules[0].word() == Word{"c", "cba"});
  CHECK(weyl_normal_order("abc", true) == std::map<std::string, std::int64_t>{{"cba", 1}, {"c", 1}});
  CHECK_THROWS_AS(weyl_letter("abc"), InputError);
}

TEST_CASE("PBW normal form is sorting") {
  for (const auto& w : oracle::words_over("abc", 6)) {
    auto sorted = w;
    std::sort(sorted.begin(), sorted.end());
    CHECK(pbw_reorder(w, "abc") == std::map<std::string, std::int64_t>{{sorted, 1}});
  }
  // a non-alphabetical base order
  CHECK(pbw_reorder("abc", "cba") == std::map<std::string, std::int64_t>{{"cba", 1}});
  CHECK_THROWS_AS(pbw_reorder("abd", "abc"), InputError);
}

TEST_CASE("shuffle sets") {
  CHECK(shuffle_set("αγ", "ββ") == std::set<std::string>{"αγββ", "αβγβ", "αββγ", "βαγβ", "βαβγ", "ββαγ"});
  CHECK(shuffle_set("a", "b") == std::set<std::string>{"ab", "ba"});
  for (const auto& u : oracle::words_over("abc", 3))
    for (const auto& v : oracle::words_over("abc", 3)) {
      const auto s = shuffle_set(u, v);
      std::set<std::string> expected;
      std::string acc;
      oracle::interleave(utf8_symbols(u), 0, utf8_symbols(v), 0, acc, expected);
      CHECK(s == expected);
      CHECK(s.size() <= oracle::binomial(u.size() + v.size(), u.size()));
    }
  CHECK(shuffle_set("ab", "cd").size() == oracle::binomial(4, 2));
}

TEST_CASE("shuffle prefab invariant is the commutative image") {
  CHECK(shuffle_prefab_invariant("αγββ") == std::map<std::string, std::int64_t>{{"α", 1}, {"γ", 1}, {"β", 2}});
  CHECK(shuffle_prefab_invariant("α") == std::map<std::string, std::int64_t>{{"α", 1}});
  for (const auto& w : oracle::words_over("abc", 5)) CHECK(shuffle_prefab_invariant(w) == symbol_counts(w));

  // every rule keeps the commutative image
  auto sys = prefab_system(shuffle_prefab("abc"));
  for (const auto& w : oracle::words_over("abc", 5))
    for (const auto& rhs : sys.letter_rewrites(w)) {
      std::map<std::string, std::int64_t> sum;
      for (const auto& part : rhs.word())
        for (const auto& [s, k] : symbol_counts(part)) sum[s] += k;
      CHECK(sum == symbol_counts(w));
    }
}

TEST_CASE("arithmetic decompositions") {
  const auto d8 = arith_decompositions(8);
  CHECK(d8.count({{8, 1}}));
  CHECK(d8.count({{2, 1}, {4, 1}}));
  CHECK(d8.count({{2, 3}}));
  CHECK(d8.size() == 3);
  for (std::int64_t p : {2, 3, 5, 7, 97}) CHECK(arith_decompositions(p) == std::set<IndexMultiset>{{{p, 1}}});
  CHECK(arith_compose(8, 4) == std::set<IndexMultiset>{{{2, 5}}, {{2, 3}, {4, 1}}, {{2, 1}, {4, 2}}, {{2, 2}, {8, 1}},
                                                       {{4, 1}, {8, 1}}});
  // every decomposition multiplies back to n
  for (std::int64_t n = 2; n <= 300; ++n)
    for (const auto& d : arith_decompositions(n)) {
      std::int64_t prod = 1;
      for (auto [i, k] : d) {
        CHECK(i >= 2);
        for (int t = 0; t < k; ++t) prod *= i;
      }
      CHECK(prod == n);
    }
  CHECK(arith_letter(12) == "x12");
  CHECK(arith_index("x12") == 12);
  CHECK_THROWS_AS(arith_index("x1"), InputError);
  CHECK_THROWS_AS(arith_index("y3"), InputError);
}

TEST_CASE("arithmetic invariant is the prime factorization") {
  CHECK(arith_invariant(12) == std::map<std::int64_t, std::int64_t>{{2, 2}, {3, 1}});
  CHECK(arith_invariant(7) == std::map<std::int64_t, std::int64_t>{{7, 1}});
  CHECK(arith_invariant(360) == std::map<std::int64_t, std::int64_t>{{2, 3}, {3, 2}, {5, 1}});
  for (std::int64_t m = 2; m <= 2000; ++m) CHECK(arith_invariant(m) == oracle::factorize(m));
}

TEST_CASE("arithmetic prefab: every decomposition order reaches one normal form") {
  auto sys = prefab_system(arithmetic_prefab());
  for (std::int64_t m = 2; m <= 200; ++m) {
    const auto closure = reduct_closure(sys, sys.letter(arith_letter(m)));
    REQUIRE(closure.complete);
    std::vector<Trace> terminal;
    for (const auto& t : closure.traces)
      if (sys.is_irreducible(t)) terminal.push_back(t);
    REQUIRE(terminal.size() == 1);
    std::map<std::int64_t, std::int64_t> exps;
    for (const auto& l : terminal[0].word()) ++exps[arith_index(l)];
    CHECK(exps == oracle::factorize(m));
  }
}

TEST_CASE("pack weight certificates") {
  CHECK(weyl_inversion_weights().weight("abab") == 4);
  CHECK(weyl_inversion_weights().weight(kUnitLetter) == 1);
  CHECK(pbw_inversion_weights("abc").weight("cba") == 4);
  CHECK(length_weights().weight("αβ") == 2);
  CHECK(omega_weights().weight("x12") == 4);
}
