#pragma once

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tgrw/convergence.hpp"
#include "tgrw/rewrite.hpp"
#include "tgrw/tg_group.hpp"

namespace fixture {

using namespace tgrw;

// a, b, c pairwise commute; x commutes with c, z with c.
// x -> ab, y -> xd, z -> x | ab. Irr = {a, b, c, d}.
inline RewriteSystem partial_system() {
  auto alphabet = CommutationAlphabet::finite({"a", "b", "c", "d", "x", "y", "z"}, CommutationKind::Relation,
                                              {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"x", "c"}, {"z", "c"}});
  return RewriteSystem::finite(alphabet, {{"x", {"a", "b"}}, {"y", {"x", "d"}}, {"z", {"x"}}, {"z", {"a", "b"}}});
}

inline WeightCertificate partial_weights() {
  return {"fixture", [](const Letter& x) -> std::int64_t {
            if (x == "x") return 3;
            if (x == "y" || x == "z") return 4;
            return 1;
          }};
}

inline RewriteSystem certified_partial_system() {
  const auto sys = partial_system();
  return require_convergent(sys, partial_weights(), full_scope(*sys.alphabet(), 3));
}

inline const std::vector<Letter>& partial_letters() {
  static const std::vector<Letter> letters{"a", "b", "c", "d", "x", "y", "z"};
  return letters;
}

inline bool partial_irreducible(const Letter& x) { return x == "a" || x == "b" || x == "c" || x == "d"; }

inline Word random_word(std::mt19937_64& rng, const std::vector<Letter>& letters, std::size_t min_len,
                        std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Word w(len(rng));
  for (auto& x : w) x = letters[pick(rng)];
  return w;
}

using P7 = oracle::Perm<7>;

// Images in S7 compatible with the fixture: f(a), f(b), f(c) commute pairwise,
// f(x) = f(a) f(b) commutes with f(c), f(y) = f(x) f(d), f(z) = f(x).
// Conjugating by g keeps every relation.
inline GroupCallbacks<P7> s7_callbacks(const P7& g) {
  const auto fa = oracle::perm_cycle<7>({0, 1});
  const auto fb = oracle::perm_cycle<7>({2, 3, 4});
  const auto fc = oracle::perm_cycle<7>({5, 6});
  const auto fd = oracle::perm_mul(oracle::perm_cycle<7>({0, 2, 5}), oracle::perm_cycle<7>({1, 6}));
  const auto fx = oracle::perm_mul(fa, fb);
  const auto fy = oracle::perm_mul(fx, fd);
  const auto gi = oracle::perm_inv(g);
  auto conj = [g, gi](const P7& p) { return oracle::perm_mul(oracle::perm_mul(g, p), gi); };
  GroupCallbacks<P7> f;
  f.multiply = [](const P7& p, const P7& q) { return oracle::perm_mul(p, q); };
  f.invert = [](const P7& p) { return oracle::perm_inv(p); };
  f.identity = oracle::perm_identity<7>();
  f.image = [=](const Letter& x) {
    if (x == "a") return conj(fa);
    if (x == "b") return conj(fb);
    if (x == "c") return conj(fc);
    if (x == "d") return conj(fd);
    if (x == "x" || x == "z") return conj(fx);
    if (x == "y") return conj(fy);
    return oracle::perm_identity<7>();
  };
  return f;
}

}  // namespace fixture
