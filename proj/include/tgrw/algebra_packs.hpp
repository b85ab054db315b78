#pragma once

// Rewriting systems whose letters are themselves words: Weyl-algebra normal
// ordering, Poincare-Birkhoff-Witt re-ordering, and prefab factorization
// (shuffles of words, multiplicative partitions of integers). All of them
// juxtapose letters fully commutatively.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tgrw/convergence.hpp"
#include "tgrw/rewrite.hpp"

namespace tgrw {

/// Adjoined irreducible letter standing for the empty product in the rule
/// ab -> ba + 1. Reported under the key "" in normal-ordering maps.
inline const Letter kUnitLetter = "\xF0\x9D\x9F\x99";  // U+1D7D9

/// Splits a UTF-8 token into its code points. Throws InputError on invalid UTF-8.
std::vector<std::string> utf8_symbols(std::string_view token);

// -- Weyl algebra -----------------------------------------------------------

/// Letters are words over {a, b} (with central = true, over {a, b, c} with c
/// commuting with everything, written with every c in front). Each factor
/// "ab" yields the rule  u ab v -> {u ba v, u v}.
RewriteSystem weyl_system(bool central = false, Budgets budgets = {});

/// 1 + #{(i, j) : i < j, w_i = a, w_j = b}.
WeightCertificate weyl_inversion_weights();

/// Canonical in-letter form of a word over {a, b, c}: every c moved to the front.
Letter weyl_letter(std::string_view word, bool central = false);

/// Normal-ordered form of a word: b^i a^j (resp. c^k b^i a^j) letters with
/// multiplicities; the constant term sits under "".
std::map<std::string, std::int64_t> weyl_normal_order(std::string_view word, bool central = false,
                                                      Budgets budgets = {});

// -- PBW --------------------------------------------------------------------

/// `ordered_base` lists the base symbols in increasing order. Letters are
/// nonempty words over the base; each adjacent descent h g (g < h) yields the
/// rule u h g v -> u g h v.
RewriteSystem pbw_system(std::string_view ordered_base, Budgets budgets = {});

/// 1 + number of inversions of the word under the base order.
WeightCertificate pbw_inversion_weights(std::string_view ordered_base);

std::map<std::string, std::int64_t> pbw_reorder(std::string_view word, std::string_view ordered_base,
                                                Budgets budgets = {});

// -- Prefabs ----------------------------------------------------------------

/// A commutative, multivalued composition with identity whose elements factor
/// uniquely into primes. The rewriting system sends every non-identity
/// element to each of its nontrivial decompositions.
struct Prefab {
  std::string name;
  Letter identity;
  std::function<bool(const Letter&)> is_element;  // identity excluded
  std::function<bool(const Letter&, const Letter&)> less;  // empty: byte-wise
  /// Nontrivial decompositions into non-identity elements, in a fixed order.
  std::function<std::vector<Word>(const Letter&)> decompose;
  /// Multivalued composition y o z; each outcome is a multiset of elements.
  std::function<std::set<Word>(const Letter&, const Letter&)> compose;
  std::function<std::vector<Letter>(std::size_t)> enumerate_up_to;
};

RewriteSystem prefab_system(const Prefab& prefab, Budgets budgets = {});

/// All interleavings of w1 and w2 (UTF-8 aware), deduplicated.
std::set<std::string> shuffle_set(std::string_view w1, std::string_view w2);

/// Nonempty words over `base` (any symbols when base is empty) composed by
/// shuffling; the identity is the empty word.
Prefab shuffle_prefab(std::string_view base = {});

/// |w|.
WeightCertificate length_weights();

/// Commutative image of w: symbol -> count.
std::map<std::string, std::int64_t> shuffle_prefab_invariant(std::string_view w, Budgets budgets = {});

using IndexMultiset = std::map<std::int64_t, int>;

/// Token "x<n>" for the arithmetic prefab element x_n.
Letter arith_letter(std::int64_t n);
/// Throws InputError unless the token is "x<n>" with n >= 2.
std::int64_t arith_index(const Letter& token);

/// All multisets {k_i x_i} with i >= 2 and prod i^k_i = n, including {x_n}.
std::set<IndexMultiset> arith_decompositions(std::int64_t n);

/// x_m o x_n = { f + g : f in D(x_m), g in D(x_n) }.
std::set<IndexMultiset> arith_compose(std::int64_t m, std::int64_t n);

/// Elements x_n (n >= 2) with multiplicative partitions as decompositions.
Prefab arithmetic_prefab();

/// 1 + Omega(n), Omega counting prime factors with multiplicity.
WeightCertificate omega_weights();

/// prime -> exponent, computed by rewriting x_m to its normal form.
std::map<std::int64_t, std::int64_t> arith_invariant(std::int64_t m, Budgets budgets = {});

}  // namespace tgrw
