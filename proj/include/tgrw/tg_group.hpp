#pragma once

// Elements of the Tutte-Grothendieck group of a convergent alphabetic system
// (the free partially commutative group on the irreducible letters), the
// universal invariant, evaluation of invariants into arbitrary groups, and
// group presentations for systems without a convergence certificate.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tgrw/errors.hpp"
#include "tgrw/rewrite.hpp"

namespace tgrw {

struct SignedLetter {
  Letter letter;
  int sign = 1;  // +1 or -1

  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

using SignedWord = std::vector<SignedLetter>;

/// Reduced canonical element of G(Irr, theta). Over a totally commutative
/// alphabet the element is kept as a finitely supported exponent map.
class TGElement {
 public:
  static TGElement identity(AlphabetPtr alphabet);
  /// Reduces and canonicalizes an arbitrary signed word.
  static TGElement from_word(SignedWord word, AlphabetPtr alphabet);
  /// Positive embedding of a trace.
  static TGElement from_trace(const Trace& t);
  /// Requires a totally commutative alphabet.
  static TGElement from_exponents(const std::map<Letter, std::int64_t>& exponents, AlphabetPtr alphabet);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  bool abelian() const { return std::holds_alternative<Exponents>(value_); }
  bool is_identity() const;

  /// Canonical reduced signed word. Abelian elements expand their exponents.
  SignedWord word() const;
  /// Exponent sum of every letter (the abelianization; faithful when abelian()).
  std::map<Letter, std::int64_t> exponents() const;

  std::string to_string() const;

  friend bool operator==(const TGElement& a, const TGElement& b) {
    return a.alphabet_ == b.alphabet_ && a.value_ == b.value_;
  }

 private:
  using Exponents = std::map<Letter, std::int64_t>;
  TGElement(AlphabetPtr alphabet, std::variant<SignedWord, Exponents> value)
      : alphabet_(std::move(alphabet)), value_(std::move(value)) {}

  friend TGElement tg_mul(const TGElement& a, const TGElement& b);
  friend TGElement tg_inv(const TGElement& a);

  AlphabetPtr alphabet_;
  std::variant<SignedWord, Exponents> value_;
};

TGElement tg_mul(const TGElement& a, const TGElement& b);
TGElement tg_inv(const TGElement& a);

/// Cancels x^e ... x^-e pairs separated only by letters commuting with x,
/// until no pair is left, then takes the lex-least representative.
SignedWord reduce_signed_word(SignedWord word, const CommutationAlphabet& alphabet);

/// t(x): the normal form of a letter, embedded positively. Needs a certificate.
TGElement universal_invariant(const RewriteSystem& system, const Letter& x);
/// Extension of t to traces: the embedded normal form of t.
TGElement universal_invariant(const RewriteSystem& system, const Trace& t);

/// A target group and the images of letters in it. `equal` and `encode` are
/// both optional; without either, T's own operator== is used if it has one.
template <class T>
struct GroupCallbacks {
  std::function<T(const T&, const T&)> multiply;
  std::function<T(const T&)> invert;
  T identity{};
  std::function<T(const Letter&)> image;
  std::function<bool(const T&, const T&)> equal;
  std::function<std::string(const T&)> encode;

  bool same(const T& a, const T& b) const {
    if (equal) return equal(a, b);
    if (encode) return encode(a) == encode(b);
    if constexpr (std::equality_comparable<T>) {
      return a == b;
    } else {
      throw InputError("group callbacks need an equality or an encoder");
    }
  }

  T power(const T& base, std::int64_t exponent) const {
    T b = exponent < 0 ? invert(base) : base;
    auto e = static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent);
    T result = identity;
    while (e) {
      if (e & 1U) result = multiply(result, b);
      e >>= 1U;
      if (e) b = multiply(b, b);
    }
    return result;
  }
};

namespace detail {

template <class T>
T fold_word(const GroupCallbacks<T>& f, const Word& w) {
  T acc = f.identity;
  for (const auto& x : w) acc = f.multiply(acc, f.image(x));
  return acc;
}

// Spot checks of the caller-asserted hypotheses on the distinct letters
// involved: group laws on their images, commutation, rule invariance.
template <class T>
void spot_check(const GroupCallbacks<T>& f, const CommutationAlphabet& alphabet, std::vector<Letter> letters,
                const RewriteSystem* system) {
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());

  std::vector<T> images;
  for (const auto& x : letters) images.push_back(f.image(x));
  const std::size_t sampled = std::min<std::size_t>(images.size(), 4);
  for (std::size_t i = 0; i < sampled; ++i) {
    if (!f.same(f.multiply(images[i], f.invert(images[i])), f.identity))
      throw PreconditionError("target group: f(" + letters[i] + ") times its inverse is not the identity");
    if (!f.same(f.multiply(f.identity, images[i]), images[i]))
      throw PreconditionError("target group: identity is not neutral on f(" + letters[i] + ")");
    for (std::size_t j = 0; j < sampled; ++j)
      for (std::size_t k = 0; k < sampled; ++k)
        if (!f.same(f.multiply(f.multiply(images[i], images[j]), images[k]),
                    f.multiply(images[i], f.multiply(images[j], images[k]))))
          throw PreconditionError("target group: multiplication is not associative on f(" + letters[i] + "), f(" +
                                  letters[j] + "), f(" + letters[k] + ")");
  }

  for (std::size_t i = 0; i < letters.size(); ++i)
    for (std::size_t j = i + 1; j < letters.size(); ++j)
      if (alphabet.commutes(letters[i], letters[j]) &&
          !f.same(f.multiply(images[i], images[j]), f.multiply(images[j], images[i])))
        throw PreconditionError("f does not respect the commutation of (" + letters[i] + ", " + letters[j] + ")");

  if (!system) return;
  for (std::size_t i = 0; i < letters.size(); ++i)
    for (const auto& rhs : system->rules_for(letters[i]))
      if (!f.same(images[i], fold_word(f, rhs.word())))
        throw PreconditionError("f is not invariant under the rule " + letters[i] + " -> " + rhs.to_string());
}

}  // namespace detail

/// f^S(t): fold of letter images along the canonical word, after spot-checking
/// commutation and rule invariance on the letters of t.
template <class T>
T evaluate_trace(const RewriteSystem& system, const GroupCallbacks<T>& f, const Trace& t) {
  if (t.alphabet() != system.alphabet()) throw DomainError("trace is over a different alphabet");
  detail::spot_check(f, *system.alphabet(), t.word(), &system);
  return detail::fold_word(f, t.word());
}

/// h(e) for the unique homomorphism h with h(t(x)) = f(x).
template <class T>
T extend_homomorphism(const GroupCallbacks<T>& f, const TGElement& e) {
  if (e.abelian()) {
    auto exps = e.exponents();
    std::vector<Letter> letters;
    for (const auto& [x, k] : exps) letters.push_back(x);
    detail::spot_check<T>(f, *e.alphabet(), letters, nullptr);
    T acc = f.identity;
    for (const auto& [x, k] : exps) acc = f.multiply(acc, f.power(f.image(x), k));
    return acc;
  }
  const auto w = e.word();
  std::vector<Letter> letters;
  for (const auto& s : w) letters.push_back(s.letter);
  detail::spot_check<T>(f, *e.alphabet(), letters, nullptr);
  T acc = f.identity;
  for (const auto& s : w) {
    T img = f.image(s.letter);
    acc = f.multiply(acc, s.sign > 0 ? img : f.invert(img));
  }
  return acc;
}

struct Relation {
  SignedWord lhs;
  SignedWord rhs;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Presentation {
  std::vector<Letter> generators;
  std::vector<Relation> relations;

  /// "< x, y | x*y*x^-1*y^-1 >", each relation written as the relator lhs * rhs^-1.
  std::string to_string() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Generators = `letters`; relations x y x^-1 y^-1 = 1 for commuting pairs and
/// x = w for every rule. Needs no convergence assumption.
Presentation group_presentation(const RewriteSystem& system, const std::vector<Letter>& letters);

}  // namespace tgrw
