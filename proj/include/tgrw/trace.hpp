#pragma once

// Commutation alphabets and traces (elements of the free partially
// commutative semigroup over an alphabet).
//
// Letters are opaque string tokens. An alphabet may be infinite: membership,
// order and commutation are predicates, and an optional enumerator lists the
// letters up to some pack-defined size.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tgrw {

using Letter = std::string;
using Word = std::vector<Letter>;

/// How the commutation relation is given. `Total` means every pair of
/// distinct letters commutes; `None` means the free (non-commutative) case.
enum class CommutationKind { None, Total, Relation };

class CommutationAlphabet;
using AlphabetPtr = std::shared_ptr<const CommutationAlphabet>;

class CommutationAlphabet {
 public:
  using Predicate = std::function<bool(const Letter&)>;
  using Order = std::function<bool(const Letter&, const Letter&)>;
  using Relation = std::function<bool(const Letter&, const Letter&)>;
  using Enumerator = std::function<std::vector<Letter>(std::size_t)>;

  struct Config {
    std::string name;
    Predicate is_letter;
    Order less;  // defaults to byte-wise string order when empty
    CommutationKind kind = CommutationKind::None;
    Relation commutes;  // consulted only for CommutationKind::Relation
    Enumerator enumerate_up_to;  // optional
  };

  explicit CommutationAlphabet(Config config);

  static AlphabetPtr make(Config config);

  /// Finite alphabet. The order of `letters` is the total order on letters.
  static AlphabetPtr finite(std::vector<Letter> letters, CommutationKind kind,
                            std::vector<std::pair<Letter, Letter>> pairs = {});

  const std::string& name() const { return config_.name; }
  CommutationKind kind() const { return config_.kind; }

  bool is_letter(const Letter& x) const { return config_.is_letter(x); }
  bool less(const Letter& x, const Letter& y) const;
  /// Irreflexive and symmetric by construction.
  bool commutes(const Letter& x, const Letter& y) const;

  bool enumerable() const { return static_cast<bool>(config_.enumerate_up_to); }
  /// Letters up to a pack-defined size, sorted by the letter order.
  std::vector<Letter> enumerate_up_to(std::size_t size) const;

  /// Sub-alphabet Y with the restricted commutation relation.
  AlphabetPtr restrict_to(Predicate member, std::string name = {}) const;

  /// Throws InputError naming the token when `x` is not a letter.
  void require_letter(const Letter& x) const;

 private:
  Config config_;
};

namespace detail {

// Lexicographically least word of the commutation class of `word`: repeatedly
// emit the order-smallest occurrence that no earlier remaining occurrence
// blocks. Equal elements never commute.
template <class T, class Less, class Commutes>
std::vector<T> lex_least(std::vector<T> word, Less less, Commutes commutes) {
  std::vector<T> out;
  out.reserve(word.size());
  std::vector<const T*> seen;
  while (!word.empty()) {
    std::size_t best = word.size();
    seen.clear();
    for (std::size_t i = 0; i < word.size(); ++i) {
      const T& cur = word[i];
      bool available = true;
      bool repeated = false;
      for (const T* s : seen) {
        if (*s == cur) {
          repeated = true;
          available = false;
          break;
        }
        if (!commutes(*s, cur)) available = false;
      }
      if (available && (best == word.size() || less(cur, word[best]))) best = i;
      if (!repeated) seen.push_back(&cur);
    }
    out.push_back(std::move(word[best]));
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

}  // namespace detail

/// Canonical (lexicographically least) word of the class of `word`, without
/// validating tokens. Works for empty words too (the monoid case).
Word canonical_word(Word word, const CommutationAlphabet& alphabet);

/// A nonempty element of S(X, theta), stored as its lex-least word.
class Trace {
 public:
  /// Validates every token and rejects the empty word.
  static Trace canonicalize(Word word, AlphabetPtr alphabet);
  /// Skips token validation; letters must come from the alphabet already.
  static Trace from_letters(Word word, AlphabetPtr alphabet);
  static Trace single(Letter x, AlphabetPtr alphabet);

  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  const AlphabetPtr& alphabet() const { return alphabet_; }

  std::map<Letter, std::size_t> counts() const;

  std::string to_string() const;

  friend bool operator==(const Trace& a, const Trace& b) {
    return a.alphabet_ == b.alphabet_ && a.word_ == b.word_;
  }
  /// Storage order (byte-wise on the word), used for sets and maps.
  friend bool operator<(const Trace& a, const Trace& b) { return a.word_ < b.word_; }

 private:
  Trace(Word word, AlphabetPtr alphabet) : word_(std::move(word)), alphabet_(std::move(alphabet)) {}

  Word word_;
  AlphabetPtr alphabet_;
};

Trace concat(const Trace& t, const Trace& u);

/// |t|_x; validates x.
std::size_t letter_count(const Trace& t, const Letter& x);

/// True iff every letter of t satisfies `member`.
bool supported_on(const Trace& t, const std::function<bool(const Letter&)>& member);

}  // namespace tgrw
