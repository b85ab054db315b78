#include "tgrw/trace.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "tgrw/errors.hpp"

namespace tgrw {

CommutationAlphabet::CommutationAlphabet(Config config) : config_(std::move(config)) {
  if (!config_.is_letter) throw InputError("alphabet '" + config_.name + "' has no letter predicate");
  if (config_.kind == CommutationKind::Relation && !config_.commutes)
    throw InputError("alphabet '" + config_.name + "' has no commutation relation");
}

AlphabetPtr CommutationAlphabet::make(Config config) {
  return std::make_shared<const CommutationAlphabet>(std::move(config));
}

AlphabetPtr CommutationAlphabet::finite(std::vector<Letter> letters, CommutationKind kind,
                                        std::vector<std::pair<Letter, Letter>> pairs) {
  auto rank = std::make_shared<std::unordered_map<Letter, std::size_t>>();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].empty()) throw InputError("empty letter token");
    if (!rank->emplace(letters[i], i).second) throw InputError("duplicate letter '" + letters[i] + "'");
  }
  auto related = std::make_shared<std::set<std::pair<std::size_t, std::size_t>>>();
  for (const auto& [x, y] : pairs) {
    auto ix = rank->find(x);
    auto iy = rank->find(y);
    if (ix == rank->end()) throw InputError("commutation pair mentions unknown letter '" + x + "'");
    if (iy == rank->end()) throw InputError("commutation pair mentions unknown letter '" + y + "'");
    if (x == y) throw InputError("commutation must be irreflexive, got ('" + x + "','" + x + "')");
    related->emplace(std::minmax(ix->second, iy->second));
  }
  if (!pairs.empty() && kind != CommutationKind::Relation)
    throw InputError("commutation pairs given for a non-relation alphabet");

  Config config;
  config.name = "finite";
  config.kind = kind;
  config.is_letter = [rank](const Letter& x) { return rank->count(x) != 0; };
  config.less = [rank](const Letter& x, const Letter& y) { return rank->at(x) < rank->at(y); };
  if (kind == CommutationKind::Relation) {
    config.commutes = [rank, related](const Letter& x, const Letter& y) {
      return related->count(std::minmax(rank->at(x), rank->at(y))) != 0;
    };
  }
  auto sorted = std::make_shared<std::vector<Letter>>(std::move(letters));
  config.enumerate_up_to = [sorted](std::size_t) { return *sorted; };
  return make(std::move(config));
}

bool CommutationAlphabet::less(const Letter& x, const Letter& y) const {
  return config_.less ? config_.less(x, y) : x < y;
}

bool CommutationAlphabet::commutes(const Letter& x, const Letter& y) const {
  if (x == y) return false;
  switch (config_.kind) {
    case CommutationKind::None:
      return false;
    case CommutationKind::Total:
      return true;
    case CommutationKind::Relation:
      return config_.commutes(x, y);
  }
  return false;
}

std::vector<Letter> CommutationAlphabet::enumerate_up_to(std::size_t size) const {
  if (!config_.enumerate_up_to) throw InputError("alphabet '" + config_.name + "' is not enumerable");
  auto letters = config_.enumerate_up_to(size);
  std::sort(letters.begin(), letters.end(), [this](const Letter& x, const Letter& y) { return less(x, y); });
  return letters;
}

AlphabetPtr CommutationAlphabet::restrict_to(Predicate member, std::string name) const {
  Config sub = config_;
  sub.name = name.empty() ? config_.name + "|sub" : std::move(name);
  sub.is_letter = [outer = config_.is_letter, member](const Letter& x) { return outer(x) && member(x); };
  if (config_.enumerate_up_to) {
    sub.enumerate_up_to = [outer = config_.enumerate_up_to, member](std::size_t n) {
      auto all = outer(n);
      std::erase_if(all, [&](const Letter& x) { return !member(x); });
      return all;
    };
  }
  return make(std::move(sub));
}

void CommutationAlphabet::require_letter(const Letter& x) const {
  if (!is_letter(x)) throw InputError("'" + x + "' is not a letter of alphabet '" + config_.name + "'");
}

Word canonical_word(Word word, const CommutationAlphabet& alphabet) {
  auto less = [&](const Letter& x, const Letter& y) { return alphabet.less(x, y); };
  switch (alphabet.kind()) {
    case CommutationKind::None:
      return word;
    case CommutationKind::Total:
      std::sort(word.begin(), word.end(), less);
      return word;
    case CommutationKind::Relation:
      break;
  }
  return detail::lex_least(std::move(word), less,
                           [&](const Letter& x, const Letter& y) { return alphabet.commutes(x, y); });
}

Trace Trace::canonicalize(Word word, AlphabetPtr alphabet) {
  if (!alphabet) throw DomainError("trace needs an alphabet");
  if (word.empty()) throw DomainError("traces are nonempty; the empty word is not in S(X, theta)");
  for (const auto& x : word) alphabet->require_letter(x);
  return from_letters(std::move(word), std::move(alphabet));
}

Trace Trace::from_letters(Word word, AlphabetPtr alphabet) {
  if (word.empty()) throw DomainError("traces are nonempty; the empty word is not in S(X, theta)");
  Word canon = canonical_word(std::move(word), *alphabet);
  return Trace(std::move(canon), std::move(alphabet));
}

Trace Trace::single(Letter x, AlphabetPtr alphabet) {
  alphabet->require_letter(x);
  return Trace(Word{std::move(x)}, std::move(alphabet));
}

std::map<Letter, std::size_t> Trace::counts() const {
  std::map<Letter, std::size_t> out;
  for (const auto& x : word_) ++out[x];
  return out;
}

std::string Trace::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < word_.size(); ++i) os << (i ? " " : "") << word_[i];
  os << ']';
  return os.str();
}

Trace concat(const Trace& t, const Trace& u) {
  if (t.alphabet() != u.alphabet()) throw DomainError("concat of traces over different alphabets");
  Word joined = t.word();
  joined.insert(joined.end(), u.word().begin(), u.word().end());
  return Trace::from_letters(std::move(joined), t.alphabet());
}

std::size_t letter_count(const Trace& t, const Letter& x) {
  t.alphabet()->require_letter(x);
  return static_cast<std::size_t>(std::count(t.word().begin(), t.word().end(), x));
}

bool supported_on(const Trace& t, const std::function<bool(const Letter&)>& member) {
  return std::all_of(t.word().begin(), t.word().end(), member);
}

}  // namespace tgrw
