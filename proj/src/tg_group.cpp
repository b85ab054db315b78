#include "tgrw/tg_group.hpp"

#include <set>
#include <sstream>

namespace tgrw {

namespace {

void require_same(const TGElement& a, const TGElement& b) {
  if (a.alphabet() != b.alphabet()) throw DomainError("group elements over different alphabets");
}

std::string signed_letter_text(const SignedLetter& s) { return s.sign > 0 ? s.letter : s.letter + "^-1"; }

void append_inverse(SignedWord& out, const SignedWord& w) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->letter, -it->sign});
}

}  // namespace

SignedWord reduce_signed_word(SignedWord word, const CommutationAlphabet& alphabet) {
  for (const auto& s : word)
    if (s.sign != 1 && s.sign != -1) throw InputError("sign of '" + s.letter + "' must be +1 or -1");
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < word.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < word.size(); ++j) {
        if (word[j].letter == word[i].letter) {
          if (word[j].sign == -word[i].sign) {
            word.erase(word.begin() + static_cast<std::ptrdiff_t>(j));
            word.erase(word.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
          }
          break;
        }
        if (!alphabet.commutes(word[i].letter, word[j].letter)) break;
      }
    }
  }
  auto less = [&](const SignedLetter& a, const SignedLetter& b) {
    if (a.letter != b.letter) return alphabet.less(a.letter, b.letter);
    return a.sign > b.sign;
  };
  auto commutes = [&](const SignedLetter& a, const SignedLetter& b) {
    return alphabet.commutes(a.letter, b.letter);
  };
  return detail::lex_least(std::move(word), less, commutes);
}

TGElement TGElement::identity(AlphabetPtr alphabet) {
  if (alphabet->kind() == CommutationKind::Total) return TGElement(std::move(alphabet), Exponents{});
  return TGElement(std::move(alphabet), SignedWord{});
}

TGElement TGElement::from_word(SignedWord word, AlphabetPtr alphabet) {
  if (alphabet->kind() == CommutationKind::Total) {
    Exponents e;
    for (const auto& s : word) {
      if (s.sign != 1 && s.sign != -1) throw InputError("sign of '" + s.letter + "' must be +1 or -1");
      e[s.letter] += s.sign;
    }
    std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
    return TGElement(std::move(alphabet), std::move(e));
  }
  auto reduced = reduce_signed_word(std::move(word), *alphabet);
  return TGElement(std::move(alphabet), std::move(reduced));
}

TGElement TGElement::from_trace(const Trace& t) {
  SignedWord w;
  w.reserve(t.length());
  for (const auto& x : t.word()) w.push_back({x, 1});
  return from_word(std::move(w), t.alphabet());
}

TGElement TGElement::from_exponents(const std::map<Letter, std::int64_t>& exponents, AlphabetPtr alphabet) {
  if (alphabet->kind() != CommutationKind::Total)
    throw DomainError("exponent maps represent group elements only under total commutation");
  Exponents e;
  for (const auto& [x, k] : exponents)
    if (k != 0) e.emplace(x, k);
  return TGElement(std::move(alphabet), std::move(e));
}

bool TGElement::is_identity() const {
  return std::visit([](const auto& v) { return v.empty(); }, value_);
}

SignedWord TGElement::word() const {
  if (const auto* w = std::get_if<SignedWord>(&value_)) return *w;
  const auto& e = std::get<Exponents>(value_);
  std::vector<Letter> letters;
  for (const auto& [x, k] : e) letters.push_back(x);
  std::sort(letters.begin(), letters.end(), [&](const Letter& a, const Letter& b) { return alphabet_->less(a, b); });
  SignedWord out;
  for (const auto& x : letters) {
    const auto k = e.at(x);
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out.push_back({x, k < 0 ? -1 : 1});
  }
  return out;
}

std::map<Letter, std::int64_t> TGElement::exponents() const {
  if (const auto* e = std::get_if<Exponents>(&value_)) return *e;
  Exponents out;
  for (const auto& s : std::get<SignedWord>(value_)) out[s.letter] += s.sign;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string TGElement::to_string() const {
  if (is_identity()) return "1";
  std::ostringstream os;
  if (const auto* e = std::get_if<Exponents>(&value_)) {
    bool first = true;
    for (const auto& [x, k] : *e) {
      os << (first ? "" : " + ") << k << "*" << x;
      first = false;
    }
    return os.str();
  }
  const auto& w = std::get<SignedWord>(value_);
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "*" : "") << signed_letter_text(w[i]);
  return os.str();
}

TGElement tg_mul(const TGElement& a, const TGElement& b) {
  require_same(a, b);
  if (a.abelian()) {
    auto e = std::get<TGElement::Exponents>(a.value_);
    for (const auto& [x, k] : std::get<TGElement::Exponents>(b.value_)) e[x] += k;
    std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
    return TGElement(a.alphabet_, std::move(e));
  }
  SignedWord w = std::get<SignedWord>(a.value_);
  const auto& bw = std::get<SignedWord>(b.value_);
  w.insert(w.end(), bw.begin(), bw.end());
  return TGElement(a.alphabet_, reduce_signed_word(std::move(w), *a.alphabet_));
}

TGElement tg_inv(const TGElement& a) {
  if (a.abelian()) {
    auto e = std::get<TGElement::Exponents>(a.value_);
    for (auto& [x, k] : e) k = -k;
    return TGElement(a.alphabet_, std::move(e));
  }
  SignedWord w;
  append_inverse(w, std::get<SignedWord>(a.value_));
  return TGElement(a.alphabet_, reduce_signed_word(std::move(w), *a.alphabet_));
}

TGElement universal_invariant(const RewriteSystem& system, const Trace& t) {
  if (!system.certificate())
    throw UnsupportedError("universal_invariant needs a convergence certificate (run certify_convergence first)");
  if (t.alphabet() != system.alphabet()) throw DomainError("trace is over a different alphabet");
  if (system.alphabet()->kind() == CommutationKind::Total) {
    CommutativeNormalizer normalizer(system);
    return TGElement::from_exponents(normalizer.normal_form(t), system.alphabet());
  }
  auto report = system.normalize(t);
  if (!report.ok()) throw ResourceError("normalization budget exceeded after " + std::to_string(report.steps) + " steps");
  return TGElement::from_trace(report.trace);
}

TGElement universal_invariant(const RewriteSystem& system, const Letter& x) {
  return universal_invariant(system, system.letter(x));
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i];
  os << " |";
  for (std::size_t r = 0; r < relations.size(); ++r) {
    SignedWord relator = relations[r].lhs;
    append_inverse(relator, relations[r].rhs);
    os << (r ? ", " : " ");
    for (std::size_t i = 0; i < relator.size(); ++i) os << (i ? "*" : "") << signed_letter_text(relator[i]);
  }
  os << " >";
  return os.str();
}

Presentation group_presentation(const RewriteSystem& system, const std::vector<Letter>& letters) {
  const auto& alphabet = *system.alphabet();
  std::set<Letter> generators;
  for (const auto& x : letters) {
    alphabet.require_letter(x);
    if (!generators.insert(x).second) throw InputError("duplicate generator '" + x + "'");
  }

  Presentation p;
  p.generators = letters;
  for (std::size_t i = 0; i < letters.size(); ++i)
    for (std::size_t j = i + 1; j < letters.size(); ++j)
      if (alphabet.commutes(letters[i], letters[j]))
        p.relations.push_back(
            {{{letters[i], 1}, {letters[j], 1}, {letters[i], -1}, {letters[j], -1}}, {}});
  for (const auto& x : letters) {
    for (const auto& rhs : system.rules_for(x)) {
      SignedWord w;
      for (const auto& y : rhs.word()) {
        if (!generators.count(y))
          throw InputError("rule " + x + " -> " + rhs.to_string() + " mentions '" + y + "', which is not a generator");
        w.push_back({y, 1});
      }
      p.relations.push_back({{{x, 1}}, std::move(w)});
    }
  }
  return p;
}

}  // namespace tgrw
