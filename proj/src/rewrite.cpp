#include "tgrw/rewrite.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "tgrw/errors.hpp"

namespace tgrw {

namespace {

// Strict dependence order on the occurrences of a canonical word:
// before[j][k] (j < k) iff occurrence j must precede occurrence k in every
// representative.
std::vector<std::vector<char>> dependence_closure(const Word& w, const CommutationAlphabet& alphabet) {
  const std::size_t n = w.size();
  std::vector<std::vector<char>> before(n, std::vector<char>(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = k; j-- > 0;) {
      if (before[j][k]) continue;
      if (!alphabet.commutes(w[j], w[k])) {
        before[j][k] = 1;
        for (std::size_t i = 0; i < j; ++i)
          if (before[i][j]) before[i][k] = 1;
      }
    }
  }
  return before;
}

class ReductCollector {
 public:
  ReductCollector(const Word& word, const AlphabetPtr& alphabet, std::size_t node_budget)
      : word_(word), alphabet_(alphabet), budget_(node_budget) {}

  bool exhausted() const { return exhausted_; }

  void add(Word w) {
    if (seen_.size() >= budget_) {
      exhausted_ = true;
      return;
    }
    seen_.insert(Trace::from_letters(std::move(w), alphabet_));
  }

  std::set<Trace> take() { return std::move(seen_); }

  // Every factorization u.x.v of the occurrence at `pos`: u must contain the
  // dependence predecessors of `pos`, and any independent occurrences whose
  // own predecessors already sit in u may go either way.
  void occurrence(std::size_t pos, const std::vector<std::vector<char>>& before,
                  const std::vector<Word>& rhs_list) {
    const std::size_t n = word_.size();
    std::vector<char> side(n, 0);  // 1 = in u, 2 = in v
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == pos) continue;
      if (j < pos && before[j][pos]) side[j] = 1;
      else if (j > pos && before[pos][j]) side[j] = 2;
      else free.push_back(j);
    }
    enumerate(0, free, side, before, pos, rhs_list);
  }

 private:
  void enumerate(std::size_t idx, const std::vector<std::size_t>& free, std::vector<char>& side,
                 const std::vector<std::vector<char>>& before, std::size_t pos,
                 const std::vector<Word>& rhs_list) {
    if (exhausted_) return;
    if (idx == free.size()) {
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return;
      }
      Word u, v;
      for (std::size_t j = 0; j < word_.size(); ++j) {
        if (j == pos) continue;
        (side[j] == 1 ? u : v).push_back(word_[j]);
      }
      for (const auto& rhs : rhs_list) {
        Word r = u;
        r.insert(r.end(), rhs.begin(), rhs.end());
        r.insert(r.end(), v.begin(), v.end());
        add(std::move(r));
      }
      return;
    }
    const std::size_t j = free[idx];
    // j may join u only if every predecessor of j is already in u.
    bool can_join_u = true;
    for (std::size_t i = 0; i < j; ++i)
      if (before[i][j] && side[i] != 1) {
        can_join_u = false;
        break;
      }
    if (can_join_u) {
      side[j] = 1;
      enumerate(idx + 1, free, side, before, pos, rhs_list);
    }
    side[j] = 2;
    enumerate(idx + 1, free, side, before, pos, rhs_list);
    side[j] = 0;
  }

  const Word& word_;
  const AlphabetPtr& alphabet_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::set<Trace> seen_;
};

}  // namespace

std::vector<Word> RewriteSystem::Rules::generate(const Letter& x) const { return generator(x); }

RewriteSystem::RewriteSystem(AlphabetPtr alphabet, RuleGenerator rules, Budgets budgets)
    : alphabet_(std::move(alphabet)), rules_{std::move(rules)}, budgets_(budgets) {
  if (!alphabet_) throw InputError("rewrite system needs an alphabet");
  if (!rules_.generator) throw InputError("rewrite system needs a rule generator");
}

RewriteSystem RewriteSystem::finite(AlphabetPtr alphabet, const std::vector<std::pair<Letter, Word>>& rules,
                                    Budgets budgets) {
  auto table = std::make_shared<std::map<Letter, std::vector<Word>>>();
  for (const auto& [lhs, rhs] : rules) {
    alphabet->require_letter(lhs);
    if (rhs.empty()) throw DomainError("rules must map into S, not M: empty right-hand side for '" + lhs + "'");
    for (const auto& y : rhs) alphabet->require_letter(y);
    (*table)[lhs].push_back(canonical_word(rhs, *alphabet));
  }
  auto generator = [table](const Letter& x) -> std::vector<Word> {
    auto it = table->find(x);
    return it == table->end() ? std::vector<Word>{} : it->second;
  };
  return RewriteSystem(std::move(alphabet), std::move(generator), budgets);
}

RewriteSystem RewriteSystem::with_budgets(Budgets budgets) const {
  RewriteSystem copy = *this;
  copy.budgets_ = budgets;
  return copy;
}

RewriteSystem RewriteSystem::with_certificate(ConvergenceCertificate certificate) const {
  RewriteSystem copy = *this;
  copy.certificate_ = std::move(certificate);
  return copy;
}

std::vector<Trace> RewriteSystem::rules_for(const Letter& x) const {
  std::vector<Trace> out;
  for (auto& w : rules_.generate(x)) {
    if (w.empty()) throw DomainError("rules must map into S, not M: empty right-hand side for '" + x + "'");
    out.push_back(Trace::from_letters(std::move(w), alphabet_));
  }
  return out;
}

std::vector<Trace> RewriteSystem::letter_rewrites(const Letter& x) const {
  alphabet_->require_letter(x);
  return rules_for(x);
}

ReductSet RewriteSystem::one_step_reducts(const Trace& t) const {
  if (t.alphabet() != alphabet_) throw DomainError("trace is over a different alphabet");
  const Word& w = t.word();
  ReductSet result;

  std::map<Letter, std::vector<Word>> rhs_cache;
  auto rhs_of = [&](const Letter& x) -> const std::vector<Word>& {
    auto it = rhs_cache.find(x);
    if (it == rhs_cache.end()) it = rhs_cache.emplace(x, rules_.generate(x)).first;
    return it->second;
  };

  if (alphabet_->kind() == CommutationKind::Total) {
    // Every split gives the same multiset: one reduct per (letter, rule).
    std::set<Trace> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0 && w[i] == w[i - 1]) continue;
      for (const auto& rhs : rhs_of(w[i])) {
        if (out.size() >= budgets_.max_nodes) {
          result.truncated = true;
          break;
        }
        Word r(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
        r.insert(r.end(), rhs.begin(), rhs.end());
        out.insert(Trace::from_letters(std::move(r), alphabet_));
      }
    }
    result.reducts.assign(out.begin(), out.end());
    return result;
  }

  const auto before = dependence_closure(w, *alphabet_);
  ReductCollector collector(w, alphabet_, budgets_.max_nodes);
  for (std::size_t i = 0; i < w.size() && !collector.exhausted(); ++i) {
    const auto& rhs = rhs_of(w[i]);
    if (rhs.empty()) continue;
    collector.occurrence(i, before, rhs);
  }
  result.truncated = collector.exhausted();
  auto found = collector.take();
  result.reducts.assign(found.begin(), found.end());
  return result;
}

ReductionReport RewriteSystem::normalize(const Trace& t, Strategy strategy) const {
  if (t.alphabet() != alphabet_) throw DomainError("trace is over a different alphabet");
  std::mt19937_64 rng(strategy.seed);
  std::unordered_map<Letter, std::vector<Word>> cache;
  auto rhs_of = [&](const Letter& x) -> const std::vector<Word>& {
    auto it = cache.find(x);
    if (it == cache.end()) it = cache.emplace(x, rules_.generate(x)).first;
    return it->second;
  };

  ReductionReport report{t};
  Word current = t.word();
  std::vector<std::size_t> reducible;
  while (true) {
    reducible.clear();
    for (std::size_t i = 0; i < current.size(); ++i)
      if (!rhs_of(current[i]).empty()) reducible.push_back(i);
    if (reducible.empty()) break;
    if (report.steps >= budgets_.max_steps) {
      report.status = ReductionStatus::StepBudgetExceeded;
      break;
    }

    std::size_t pos = reducible.front();
    std::size_t rule = 0;
    const auto& options = [&]() -> const std::vector<Word>& {
      switch (strategy.kind) {
        case StrategyKind::Leftmost:
          break;
        case StrategyKind::Rightmost:
          pos = reducible.back();
          break;
        case StrategyKind::Random:
          pos = reducible[std::uniform_int_distribution<std::size_t>(0, reducible.size() - 1)(rng)];
          break;
      }
      return rhs_of(current[pos]);
    }();
    if (strategy.kind == StrategyKind::Random)
      rule = std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng);
    const Word& rhs = options[rule];
    if (rhs.empty()) throw DomainError("rules must map into S, not M: empty right-hand side for '" + current[pos] + "'");

    if (current.size() - 1 + rhs.size() > budgets_.max_length) {
      report.status = ReductionStatus::LengthBudgetExceeded;
      break;
    }
    Word next(current.begin(), current.begin() + static_cast<std::ptrdiff_t>(pos));
    next.insert(next.end(), rhs.begin(), rhs.end());
    next.insert(next.end(), current.begin() + static_cast<std::ptrdiff_t>(pos) + 1, current.end());
    current = canonical_word(std::move(next), *alphabet_);
    ++report.steps;
  }
  report.trace = Trace::from_letters(std::move(current), alphabet_);
  return report;
}

bool RewriteSystem::is_irreducible(const Trace& t) const {
  return std::none_of(t.word().begin(), t.word().end(),
                      [&](const Letter& x) { return is_reducible_letter(x); });
}

bool RewriteSystem::thue_equivalent(const Trace& t, const Trace& u) const {
  if (!certificate_)
    throw UnsupportedError("thue_equivalent needs a convergence certificate (run certify_convergence first)");
  auto nt = normalize(t);
  auto nu = normalize(u);
  if (!nt.ok() || !nu.ok()) throw ResourceError("normalization budget exceeded in thue_equivalent");
  return nt.trace == nu.trace;
}

std::vector<Letter> irreducible_letters(const RewriteSystem& system, const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  for (const auto& x : letters)
    if (!system.is_reducible_letter(x)) out.push_back(x);
  return out;
}

CommutativeNormalizer::CommutativeNormalizer(RewriteSystem system) : system_(std::move(system)) {
  if (system_.alphabet()->kind() != CommutationKind::Total)
    throw DomainError("CommutativeNormalizer needs a totally commutative alphabet");
}

const Multiplicities& CommutativeNormalizer::normal_form(const Letter& x) {
  if (auto it = memo_.find(x); it != memo_.end()) return it->second;
  auto rules = system_.rules_for(x);
  Multiplicities result;
  if (rules.empty()) {
    result.emplace(x, 1);
  } else {
    if (!in_progress_.insert(x).second)
      throw ResourceError("rewriting cycle through letter '" + x + "'");
    if (++steps_ > system_.budgets().max_steps) {
      in_progress_.erase(x);
      throw ResourceError("step budget exceeded while normalizing '" + x + "'");
    }
    try {
      for (const auto& y : rules.front().word())
        for (const auto& [z, k] : normal_form(y)) result[z] += k;
    } catch (...) {
      in_progress_.erase(x);
      throw;
    }
    in_progress_.erase(x);
  }
  return memo_.emplace(x, std::move(result)).first->second;
}

Multiplicities CommutativeNormalizer::normal_form(const Trace& t) {
  Multiplicities out;
  for (const auto& x : t.word())
    for (const auto& [z, k] : normal_form(x)) out[z] += k;
  return out;
}

}  // namespace tgrw
