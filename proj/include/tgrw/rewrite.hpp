#pragma once

// Alphabetic rewriting on traces: every left-hand side is a single letter,
// every right-hand side a nonempty trace.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tgrw/trace.hpp"

namespace tgrw {

struct Budgets {
  std::size_t max_steps = 100000;
  std::size_t max_nodes = 10000;
  std::size_t max_length = 10000;

  friend bool operator==(const Budgets&, const Budgets&) = default;
};

/// Right-hand sides for a letter, in a fixed order. Empty iff irreducible.
using RuleGenerator = std::function<std::vector<Word>(const Letter&)>;

namespace detail {
struct CertificateFactory;
}

/// Proof token issued by certify_convergence; only the convergence module
/// can mint one.
class ConvergenceCertificate {
 public:
  const std::string& scope() const { return scope_; }

 private:
  friend struct detail::CertificateFactory;
  explicit ConvergenceCertificate(std::string scope) : scope_(std::move(scope)) {}
  std::string scope_;
};

struct ReductSet {
  std::vector<Trace> reducts;  // sorted, deduplicated
  bool truncated = false;
};

enum class ReductionStatus { Normalized, StepBudgetExceeded, LengthBudgetExceeded };

struct ReductionReport {
  Trace trace;  // the normal form, or the last trace reached
  ReductionStatus status = ReductionStatus::Normalized;
  std::size_t steps = 0;

  bool ok() const { return status == ReductionStatus::Normalized; }
  bool budget_hit() const { return !ok(); }
};

enum class StrategyKind { Leftmost, Rightmost, Random };

struct Strategy {
  StrategyKind kind = StrategyKind::Leftmost;
  std::uint64_t seed = 0;
};

class RewriteSystem {
 public:
  RewriteSystem(AlphabetPtr alphabet, RuleGenerator rules, Budgets budgets = {});

  /// Finite system; rule letters are validated against the alphabet.
  static RewriteSystem finite(AlphabetPtr alphabet, const std::vector<std::pair<Letter, Word>>& rules,
                              Budgets budgets = {});

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const Budgets& budgets() const { return budgets_; }
  const std::optional<ConvergenceCertificate>& certificate() const { return certificate_; }

  RewriteSystem with_budgets(Budgets budgets) const;
  RewriteSystem with_certificate(ConvergenceCertificate certificate) const;

  /// All right-hand sides for x; validates x.
  std::vector<Trace> letter_rewrites(const Letter& x) const;
  /// Same without validating x (x must already be a letter).
  std::vector<Trace> rules_for(const Letter& x) const;
  bool is_reducible_letter(const Letter& x) const { return !rules_.generate(x).empty(); }

  /// Every class u.w.v with t = u.x.v and (x, w) a rule.
  ReductSet one_step_reducts(const Trace& t) const;

  ReductionReport normalize(const Trace& t, Strategy strategy = {}) const;

  bool is_irreducible(const Trace& t) const;

  /// Requires a convergence certificate.
  bool thue_equivalent(const Trace& t, const Trace& u) const;

  Trace trace(Word word) const { return Trace::canonicalize(std::move(word), alphabet_); }
  Trace letter(const Letter& x) const { return Trace::single(x, alphabet_); }

 private:
  struct Rules {
    RuleGenerator generator;
    std::vector<Word> generate(const Letter& x) const;
  };

  AlphabetPtr alphabet_;
  Rules rules_;
  Budgets budgets_;
  std::optional<ConvergenceCertificate> certificate_;
};

/// Letters of `letters` that admit no rule.
std::vector<Letter> irreducible_letters(const RewriteSystem& system, const std::vector<Letter>& letters);

/// Letter -> multiplicity view of a trace over a fully commutative alphabet.
using Multiplicities = std::map<Letter, std::int64_t>;

/// Memoized normal forms for systems whose alphabet commutes totally. A
/// normal form is kept as a multiplicity map instead of a sorted word. Each
/// letter is expanded with its first rule; memo entries are never evicted.
///
/// Not synchronized: confine an instance to one thread.
class CommutativeNormalizer {
 public:
  explicit CommutativeNormalizer(RewriteSystem system);

  const RewriteSystem& system() const { return system_; }

  /// Throws ResourceError on step-budget exhaustion or a rewriting cycle.
  const Multiplicities& normal_form(const Letter& x);
  Multiplicities normal_form(const Trace& t);

  std::size_t steps() const { return steps_; }

 private:
  RewriteSystem system_;
  std::unordered_map<Letter, Multiplicities> memo_;
  std::unordered_set<Letter> in_progress_;
  std::size_t steps_ = 0;
};

}  // namespace tgrw
