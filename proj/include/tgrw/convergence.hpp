#pragma once

// Termination by weight certificates and bounded local-confluence checking.
// Every verdict is scoped: a report says which letters and trace lengths it
// covers, and sample-scoped verdicts are never promoted to global claims.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tgrw/rewrite.hpp"

namespace tgrw {

struct WeightCertificate {
  std::string name;
  std::function<std::int64_t(const Letter&)> weight;
};

struct Scope {
  std::vector<Letter> letters;
  std::size_t max_trace_length = 1;
  bool full_alphabet = false;  // letters is the whole (finite) alphabet
  std::string description;
};

/// Scope made of every letter the alphabet enumerates up to `size`.
Scope enumerated_scope(const CommutationAlphabet& alphabet, std::size_t size, std::size_t max_trace_length = 1);

/// Scope covering a finite alphabet entirely.
Scope full_scope(const CommutationAlphabet& alphabet, std::size_t max_trace_length = 1);

enum class TerminationStatus { Certified, Unknown, RefutedByCycle };
enum class ConfluenceStatus { NotChecked, VerifiedOnScope, Counterexample, BudgetExhausted };

/// A peak source => left, source => right whose bounded reduct closures are
/// disjoint.
struct Peak {
  Trace source;
  Trace left;
  Trace right;
  std::size_t left_closure = 0;
  std::size_t right_closure = 0;
};

struct WeightViolation {
  Letter lhs;
  Trace rhs;
  Letter heavy;  // letter of rhs not strictly lighter than lhs
};

struct ConvergenceReport {
  TerminationStatus termination = TerminationStatus::Unknown;
  ConfluenceStatus confluence = ConfluenceStatus::NotChecked;
  std::string scope_description;
  std::size_t scope_letters = 0;
  std::size_t max_trace_length = 0;
  bool full_alphabet = false;
  std::size_t rules_checked = 0;
  std::size_t peaks_checked = 0;
  std::optional<WeightViolation> weight_violation;
  std::optional<Peak> counterexample;
  std::optional<ConvergenceCertificate> certificate;

  bool convergent() const {
    return termination == TerminationStatus::Certified && confluence == ConfluenceStatus::VerifiedOnScope;
  }
};

/// Certified iff every rule in scope sends its letter to strictly lighter
/// letters. Throws InputError on a non-positive weight.
ConvergenceReport verify_weight_certificate(const RewriteSystem& system, const WeightCertificate& certificate,
                                            const Scope& scope);

/// Rule-level peaks plus a bounded model check of every trace up to the
/// scope's length over the scope's letters.
ConvergenceReport check_local_confluence(const RewriteSystem& system, const Scope& scope);

/// Termination and local confluence on scope; a convergent report carries a
/// certificate that unlocks thue_equivalent and universal_invariant.
ConvergenceReport certify_convergence(const RewriteSystem& system, const WeightCertificate& certificate,
                                      const Scope& scope);

/// Certifies and attaches the certificate; throws PreconditionError otherwise.
RewriteSystem require_convergent(const RewriteSystem& system, const WeightCertificate& certificate,
                                 const Scope& scope);

/// Every trace reachable from `start` within the node budget (start included).
struct Closure {
  std::vector<Trace> traces;  // sorted
  bool complete = true;
};
Closure reduct_closure(const RewriteSystem& system, const Trace& start);

/// True iff the peak's two bounded closures are again complete and disjoint.
bool replay_counterexample(const RewriteSystem& system, const Peak& peak);

std::string to_string(TerminationStatus status);
std::string to_string(ConfluenceStatus status);

}  // namespace tgrw
