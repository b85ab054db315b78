#include "tgrw/convergence.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "tgrw/errors.hpp"

namespace tgrw {

namespace detail {
struct CertificateFactory {
  static ConvergenceCertificate issue(std::string scope) { return ConvergenceCertificate(std::move(scope)); }
};
}  // namespace detail

namespace {

std::string describe(const Scope& scope) {
  if (!scope.description.empty()) return scope.description;
  std::ostringstream os;
  os << scope.letters.size() << " letters, traces of length <= " << scope.max_trace_length;
  if (scope.full_alphabet) os << " (full alphabet)";
  return os.str();
}

void fill_scope(ConvergenceReport& report, const Scope& scope) {
  report.scope_description = describe(scope);
  report.scope_letters = scope.letters.size();
  report.max_trace_length = scope.max_trace_length;
  report.full_alphabet = scope.full_alphabet;
}

enum class Join { Joinable, Disjoint, Unknown };

struct JoinResult {
  Join verdict;
  std::size_t left_closure = 0;
  std::size_t right_closure = 0;
};

JoinResult joinable(const RewriteSystem& system, const Trace& a, const Trace& b) {
  if (a == b) return {Join::Joinable};
  // Common normal form under the default strategy is already a common reduct.
  auto na = system.normalize(a);
  auto nb = system.normalize(b);
  if (na.ok() && nb.ok() && na.trace == nb.trace) return {Join::Joinable};

  auto ca = reduct_closure(system, a);
  auto cb = reduct_closure(system, b);
  std::vector<Trace> common;
  std::set_intersection(ca.traces.begin(), ca.traces.end(), cb.traces.begin(), cb.traces.end(),
                        std::back_inserter(common));
  if (!common.empty()) return {Join::Joinable, ca.traces.size(), cb.traces.size()};
  if (ca.complete && cb.complete) return {Join::Disjoint, ca.traces.size(), cb.traces.size()};
  return {Join::Unknown, ca.traces.size(), cb.traces.size()};
}

// Canonical traces of length 1..max_len over `letters`.
std::vector<Trace> scoped_traces(const RewriteSystem& system, const Scope& scope) {
  std::set<Trace> out;
  const auto& letters = scope.letters;
  if (letters.empty()) return {};
  std::vector<std::size_t> idx;
  for (std::size_t len = 1; len <= scope.max_trace_length; ++len) {
    idx.assign(len, 0);
    while (true) {
      Word w;
      w.reserve(len);
      for (auto i : idx) w.push_back(letters[i]);
      out.insert(Trace::from_letters(std::move(w), system.alphabet()));
      std::size_t k = len;
      while (k > 0 && ++idx[k - 1] == letters.size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

Scope enumerated_scope(const CommutationAlphabet& alphabet, std::size_t size, std::size_t max_trace_length) {
  Scope scope;
  scope.letters = alphabet.enumerate_up_to(size);
  scope.max_trace_length = max_trace_length;
  std::ostringstream os;
  os << alphabet.name() << " letters up to size " << size << " (" << scope.letters.size()
     << " letters), traces of length <= " << max_trace_length;
  scope.description = os.str();
  return scope;
}

Scope full_scope(const CommutationAlphabet& alphabet, std::size_t max_trace_length) {
  Scope scope = enumerated_scope(alphabet, 0, max_trace_length);
  scope.full_alphabet = true;
  std::ostringstream os;
  os << "all " << scope.letters.size() << " letters, traces of length <= " << max_trace_length;
  scope.description = os.str();
  return scope;
}

ConvergenceReport verify_weight_certificate(const RewriteSystem& system, const WeightCertificate& certificate,
                                            const Scope& scope) {
  if (!certificate.weight) throw InputError("weight certificate '" + certificate.name + "' has no weight function");
  ConvergenceReport report;
  fill_scope(report, scope);
  auto weight_of = [&](const Letter& x) {
    auto w = certificate.weight(x);
    if (w <= 0) throw InputError("weight of '" + x + "' must be positive, got " + std::to_string(w));
    return w;
  };

  report.termination = TerminationStatus::Certified;
  for (const auto& x : scope.letters) {
    const auto wx = weight_of(x);
    for (const auto& rhs : system.rules_for(x)) {
      ++report.rules_checked;
      if (std::find(rhs.word().begin(), rhs.word().end(), x) != rhs.word().end()) {
        report.termination = TerminationStatus::RefutedByCycle;
        report.weight_violation = WeightViolation{x, rhs, x};
        return report;
      }
      for (const auto& y : rhs.word()) {
        if (weight_of(y) >= wx) {
          if (!report.weight_violation) report.weight_violation = WeightViolation{x, rhs, y};
          report.termination = TerminationStatus::Unknown;
        }
      }
    }
  }
  return report;
}

ConvergenceReport check_local_confluence(const RewriteSystem& system, const Scope& scope) {
  ConvergenceReport report;
  fill_scope(report, scope);
  bool exhausted = false;

  auto check_pair = [&](const Trace& source, const Trace& a, const Trace& b) {
    ++report.peaks_checked;
    auto r = joinable(system, a, b);
    if (r.verdict == Join::Disjoint) {
      report.counterexample = Peak{source, a, b, r.left_closure, r.right_closure};
      return false;
    }
    if (r.verdict == Join::Unknown) exhausted = true;
    return true;
  };

  // Rule-level peaks.
  for (const auto& x : scope.letters) {
    auto rules = system.rules_for(x);
    report.rules_checked += rules.size();
    if (rules.size() < 2) continue;
    const Trace source = Trace::from_letters({x}, system.alphabet());
    for (std::size_t i = 0; i < rules.size(); ++i)
      for (std::size_t j = i + 1; j < rules.size(); ++j)
        if (!check_pair(source, rules[i], rules[j])) {
          report.confluence = ConfluenceStatus::Counterexample;
          return report;
        }
  }

  // Bounded model check over longer traces.
  if (scope.max_trace_length >= 2) {
    for (const auto& t : scoped_traces(system, scope)) {
      if (t.length() < 2) continue;
      auto reducts = system.one_step_reducts(t);
      if (reducts.truncated) exhausted = true;
      const auto& rs = reducts.reducts;
      for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.size(); ++j)
          if (!check_pair(t, rs[i], rs[j])) {
            report.confluence = ConfluenceStatus::Counterexample;
            return report;
          }
    }
  }

  report.confluence = exhausted ? ConfluenceStatus::BudgetExhausted : ConfluenceStatus::VerifiedOnScope;
  return report;
}

ConvergenceReport certify_convergence(const RewriteSystem& system, const WeightCertificate& certificate,
                                      const Scope& scope) {
  auto report = verify_weight_certificate(system, certificate, scope);
  auto confluence = check_local_confluence(system, scope);
  report.confluence = confluence.confluence;
  report.peaks_checked = confluence.peaks_checked;
  report.counterexample = std::move(confluence.counterexample);
  if (report.convergent())
    report.certificate = detail::CertificateFactory::issue("convergent on " + report.scope_description +
                                                           " with weights '" + certificate.name + "'");
  return report;
}

RewriteSystem require_convergent(const RewriteSystem& system, const WeightCertificate& certificate,
                                 const Scope& scope) {
  auto report = certify_convergence(system, certificate, scope);
  if (!report.certificate)
    throw PreconditionError("system is not convergent on " + report.scope_description + " (termination " +
                            to_string(report.termination) + ", local confluence " + to_string(report.confluence) +
                            ")");
  return system.with_certificate(*report.certificate);
}

Closure reduct_closure(const RewriteSystem& system, const Trace& start) {
  const std::size_t budget = system.budgets().max_nodes;
  std::set<Trace> seen{start};
  std::deque<Trace> queue{start};
  Closure closure;
  while (!queue.empty()) {
    Trace t = std::move(queue.front());
    queue.pop_front();
    auto next = system.one_step_reducts(t);
    if (next.truncated) closure.complete = false;
    for (auto& r : next.reducts) {
      if (seen.count(r)) continue;
      if (seen.size() >= budget) {
        closure.complete = false;
        queue.clear();
        break;
      }
      seen.insert(r);
      queue.push_back(std::move(r));
    }
  }
  closure.traces.assign(seen.begin(), seen.end());
  return closure;
}

bool replay_counterexample(const RewriteSystem& system, const Peak& peak) {
  auto reducts = system.one_step_reducts(peak.source).reducts;
  auto is_reduct = [&](const Trace& t) { return std::binary_search(reducts.begin(), reducts.end(), t); };
  if (!is_reduct(peak.left) || !is_reduct(peak.right)) return false;
  auto a = reduct_closure(system, peak.left);
  auto b = reduct_closure(system, peak.right);
  if (!a.complete || !b.complete) return false;
  std::vector<Trace> common;
  std::set_intersection(a.traces.begin(), a.traces.end(), b.traces.begin(), b.traces.end(),
                        std::back_inserter(common));
  return common.empty();
}

std::string to_string(TerminationStatus status) {
  switch (status) {
    case TerminationStatus::Certified:
      return "certified";
    case TerminationStatus::Unknown:
      return "unknown";
    case TerminationStatus::RefutedByCycle:
      return "refuted-by-cycle";
  }
  return "unknown";
}

std::string to_string(ConfluenceStatus status) {
  switch (status) {
    case ConfluenceStatus::NotChecked:
      return "not-checked";
    case ConfluenceStatus::VerifiedOnScope:
      return "verified-on-scope";
    case ConfluenceStatus::Counterexample:
      return "counterexample";
    case ConfluenceStatus::BudgetExhausted:
      return "budget-exhausted";
  }
  return "not-checked";
}

}  // namespace tgrw
