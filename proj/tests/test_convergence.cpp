#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "fixtures.hpp"
#include "tgrw/algebra_packs.hpp"
#include "tgrw/convergence.hpp"
#include "tgrw/errors.hpp"
#include "tgrw/graph_pack.hpp"

using namespace tgrw;

namespace {

RewriteSystem split_system() {
  auto al = CommutationAlphabet::finite({"x", "a", "b"}, CommutationKind::None);
  return RewriteSystem::finite(al, {{"x", {"a"}}, {"x", {"b"}}});
}

WeightCertificate table(std::map<Letter, std::int64_t> w) {
  return {"table", [w](const Letter& x) { return w.at(x); }};
}

}  // namespace

TEST_CASE("weight certificates") {
  auto pbw = pbw_system("abc");
  CHECK(verify_weight_certificate(pbw, pbw_inversion_weights("abc"), enumerated_scope(*pbw.alphabet(), 5))
            .termination == TerminationStatus::Certified);

  auto weyl = weyl_system();
  CHECK(verify_weight_certificate(weyl, weyl_inversion_weights(), enumerated_scope(*weyl.alphabet(), 6))
            .termination == TerminationStatus::Certified);

  auto al = CommutationAlphabet::finite({"x", "a"}, CommutationKind::None);
  auto dup = RewriteSystem::finite(al, {{"x", {"x", "x"}}});
  const auto r = verify_weight_certificate(dup, table({{"x", 5}, {"a", 1}}), full_scope(*al));
  CHECK(r.termination == TerminationStatus::RefutedByCycle);
  REQUIRE(r.weight_violation);
  CHECK(r.weight_violation->heavy == "x");

  auto down = RewriteSystem::finite(al, {{"x", {"a", "a"}}});
  CHECK(verify_weight_certificate(down, table({{"x", 1}, {"a", 1}}), full_scope(*al)).termination ==
        TerminationStatus::Unknown);
  CHECK_THROWS_AS(verify_weight_certificate(down, table({{"x", 2}, {"a", 0}}), full_scope(*al)), InputError);
}

TEST_CASE("non-confluent split yields a replayable counterexample") {
  const auto sys = split_system();
  const auto r = certify_convergence(sys, table({{"x", 2}, {"a", 1}, {"b", 1}}), full_scope(*sys.alphabet(), 2));
  CHECK(r.termination == TerminationStatus::Certified);
  CHECK(r.confluence == ConfluenceStatus::Counterexample);
  CHECK_FALSE(r.convergent());
  CHECK_FALSE(r.certificate);
  REQUIRE(r.counterexample);
  std::set<Word> sides{r.counterexample->left.word(), r.counterexample->right.word()};
  CHECK(sides == std::set<Word>{{"a"}, {"b"}});
  CHECK(r.counterexample->source.word() == Word{"x"});
  CHECK(replay_counterexample(sys, *r.counterexample));
  CHECK_THROWS_AS(require_convergent(sys, table({{"x", 2}, {"a", 1}, {"b", 1}}), full_scope(*sys.alphabet())),
                  PreconditionError);
}

TEST_CASE("empty rule set is convergent") {
  auto al = CommutationAlphabet::finite({"x", "y"}, CommutationKind::Relation, {{"x", "y"}});
  auto sys = RewriteSystem::finite(al, {});
  const auto r = certify_convergence(sys, table({{"x", 1}, {"y", 1}}), full_scope(*al, 3));
  CHECK(r.convergent());
  CHECK(r.certificate);
}

TEST_CASE("packs certify on their scopes") {
  auto pbw = pbw_system("abc");
  CHECK(check_local_confluence(pbw, enumerated_scope(*pbw.alphabet(), 4)).confluence ==
        ConfluenceStatus::VerifiedOnScope);
  auto weyl = weyl_system();
  CHECK(certify_convergence(weyl, weyl_inversion_weights(), enumerated_scope(*weyl.alphabet(), 6)).convergent());
  auto central = weyl_system(true);
  CHECK(certify_convergence(central, weyl_inversion_weights(), enumerated_scope(*central.alphabet(), 4)).convergent());
  auto fix = fixture::partial_system();
  const auto r = certify_convergence(fix, fixture::partial_weights(), full_scope(*fix.alphabet(), 3));
  CHECK(r.convergent());
  CHECK(r.full_alphabet);
  CHECK(r.max_trace_length == 3);
}

TEST_CASE("graph deletion-contraction: confluent up to three edges, not at four") {
  auto g = graph_system();
  const auto small = certify_convergence(g, GraphPack::edge_weights(), enumerated_scope(*g.alphabet(), 3));
  CHECK(small.termination == TerminationStatus::Certified);
  CHECK(small.convergent());

  const auto four = certify_convergence(g, GraphPack::edge_weights(), enumerated_scope(*g.alphabet(), 4));
  CHECK(four.termination == TerminationStatus::Certified);
  CHECK(four.confluence == ConfluenceStatus::Counterexample);
  REQUIRE(four.counterexample);
  CHECK(replay_counterexample(g, *four.counterexample));
}

TEST_CASE("budget exhaustion is a report state") {
  // x -> xx | a never terminates, so neither side of the peak closes
  auto al = CommutationAlphabet::finite({"x", "a"}, CommutationKind::None);
  auto grow = RewriteSystem::finite(al, {{"x", {"x", "x"}}, {"x", {"a"}}}, Budgets{1000, 50, 100});
  const auto r = check_local_confluence(grow, full_scope(*al));
  CHECK(r.confluence == ConfluenceStatus::BudgetExhausted);
  CHECK_FALSE(r.counterexample);
}

TEST_CASE("certified terminating systems never cycle under random rewriting") {
  const auto sys = fixture::partial_system();
  REQUIRE(verify_weight_certificate(sys, fixture::partial_weights(), full_scope(*sys.alphabet())).termination ==
          TerminationStatus::Certified);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto t = sys.trace(fixture::random_word(rng, fixture::partial_letters(), 1, 8));
    std::set<Word> seen{t.word()};
    for (int step = 0; step < 1000; ++step) {
      const auto rs = sys.one_step_reducts(t).reducts;
      if (rs.empty()) break;
      t = rs[std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(rng)];
      CHECK(seen.insert(t.word()).second);
    }
  }
}

TEST_CASE("status strings") {
  CHECK(to_string(TerminationStatus::RefutedByCycle) == "refuted-by-cycle");
  CHECK(to_string(ConfluenceStatus::VerifiedOnScope) == "verified-on-scope");
  CHECK(to_string(ConfluenceStatus::BudgetExhausted) == "budget-exhausted");
}
