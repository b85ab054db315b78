#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "tgrw/errors.hpp"
#include "tgrw/graph_pack.hpp"

using namespace tgrw;

namespace {

Multigraph mg(int n, std::vector<std::pair<int, int>> edges) { return Multigraph{n, std::move(edges)}; }

Multigraph cycle(int n) {
  Multigraph g{n, {}};
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

Multigraph complete(int n) {
  Multigraph g{n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

std::vector<std::pair<int, int>> normalized_edges(const Multigraph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g.edges) {
    int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool brute_isomorphic(const Multigraph& g, const Multigraph& h) {
  if (g.vertices != h.vertices || g.edges.size() != h.edges.size()) return false;
  std::vector<int> id(static_cast<std::size_t>(g.vertices));
  std::iota(id.begin(), id.end(), 0);
  const auto target = normalized_edges(h, id);
  auto perm = id;
  do {
    if (normalized_edges(g, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Multigraph disjoint_union(const Multigraph& g, const Multigraph& h) {
  Multigraph u{g.vertices + h.vertices, g.edges};
  for (auto [a, b] : h.edges) u.edges.emplace_back(a + g.vertices, b + g.vertices);
  return u;
}

Multigraph from_oracle(const std::pair<int, std::vector<std::pair<int, int>>>& r) { return mg(r.first, r.second); }

}  // namespace

TEST_CASE("certificates identify isomorphism classes") {
  CHECK(canonical_certificate(mg(3, {{0, 1}, {1, 2}})) == canonical_certificate(mg(3, {{2, 0}, {0, 1}})));
  CHECK(canonical_certificate(complete(3)) != canonical_certificate(mg(3, {{0, 1}, {1, 2}})));
  const auto two_triangles = disjoint_union(complete(3), complete(3));
  CHECK(canonical_certificate(cycle(6)) != canonical_certificate(two_triangles));
  CHECK_FALSE(brute_isomorphic(cycle(6), two_triangles));
  CHECK(canonical_certificate(mg(1, {})) == "G1:0");
  CHECK_THROWS_AS(canonical_certificate(mg(11, {})), ResourceError);
  CHECK_THROWS_AS(canonical_certificate(mg(4, {}), 3), ResourceError);
  CHECK_THROWS_AS(canonical_certificate(mg(2, {{0, 2}})), InputError);
}

TEST_CASE("certificates agree with brute-force isomorphism") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = from_oracle(oracle::random_multigraph(rng, 5, 6));
    // a relabeled copy always matches
    std::vector<int> perm(static_cast<std::size_t>(g.vertices));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Multigraph h{g.vertices, {}};
    for (auto [u, v] : g.edges) h.edges.emplace_back(perm[static_cast<std::size_t>(v)], perm[static_cast<std::size_t>(u)]);
    std::shuffle(h.edges.begin(), h.edges.end(), rng);
    CHECK(canonical_certificate(g) == canonical_certificate(h));
    // against an independent random graph with the same sizes
    auto k = from_oracle(oracle::random_multigraph(rng, 5, 6));
    CHECK((canonical_certificate(g) == canonical_certificate(k)) == brute_isomorphic(g, k));
    CHECK(canonical_certificate(decode_certificate(canonical_certificate(g))) == canonical_certificate(g));
  }
}

TEST_CASE("equal degree sequences, different graphs") {
  // 3-regular on 6 vertices: prism and K_{3,3}
  const auto prism = mg(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  const auto k33 = mg(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK_FALSE(brute_isomorphic(prism, k33));
  CHECK(canonical_certificate(prism) != canonical_certificate(k33));
}

TEST_CASE("edge classification") {
  CHECK(edge_classify(mg(1, {{0, 0}}), 0) == EdgeKind::Loop);
  CHECK(edge_classify(mg(2, {{0, 1}}), 0) == EdgeKind::Bridge);
  for (std::size_t e = 0; e < 3; ++e) CHECK(edge_classify(complete(3), e) == EdgeKind::Link);
  CHECK(edge_classify(mg(2, {{0, 1}, {0, 1}}), 1) == EdgeKind::Link);
  // a bridge inside one component of a disconnected graph
  CHECK(edge_classify(mg(4, {{0, 1}, {2, 3}, {2, 3}}), 0) == EdgeKind::Bridge);
  CHECK_THROWS_AS(edge_classify(complete(3), 3), InputError);
  CHECK(to_string(EdgeKind::Link) == "link");
}

TEST_CASE("deletion-contraction rules") {
  GraphPack pack;
  const auto tri = pack.deletion_contraction_rules(complete(3));
  REQUIRE(tri.size() == 3);
  Word expected{canonical_certificate(mg(3, {{0, 1}, {1, 2}})), canonical_certificate(mg(2, {{0, 1}, {0, 1}}))};
  std::sort(expected.begin(), expected.end());
  for (const auto& rhs : tri) {
    auto w = rhs.word();
    std::sort(w.begin(), w.end());
    CHECK(w == expected);
  }
  CHECK(pack.deletion_contraction_rules(mg(2, {{0, 1}})).empty());
  CHECK(pack.deletion_contraction_rules(mg(1, {{0, 0}, {0, 0}})).empty());
  CHECK_THROWS_AS(contract_edge(mg(1, {{0, 0}}), 0), DomainError);
}

TEST_CASE("Tutte polynomial examples") {
  GraphPack pack;
  const auto x = BivarPoly::x(), y = BivarPoly::y();
  CHECK(pack.tutte_polynomial(mg(2, {{0, 1}})) == x);
  CHECK(pack.tutte_polynomial(mg(1, {{0, 0}})) == y);
  CHECK(pack.tutte_polynomial(complete(3)) == x.pow(2) + x + y);
  CHECK(pack.tutte_polynomial(cycle(4)) == x.pow(3) + x.pow(2) + x + y);
  const auto k4 = x.pow(3) + BivarPoly::monomial(2, 0, 3) + BivarPoly::monomial(1, 0, 2) +
                  BivarPoly::monomial(1, 1, 4) + BivarPoly::monomial(0, 1, 2) + BivarPoly::monomial(0, 2, 3) + y.pow(3);
  CHECK(pack.tutte_polynomial(complete(4)) == k4);
  CHECK(k4.to_string() == "x^3 + y^3 + 3*x^2 + 4*x*y + 3*y^2 + 2*x + 2*y");
  CHECK(tutte_oracle(mg(2, {{0, 1}})) == x);
  CHECK(tutte_oracle(mg(2, {{0, 1}, {0, 1}})) == x + y);
  CHECK(tutte_oracle(cycle(4)) == x.pow(3) + x.pow(2) + x + y);
  CHECK(tutte_oracle(complete(4)) == k4);
  CHECK(pack.tutte_polynomial(mg(3, {})) == BivarPoly::constant(1));
  CHECK_THROWS_AS(tutte_oracle(mg(2, std::vector<std::pair<int, int>>(21, {0, 1}))), ResourceError);
}

TEST_CASE("tutte_oracle agrees with an independent point evaluation") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const auto r = oracle::random_multigraph(rng, 5, 7);
    const auto p = tutte_oracle(from_oracle(r));
    for (auto [px, py] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {-1, 4}, {3, -2}})
      CHECK(p.evaluate(px, py) == oracle::tutte_at(r.first, r.second, px, py));
  }
}

TEST_CASE("Tutte polynomial equals the oracle on all small connected multigraphs") {
  GraphPack pack;
  const auto graphs = enumerate_multigraphs(4, 6, true);
  CHECK(graphs.size() > 100);
  for (const auto& g : graphs) {
    CHECK(g.connected());
    CHECK(pack.tutte_polynomial(g) == tutte_oracle(g));
  }
}

TEST_CASE("Tutte polynomial on random multigraphs, and disjoint unions multiply") {
  GraphPack pack;
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = from_oracle(oracle::random_multigraph(rng, 6, 8));
    CHECK(pack.tutte_polynomial(g) == tutte_oracle(g));
  }
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = from_oracle(oracle::random_multigraph(rng, 3, 4));
    const auto h = from_oracle(oracle::random_multigraph(rng, 3, 4));
    CHECK(pack.tutte_polynomial(disjoint_union(g, h)) == tutte_oracle(g) * tutte_oracle(h));
  }
}

TEST_CASE("rewriting preserves connectivity") {
  GraphPack pack;
  for (const auto& g : enumerate_multigraphs(4, 5, true))
    for (const auto& rhs : pack.deletion_contraction_rules(g))
      for (const auto& letter : rhs.word()) CHECK(decode_certificate(letter).connected());
}

TEST_CASE("link choice changes irreducible graphs but not the Tutte evaluation") {
  auto sys = graph_system();
  auto eval = [](const Trace& t) {
    BivarPoly sum;
    for (const auto& l : t.word()) sum += GraphPack::bridge_loop_monomial(l);
    return sum;
  };
  bool multiset_differs = false;
  for (const auto& g : enumerate_multigraphs(4, 5, true)) {
    const auto t = sys.letter(canonical_certificate(g));
    const auto left = sys.normalize(t, {StrategyKind::Leftmost, 0});
    const auto right = sys.normalize(t, {StrategyKind::Rightmost, 0});
    REQUIRE(left.ok());
    REQUIRE(right.ok());
    CHECK(eval(left.trace) == eval(right.trace));
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto rnd = sys.normalize(t, {StrategyKind::Random, seed});
      CHECK(eval(rnd.trace) == eval(left.trace));
      multiset_differs = multiset_differs || !(rnd.trace == left.trace);
    }
    multiset_differs = multiset_differs || !(left.trace == right.trace);
  }
  // the triangle with a loop separates the two deletions
  CHECK(multiset_differs);
  const auto loop_triangle = mg(3, {{0, 1}, {0, 2}, {1, 2}, {2, 2}});
  const auto d01 = delete_edge(loop_triangle, 0);
  const auto d02 = delete_edge(loop_triangle, 1);
  CHECK(count_edges(d01, EdgeKind::Link) == 0);
  CHECK(count_edges(d02, EdgeKind::Link) == 0);
  CHECK(canonical_certificate(d01) != canonical_certificate(d02));
}

TEST_CASE("edge weights certify termination") {
  auto sys = graph_system();
  const auto r = verify_weight_certificate(sys, GraphPack::edge_weights(), enumerated_scope(*sys.alphabet(), 5));
  CHECK(r.termination == TerminationStatus::Certified);
}

TEST_CASE("bivariate polynomial arithmetic") {
  const auto x = BivarPoly::x(), y = BivarPoly::y();
  const auto p = (x + y).pow(3);
  CHECK(p.coeff(2, 1) == 3);
  CHECK(p.evaluate(2, 5) == 343);
  CHECK((p - p).is_zero());
  CHECK((x - x).terms().empty());
  CHECK((-x).coeff(1, 0) == -1);
  CHECK(((x + BivarPoly::constant(1)) * (x - BivarPoly::constant(1))) == x.pow(2) - BivarPoly::constant(1));
}
