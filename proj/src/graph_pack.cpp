#include "tgrw/graph_pack.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "tgrw/errors.hpp"
#include "tgrw/tg_group.hpp"

namespace tgrw {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      auto& p = parent[static_cast<std::size_t>(v)];
      p = parent[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

using Matrix = std::vector<std::vector<int>>;

Matrix multiplicities(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertices);
  Matrix m(n, std::vector<int>(n, 0));
  for (auto [u, v] : g.edges) {
    ++m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    if (u != v) ++m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
  }
  return m;
}

// Minimal column-major upper-triangle code over all labelings that list
// vertices by nondecreasing invariant. Branch and bound on the code prefix.
class CanonicalLabeler {
 public:
  explicit CanonicalLabeler(const Multigraph& g) : n_(static_cast<std::size_t>(g.vertices)), m_(multiplicities(g)) {
    std::vector<int> degree(n_, 0);
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t w = 0; w < n_; ++w) degree[v] += (v == w ? 2 : 1) * m_[v][w];
    invariant_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      auto& inv = invariant_[v];
      inv.push_back(degree[v]);
      inv.push_back(m_[v][v]);
      std::vector<int> nbr;
      for (std::size_t w = 0; w < n_; ++w)
        if (w != v)
          for (int k = 0; k < m_[v][w]; ++k) nbr.push_back(degree[w]);
      std::sort(nbr.begin(), nbr.end());
      inv.insert(inv.end(), nbr.begin(), nbr.end());
    }
    slot_invariant_ = invariant_;
    std::sort(slot_invariant_.begin(), slot_invariant_.end());
    used_.assign(n_, false);
  }

  std::vector<int> run() {
    dfs(0);
    return best_;
  }

 private:
  // Prefixes are compared against the current best afresh at every node,
  // since the best code can change while a branch is open.
  void dfs(std::size_t p) {
    if (p == n_) {
      if (!have_best_ || current_ < best_) {
        best_ = current_;
        have_best_ = true;
      }
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v] || invariant_[v] != slot_invariant_[p]) continue;
      const std::size_t mark = current_.size();
      perm_.push_back(v);
      for (std::size_t i = 0; i <= p; ++i) current_.push_back(m_[perm_[i]][v]);
      const bool worse = have_best_ && std::lexicographical_compare(best_.begin(), best_.begin() + static_cast<std::ptrdiff_t>(current_.size()),
                                                                    current_.begin(), current_.end());
      if (!worse) {
        used_[v] = true;
        dfs(p + 1);
        used_[v] = false;
      }
      perm_.pop_back();
      current_.resize(mark);
    }
  }

  std::size_t n_;
  Matrix m_;
  std::vector<std::vector<int>> invariant_;
  std::vector<std::vector<int>> slot_invariant_;
  std::vector<bool> used_;
  std::vector<std::size_t> perm_;
  std::vector<int> current_;
  std::vector<int> best_;
  bool have_best_ = false;
};

int parse_int(std::string_view s, const Letter& token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw InputError("malformed graph certificate '" + token + "'");
  return value;
}

}  // namespace

void Multigraph::validate() const {
  if (vertices < 1) throw InputError("a multigraph needs at least one vertex");
  for (auto [u, v] : edges)
    if (u < 0 || v < 0 || u >= vertices || v >= vertices)
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside [0," +
                       std::to_string(vertices) + ")");
}

int Multigraph::components() const {
  DisjointSets sets(vertices);
  int count = vertices;
  for (auto [u, v] : edges)
    if (sets.unite(u, v)) --count;
  return count;
}

std::string to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Loop:
      return "loop";
    case EdgeKind::Bridge:
      return "bridge";
    case EdgeKind::Link:
      return "link";
  }
  return "link";
}

Letter canonical_certificate(const Multigraph& g, int vertex_cap) {
  g.validate();
  if (g.vertices > vertex_cap)
    throw ResourceError("multigraph has " + std::to_string(g.vertices) + " vertices, above the cap of " +
                        std::to_string(vertex_cap));
  const auto code = CanonicalLabeler(g).run();
  std::ostringstream os;
  os << 'G' << g.vertices << ':';
  for (std::size_t i = 0; i < code.size(); ++i) os << (i ? "." : "") << code[i];
  return os.str();
}

Multigraph decode_certificate(const Letter& certificate) {
  if (certificate.size() < 4 || certificate.front() != 'G') throw InputError("malformed graph certificate '" + certificate + "'");
  const auto colon = certificate.find(':');
  if (colon == std::string::npos) throw InputError("malformed graph certificate '" + certificate + "'");
  Multigraph g;
  g.vertices = parse_int(std::string_view(certificate).substr(1, colon - 1), certificate);
  if (g.vertices < 1 || g.vertices > 64) throw InputError("malformed graph certificate '" + certificate + "'");
  std::vector<int> code;
  std::string_view rest = std::string_view(certificate).substr(colon + 1);
  while (true) {
    const auto dot = rest.find('.');
    code.push_back(parse_int(rest.substr(0, dot), certificate));
    if (dot == std::string_view::npos) break;
    rest.remove_prefix(dot + 1);
  }
  const auto n = static_cast<std::size_t>(g.vertices);
  if (code.size() != n * (n + 1) / 2) throw InputError("malformed graph certificate '" + certificate + "'");
  std::size_t k = 0;
  for (int p = 0; p < g.vertices; ++p)
    for (int i = 0; i <= p; ++i) {
      const int mult = code[k++];
      if (mult < 0) throw InputError("malformed graph certificate '" + certificate + "'");
      for (int e = 0; e < mult; ++e) g.edges.emplace_back(i, p);
    }
  return g;
}

EdgeKind edge_classify(const Multigraph& g, std::size_t edge_index) {
  g.validate();
  if (edge_index >= g.edges.size())
    throw InputError("edge index " + std::to_string(edge_index) + " is not an edge of the multigraph");
  const auto [u, v] = g.edges[edge_index];
  if (u == v) return EdgeKind::Loop;
  DisjointSets sets(g.vertices);
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (i != edge_index) sets.unite(g.edges[i].first, g.edges[i].second);
  return sets.find(u) == sets.find(v) ? EdgeKind::Link : EdgeKind::Bridge;
}

Multigraph delete_edge(const Multigraph& g, std::size_t edge_index) {
  if (edge_index >= g.edges.size()) throw InputError("edge index " + std::to_string(edge_index) + " out of range");
  Multigraph out = g;
  out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(edge_index));
  return out;
}

Multigraph contract_edge(const Multigraph& g, std::size_t edge_index) {
  if (edge_index >= g.edges.size()) throw InputError("edge index " + std::to_string(edge_index) + " out of range");
  auto [keep, gone] = g.edges[edge_index];
  if (keep == gone) throw DomainError("cannot contract a loop");
  if (gone < keep) std::swap(keep, gone);
  auto relabel = [&](int w) {
    if (w == gone) w = keep;
    return w > gone ? w - 1 : w;
  };
  Multigraph out;
  out.vertices = g.vertices - 1;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i == edge_index) continue;
    out.edges.emplace_back(relabel(g.edges[i].first), relabel(g.edges[i].second));
  }
  return out;
}

std::size_t count_edges(const Multigraph& g, EdgeKind kind) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (edge_classify(g, i) == kind) ++count;
  return count;
}

std::vector<Multigraph> enumerate_multigraphs(int max_vertices, int max_edges, bool connected_only) {
  std::set<Letter> seen;
  std::vector<Multigraph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    if (connected_only && n - 1 > max_edges) break;
    std::vector<std::pair<int, int>> slots;
    for (int v = 0; v < n; ++v)
      for (int u = 0; u <= v; ++u) slots.emplace_back(u, v);
    // Multisets of slots, as nondecreasing slot-index sequences.
    std::vector<std::size_t> pick;
    auto visit = [&](auto&& self, std::size_t from) -> void {
      Multigraph g{n, {}};
      for (auto s : pick) g.edges.push_back(slots[s]);
      if (!connected_only || g.connected()) {
        auto cert = canonical_certificate(g, max_vertices);
        if (seen.insert(cert).second) out.push_back(decode_certificate(cert));
      }
      if (static_cast<int>(pick.size()) == max_edges) return;
      for (std::size_t s = from; s < slots.size(); ++s) {
        pick.push_back(s);
        self(self, s);
        pick.pop_back();
      }
    };
    visit(visit, 0);
  }
  return out;
}

BivarPoly tutte_oracle(const Multigraph& g) {
  g.validate();
  const std::size_t m = g.edges.size();
  if (m > 20) throw ResourceError("subset expansion needs at most 20 edges, got " + std::to_string(m));
  const int rank_all = g.vertices - g.components();
  // counts[a][b] = number of subsets with corank a and nullity b.
  std::map<std::pair<int, int>, std::int64_t> counts;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    DisjointSets sets(g.vertices);
    int rank = 0;
    int size = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1U << i)) {
        ++size;
        if (sets.unite(g.edges[i].first, g.edges[i].second)) ++rank;
      }
    ++counts[{rank_all - rank, size - rank}];
  }
  const BivarPoly xm1 = BivarPoly::x() - BivarPoly::constant(1);
  const BivarPoly ym1 = BivarPoly::y() - BivarPoly::constant(1);
  BivarPoly total;
  for (const auto& [ab, c] : counts)
    total += BivarPoly::constant(c) * xm1.pow(static_cast<unsigned>(ab.first)) * ym1.pow(static_cast<unsigned>(ab.second));
  return total;
}

RewriteSystem graph_system(GraphPackOptions options) {
  const int cap = options.vertex_cap;
  CommutationAlphabet::Config config;
  config.name = "multigraphs";
  config.kind = CommutationKind::Total;
  config.is_letter = [cap](const Letter& x) {
    try {
      auto g = decode_certificate(x);
      return g.vertices <= cap && canonical_certificate(g, cap) == x;
    } catch (const Error&) {
      return false;
    }
  };
  config.enumerate_up_to = [cap](std::size_t max_edges) {
    std::vector<Letter> out;
    const int edges = static_cast<int>(max_edges);
    for (const auto& g : enumerate_multigraphs(std::min(cap, edges + 1), edges, true))
      out.push_back(canonical_certificate(g, cap));
    return out;
  };
  auto rules = [cap](const Letter& x) {
    const auto g = decode_certificate(x);
    std::vector<Word> out;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      if (edge_classify(g, e) == EdgeKind::Link)
        out.push_back({canonical_certificate(delete_edge(g, e), cap), canonical_certificate(contract_edge(g, e), cap)});
    return out;
  };
  return RewriteSystem(CommutationAlphabet::make(std::move(config)), std::move(rules), options.budgets);
}

GraphPack::GraphPack(GraphPackOptions options) : options_(options), normalizer_(graph_system(options)) {}

std::vector<Trace> GraphPack::deletion_contraction_rules(const Multigraph& g) const {
  return system().rules_for(letter(g));
}

const Multiplicities& GraphPack::normal_form(const Multigraph& g) { return normalizer_.normal_form(letter(g)); }

BivarPoly GraphPack::bridge_loop_monomial(const Letter& certificate) {
  const auto h = decode_certificate(certificate);
  return BivarPoly::monomial(static_cast<int>(count_edges(h, EdgeKind::Bridge)),
                             static_cast<int>(count_edges(h, EdgeKind::Loop)));
}

BivarPoly GraphPack::tutte_polynomial(const Multigraph& g) {
  const auto element = TGElement::from_exponents(normal_form(g), system().alphabet());
  GroupCallbacks<BivarPoly> additive;
  additive.multiply = [](const BivarPoly& a, const BivarPoly& b) { return a + b; };
  additive.invert = [](const BivarPoly& a) { return -a; };
  additive.identity = BivarPoly{};
  additive.image = &GraphPack::bridge_loop_monomial;
  return extend_homomorphism(additive, element);
}

WeightCertificate GraphPack::edge_weights() {
  return {"edges", [](const Letter& x) { return static_cast<std::int64_t>(decode_certificate(x).edges.size()) + 1; }};
}

}  // namespace tgrw
