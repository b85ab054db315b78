#pragma once

// Deletion-contraction as an alphabetic rewriting system. Letters are
// canonical certificates of multigraph isomorphism classes; the juxtaposition
// of letters is fully commutative. The Tutte polynomial is the extension of
// H -> x^#bridges(H) y^#loops(H) along the universal invariant.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tgrw/bivar_poly.hpp"
#include "tgrw/convergence.hpp"
#include "tgrw/rewrite.hpp"

namespace tgrw {

/// Finite multigraph; loops (u == v) and parallel edges are allowed.
struct Multigraph {
  int vertices = 1;
  std::vector<std::pair<int, int>> edges;

  /// Throws InputError unless vertices >= 1 and every endpoint is in range.
  void validate() const;
  std::size_t edge_count() const { return edges.size(); }
  int components() const;
  bool connected() const { return components() == 1; }
};

enum class EdgeKind { Loop, Bridge, Link };

std::string to_string(EdgeKind kind);

inline constexpr int kDefaultVertexCap = 10;

/// Equal for two multigraphs iff they are isomorphic. Throws ResourceError
/// above the vertex cap.
Letter canonical_certificate(const Multigraph& g, int vertex_cap = kDefaultVertexCap);

/// Inverse of canonical_certificate up to isomorphism; throws InputError on
/// malformed tokens.
Multigraph decode_certificate(const Letter& certificate);

EdgeKind edge_classify(const Multigraph& g, std::size_t edge_index);
Multigraph delete_edge(const Multigraph& g, std::size_t edge_index);
/// Identifies the endpoints of a non-loop edge and removes it.
Multigraph contract_edge(const Multigraph& g, std::size_t edge_index);

std::size_t count_edges(const Multigraph& g, EdgeKind kind);

/// Isomorphism classes of multigraphs with at most the given sizes.
std::vector<Multigraph> enumerate_multigraphs(int max_vertices, int max_edges, bool connected_only);

/// Rank-nullity subset expansion; needs at most 20 edges.
BivarPoly tutte_oracle(const Multigraph& g);

struct GraphPackOptions {
  int vertex_cap = kDefaultVertexCap;
  Budgets budgets{};
};

/// The deletion-contraction system plus a memo of normal forms keyed by
/// certificate. The memo makes instances single-threaded.
class GraphPack {
 public:
  explicit GraphPack(GraphPackOptions options = {});

  const RewriteSystem& system() const { return normalizer_.system(); }

  Letter letter(const Multigraph& g) const { return canonical_certificate(g, options_.vertex_cap); }

  /// One two-letter right-hand side {G-e, G/e} per link e of g.
  std::vector<Trace> deletion_contraction_rules(const Multigraph& g) const;

  /// Irreducible graphs (bridges and loops only) with multiplicities.
  const Multiplicities& normal_form(const Multigraph& g);

  BivarPoly tutte_polynomial(const Multigraph& g);

  /// 1 + number of edges.
  static WeightCertificate edge_weights();

  /// Monomial x^#bridges y^#loops of a letter.
  static BivarPoly bridge_loop_monomial(const Letter& certificate);

 private:
  GraphPackOptions options_;
  CommutativeNormalizer normalizer_;
};

/// Stand-alone deletion-contraction system over certificates.
RewriteSystem graph_system(GraphPackOptions options = {});

}  // namespace tgrw
