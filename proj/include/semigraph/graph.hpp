#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "semigraph/array.hpp"

namespace semigraph {

struct Edge {
  std::string key;
  std::string source;
  std::string target;
};

/// Directed multigraph with unique edge keys. Parallel edges and self-loops
/// are permitted. Source and target vertex sets are kept separate (they may
/// overlap but are never merged); both may contain isolated vertices.
class Graph {
 public:
  /// Vertex sets default to the endpoints observed in `edges`; explicit
  /// sets may add isolated vertices but must cover every endpoint.
  static Graph create(std::vector<Edge> edges,
                      std::optional<KeySet> out_vertices = std::nullopt,
                      std::optional<KeySet> in_vertices = std::nullopt);

  const std::vector<Edge>& edges() const { return edges_; }
  const KeySet& out_vertices() const { return out_vertices_; }
  const KeySet& in_vertices() const { return in_vertices_; }
  KeySet edge_keys() const;

  bool has_edge(const std::string& source, const std::string& target) const;
  std::size_t count_edges(const std::string& source,
                          const std::string& target) const;

  /// Same edge keys and vertex sets, every edge direction flipped.
  Graph reversed() const;

  nlohmann::json to_json() const;

 private:
  std::vector<Edge> edges_;
  KeySet out_vertices_;
  KeySet in_vertices_;
};

/// Per-edge nonzero weights for the source and target incidence entries.
struct EdgeWeights {
  Value out;
  Value in;
};
using Weighting = std::map<std::string, EdgeWeights>;

/// Source/target incidence arrays over a shared edge key set: e_out(k, a) is
/// nonzero iff edge k leaves vertex a, e_in(k, b) nonzero iff k enters b.
/// Each edge row therefore has exactly one nonzero in each array; create()
/// rejects anything else.
struct IncidencePair {
  AssociativeArray e_out;
  AssociativeArray e_in;

  static IncidencePair create(AssociativeArray e_out, AssociativeArray e_in);
};

/// Builds the incidence pair of `g`. Absent weighting entries default to
/// (1, 1) in the algebra; a zero weight raises InvalidWeightError since it
/// would break the nonzero-iff-endpoint pattern.
IncidencePair incidence_from_graph(const Graph& g, AlgebraPtr alg,
                                   const Weighting& weighting = {});

/// transpose(e_out) . e_in, the K_out x K_in product that is an adjacency
/// array of the underlying graph whenever the algebra is zero-sum-free,
/// has no zero divisors, and 0 annihilates times.
AssociativeArray adjacency(const IncidencePair& pair, Mode mode);

/// transpose(e_in) . e_out, the adjacency array of the reverse graph under
/// the same conditions.
AssociativeArray reverse_adjacency(const IncidencePair& pair, Mode mode);

enum class ViolationKind { kSpuriousNonzero, kMissingNonzero };

std::string to_string(ViolationKind kind);

struct Violation {
  std::string row;
  std::string col;
  ViolationKind kind;

  bool operator==(const Violation&) const = default;
};

/// Result of checking the defining property of an adjacency array:
/// A(a, b) != 0 iff the graph has an edge a -> b.
struct ValidationVerdict {
  bool valid = true;
  std::vector<Violation> violations;  // row-major order

  nlohmann::json to_json() const;
};

/// Checks `a` against the edges of `g`; `a` must be keyed exactly
/// K_out x K_in or a ShapeError is raised.
ValidationVerdict validate_adjacency(const AssociativeArray& a,
                                     const Graph& g);

/// Edge-list interchange: `edge_key<TAB>source<TAB>target[<TAB>w_out<TAB>w_in]`
/// per line. Missing weights default to the algebra's 1.
struct ParsedGraph {
  Graph graph;
  Weighting weighting;
};
ParsedGraph parse_graph_tsv(const std::string& text, const ValueAlgebra& alg);
std::string graph_to_tsv(const Graph& g, const Weighting& weighting = {});

struct RandomGraphParams {
  std::size_t max_vertices = 8;
  std::size_t max_edges = 16;
};

/// Seeded random multigraph; every vertex appears in both vertex sets, so
/// isolated rows/columns occur naturally.
Graph random_graph(const RandomGraphParams& params, std::mt19937_64& rng);

/// Random nonzero weights drawn from the algebra's domain sample.
Weighting random_weighting(const Graph& g, const ValueAlgebra& alg,
                           std::mt19937_64& rng);

}  // namespace semigraph
