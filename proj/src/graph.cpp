#include "semigraph/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "semigraph/error.hpp"

namespace semigraph {

Graph Graph::create(std::vector<Edge> edges,
                    std::optional<KeySet> out_vertices,
                    std::optional<KeySet> in_vertices) {
  std::set<std::string> seen;
  for (const auto& e : edges) {
    if (!seen.insert(e.key).second) {
      throw Error("duplicate edge key '" + e.key + "'");
    }
  }

  std::vector<std::string> sources, targets;
  for (const auto& e : edges) {
    sources.push_back(e.source);
    targets.push_back(e.target);
  }

  Graph g;
  g.edges_ = std::move(edges);
  g.out_vertices_ =
      out_vertices ? std::move(*out_vertices) : KeySet::of(std::move(sources));
  g.in_vertices_ =
      in_vertices ? std::move(*in_vertices) : KeySet::of(std::move(targets));

  for (const auto& e : g.edges_) {
    if (!g.out_vertices_.contains(e.source)) {
      throw KeyDomainError("edge '" + e.key + "' source '" + e.source +
                           "' not in the out-vertex set");
    }
    if (!g.in_vertices_.contains(e.target)) {
      throw KeyDomainError("edge '" + e.key + "' target '" + e.target +
                           "' not in the in-vertex set");
    }
  }
  return g;
}

KeySet Graph::edge_keys() const {
  std::vector<std::string> keys;
  keys.reserve(edges_.size());
  for (const auto& e : edges_) keys.push_back(e.key);
  return KeySet::of(std::move(keys));
}

bool Graph::has_edge(const std::string& source,
                     const std::string& target) const {
  return count_edges(source, target) > 0;
}

std::size_t Graph::count_edges(const std::string& source,
                               const std::string& target) const {
  std::size_t n = 0;
  for (const auto& e : edges_) {
    if (e.source == source && e.target == target) ++n;
  }
  return n;
}

Graph Graph::reversed() const {
  std::vector<Edge> flipped;
  flipped.reserve(edges_.size());
  for (const auto& e : edges_) {
    flipped.push_back({e.key, e.target, e.source});
  }
  return Graph::create(std::move(flipped), in_vertices_, out_vertices_);
}

nlohmann::json Graph::to_json() const {
  nlohmann::json j;
  auto edges = nlohmann::json::array();
  for (const auto& e : edges_) {
    edges.push_back(nlohmann::json::array({e.key, e.source, e.target}));
  }
  j["edges"] = std::move(edges);
  j["out_vertices"] = out_vertices_.keys();
  j["in_vertices"] = in_vertices_.keys();
  return j;
}

IncidencePair IncidencePair::create(AssociativeArray e_out,
                                    AssociativeArray e_in) {
  if (e_out.rows() != e_in.rows()) {
    throw ShapeError("incidence arrays must share the edge key set");
  }
  if (e_out.algebra() != e_in.algebra()) {
    throw AlgebraMismatchError("incidence arrays must share an algebra");
  }
  auto check_one_nonzero_per_row = [](const AssociativeArray& arr,
                                      const char* label) {
    std::map<std::string, std::size_t> per_row;
    for (const auto& [key, v] : arr.entries()) ++per_row[key.first];
    for (const auto& edge : arr.rows()) {
      const auto it = per_row.find(edge);
      const std::size_t n = it == per_row.end() ? 0 : it->second;
      if (n != 1) {
        throw ShapeError(std::string(label) + " row '" + edge + "' has " +
                         std::to_string(n) + " nonzeros, expected exactly 1");
      }
    }
  };
  check_one_nonzero_per_row(e_out, "e_out");
  check_one_nonzero_per_row(e_in, "e_in");
  return IncidencePair{std::move(e_out), std::move(e_in)};
}

IncidencePair incidence_from_graph(const Graph& g, AlgebraPtr alg,
                                   const Weighting& weighting) {
  const KeySet edge_keys = g.edge_keys();
  std::vector<std::tuple<std::string, std::string, Value>> out_triples;
  std::vector<std::tuple<std::string, std::string, Value>> in_triples;

  for (const auto& e : g.edges()) {
    EdgeWeights w{alg->one(), alg->one()};
    auto it = weighting.find(e.key);
    if (it != weighting.end()) w = it->second;
    if (alg->is_zero(w.out) || alg->is_zero(w.in)) {
      throw InvalidWeightError("edge '" + e.key +
                               "' assigned a zero weight, which would break "
                               "the incidence pattern");
    }
    out_triples.emplace_back(e.key, e.source, w.out);
    in_triples.emplace_back(e.key, e.target, w.in);
  }

  return IncidencePair::create(
      AssociativeArray::from_triples(edge_keys, g.out_vertices(), alg,
                                     out_triples),
      AssociativeArray::from_triples(edge_keys, g.in_vertices(), alg,
                                     in_triples));
}

AssociativeArray adjacency(const IncidencePair& pair, Mode mode) {
  return multiply(pair.e_out.transpose(), pair.e_in, mode);
}

AssociativeArray reverse_adjacency(const IncidencePair& pair, Mode mode) {
  return multiply(pair.e_in.transpose(), pair.e_out, mode);
}

std::string to_string(ViolationKind kind) {
  return kind == ViolationKind::kSpuriousNonzero ? "spurious-nonzero"
                                                 : "missing-nonzero";
}

nlohmann::json ValidationVerdict::to_json() const {
  nlohmann::json j;
  j["valid"] = valid;
  auto arr = nlohmann::json::array();
  for (const auto& v : violations) {
    arr.push_back(nlohmann::json{
        {"row", v.row}, {"col", v.col}, {"kind", to_string(v.kind)}});
  }
  j["violations"] = std::move(arr);
  return j;
}

ValidationVerdict validate_adjacency(const AssociativeArray& a,
                                     const Graph& g) {
  if (a.rows() != g.out_vertices() || a.cols() != g.in_vertices()) {
    throw ShapeError("array is not keyed K_out x K_in for this graph");
  }

  // Edge pattern lookup once, not per cell.
  std::set<std::pair<std::string, std::string>> edge_pattern;
  for (const auto& e : g.edges()) edge_pattern.insert({e.source, e.target});

  ValidationVerdict verdict;
  for (const auto& u : a.rows()) {
    for (const auto& v : a.cols()) {
      const bool nonzero = !a.algebra()->is_zero(a.get(u, v));
      const bool edge = edge_pattern.count({u, v}) > 0;
      if (nonzero && !edge) {
        verdict.violations.push_back({u, v, ViolationKind::kSpuriousNonzero});
      } else if (!nonzero && edge) {
        verdict.violations.push_back({u, v, ViolationKind::kMissingNonzero});
      }
    }
  }
  verdict.valid = verdict.violations.empty();
  return verdict;
}

namespace {

std::vector<std::string> split_tab(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, '\t')) out.push_back(field);
  if (!line.empty() && line.back() == '\t') out.push_back("");
  return out;
}

}  // namespace

ParsedGraph parse_graph_tsv(const std::string& text, const ValueAlgebra& alg) {
  std::vector<Edge> edges;
  Weighting weighting;

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_tab(line);
    if (fields.size() != 3 && fields.size() != 5) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 3 or 5 tab-separated fields, got " +
                       std::to_string(fields.size()));
    }
    edges.push_back({fields[0], fields[1], fields[2]});
    if (fields.size() == 5) {
      weighting[fields[0]] =
          EdgeWeights{alg.parse_value(fields[3]), alg.parse_value(fields[4])};
    }
  }
  return ParsedGraph{Graph::create(std::move(edges)), std::move(weighting)};
}

std::string graph_to_tsv(const Graph& g, const Weighting& weighting) {
  std::ostringstream out;
  for (const auto& e : g.edges()) {
    out << e.key << '\t' << e.source << '\t' << e.target;
    auto it = weighting.find(e.key);
    if (it != weighting.end()) {
      out << '\t' << it->second.out.display() << '\t'
          << it->second.in.display();
    }
    out << '\n';
  }
  return out.str();
}

Graph random_graph(const RandomGraphParams& params, std::mt19937_64& rng) {
  const std::size_t nv = 1 + rng() % params.max_vertices;
  const std::size_t ne = 1 + rng() % params.max_edges;

  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < nv; ++i) {
    vertices.push_back("v" + std::to_string(i + 1));
  }

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ne; ++i) {
    std::string key = i + 1 < 10 ? "e0" + std::to_string(i + 1)
                                 : "e" + std::to_string(i + 1);
    edges.push_back(
        {std::move(key), vertices[rng() % nv], vertices[rng() % nv]});
  }

  // Every vertex sits in both key sets; isolated rows/columns are fine.
  KeySet all = KeySet::of(vertices);
  return Graph::create(std::move(edges), all, all);
}

Weighting random_weighting(const Graph& g, const ValueAlgebra& alg,
                           std::mt19937_64& rng) {
  std::vector<Value> pool;
  for (const auto& v : alg.sample(16, rng())) {
    if (!alg.is_zero(v)) pool.push_back(v);
  }
  if (pool.empty()) {
    throw Error(alg.name() + ": domain sample has no nonzero elements");
  }
  Weighting weighting;
  for (const auto& e : g.edges()) {
    weighting[e.key] =
        EdgeWeights{pool[rng() % pool.size()], pool[rng() % pool.size()]};
  }
  return weighting;
}

}  // namespace semigraph
