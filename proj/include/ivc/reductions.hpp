#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ivc/codes.hpp"
#include "ivc/graph.hpp"
#include "ivc/interval_model.hpp"

namespace ivc {

struct Triple {
  int a, b, c;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Triples over A x B x C with |A| = |B| = |C| = n; elements are 0-indexed.
struct ThreeDMInstance {
  int n = 0;
  std::vector<Triple> triples;

  int m() const { return static_cast<int>(triples.size()); }
  /// Throws ValidationError when m = 0, n < 1 or an index is out of range.
  void validate() const;
  /// Whether the chosen triples cover every element exactly once.
  bool is_perfect_matching(const std::vector<int>& chosen) const;

  friend bool operator==(const ThreeDMInstance&, const ThreeDMInstance&) = default;
};

/// Path gadgets P4 (locating-dominating), P5 (identifying), P6 (open locating-dominating).
enum class GadgetKind { P4LD, P5ID, P6OLD };

std::string to_string(GadgetKind kind);
/// Accepts ld/id/old or p4-ld/p5-id/p6-old.
GadgetKind parse_gadget_kind(const std::string& text);

struct DominatingGadget {
  GadgetKind kind;
  ProblemKind problem;
  int d;      // standard solution size
  int order;  // v_D
  /// Local path positions 0..order-1.
  std::vector<VertexId> standard;

  Graph graph() const;
  IntervalModel model() const;
  VertexSet standard_set() const;
};

DominatingGadget dominating_gadget(GadgetKind kind);

/// No vertex of g has every member of s in its closed neighbourhood.
bool no_vertex_dominated_by_all(const Graph& g, const VertexSet& s);

/// Two intervals sharing a gadget, with the intervals allowed to separate them.
struct ChoicePair {
  std::string label;
  VertexId first, second;
  std::vector<VertexId> gadget;
  std::vector<VertexId> separators;
};

/// One transmitter: its path u, uv1, uv2, v, vw1, vw2, w and its five gadgets.
struct TransmitterParts {
  std::string label;
  VertexId u, uv1, uv2, v, vw1, vw2, w;
  std::vector<std::vector<VertexId>> gadgets;  // D(u), D(uv), D(v), D(vw), D(w)

  std::vector<VertexId> vertices() const;
};

struct ReductionOutput {
  IntervalModel model;
  std::vector<std::string> roles;
  GadgetKind kind;
  int n = 0;
  int m = 0;
  long long expected_order = 0;
  long long expected_solution_size = 0;

  std::vector<std::vector<VertexId>> gadgets;
  std::vector<ChoicePair> choice_pairs;
  std::vector<TransmitterParts> transmitters;
  /// Per triple: the tight and non-tight standard solutions of its gadget.
  std::vector<std::vector<VertexId>> triple_tight, triple_nontight;
  /// Standard solutions of the element gadgets.
  std::vector<VertexId> element_standard;
};

long long reduction_order(GadgetKind kind, int n, int m);
long long reduction_solution_size(GadgetKind kind, int n, int m);

/// Interval model of the reduction graph. Runs every audit and throws LayoutError
/// on failure.
ReductionOutput build_reduction(const ThreeDMInstance& instance, GadgetKind kind);

/// Non-tight standards on matched triples, tight elsewhere, plus element gadget
/// standards. Throws ValidationError unless `matching` is a perfect matching.
VertexSet standard_solution(const ReductionOutput& out, const ThreeDMInstance& instance,
                            const std::vector<int>& matching);

/// Audit results; each returns a description of the first failure or "".
std::string audit_gadgets(const ReductionOutput& out);
std::string audit_choice_pairs(const ReductionOutput& out, const Graph& g);

/// Minimal host of one transmitter: choice pair X, the transmitter, choice pair Y,
/// where u separates X and w separates Y.
ReductionOutput transmitter_host(GadgetKind kind);

nlohmann::json roles_json(const ReductionOutput& out);
nlohmann::json manifest_json(const ReductionOutput& out);

/// Adds a universal vertex u = n and a pendant v = n+1 on u.
Graph f1(const Graph& g);
/// f1 followed by w = n+2 adjacent to u and v.
Graph f2(const Graph& g);
/// Adjacent universal vertices u = n, u' = n+1, then v = n+2 and w = n+3
/// adjacent to exactly u and u'.
Graph f3(const Graph& g);

}  // namespace ivc
