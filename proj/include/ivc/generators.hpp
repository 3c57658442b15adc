#pragma once

#include <optional>
#include <string>

#include "ivc/codes.hpp"
#include "ivc/graph.hpp"
#include "ivc/interval_model.hpp"

namespace ivc {

enum class Family { Path, Clique, CycleGraph, ChordalFig7 };

std::string to_string(Family family);
/// path, clique, cycle-graph, chordal-fig7.
Family parse_family(const std::string& text);

struct FamilySpec {
  Family family;
  int size;  // vertex count, or the pendant path length for chordal-fig7
};

struct FamilyOutput {
  /// Present for path and clique.
  std::optional<IntervalModel> model;
  Graph graph;
  /// chordal-fig7 only: the two black pendant ends, and the pair they miss.
  VertexSet black;
  VertexId u = -1, v = -1;
};

IntervalModel path_model(int n);
IntervalModel clique_model(int n);
Graph cycle_graph(int n);

/// Kernel on 7 vertices (u = 0, v = 6) with a pendant path of t vertices hanging
/// from kernel vertices 1 and 3; the far end of each path is black.
FamilyOutput chordal_fig7(int t);

/// Maximum cardinality search followed by a perfect elimination check.
bool is_chordal(const Graph& g);

/// Throws ValidationError for sizes outside the family's range
/// (path, clique >= 1; cycle-graph >= 3; chordal-fig7 >= 2).
FamilyOutput make_family(const FamilySpec& spec);

}  // namespace ivc
