#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "ivc/codes.hpp"
#include "ivc/graph.hpp"
#include "ivc/interval_model.hpp"
#include "ivc/reductions.hpp"

namespace ivc {

// Text formats. Blank lines and lines starting with '#' or 'c ' are skipped by
// every reader; malformed input raises ParseError carrying the 1-based line.

/// Header `n`, then `id left right` per interval.
std::string write_model_text(const IntervalModel& model);
IntervalModel read_model_text(std::istream& in, bool repair = true);

/// {"n": n, "intervals": [{"id": i, "l": left, "r": right}]}; coordinates are
/// integers when integral and "p/q" strings otherwise.
nlohmann::json model_to_json(const IntervalModel& model);
IntervalModel model_from_json(const nlohmann::json& j, bool repair = true);

/// Text or JSON, chosen by the first non-blank character.
IntervalModel read_model(std::istream& in, bool repair = true);

/// `p edge n m`, then `e u v` with 1-indexed endpoints.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);

/// `n m`, then m lines `a b c`, 0-indexed.
std::string write_3dm(const ThreeDMInstance& instance);
ThreeDMInstance read_3dm(std::istream& in);

/// Vertex ids separated by whitespace. Lines led by a word are ignored except
/// `witness ...` and `set ...`, whose remaining tokens are members, so the output
/// of `solve` can be fed back in.
VertexSet read_vertex_set(std::istream& in, int universe_size);

/// Whitespace-separated non-negative integers.
std::vector<int> read_index_list(std::istream& in);

std::string read_all(std::istream& in);

}  // namespace ivc
