#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ivc/graph.hpp"

namespace ivc {

/// Subset of {0..universe_size-1}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe_size) : bits_(static_cast<std::size_t>(universe_size)) {}
  VertexSet(int universe_size, std::initializer_list<VertexId> members);
  /// Throws ValidationError if a member is out of range.
  static VertexSet from_members(int universe_size, const std::vector<VertexId>& members);
  static VertexSet full(int universe_size);

  int universe_size() const { return static_cast<int>(bits_.size()); }
  int size() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }
  bool contains(VertexId v) const { return bits_.test(static_cast<std::size_t>(v)); }
  void insert(VertexId v) { bits_.set(static_cast<std::size_t>(v)); }
  void erase(VertexId v) { bits_.reset(static_cast<std::size_t>(v)); }
  std::vector<VertexId> members() const;
  const boost::dynamic_bitset<>& bits() const { return bits_; }

  bool intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }
  VertexSet& operator|=(const VertexSet& other) {
    bits_ |= other.bits_;
    return *this;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }
  /// Lexicographic order on the sorted member lists.
  friend bool lexicographically_less(const VertexSet& a, const VertexSet& b);

 private:
  boost::dynamic_bitset<> bits_;
};

std::string format_members(const VertexSet& s);

enum class ProblemKind { MD, LD, ID, OLD };

std::string to_string(ProblemKind kind);
/// Accepts md/ld/id/old in any case.
ProblemKind parse_problem_kind(const std::string& text);

/// Separation criteria, including the distance-2 relaxation of resolving sets.
enum class Criterion { Resolving, Distance2Resolving, LocatingDominating, Identifying, OpenLocatingDominating };

Criterion criterion_for(ProblemKind kind);

/// Why a set fails a predicate: a vertex left undominated, or an unseparated pair.
struct Violation {
  enum class Type { NotDominated, NotSeparated } type;
  VertexId u;
  VertexId v;  // equals u for NotDominated

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string describe(const Violation& violation);

/// First violation in (u, v) lexicographic order, domination failures first.
std::optional<Violation> first_violation(const Graph& g, Criterion criterion, const VertexSet& s);

bool is_resolving(const Graph& g, const VertexSet& s);
bool is_distance2_resolving(const Graph& g, const VertexSet& s);
bool is_locating_dominating(const Graph& g, const VertexSet& s);
bool is_identifying(const Graph& g, const VertexSet& s);
bool is_open_locating_dominating(const Graph& g, const VertexSet& s);
bool satisfies(const Graph& g, ProblemKind kind, const VertexSet& s);

bool has_twins(const Graph& g);
bool has_open_twins(const Graph& g);

/// One covering requirement: a valid set must contain a member of `hitters`.
/// For a domination requirement on x, a == b == x; otherwise {a, b} is the pair
/// to separate.
struct Constraint {
  boost::dynamic_bitset<> hitters;
  VertexId a;
  VertexId b;
};

/// Every criterion is a hitting condition: S is valid iff S meets each constraint.
/// An empty hitter set means no valid set exists (twins for ID, open twins for OLD).
std::vector<Constraint> constraint_family(const Graph& g, Criterion criterion);

enum class NoSolutionReason { None, BudgetExceeded, NoValidSet };

struct BruteForceResult {
  std::optional<VertexSet> set;
  NoSolutionReason reason = NoSolutionReason::None;

  bool found() const { return set.has_value(); }
  int size() const { return set ? set->size() : -1; }
};

/// Minimum valid set of size <= k_max by enumerating subsets in increasing size;
/// among minimum sets, the lexicographically smallest. Requires n <= 64.
/// Output does not depend on `threads`.
BruteForceResult brute_force_min(const Graph& g, Criterion criterion, int k_max, int threads = 1);
BruteForceResult brute_force_min(const Graph& g, ProblemKind kind, int k_max, int threads = 1);

/// Smallest |T| with T a subset of `region` (at most 64 vertices) such that
/// T united with `fixed` meets every constraint of the criterion plus every set in
/// `extra`. std::nullopt when no such T exists. Exact branch-and-bound.
std::optional<int> min_completion(const Graph& g, Criterion criterion, const VertexSet& fixed,
                                  const std::vector<VertexId>& region,
                                  const std::vector<VertexSet>& extra = {});
/// Same, over a precomputed constraint family of an n-vertex graph.
std::optional<int> min_completion(int n, const std::vector<Constraint>& family, const VertexSet& fixed,
                                  const std::vector<VertexId>& region,
                                  const std::vector<VertexSet>& extra = {});

}  // namespace ivc
