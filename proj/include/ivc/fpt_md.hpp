#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ivc/codes.hpp"
#include "ivc/interval_model.hpp"

namespace ivc {

struct FptOptions {
  /// Workers for the per-event fan-out; results do not depend on it.
  int threads = 1;
  /// Recompute bag pairs and pair re-indexing naively at every event and compare.
  bool cross_check = false;
  /// When set, receives one CSV row per event.
  std::ostream* trace = nullptr;
};

struct FptResult {
  /// Minimum resolving set size, absent when it exceeds k.
  std::optional<int> size;
  VertexSet witness;
  /// Absence decided by the bag-size bound before running the program.
  bool early_reject = false;
  int max_bag = 0;
  std::size_t peak_configurations = 0;
};

/// Largest bag of the G^4 decomposition compatible with a resolving set of size k.
long long bag_size_bound(int k);

/// Exact metric dimension up to k by dynamic programming over the nice path
/// decomposition of G^4. Disconnected models are solved per component.
FptResult fpt_metric_dimension(const IntervalModel& model, int k, const FptOptions& options = {});

/// Decoded configuration, for inspection in tests.
struct ConfigurationView {
  std::vector<VertexId> solution;
  /// Pair (u, v) with u before v in bag order -> sep value 0/1/2.
  std::map<std::pair<VertexId, VertexId>, int> sep;
  std::map<std::pair<VertexId, VertexId>, int> sepr;
  int count;
};

/// The program for one connected model, driven event by event.
class MdProgram {
 public:
  /// Throws std::invalid_argument when the model is disconnected.
  MdProgram(const IntervalModel& model, int k, const FptOptions& options = {});
  ~MdProgram();
  MdProgram(const MdProgram&) = delete;
  MdProgram& operator=(const MdProgram&) = delete;

  void leaf(VertexId v);
  void introduce(VertexId v);
  void forget(VertexId v);

  /// Feeds every event of the G^4 decomposition, writing trace rows if requested.
  void run();

  std::size_t configuration_count() const;
  const std::vector<VertexId>& bag() const;
  /// Number of bag pairs at distance <= 2.
  std::size_t pair_count() const;
  std::vector<ConfigurationView> configurations() const;

  /// Smallest count among current configurations.
  std::optional<int> best_count() const;
  /// Union of the partial solutions leading to the best current configuration.
  VertexSet witness() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ivc
