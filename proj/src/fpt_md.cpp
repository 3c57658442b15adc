#include "ivc/fpt_md.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "ivc/decomposition.hpp"
#include "ivc/structure.hpp"

namespace ivc {

long long bag_size_bound(int k) {
  const long long kk = k;
  return 16 * kk * kk + 11 * kk + 1;
}

namespace {

using Word = std::uint64_t;
constexpr int kMaxBag = 64;

inline bool test_bit(const Word* plane, int i) { return plane[i >> 6] >> (i & 63) & 1; }
inline void set_bit(Word* plane, int i) { plane[i >> 6] |= Word{1} << (i & 63); }

int words_for(std::size_t pairs) { return static_cast<int>((pairs + 63) / 64); }

// Key layout: [S][sep >= 1 plane][sep == 2 plane][sepr plane], each plane `w` words.
struct Shape {
  int w = 0;
  int stride() const { return 1 + 3 * w; }
  int any() const { return 1; }
  int left() const { return 1 + w; }
  int sepr() const { return 1 + 2 * w; }
};

// Configurations of one event, deduplicated on the key with the smallest count
// kept; among equal counts the earliest offer wins.
class Layer {
 public:
  explicit Layer(Shape shape)
      : shape_(shape), index_(16, Hash{this}, Equal{this}) {}

  Shape shape() const { return shape_; }
  std::size_t size() const { return count.size(); }
  const Word* key(std::size_t i) const { return data_.data() + i * static_cast<std::size_t>(shape_.stride()); }

  void offer(const Word* key, int cnt, int parent, bool took) {
    const auto stride = static_cast<std::size_t>(shape_.stride());
    const int candidate = static_cast<int>(count.size());
    data_.insert(data_.end(), key, key + stride);
    auto it = index_.find(candidate);
    if (it != index_.end()) {
      data_.resize(data_.size() - stride);
      int j = *it;
      if (cnt < count[j]) {
        count[j] = cnt;
        this->parent[j] = parent;
        this->took[j] = took;
      }
      return;
    }
    count.push_back(cnt);
    this->parent.push_back(parent);
    this->took.push_back(took);
    index_.insert(candidate);
  }

  std::vector<int> count;
  std::vector<int> parent;
  std::vector<std::uint8_t> took;

 private:
  struct Hash {
    const Layer* layer;
    std::size_t operator()(int i) const {
      const Word* k = layer->key(static_cast<std::size_t>(i));
      std::size_t h = 0x9e3779b97f4a7c15ULL;
      for (int j = 0; j < layer->shape_.stride(); ++j) h = (h ^ k[j]) * 0x100000001b3ULL + (h >> 29);
      return h;
    }
  };
  struct Equal {
    const Layer* layer;
    bool operator()(int a, int b) const {
      return std::equal(layer->key(static_cast<std::size_t>(a)), layer->key(static_cast<std::size_t>(a)) + layer->shape_.stride(),
                        layer->key(static_cast<std::size_t>(b)));
    }
  };

  Shape shape_;
  std::vector<Word> data_;
  std::unordered_set<int, Hash, Equal> index_;
};

struct NewPair {
  int inherited;  // old pair index of (v^L_1, w^L_1), or -1
  Word strict_left;
  Word any_sep;
};

struct Obligation {
  int pair;    // old index of (v, w)
  int target;  // new index of (v^R_1, w^R_1), or -1 when it cannot exist
};

struct History {
  VertexId vertex;
  std::vector<int> parent;
  std::vector<std::uint8_t> took;
};

}  // namespace

struct MdProgram::Impl {
  Impl(const IntervalModel& m, int budget, const FptOptions& opts)
      : model(m), g(build_graph(m)), dist(g, 4), steps(m, g), k(budget), options(opts) {
    if (!is_connected(g)) throw std::invalid_argument("MdProgram needs a connected model");
    pos.assign(static_cast<std::size_t>(m.size()), -1);
  }

  IntervalModel model;
  Graph g;
  LocalDistances dist;
  PathSteps steps;
  int k;
  FptOptions options;

  std::vector<VertexId> bag;
  std::vector<int> pos;
  std::vector<std::pair<int, int>> pairs;  // bag positions, ordered by (second, first)
  std::unique_ptr<Layer> layer;
  std::vector<History> history;

  int pair_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    // pairs sharing the larger position are contiguous and sorted by the smaller one
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::pair<int, int>(i, j),
                               [](const auto& a, const auto& b) {
                                 return a.second != b.second ? a.second < b.second : a.first < b.first;
                               });
    if (it == pairs.end() || *it != std::pair<int, int>(i, j)) return -1;
    return static_cast<int>(it - pairs.begin());
  }

  int pair_of(std::optional<VertexId> a, std::optional<VertexId> b) const {
    if (!a || !b || *a == *b || pos[*a] < 0 || pos[*b] < 0) return -1;
    return pair_index(pos[*a], pos[*b]);
  }

  void commit(std::unique_ptr<Layer> next, VertexId v) {
    history.push_back({v, next->parent, next->took});
    layer = std::move(next);
    check_state_bound();
    if (options.cross_check) cross_check_pairs();
  }

  void check_state_bound() const {
    const double b = static_cast<double>(bag.size());
    if (layer->size() > 1 && std::log(static_cast<double>(layer->size())) > 2 * b * b * std::log(3.0) + 1e-9)
      throw std::logic_error("configuration count exceeds 3^(2|X|^2)");
  }

  void cross_check_pairs() const {
    std::vector<std::pair<VertexId, VertexId>> actual;
    for (auto [i, j] : pairs) actual.emplace_back(std::min(bag[i], bag[j]), std::max(bag[i], bag[j]));
    std::vector<std::pair<VertexId, VertexId>> naive;
    for (auto [u, v] : bag_distance_pairs(dist, bag)) naive.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(actual.begin(), actual.end());
    std::sort(naive.begin(), naive.end());
    if (actual != naive) throw std::logic_error("incremental pair list disagrees with naive recomputation");
    for (std::size_t p = 0; p < bag.size(); ++p)
      if (pos[bag[p]] != static_cast<int>(p)) throw std::logic_error("bag position table out of sync");
  }

  template <class Expand>
  std::unique_ptr<Layer> fan_out(Shape shape, const Expand& expand) {
    const int parents = static_cast<int>(layer->size());
    const int workers = std::max(1, std::min(options.threads, parents / 256));
    auto out = std::make_unique<Layer>(shape);
    if (workers == 1) {
      std::vector<Word> scratch(static_cast<std::size_t>(shape.stride()));
      for (int p = 0; p < parents; ++p) expand(p, *out, scratch);
      return out;
    }
    std::vector<std::unique_ptr<Layer>> parts;
    for (int t = 0; t < workers; ++t) parts.push_back(std::make_unique<Layer>(shape));
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        std::vector<Word> scratch(static_cast<std::size_t>(shape.stride()));
        const int lo = static_cast<int>(static_cast<long long>(parents) * t / workers);
        const int hi = static_cast<int>(static_cast<long long>(parents) * (t + 1) / workers);
        for (int p = lo; p < hi; ++p) expand(p, *parts[t], scratch);
      });
    for (auto& th : pool) th.join();
    for (const auto& part : parts)
      for (std::size_t i = 0; i < part->size(); ++i)
        out->offer(part->key(i), part->count[i], part->parent[i], part->took[i]);
    return out;
  }

  void leaf(VertexId v) {
    if (!bag.empty() || layer) throw std::logic_error("leaf must be the first event");
    bag = {v};
    pos[v] = 0;
    pairs.clear();
    auto next = std::make_unique<Layer>(Shape{0});
    Word key = 0;
    next->offer(&key, 0, -1, false);
    if (k >= 1) {
      key = 1;
      next->offer(&key, 1, -1, true);
    }
    commit(std::move(next), v);
  }

  void introduce(VertexId v) {
    if (!layer) throw std::logic_error("introduce before leaf");
    if (static_cast<int>(bag.size()) >= kMaxBag)
      throw std::length_error("bags of more than " + std::to_string(kMaxBag) + " intervals are not supported");
    const Shape old_shape = layer->shape();
    const int p = static_cast<int>(bag.size());
    const auto old_pairs = static_cast<int>(pairs.size());

    // sepByV: old pairs that v separates
    std::vector<Word> sep_by_v(static_cast<std::size_t>(old_shape.w), 0);
    for (int q = 0; q < old_pairs; ++q) {
      auto [i, j] = pairs[q];
      if (dist(v, bag[i]) != dist(v, bag[j])) set_bit(sep_by_v.data(), q);
    }

    const auto v_left = steps.leftmost_step(v);
    std::vector<NewPair> fresh;
    for (int i = 0; i < p; ++i) {
      VertexId w = bag[i];
      if (dist(v, w) > 2) continue;
      NewPair np{-1, 0, 0};
      const auto w_left = steps.leftmost_step(w);
      if (v_left && w_left && *v_left != *w_left) {
        np.inherited = pair_of(v_left, w_left);
        if (np.inherited < 0) throw std::logic_error("leftmost-step pair missing from the bag");
      }
      const Coord start = std::min(model.left(v), model.left(w));
      for (int z = 0; z < p; ++z) {
        VertexId x = bag[z];
        if (dist(x, v) == dist(x, w)) continue;
        np.any_sep |= Word{1} << z;
        if (model.right(x) < start) np.strict_left |= Word{1} << z;
      }
      fresh.push_back(np);
      pairs.emplace_back(i, p);
    }
    bag.push_back(v);
    pos[v] = p;
    const Shape shape{words_for(pairs.size())};
    const Layer& prev = *layer;

    auto expand = [&](int parent, Layer& out, std::vector<Word>& key) {
      const Word* src = prev.key(static_cast<std::size_t>(parent));
      const int cnt = prev.count[parent];
      std::fill(key.begin(), key.end(), 0);
      key[0] = src[0];
      for (int w = 0; w < old_shape.w; ++w) {
        key[shape.any() + w] = src[old_shape.any() + w];
        key[shape.left() + w] = src[old_shape.left() + w];
        key[shape.sepr() + w] = src[old_shape.sepr() + w];
      }
      const Word s = src[0];
      for (std::size_t f = 0; f < fresh.size(); ++f) {
        const int q = old_pairs + static_cast<int>(f);
        const auto& np = fresh[f];
        bool left = (np.inherited >= 0 && test_bit(src + old_shape.left(), np.inherited)) || (s & np.strict_left);
        if (left) set_bit(key.data() + shape.left(), q);
        if (left || (s & np.any_sep)) set_bit(key.data() + shape.any(), q);
      }
      out.offer(key.data(), cnt, parent, false);
      if (cnt + 1 > k) return;
      key[0] |= Word{1} << p;
      for (std::size_t f = 0; f < fresh.size(); ++f) set_bit(key.data() + shape.any(), old_pairs + static_cast<int>(f));
      for (int w = 0; w < old_shape.w; ++w) {
        key[shape.any() + w] |= sep_by_v[w];
        key[shape.sepr() + w] &= ~sep_by_v[w];
      }
      out.offer(key.data(), cnt + 1, parent, true);
    };
    commit(fan_out(shape, expand), v);
  }

  void forget(VertexId v) {
    if (!layer) throw std::logic_error("forget before leaf");
    const int p = pos[v];
    if (p < 0) throw std::logic_error("forgetting a vertex outside the bag");
    const Shape old_shape = layer->shape();

    std::vector<int> old_to_new(pairs.size(), -1);
    std::vector<std::pair<int, int>> kept;
    std::vector<Obligation> obligations;
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      auto [i, j] = pairs[q];
      if (i == p || j == p) {
        obligations.push_back({static_cast<int>(q), -1});
        continue;
      }
      old_to_new[q] = static_cast<int>(kept.size());
      kept.emplace_back(i > p ? i - 1 : i, j > p ? j - 1 : j);
    }
    if (options.cross_check) {
      std::vector<VertexId> next_bag = bag;
      next_bag.erase(next_bag.begin() + p);
      for (std::size_t q = 0; q < pairs.size(); ++q) {
        if (old_to_new[q] < 0) continue;
        auto [i, j] = pairs[q];
        auto [a, b] = kept[old_to_new[q]];
        if (std::minmax(bag[i], bag[j]) != std::minmax(next_bag[a], next_bag[b]))
          throw std::logic_error("pair re-indexing moved a pair onto different vertices");
      }
    }
    // targets in the new layout
    for (auto& ob : obligations) {
      auto [i, j] = pairs[ob.pair];
      VertexId w = bag[i == p ? j : i];
      auto a = steps.rightmost_step(v), b = steps.rightmost_step(w);
      if (!a || !b || *a == *b) continue;
      if (pos[*a] < 0 || pos[*b] < 0 || *a == v || *b == v)
        throw std::logic_error("rightmost-step pair missing from the bag");
      int pa = pos[*a] > p ? pos[*a] - 1 : pos[*a];
      int pb = pos[*b] > p ? pos[*b] - 1 : pos[*b];
      if (pa > pb) std::swap(pa, pb);
      auto it = std::find(kept.begin(), kept.end(), std::pair<int, int>(pa, pb));
      if (it == kept.end()) throw std::logic_error("rightmost-step pair is not at distance <= 2");
      ob.target = static_cast<int>(it - kept.begin());
    }

    bag.erase(bag.begin() + p);
    pos[v] = -1;
    for (std::size_t i = static_cast<std::size_t>(p); i < bag.size(); ++i) pos[bag[i]] = static_cast<int>(i);
    pairs = kept;
    const Shape shape{words_for(pairs.size())};
    const Layer& prev = *layer;
    const Word low = (Word{1} << p) - 1;

    auto expand = [&](int parent, Layer& out, std::vector<Word>& key) {
      const Word* src = prev.key(static_cast<std::size_t>(parent));
      std::fill(key.begin(), key.end(), 0);
      for (const auto& ob : obligations) {
        bool open = !test_bit(src + old_shape.any(), ob.pair) || test_bit(src + old_shape.sepr(), ob.pair);
        if (!open) continue;
        if (ob.target < 0) return;
        set_bit(key.data() + shape.sepr(), ob.target);
      }
      const Word s = src[0];
      key[0] = (s & low) | ((s >> 1) & ~low);
      for (std::size_t q = 0; q < old_to_new.size(); ++q) {
        const int nq = old_to_new[q];
        if (nq < 0) continue;
        const int oq = static_cast<int>(q);
        if (test_bit(src + old_shape.any(), oq)) set_bit(key.data() + shape.any(), nq);
        if (test_bit(src + old_shape.left(), oq)) set_bit(key.data() + shape.left(), nq);
        if (test_bit(src + old_shape.sepr(), oq)) set_bit(key.data() + shape.sepr(), nq);
      }
      out.offer(key.data(), prev.count[parent], parent, false);
    };
    commit(fan_out(shape, expand), v);
  }

  std::optional<int> best() const {
    if (!layer || layer->size() == 0) return std::nullopt;
    return *std::min_element(layer->count.begin(), layer->count.end());
  }

  VertexSet witness() const {
    VertexSet out(model.size());
    auto b = best();
    if (!b) return out;
    int idx = static_cast<int>(std::find(layer->count.begin(), layer->count.end(), *b) - layer->count.begin());
    for (auto h = history.rbegin(); h != history.rend() && idx >= 0; ++h) {
      if (h->took[idx]) out.insert(h->vertex);
      idx = h->parent[idx];
    }
    return out;
  }
};

MdProgram::MdProgram(const IntervalModel& model, int k, const FptOptions& options)
    : impl_(std::make_unique<Impl>(model, k, options)) {}
MdProgram::~MdProgram() = default;

void MdProgram::leaf(VertexId v) { impl_->leaf(v); }
void MdProgram::introduce(VertexId v) { impl_->introduce(v); }
void MdProgram::forget(VertexId v) { impl_->forget(v); }

std::size_t MdProgram::configuration_count() const { return impl_->layer ? impl_->layer->size() : 0; }
const std::vector<VertexId>& MdProgram::bag() const { return impl_->bag; }
std::size_t MdProgram::pair_count() const { return impl_->pairs.size(); }
std::optional<int> MdProgram::best_count() const { return impl_->best(); }
VertexSet MdProgram::witness() const { return impl_->witness(); }

std::vector<ConfigurationView> MdProgram::configurations() const {
  std::vector<ConfigurationView> out;
  if (!impl_->layer) return out;
  const auto& L = *impl_->layer;
  const Shape shape = L.shape();
  const auto& bag = impl_->bag;
  for (std::size_t c = 0; c < L.size(); ++c) {
    const Word* key = L.key(c);
    ConfigurationView view;
    view.count = L.count[c];
    for (std::size_t i = 0; i < bag.size(); ++i)
      if (key[0] >> i & 1) view.solution.push_back(bag[i]);
    for (std::size_t q = 0; q < impl_->pairs.size(); ++q) {
      auto [i, j] = impl_->pairs[q];
      const int qi = static_cast<int>(q);
      std::pair<VertexId, VertexId> uv(bag[i], bag[j]);
      view.sep[uv] = test_bit(key + shape.left(), qi) ? 2 : test_bit(key + shape.any(), qi) ? 1 : 0;
      view.sepr[uv] = test_bit(key + shape.sepr(), qi) ? 1 : 0;
    }
    out.push_back(std::move(view));
  }
  return out;
}

void MdProgram::run() {
  auto dec = build_path_decomposition(power_model(impl_->model, 4));
  for (const auto& e : dec.events) {
    switch (e.kind) {
      case EventKind::Leaf: leaf(e.vertex); break;
      case EventKind::Introduce: introduce(e.vertex); break;
      case EventKind::Forget:
      case EventKind::Root: forget(e.vertex); break;
    }
  }
}

namespace {

// Runs one connected component, emitting trace rows with original vertex ids.
std::optional<int> solve_component(const IntervalModel& sub, const std::vector<VertexId>& ids, int budget,
                                   const FptOptions& options, int& event_counter, FptResult& result) {
  MdProgram program(sub, budget, options);
  auto dec = build_path_decomposition(power_model(sub, 4));
  for (const auto& e : dec.events) {
    switch (e.kind) {
      case EventKind::Leaf: program.leaf(e.vertex); break;
      case EventKind::Introduce: program.introduce(e.vertex); break;
      case EventKind::Forget:
      case EventKind::Root: program.forget(e.vertex); break;
    }
    result.peak_configurations = std::max(result.peak_configurations, program.configuration_count());
    if (options.trace) {
      *options.trace << event_counter << ',' << event_code(e.kind) << ',' << ids[e.vertex] << ','
                     << program.bag().size() << ',' << program.pair_count() << ','
                     << program.configuration_count() << '\n';
    }
    ++event_counter;
  }
  auto best = program.best_count();
  if (best) {
    for (VertexId v : program.witness().members()) result.witness.insert(ids[v]);
  }
  return best;
}

}  // namespace

FptResult fpt_metric_dimension(const IntervalModel& model, int k, const FptOptions& options) {
  FptResult result;
  result.witness = VertexSet(model.size());
  if (model.empty()) {
    result.size = 0;
    return result;
  }
  result.max_bag = build_path_decomposition(power_model(model, 4)).max_bag_size();
  if (result.max_bag > bag_size_bound(k)) {
    result.early_reject = true;
    return result;
  }
  if (options.trace) *options.trace << "event,kind,vertex,bag,pairs,configs\n";

  auto comps = model_components(model);
  std::vector<VertexId> singletons;
  int nontrivial = 0;
  for (const auto& c : comps) {
    if (c.size() == 1)
      singletons.push_back(c[0]);
    else
      ++nontrivial;
  }
  // isolated vertices: all but one must be chosen
  int used = std::max(0, static_cast<int>(singletons.size()) - 1);
  if (used > k) return result;
  for (std::size_t i = 0; i + 1 < singletons.size(); ++i) result.witness.insert(singletons[i]);

  int event_counter = 0;
  int remaining_components = nontrivial;
  for (const auto& c : comps) {
    if (c.size() == 1) continue;
    --remaining_components;
    int budget = k - used - remaining_components;
    if (budget < 1) return {std::nullopt, VertexSet(model.size()), false, result.max_bag, result.peak_configurations};
    auto best = solve_component(submodel(model, c), c, budget, options, event_counter, result);
    if (!best) return {std::nullopt, VertexSet(model.size()), false, result.max_bag, result.peak_configurations};
    used += *best;
  }
  result.size = used;
  return result;
}

}  // namespace ivc
