#include "ivc/interval_model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "ivc/errors.hpp"

namespace ivc {

std::string format_coord(const Coord& c) {
  if (c.denominator() == 1) return std::to_string(c.numerator());
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

namespace {

std::int64_t parse_int(const std::string& text, const std::string& whole) {
  if (text.empty()) throw ValidationError("malformed coordinate '" + whole + "'");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw ValidationError("malformed coordinate '" + whole + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw ValidationError("malformed coordinate '" + whole + "'");
  try {
    return std::stoll(text);
  } catch (const std::out_of_range&) {
    throw ValidationError("coordinate out of range '" + whole + "'");
  }
}

struct Endpoint {
  Coord x;
  bool is_right;
  VertexId id;
};

}  // namespace

Coord parse_coord(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Coord(parse_int(text, text));
  std::int64_t p = parse_int(text.substr(0, slash), text);
  std::int64_t q = parse_int(text.substr(slash + 1), text);
  if (q == 0) throw ValidationError("zero denominator in '" + text + "'");
  return Coord(p, q);
}

IntervalModel::IntervalModel(std::vector<Interval> intervals) {
  const int n = static_cast<int>(intervals.size());
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.id < b.id; });
  for (int i = 0; i < n; ++i) {
    if (intervals[i].id != i)
      throw ValidationError("interval ids must be 0..n-1 without gaps; missing or repeated id near " +
                            std::to_string(i));
    if (!(intervals[i].left < intervals[i].right))
      throw ValidationError("interval " + std::to_string(i) + " has left endpoint " +
                            format_coord(intervals[i].left) + " not below right endpoint " +
                            format_coord(intervals[i].right));
  }
  std::map<Coord, VertexId> seen;
  for (const auto& iv : intervals) {
    for (const Coord& x : {iv.left, iv.right}) {
      auto [it, fresh] = seen.emplace(x, iv.id);
      if (!fresh)
        throw ValidationError("duplicate endpoint coordinate " + format_coord(x) + " (intervals " +
                              std::to_string(it->second) + " and " + std::to_string(iv.id) + ")");
    }
  }
  intervals_ = std::move(intervals);
  left_order_.resize(n);
  std::iota(left_order_.begin(), left_order_.end(), 0);
  right_order_ = left_order_;
  std::sort(left_order_.begin(), left_order_.end(),
            [&](VertexId a, VertexId b) { return left(a) < left(b); });
  std::sort(right_order_.begin(), right_order_.end(),
            [&](VertexId a, VertexId b) { return right(a) < right(b); });
  left_rank_.resize(n);
  right_rank_.resize(n);
  for (int i = 0; i < n; ++i) {
    left_rank_[left_order_[i]] = i;
    right_rank_[right_order_[i]] = i;
  }
}

IntervalModel make_model(std::vector<Interval> intervals, bool repair) {
  if (!repair) return IntervalModel(std::move(intervals));
  std::set<Coord> coords;
  bool tied = false;
  for (const auto& iv : intervals) {
    if (iv.right < iv.left)
      throw ValidationError("interval " + std::to_string(iv.id) + " has left endpoint " +
                            format_coord(iv.left) + " above right endpoint " +
                            format_coord(iv.right));
    tied |= !coords.insert(iv.left).second;
    tied |= !coords.insert(iv.right).second;
  }
  if (!tied) return IntervalModel(std::move(intervals));

  std::vector<Endpoint> pts;
  for (const auto& iv : intervals) {
    pts.push_back({iv.left, false, iv.id});
    pts.push_back({iv.right, true, iv.id});
  }
  std::stable_sort(pts.begin(), pts.end(), [](const Endpoint& a, const Endpoint& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.is_right != b.is_right) return !a.is_right;
    return a.id < b.id;
  });
  std::map<VertexId, std::size_t> slot;
  for (std::size_t i = 0; i < intervals.size(); ++i) slot[intervals[i].id] = i;
  for (std::size_t rank = 0; rank < pts.size(); ++rank) {
    auto it = slot.find(pts[rank].id);
    if (it == slot.end()) continue;
    auto& iv = intervals[it->second];
    (pts[rank].is_right ? iv.right : iv.left) = Coord(static_cast<std::int64_t>(rank));
  }
  return IntervalModel(std::move(intervals));
}

IntervalModel normalized(const IntervalModel& model) {
  std::vector<Endpoint> pts;
  for (const auto& iv : model.intervals()) {
    pts.push_back({iv.left, false, iv.id});
    pts.push_back({iv.right, true, iv.id});
  }
  std::sort(pts.begin(), pts.end(), [](const Endpoint& a, const Endpoint& b) { return a.x < b.x; });
  std::vector<Interval> out(model.intervals());
  for (std::size_t rank = 0; rank < pts.size(); ++rank) {
    auto& iv = out[pts[rank].id];
    (pts[rank].is_right ? iv.right : iv.left) = Coord(static_cast<std::int64_t>(rank));
  }
  return IntervalModel(std::move(out));
}

Graph build_graph(const IntervalModel& model) {
  std::vector<Endpoint> pts;
  pts.reserve(2 * static_cast<std::size_t>(model.size()));
  for (const auto& iv : model.intervals()) {
    pts.push_back({iv.left, false, iv.id});
    pts.push_back({iv.right, true, iv.id});
  }
  std::sort(pts.begin(), pts.end(), [](const Endpoint& a, const Endpoint& b) { return a.x < b.x; });
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(model.size()));
  std::set<VertexId> active;
  for (const auto& p : pts) {
    if (p.is_right) {
      active.erase(p.id);
      continue;
    }
    for (VertexId a : active) {
      adj[a].push_back(p.id);
      adj[p.id].push_back(a);
    }
    active.insert(p.id);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < model.size(); ++u)
    for (VertexId v : adj[u])
      if (u < v) edges.emplace_back(u, v);
  return Graph::from_edges(model.size(), edges);
}

Graph graph_power(const Graph& g, int d) {
  LocalDistances dist(g, d);
  Graph out(g.order());
  for (VertexId u = 0; u < g.order(); ++u)
    for (auto [v, duv] : dist.ball(u))
      if (u < v && duv >= 1) out.add_edge(u, v);
  return out;
}

IntervalModel power_model(const IntervalModel& model, int d) {
  if (d < 2) throw std::invalid_argument("power_model requires d >= 2, got " + std::to_string(d));
  const int n = model.size();
  Graph g = build_graph(model);
  LocalDistances dist(g, d);

  // last_reach[x]: the <_L-last interval within distance d of x
  std::vector<VertexId> last_reach(n);
  for (VertexId x = 0; x < n; ++x) {
    VertexId best = x;
    for (auto [y, dxy] : dist.ball(x)) {
      (void)dxy;
      if (model.left_rank(y) > model.left_rank(best)) best = y;
    }
    last_reach[x] = best;
  }

  // Intervals sharing the same reach are stacked inside the gap after its left
  // endpoint, in their original <_R order.
  std::vector<std::vector<VertexId>> groups(n);
  for (VertexId x : model.right_order()) groups[last_reach[x]].push_back(x);

  std::vector<Interval> out(model.intervals());
  const auto& lorder = model.left_order();
  for (int rank = 0; rank < n; ++rank) {
    VertexId u = lorder[rank];
    const auto& members = groups[u];
    if (members.empty()) continue;
    Coord lo = model.left(u);
    Coord hi = rank + 1 < n ? model.left(lorder[rank + 1]) : lo + Coord(1);
    const auto slots = static_cast<std::int64_t>(members.size()) + 1;
    for (std::size_t i = 0; i < members.size(); ++i)
      out[members[i]].right = lo + (hi - lo) * Coord(static_cast<std::int64_t>(i) + 1, slots);
  }
  return IntervalModel(std::move(out));
}

std::string to_string(ModelStyle style) {
  switch (style) {
    case ModelStyle::Uniform: return "uniform";
    case ModelStyle::UnitLength: return "unit-length";
    case ModelStyle::LongThin: return "long-thin";
  }
  return "?";
}

ModelStyle parse_model_style(const std::string& text) {
  if (text == "uniform" || text == "uniform-endpoints") return ModelStyle::Uniform;
  if (text == "unit-length" || text == "unit") return ModelStyle::UnitLength;
  if (text == "long-thin") return ModelStyle::LongThin;
  throw ValidationError("unknown model style '" + text + "'");
}

IntervalModel random_model(int n, std::uint64_t seed, ModelStyle style, int window) {
  if (n < 1) throw std::invalid_argument("random_model requires n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Interval> out(static_cast<std::size_t>(n));
  switch (style) {
    case ModelStyle::Uniform: {
      std::vector<std::int64_t> slots(2 * static_cast<std::size_t>(n));
      std::iota(slots.begin(), slots.end(), 0);
      std::shuffle(slots.begin(), slots.end(), rng);
      for (int i = 0; i < n; ++i) {
        auto a = slots[2 * i], b = slots[2 * i + 1];
        out[i] = {i, Coord(std::min(a, b)), Coord(std::max(a, b))};
      }
      break;
    }
    case ModelStyle::UnitLength: {
      // even lefts, odd rights: all endpoints distinct
      std::vector<std::int64_t> starts(2 * static_cast<std::size_t>(n));
      std::iota(starts.begin(), starts.end(), 0);
      std::shuffle(starts.begin(), starts.end(), rng);
      const std::int64_t length = 7;
      for (int i = 0; i < n; ++i) {
        std::int64_t l = 2 * starts[i];
        out[i] = {i, Coord(l), Coord(l + length)};
      }
      break;
    }
    case ModelStyle::LongThin: {
      if (window < 1) throw std::invalid_argument("long-thin window must be >= 1");
      std::uniform_int_distribution<int> reach(1, window);
      const std::int64_t scale = 4 * (static_cast<std::int64_t>(n) + 1);
      for (int i = 0; i < n; ++i) {
        std::int64_t r = scale * (i + reach(rng)) + 1 + i;
        out[i] = {i, Coord(scale * i), Coord(r)};
      }
      break;
    }
  }
  return IntervalModel(std::move(out));
}

std::vector<std::vector<VertexId>> model_components(const IntervalModel& model) {
  std::vector<std::vector<VertexId>> comps;
  Coord reach;
  for (VertexId v : model.left_order()) {
    if (comps.empty() || model.left(v) > reach) {
      comps.emplace_back();
      reach = model.right(v);
    }
    comps.back().push_back(v);
    reach = std::max(reach, model.right(v));
  }
  for (auto& c : comps) std::sort(c.begin(), c.end());
  return comps;
}

IntervalModel submodel(const IntervalModel& model, const std::vector<VertexId>& ids) {
  std::vector<Interval> out;
  out.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    out.push_back({static_cast<VertexId>(i), model.left(ids[i]), model.right(ids[i])});
  return IntervalModel(std::move(out));
}

}  // namespace ivc
