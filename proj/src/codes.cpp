#include "ivc/codes.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <climits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ivc/errors.hpp"

namespace ivc {

VertexSet::VertexSet(int universe_size, std::initializer_list<VertexId> members)
    : VertexSet(from_members(universe_size, std::vector<VertexId>(members))) {}

VertexSet VertexSet::from_members(int universe_size, const std::vector<VertexId>& members) {
  VertexSet s(universe_size);
  for (VertexId v : members) {
    if (v < 0 || v >= universe_size)
      throw ValidationError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe_size - 1));
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::full(int universe_size) {
  VertexSet s(universe_size);
  s.bits_.set();
  return s;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
    out.push_back(static_cast<VertexId>(i));
  return out;
}

bool lexicographically_less(const VertexSet& a, const VertexSet& b) {
  auto ma = a.members(), mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string format_members(const VertexSet& s) {
  std::string out;
  for (VertexId v : s.members()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::MD: return "md";
    case ProblemKind::LD: return "ld";
    case ProblemKind::ID: return "id";
    case ProblemKind::OLD: return "old";
  }
  return "?";
}

ProblemKind parse_problem_kind(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "md") return ProblemKind::MD;
  if (t == "ld") return ProblemKind::LD;
  if (t == "id") return ProblemKind::ID;
  if (t == "old") return ProblemKind::OLD;
  throw ValidationError("unknown problem '" + text + "' (expected md, ld, id or old)");
}

Criterion criterion_for(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::MD: return Criterion::Resolving;
    case ProblemKind::LD: return Criterion::LocatingDominating;
    case ProblemKind::ID: return Criterion::Identifying;
    case ProblemKind::OLD: return Criterion::OpenLocatingDominating;
  }
  return Criterion::Resolving;
}

std::string describe(const Violation& violation) {
  if (violation.type == Violation::Type::NotDominated)
    return "vertex " + std::to_string(violation.u) + " not dominated";
  return "pair " + std::to_string(violation.u) + " " + std::to_string(violation.v) + " not separated";
}

namespace {

using Signature = std::vector<int>;

std::vector<VertexId> trace(const Graph& g, const VertexSet& s, VertexId v, bool closed) {
  std::vector<VertexId> out;
  for (VertexId y : g.neighbors(v))
    if (s.contains(y)) out.push_back(y);
  if (closed && s.contains(v)) out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

// Lexicographically smallest pair among vertices sharing a signature.
std::optional<Violation> first_collision(const std::vector<std::pair<VertexId, Signature>>& items) {
  std::map<Signature, VertexId> first_seen;
  std::optional<Violation> best;
  for (const auto& [v, sig] : items) {
    auto [it, fresh] = first_seen.emplace(sig, v);
    if (fresh) continue;
    Violation cand{Violation::Type::NotSeparated, std::min(it->second, v), std::max(it->second, v)};
    if (!best || std::pair(cand.u, cand.v) < std::pair(best->u, best->v)) best = cand;
  }
  return best;
}

std::vector<Signature> distance_signatures(const Graph& g, const VertexSet& s) {
  std::vector<Signature> sig(static_cast<std::size_t>(g.order()));
  for (VertexId x : s.members()) {
    auto row = bfs_distances(g, x);
    for (VertexId v = 0; v < g.order(); ++v) sig[v].push_back(row[v]);
  }
  return sig;
}

}  // namespace

std::optional<Violation> first_violation(const Graph& g, Criterion criterion, const VertexSet& s) {
  const int n = g.order();
  if (s.universe_size() != n) throw std::invalid_argument("vertex set universe does not match graph order");
  switch (criterion) {
    case Criterion::Resolving: {
      auto sig = distance_signatures(g, s);
      std::vector<std::pair<VertexId, Signature>> items;
      for (VertexId v = 0; v < n; ++v) items.emplace_back(v, std::move(sig[v]));
      return first_collision(items);
    }
    case Criterion::Distance2Resolving: {
      auto sig = distance_signatures(g, s);
      LocalDistances near(g, 2);
      for (VertexId u = 0; u < n; ++u)
        for (const auto& [v, d] : near.ball(u))
          if (v > u && d <= 2 && sig[u] == sig[v]) return Violation{Violation::Type::NotSeparated, u, v};
      return std::nullopt;
    }
    case Criterion::LocatingDominating:
    case Criterion::Identifying:
    case Criterion::OpenLocatingDominating: {
      const bool closed = criterion == Criterion::Identifying;
      const bool outside_only = criterion == Criterion::LocatingDominating;
      std::vector<std::pair<VertexId, Signature>> items;
      for (VertexId v = 0; v < n; ++v) {
        if (outside_only && s.contains(v)) continue;
        auto t = trace(g, s, v, closed);
        if (t.empty()) return Violation{Violation::Type::NotDominated, v, v};
        items.emplace_back(v, std::move(t));
      }
      return first_collision(items);
    }
  }
  return std::nullopt;
}

bool is_resolving(const Graph& g, const VertexSet& s) {
  return !first_violation(g, Criterion::Resolving, s);
}
bool is_distance2_resolving(const Graph& g, const VertexSet& s) {
  return !first_violation(g, Criterion::Distance2Resolving, s);
}
bool is_locating_dominating(const Graph& g, const VertexSet& s) {
  return !first_violation(g, Criterion::LocatingDominating, s);
}
bool is_identifying(const Graph& g, const VertexSet& s) {
  return !first_violation(g, Criterion::Identifying, s);
}
bool is_open_locating_dominating(const Graph& g, const VertexSet& s) {
  return !first_violation(g, Criterion::OpenLocatingDominating, s);
}
bool satisfies(const Graph& g, ProblemKind kind, const VertexSet& s) {
  return !first_violation(g, criterion_for(kind), s);
}

bool has_twins(const Graph& g) {
  // closed twins are necessarily adjacent
  for (auto [u, v] : g.edges()) {
    auto nu = g.neighbors(u), nv = g.neighbors(v);
    nu.insert(std::lower_bound(nu.begin(), nu.end(), u), u);
    nv.insert(std::lower_bound(nv.begin(), nv.end(), v), v);
    if (nu == nv) return true;
  }
  return false;
}

bool has_open_twins(const Graph& g) {
  std::map<std::vector<VertexId>, VertexId> seen;
  for (VertexId v = 0; v < g.order(); ++v)
    if (!seen.emplace(g.neighbors(v), v).second) return true;
  return false;
}

std::vector<Constraint> constraint_family(const Graph& g, Criterion criterion) {
  const int n = g.order();
  const auto un = static_cast<std::size_t>(n);
  std::vector<Constraint> out;
  if (criterion == Criterion::Resolving || criterion == Criterion::Distance2Resolving) {
    auto dist = all_pairs_distances(g);
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b) {
        if (criterion == Criterion::Distance2Resolving && dist(a, b) > 2) continue;
        boost::dynamic_bitset<> h(un);
        for (VertexId x = 0; x < n; ++x)
          if (dist(x, a) != dist(x, b)) h.set(static_cast<std::size_t>(x));
        out.push_back({std::move(h), a, b});
      }
    return out;
  }
  std::vector<boost::dynamic_bitset<>> open(un, boost::dynamic_bitset<>(un));
  for (VertexId v = 0; v < n; ++v)
    for (VertexId y : g.neighbors(v)) open[v].set(static_cast<std::size_t>(y));
  auto closed = open;
  for (VertexId v = 0; v < n; ++v) closed[v].set(static_cast<std::size_t>(v));
  const auto& nb = criterion == Criterion::OpenLocatingDominating ? open : closed;
  for (VertexId v = 0; v < n; ++v) out.push_back({nb[v], v, v});
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) {
      auto h = nb[a] ^ nb[b];
      if (criterion == Criterion::LocatingDominating) {
        h.set(static_cast<std::size_t>(a));
        h.set(static_cast<std::size_t>(b));
      }
      out.push_back({std::move(h), a, b});
    }
  return out;
}

namespace {

using Mask = std::uint64_t;

// Drops duplicates and any mask containing another one; smallest masks first.
std::vector<Mask> minimal_masks(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Mask> out;
  for (Mask m : masks) {
    bool dominated = false;
    for (Mask kept : out)
      if ((kept & m) == kept) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(m);
  }
  return out;
}

bool hits_all(const std::vector<Mask>& masks, Mask s) {
  for (Mask m : masks)
    if (!(m & s)) return false;
  return true;
}

// Lexicographically first valid combination of `k` elements from {first..n-1}
// that includes `first`.
std::optional<Mask> first_with_prefix(const std::vector<Mask>& masks, int n, int k, int first) {
  if (k == 0) return hits_all(masks, 0) ? std::optional<Mask>(0) : std::nullopt;
  std::vector<int> idx(static_cast<std::size_t>(k));
  idx[0] = first;
  for (int i = 1; i < k; ++i) idx[i] = first + i;
  if (idx[k - 1] >= n) return std::nullopt;
  while (true) {
    Mask s = 0;
    for (int i : idx) s |= Mask{1} << i;
    if (hits_all(masks, s)) return s;
    int i = k - 1;
    while (i >= 1 && idx[i] == n - k + i) --i;
    if (i < 1) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::optional<Mask> first_of_size(const std::vector<Mask>& masks, int n, int k, int threads) {
  if (k == 0) return first_with_prefix(masks, n, 0, 0);
  if (threads <= 1) {
    for (int f = 0; f + k <= n; ++f)
      if (auto s = first_with_prefix(masks, n, k, f)) return s;
    return std::nullopt;
  }
  std::atomic<int> next{0};
  std::atomic<int> best_first{INT_MAX};
  std::mutex mu;
  Mask best = 0;
  auto worker = [&] {
    while (true) {
      int f = next.fetch_add(1);
      if (f + k > n || f >= best_first.load()) return;
      if (auto s = first_with_prefix(masks, n, k, f)) {
        std::lock_guard lock(mu);
        if (f < best_first.load()) {
          best_first = f;
          best = *s;
        }
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (best_first.load() == INT_MAX) return std::nullopt;
  return best;
}

}  // namespace

BruteForceResult brute_force_min(const Graph& g, Criterion criterion, int k_max, int threads) {
  const int n = g.order();
  if (n > 64) throw std::invalid_argument("brute_force_min supports at most 64 vertices");
  std::vector<Mask> masks;
  for (const auto& c : constraint_family(g, criterion)) {
    Mask m = 0;
    for (auto i = c.hitters.find_first(); i != boost::dynamic_bitset<>::npos; i = c.hitters.find_next(i))
      m |= Mask{1} << i;
    if (m == 0) return {std::nullopt, NoSolutionReason::NoValidSet};
    masks.push_back(m);
  }
  masks = minimal_masks(std::move(masks));
  for (int k = 0; k <= std::min(k_max, n); ++k) {
    if (auto s = first_of_size(masks, n, k, threads)) {
      VertexSet out(n);
      for (int v = 0; v < n; ++v)
        if (*s >> v & 1) out.insert(v);
      return {out, NoSolutionReason::None};
    }
  }
  return {std::nullopt, NoSolutionReason::BudgetExceeded};
}

BruteForceResult brute_force_min(const Graph& g, ProblemKind kind, int k_max, int threads) {
  return brute_force_min(g, criterion_for(kind), k_max, threads);
}

namespace {

class HittingSet {
 public:
  explicit HittingSet(std::vector<Mask> masks) : masks_(minimal_masks(std::move(masks))) {}

  int solve(int upper) {
    best_ = upper;
    search(0, ~Mask{0}, 0);
    return best_;
  }

 private:
  void search(Mask chosen, Mask allowed, int count) {
    // unhit masks restricted to still-allowed elements
    std::vector<Mask> open;
    for (Mask m : masks_)
      if (!(m & chosen)) {
        Mask r = m & allowed;
        if (!r) return;
        open.push_back(r);
      }
    if (open.empty()) {
      best_ = std::min(best_, count);
      return;
    }
    std::sort(open.begin(), open.end(), [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
    int bound = 0;
    Mask used = 0;
    for (Mask m : open)
      if (!(m & used)) {
        used |= m;
        ++bound;
      }
    if (count + bound >= best_) return;
    Mask branch = open.front();
    while (branch) {
      Mask e = branch & -branch;
      branch ^= e;
      search(chosen | e, allowed, count + 1);
      allowed &= ~e;
    }
  }

  std::vector<Mask> masks_;
  int best_ = 0;
};

}  // namespace

std::optional<int> min_completion(int n, const std::vector<Constraint>& family, const VertexSet& fixed,
                                  const std::vector<VertexId>& region, const std::vector<VertexSet>& extra) {
  if (region.size() > 64) throw std::invalid_argument("min_completion supports regions of at most 64 vertices");
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < region.size(); ++i) slot[region[i]] = static_cast<int>(i);
  std::vector<Mask> masks;
  auto add = [&](const boost::dynamic_bitset<>& hitters) {
    if (hitters.intersects(fixed.bits())) return true;
    Mask m = 0;
    for (auto i = hitters.find_first(); i != boost::dynamic_bitset<>::npos; i = hitters.find_next(i))
      if (slot[i] >= 0) m |= Mask{1} << slot[i];
    if (!m) return false;
    masks.push_back(m);
    return true;
  };
  for (const auto& c : family)
    if (!add(c.hitters)) return std::nullopt;
  for (const auto& e : extra)
    if (!add(e.bits())) return std::nullopt;
  HittingSet hs(std::move(masks));
  return hs.solve(static_cast<int>(region.size()) + 1);
}

std::optional<int> min_completion(const Graph& g, Criterion criterion, const VertexSet& fixed,
                                  const std::vector<VertexId>& region, const std::vector<VertexSet>& extra) {
  return min_completion(g.order(), constraint_family(g, criterion), fixed, region, extra);
}

}  // namespace ivc
