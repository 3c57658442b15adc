#include "ivc/reductions.hpp"

#include <algorithm>
#include <set>

#include "ivc/errors.hpp"

namespace ivc {

void ThreeDMInstance::validate() const {
  if (n < 1) throw ValidationError("3DM instance needs n >= 1");
  if (triples.empty()) throw ValidationError("3DM instance needs at least one triple");
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& t = triples[i];
    for (int x : {t.a, t.b, t.c})
      if (x < 0 || x >= n)
        throw ValidationError("triple " + std::to_string(i) + " has element " + std::to_string(x) +
                              " outside 0.." + std::to_string(n - 1));
  }
}

bool ThreeDMInstance::is_perfect_matching(const std::vector<int>& chosen) const {
  if (static_cast<int>(chosen.size()) != n) return false;
  std::vector<char> a(n), b(n), c(n);
  std::set<int> distinct;
  for (int i : chosen) {
    if (i < 0 || i >= m() || !distinct.insert(i).second) return false;
    const auto& t = triples[i];
    if (a[t.a]++ || b[t.b]++ || c[t.c]++) return false;
  }
  return true;
}

std::string to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::P4LD: return "p4-ld";
    case GadgetKind::P5ID: return "p5-id";
    case GadgetKind::P6OLD: return "p6-old";
  }
  return "?";
}

GadgetKind parse_gadget_kind(const std::string& text) {
  if (text == "ld" || text == "p4-ld") return GadgetKind::P4LD;
  if (text == "id" || text == "p5-id") return GadgetKind::P5ID;
  if (text == "old" || text == "p6-old") return GadgetKind::P6OLD;
  throw ValidationError("unknown gadget kind '" + text + "' (expected ld, id or old)");
}

DominatingGadget dominating_gadget(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::P4LD: return {kind, ProblemKind::LD, 2, 4, {0, 3}};
    case GadgetKind::P5ID: return {kind, ProblemKind::ID, 3, 5, {0, 2, 4}};
    case GadgetKind::P6OLD: return {kind, ProblemKind::OLD, 4, 6, {1, 2, 3, 4}};
  }
  throw ValidationError("unknown gadget kind");
}

Graph DominatingGadget::graph() const {
  Graph g(order);
  for (int i = 0; i + 1 < order; ++i) g.add_edge(i, i + 1);
  return g;
}

IntervalModel DominatingGadget::model() const {
  std::vector<Interval> out;
  for (int i = 0; i < order; ++i) out.push_back({i, Coord(2 * i), Coord(2 * i + 3)});
  return IntervalModel(std::move(out));
}

VertexSet DominatingGadget::standard_set() const { return VertexSet::from_members(order, standard); }

bool no_vertex_dominated_by_all(const Graph& g, const VertexSet& s) {
  for (VertexId x = 0; x < g.order(); ++x) {
    bool all = true;
    for (VertexId y : s.members())
      if (y != x && !g.has_edge(x, y)) {
        all = false;
        break;
      }
    if (all) return false;
  }
  return true;
}

std::vector<VertexId> TransmitterParts::vertices() const {
  std::vector<VertexId> out{u, uv1, uv2, v, vw1, vw2, w};
  for (const auto& gd : gadgets) out.insert(out.end(), gd.begin(), gd.end());
  return out;
}

long long reduction_order(GadgetKind kind, int n, int m) {
  const long long vd = dominating_gadget(kind).order;
  return (29 * vd + 43) * m + 3 * (vd + 2) * n;
}

long long reduction_solution_size(GadgetKind kind, int n, int m) {
  const long long d = dominating_gadget(kind).d;
  return (29 * d + 7) * m + (3 * d + 1) * n;
}

namespace {

// Builds a model from an ordered stream of endpoint tokens. The position of a
// token in the stream is its coordinate; the stream is split into a negative part
// (triple bands) and a positive part (element pairs).
class Layout {
 public:
  explicit Layout(GadgetKind kind) : gadget_(dominating_gadget(kind)) {}

  VertexId vertex(std::string role) {
    roles_.push_back(std::move(role));
    return static_cast<VertexId>(roles_.size()) - 1;
  }
  void L(VertexId v) { tokens_.push_back({v, true}); }
  void R(VertexId v) { tokens_.push_back({v, false}); }

  /// Allocates a gadget and emits its whole block: L1 L2 R1 L3 R2 ... Lk R(k-1) Rk.
  std::vector<VertexId> gadget(const std::string& role) {
    std::vector<VertexId> path;
    for (int i = 0; i < gadget_.order; ++i) path.push_back(vertex(role + ".x" + std::to_string(i + 1)));
    L(path[0]);
    for (int i = 1; i < gadget_.order; ++i) {
      L(path[i]);
      R(path[i - 1]);
    }
    R(path.back());
    gadgets_.push_back(path);
    return path;
  }

  void standard(const std::vector<VertexId>& gadget, std::vector<VertexId>& into) const {
    for (int i : gadget_.standard) into.push_back(gadget[i]);
  }

  void mark_positive_start() { positive_from_ = tokens_.size(); }

  IntervalModel model() const {
    std::vector<Interval> out(roles_.size());
    std::vector<int> seen(roles_.size(), 0);
    const auto split = static_cast<long long>(positive_from_);
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      const auto& t = tokens_[i];
      long long idx = static_cast<long long>(i);
      Coord x(idx < split ? idx - split : idx - split + 1);
      out[t.v].id = t.v;
      (t.is_left ? out[t.v].left : out[t.v].right) = x;
      seen[t.v] += t.is_left ? 1 : 2;
    }
    for (std::size_t v = 0; v < roles_.size(); ++v)
      if (seen[v] != 3) throw LayoutError("interval " + roles_[v] + " was not placed exactly once");
    return IntervalModel(std::move(out));
  }

  std::vector<std::string> roles() const { return roles_; }
  std::vector<std::vector<VertexId>> gadgets() const { return gadgets_; }
  const DominatingGadget& spec() const { return gadget_; }

 private:
  struct Token {
    VertexId v;
    bool is_left;
  };
  DominatingGadget gadget_;
  std::vector<std::string> roles_;
  std::vector<Token> tokens_;
  std::vector<std::vector<VertexId>> gadgets_;
  std::size_t positive_from_ = 0;
};

struct Pair {
  std::string label;
  VertexId one, two;
  std::vector<VertexId> gadget;
};

Pair new_pair(Layout& lay, const std::string& label, const char* a = "1", const char* b = "2") {
  Pair p{label, lay.vertex(label + "." + a), lay.vertex(label + "." + b), {}};
  return p;
}

TransmitterParts make_transmitter(Layout& lay, const std::string& label) {
  TransmitterParts t;
  t.label = label;
  t.u = lay.vertex(label + ".u");
  t.uv1 = lay.vertex(label + ".uv1");
  t.uv2 = lay.vertex(label + ".uv2");
  t.v = lay.vertex(label + ".v");
  t.vw1 = lay.vertex(label + ".vw1");
  t.vw2 = lay.vertex(label + ".vw2");
  t.w = lay.vertex(label + ".w");
  return t;
}

// From D(u) through R_uv2, the part of a transmitter between its u and D(v).
void emit_front_to_v(Layout& lay, TransmitterParts& t) {
  t.gadgets.push_back(lay.gadget(t.label + ".D(u)"));
  lay.L(t.uv1);
  lay.R(t.u);
  lay.L(t.uv2);
  t.gadgets.push_back(lay.gadget(t.label + ".D(uv)"));
  lay.R(t.uv1);
  lay.L(t.v);
  lay.R(t.uv2);
  t.gadgets.push_back(lay.gadget(t.label + ".D(v)"));
}

// L_vw1 R_v L_vw2 D(vw) R_vw1 L_w R_vw2 D(w)
void emit_back(Layout& lay, TransmitterParts& t) {
  lay.L(t.vw1);
  lay.R(t.v);
  lay.L(t.vw2);
  t.gadgets.push_back(lay.gadget(t.label + ".D(vw)"));
  lay.R(t.vw1);
  lay.L(t.w);
  lay.R(t.vw2);
  t.gadgets.push_back(lay.gadget(t.label + ".D(w)"));
}

void emit_core(Layout& lay, TransmitterParts& t) {
  emit_front_to_v(lay, t);
  emit_back(lay, t);
}

// Pair block where the listed endpoints fall inside the right zone.
void emit_pair_right(Layout& lay, Pair& p, const std::vector<VertexId>& left_zone_rights,
                     const std::vector<VertexId>& right_zone_lefts) {
  lay.L(p.one);
  for (VertexId x : left_zone_rights) lay.R(x);
  lay.L(p.two);
  p.gadget = lay.gadget(p.label + ".D");
  lay.R(p.one);
  for (VertexId x : right_zone_lefts) lay.L(x);
  lay.R(p.two);
}

ChoicePair choice(const Pair& p, std::vector<VertexId> separators) {
  std::sort(separators.begin(), separators.end());
  return {p.label, p.one, p.two, p.gadget, separators};
}

void transmitter_pairs(const TransmitterParts& t, std::vector<ChoicePair>& out) {
  out.push_back({t.label + ".uv", t.uv1, t.uv2, t.gadgets[1], {std::min(t.u, t.v), std::max(t.u, t.v)}});
  out.push_back({t.label + ".vw", t.vw1, t.vw2, t.gadgets[3], {std::min(t.v, t.w), std::max(t.v, t.w)}});
}

void standard_parts(const Layout& lay, const TransmitterParts& t, bool tight, std::vector<VertexId>& into) {
  for (const auto& gd : t.gadgets) lay.standard(gd, into);
  if (tight) {
    into.push_back(t.v);
  } else {
    into.push_back(t.u);
    into.push_back(t.w);
  }
}

void finish(ReductionOutput& out, const Layout& lay) {
  out.model = lay.model();
  out.roles = lay.roles();
  out.gadgets = lay.gadgets();
  for (auto* v : {&out.triple_tight, &out.triple_nontight})
    for (auto& s : *v) std::sort(s.begin(), s.end());
  std::sort(out.element_standard.begin(), out.element_standard.end());
  Graph g = build_graph(out.model);
  if (auto msg = audit_gadgets(out); !msg.empty()) throw LayoutError(msg);
  if (auto msg = audit_choice_pairs(out, g); !msg.empty()) throw LayoutError(msg);
}

}  // namespace

ReductionOutput build_reduction(const ThreeDMInstance& instance, GadgetKind kind) {
  instance.validate();
  Layout lay(kind);
  ReductionOutput out;
  out.kind = kind;
  out.n = instance.n;
  out.m = instance.m();
  out.expected_order = reduction_order(kind, out.n, out.m);
  out.expected_solution_size = reduction_solution_size(kind, out.n, out.m);

  // element pairs first so that their ids are stable across instances with equal n
  const char parts[3] = {'A', 'B', 'C'};
  std::vector<std::vector<Pair>> elements(3);
  for (int part = 0; part < 3; ++part)
    for (int x = 0; x < instance.n; ++x)
      elements[part].push_back(new_pair(lay, std::string(1, parts[part]) + std::to_string(x), "f", "g"));
  // transmitters whose w reaches each element pair
  std::vector<std::vector<std::vector<VertexId>>> reaching(3, std::vector<std::vector<VertexId>>(instance.n));

  for (int ti = 0; ti < instance.m(); ++ti) {
    const auto& tr = instance.triples[ti];
    const std::string T = "T" + std::to_string(ti);
    Pair p = new_pair(lay, T + ".p"), q = new_pair(lay, T + ".q"), r = new_pair(lay, T + ".r"),
         s = new_pair(lay, T + ".s");
    TransmitterParts pq = make_transmitter(lay, T + ".Tr(p,q)");
    TransmitterParts prb = make_transmitter(lay, T + ".Tr(p,r,b)");
    TransmitterParts qrc = make_transmitter(lay, T + ".Tr(q,r,c)");
    TransmitterParts rs = make_transmitter(lay, T + ".Tr(r,s)");
    TransmitterParts sa = make_transmitter(lay, T + ".Tr(s,a)");

    emit_pair_right(lay, p, {}, {prb.u, pq.u});
    prb.gadgets.push_back(lay.gadget(prb.label + ".D(u)"));
    emit_core(lay, pq);
    emit_pair_right(lay, q, {pq.w}, {qrc.u});
    emit_front_to_v(lay, qrc);
    lay.L(qrc.vw1);
    lay.R(qrc.v);
    lay.L(qrc.vw2);
    qrc.gadgets.push_back(lay.gadget(qrc.label + ".D(vw)"));
    // r: u of Tr(p,r,b) ends in the left zone, between its uv1 and uv2 starts;
    // vw of Tr(q,r,c) ends in the right zone around the start of its w
    lay.L(r.one);
    lay.L(prb.uv1);
    lay.R(prb.u);
    lay.L(prb.uv2);
    lay.L(r.two);
    r.gadget = lay.gadget(r.label + ".D");
    lay.R(r.one);
    lay.R(qrc.vw1);
    lay.L(qrc.w);
    lay.R(qrc.vw2);
    lay.L(rs.u);
    lay.R(r.two);
    qrc.gadgets.push_back(lay.gadget(qrc.label + ".D(w)"));
    prb.gadgets.push_back(lay.gadget(prb.label + ".D(uv)"));
    lay.R(prb.uv1);
    lay.L(prb.v);
    lay.R(prb.uv2);
    prb.gadgets.push_back(lay.gadget(prb.label + ".D(v)"));
    emit_core(lay, rs);
    emit_pair_right(lay, s, {rs.w}, {sa.u});
    emit_back(lay, prb);
    emit_core(lay, sa);

    reaching[0][tr.a].push_back(sa.w);
    reaching[1][tr.b].push_back(prb.w);
    reaching[2][tr.c].push_back(qrc.w);

    auto& cp = out.choice_pairs;
    cp.push_back(choice(p, {pq.u, prb.u}));
    cp.push_back(choice(q, {pq.w, qrc.u}));
    cp.push_back(choice(r, {prb.u, qrc.w, rs.u}));
    cp.push_back(choice(s, {rs.w, sa.u}));
    for (auto* t : {&pq, &prb, &qrc, &rs, &sa}) transmitter_pairs(*t, cp);

    std::vector<VertexId> base;
    for (const auto* pr : {&p, &q, &r, &s}) lay.standard(pr->gadget, base);
    std::vector<VertexId> tight = base, nontight = base;
    for (auto* t : {&pq, &rs}) {
      standard_parts(lay, *t, false, tight);
      standard_parts(lay, *t, true, nontight);
    }
    for (auto* t : {&prb, &qrc, &sa}) {
      standard_parts(lay, *t, true, tight);
      standard_parts(lay, *t, false, nontight);
    }
    out.triple_tight.push_back(tight);
    out.triple_nontight.push_back(nontight);
    for (auto* t : {&pq, &prb, &qrc, &rs, &sa}) out.transmitters.push_back(*t);
  }

  lay.mark_positive_start();
  for (int part = 0; part < 3; ++part)
    for (int x = 0; x < instance.n; ++x) {
      Pair& e = elements[part][x];
      emit_pair_right(lay, e, reaching[part][x], {});
      lay.standard(e.gadget, out.element_standard);
      out.choice_pairs.push_back(choice(e, reaching[part][x]));
    }

  finish(out, lay);
  return out;
}

ReductionOutput transmitter_host(GadgetKind kind) {
  Layout lay(kind);
  ReductionOutput out;
  out.kind = kind;
  Pair x = new_pair(lay, "X"), y = new_pair(lay, "Y");
  TransmitterParts t = make_transmitter(lay, "Tr(X,Y)");
  emit_pair_right(lay, x, {}, {t.u});
  emit_core(lay, t);
  emit_pair_right(lay, y, {t.w}, {});
  out.choice_pairs.push_back(choice(x, {t.u}));
  out.choice_pairs.push_back(choice(y, {t.w}));
  transmitter_pairs(t, out.choice_pairs);
  out.transmitters.push_back(t);
  std::vector<VertexId> base;
  lay.standard(x.gadget, base);
  lay.standard(y.gadget, base);
  std::vector<VertexId> tight = base, nontight = base;
  standard_parts(lay, t, true, tight);
  standard_parts(lay, t, false, nontight);
  out.triple_tight.push_back(tight);
  out.triple_nontight.push_back(nontight);
  out.expected_order = 2 * (2 + lay.spec().order) + 7 + 5 * lay.spec().order;
  finish(out, lay);
  return out;
}

VertexSet standard_solution(const ReductionOutput& out, const ThreeDMInstance& instance,
                            const std::vector<int>& matching) {
  if (!instance.is_perfect_matching(matching)) throw ValidationError("the chosen triples are not a perfect matching");
  if (instance.m() != out.m || instance.n != out.n)
    throw ValidationError("instance does not match the reduction output");
  VertexSet s(out.model.size());
  std::vector<char> matched(static_cast<std::size_t>(out.m), 0);
  for (int i : matching) matched[i] = 1;
  for (int i = 0; i < out.m; ++i)
    for (VertexId v : matched[i] ? out.triple_nontight[i] : out.triple_tight[i]) s.insert(v);
  for (VertexId v : out.element_standard) s.insert(v);
  return s;
}

std::string audit_gadgets(const ReductionOutput& out) {
  const auto& model = out.model;
  for (const auto& gd : out.gadgets) {
    Coord lo = model.left(gd[0]), hi = model.right(gd[0]);
    std::set<VertexId> inside(gd.begin(), gd.end());
    for (VertexId x : gd) {
      lo = std::min(lo, model.left(x));
      hi = std::max(hi, model.right(x));
    }
    for (VertexId y = 0; y < model.size(); ++y) {
      if (inside.count(y)) continue;
      bool contains = model.left(y) < lo && hi < model.right(y);
      bool misses = model.right(y) < lo || hi < model.left(y);
      if (!contains && !misses)
        return "interval " + out.roles[y] + " cuts gadget " + out.roles[gd[0]];
    }
  }
  return "";
}

std::string audit_choice_pairs(const ReductionOutput& out, const Graph& g) {
  const auto& model = out.model;
  for (const auto& cp : out.choice_pairs) {
    const auto &a = model[cp.first], &b = model[cp.second];
    bool nested = (a.left < b.left && b.right < a.right) || (b.left < a.left && a.right < b.right);
    if (nested) return "choice pair " + cp.label + " is nested";
    for (VertexId x : cp.gadget)
      if (!(a.left < model.left(x) && model.right(x) < a.right && b.left < model.left(x) &&
            model.right(x) < b.right))
        return "choice pair " + cp.label + " does not contain its gadget";
    std::vector<VertexId> separators;
    const auto &na = g.neighbors(cp.first), &nb = g.neighbors(cp.second);
    std::set_symmetric_difference(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(separators));
    separators.erase(std::remove_if(separators.begin(), separators.end(),
                                    [&](VertexId x) { return x == cp.first || x == cp.second; }),
                     separators.end());
    if (separators != cp.separators) {
      std::string got;
      for (VertexId x : separators) got += " " + out.roles[x];
      return "choice pair " + cp.label + " is separated by unexpected intervals:" + got;
    }
  }
  return "";
}

nlohmann::json roles_json(const ReductionOutput& out) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t v = 0; v < out.roles.size(); ++v) j[std::to_string(v)] = out.roles[v];
  return j;
}

nlohmann::json manifest_json(const ReductionOutput& out) {
  const auto gd = dominating_gadget(out.kind);
  return {{"gadget", to_string(out.kind)},
          {"problem", to_string(gd.problem)},
          {"d", gd.d},
          {"v_D", gd.order},
          {"n", out.n},
          {"m", out.m},
          {"order", out.model.size()},
          {"order_formula", out.expected_order},
          {"solution_size_formula", out.expected_solution_size}};
}

namespace {

Graph extended(const Graph& g, int extra) {
  Graph h(g.order() + extra);
  for (auto [a, b] : g.edges()) h.add_edge(a, b);
  return h;
}

}  // namespace

Graph f1(const Graph& g) {
  const int n = g.order();
  Graph h = extended(g, 2);
  for (VertexId x = 0; x < n; ++x) h.add_edge(n, x);
  h.add_edge(n, n + 1);
  return h;
}

Graph f2(const Graph& g) {
  const int n = g.order();
  Graph h = extended(f1(g), 1);
  h.add_edge(n + 2, n);
  h.add_edge(n + 2, n + 1);
  return h;
}

Graph f3(const Graph& g) {
  const int n = g.order();
  Graph h = extended(g, 4);
  for (VertexId x = 0; x < n; ++x) {
    h.add_edge(n, x);
    h.add_edge(n + 1, x);
  }
  h.add_edge(n, n + 1);
  for (VertexId x : {n + 2, n + 3}) {
    h.add_edge(n, x);
    h.add_edge(n + 1, x);
  }
  return h;
}

}  // namespace ivc
