#include "mixdag/separation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mixdag/errors.hpp"

namespace mixdag {

const char* semantics_name(Semantics s) {
  switch (s) {
    case Semantics::Default: return "default";
    case Semantics::StrictDef3: return "strict-def3";
    case Semantics::LiteralCollider: return "literal-collider";
  }
  return "default";
}

std::optional<Semantics> semantics_from_name(std::string_view name) {
  if (name == "default") return Semantics::Default;
  if (name == "strict-def3") return Semantics::StrictDef3;
  if (name == "literal-collider") return Semantics::LiteralCollider;
  return std::nullopt;
}

TripleStatus triple_status(const MotherGraph& mg, VarId zi, VarId zj,
                           VarId zk) {
  if (zi == zj || zj == zk || zi == zk)
    throw Error(Errc::bad_query, "triple variables must be distinct");
  for (VarId v : {zi, zj, zk})
    if (v < 0 || v > mg.t())
      throw Error(Errc::bad_query, "triple variable out of range");

  TripleStatus st;
  for (int k = 0; k < mg.subdag_count(); ++k) {
    const Dag& g = mg.subdag(k);
    if (g.has_edge(zi, zj) && g.has_edge(zk, zj))
      st.collider_subdags.push_back(k);
    else if (g.adjacent(zi, zj) && g.adjacent(zj, zk))
      st.noncollider_subdags.push_back(k);
  }
  VarId t = mg.t();
  if (zi != t && zj != t && zk != t) {
    std::vector<int> first, second;
    for (int k = 0; k < mg.subdag_count(); ++k) {
      const Dag& g = mg.subdag(k);
      if (g.has_edge(zi, zj) && g.has_edge(t, zj)) first.push_back(k);
      if (g.has_edge(zk, zj) && g.has_edge(t, zj)) second.push_back(k);
    }
    for (int g1 : first)
      for (int g2 : second)
        if (g1 != g2) st.cond2_pairs.push_back({g1, g2});
    std::sort(st.cond2_pairs.begin(), st.cond2_pairs.end());
  }
  return st;
}

namespace {

void check_query_sets(int vertex_count, const VarSet& a, const VarSet& b,
                      const VarSet& c) {
  if (a.empty() || b.empty())
    throw Error(Errc::bad_query, "endpoint sets must be non-empty");
  if (a.intersects(b) || a.intersects(c) || b.intersects(c))
    throw Error(Errc::overlapping_sets, "query sets must be disjoint");
  VarSet all = VarSet::range(vertex_count);
  if (!(a | b | c).subset_of(all))
    throw Error(Errc::bad_query, "query variable out of range");
}

// Realization for traversing <prev, mid, next>, or nullopt when the triple
// blocks. Non-collider traversal is preferred when both are available.
std::optional<TripleRealization> realize_m_triple(const MotherGraph& mg,
                                                  const SeparationQuery& q,
                                                  const VarSet& anc_c,
                                                  VarId prev, VarId mid,
                                                  VarId next) {
  TripleStatus st = triple_status(mg, prev, mid, next);
  bool in_c = q.c.contains(mid);
  bool collider_activated = q.semantics == Semantics::Default
                                ? anc_c.contains(mid)
                                : in_c;
  bool noncollider_allowed = !in_c && st.noncollider_realizable();
  if (q.semantics == Semantics::LiteralCollider && st.collider_realizable())
    noncollider_allowed = false;

  if (noncollider_allowed) {
    TripleRealization r;
    r.middle = mid;
    r.kind = RealizationKind::NonCollider;
    r.subdag = st.noncollider_subdags.front();
    r.as_collider = false;
    return r;
  }
  if (collider_activated && st.collider_realizable()) {
    TripleRealization r;
    r.middle = mid;
    r.as_collider = true;
    if (!st.collider_subdags.empty()) {
      r.kind = RealizationKind::Collider;
      r.subdag = st.collider_subdags.front();
    } else {
      r.kind = RealizationKind::Cond2;
      r.subdag_pair = st.cond2_pairs.front();
    }
    return r;
  }
  return std::nullopt;
}

struct MdSearch {
  const MotherGraph& mg;
  const SeparationQuery& q;
  VarSet anc_c;
  std::vector<VarId> path;
  std::vector<TripleRealization> reals;
  VarSet on_path;

  bool extend() {
    VarId u = path.back();
    for (VarId v = 0; v <= mg.t(); ++v) {
      if (on_path.contains(v)) continue;
      if (!mg.adjacent(u, v)) continue;
      bool is_target = q.b.contains(v);
      if (!is_target && q.a.contains(v)) continue;  // interiors avoid A and B
      std::optional<TripleRealization> r;
      if (path.size() >= 2) {
        r = realize_m_triple(mg, q, anc_c, path[path.size() - 2], u, v);
        if (!r) continue;
        reals.push_back(*r);
      }
      path.push_back(v);
      on_path.insert(v);
      if (is_target) return true;
      if (extend()) return true;
      path.pop_back();
      on_path.erase(v);
      if (r) reals.pop_back();
    }
    return false;
  }
};

}  // namespace

SeparationVerdict m_d_separated(const MotherGraph& mg,
                                const SeparationQuery& query) {
  check_query_sets(mg.vertex_count(), query.a, query.b, query.c);
  if (query.a.contains(mg.t()) || query.b.contains(mg.t()))
    throw Error(Errc::bad_query, "T may appear in C only, not in A or B");

  VarSet anc_c = mg.ancestors(query.c);
  for (VarId a0 : query.a) {
    MdSearch search{mg, query, anc_c, {a0}, {}, VarSet{a0}};
    if (search.extend()) {
      WitnessPath w;
      w.vertices = search.path;
      w.triples = search.reals;
      return {false, w};
    }
  }
  return {true, std::nullopt};
}

bool moral_separated(const Dag& dag, const VarSet& a, const VarSet& b,
                     const VarSet& c) {
  check_query_sets(dag.vertex_count(), a, b, c);
  UndirectedGraph moral = moral_graph_of_ancestral_set(dag, a | b | c);
  return moral.separated(a, b, c);
}

namespace {

struct TrailSearch {
  const Dag& dag;
  const VarSet& a;
  const VarSet& b;
  const VarSet& c;
  VarSet anc_c;
  std::vector<VarId> path;
  std::vector<TripleRealization> reals;
  VarSet on_path;

  bool extend() {
    VarId u = path.back();
    for (VarId v = 0; v < dag.vertex_count(); ++v) {
      if (on_path.contains(v)) continue;
      if (!dag.adjacent(u, v)) continue;
      bool is_target = b.contains(v);
      if (!is_target && a.contains(v)) continue;
      bool ok = true;
      TripleRealization r;
      if (path.size() >= 2) {
        VarId prev = path[path.size() - 2];
        bool collider = dag.has_edge(prev, u) && dag.has_edge(v, u);
        r.middle = u;
        r.as_collider = collider;
        r.kind = collider ? RealizationKind::Collider
                          : RealizationKind::NonCollider;
        ok = collider ? anc_c.contains(u) : !c.contains(u);
        if (ok) reals.push_back(r);
      }
      if (!ok) continue;
      path.push_back(v);
      on_path.insert(v);
      if (is_target) return true;
      if (extend()) return true;
      path.pop_back();
      on_path.erase(v);
      if (path.size() >= 2) reals.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<WitnessPath> find_active_trail(const Dag& dag, const VarSet& a,
                                             const VarSet& b,
                                             const VarSet& c) {
  check_query_sets(dag.vertex_count(), a, b, c);
  VarSet anc_c = dag.ancestors(c);
  for (VarId a0 : a) {
    TrailSearch search{dag, a, b, c, anc_c, {a0}, {}, VarSet{a0}};
    if (search.extend()) {
      WitnessPath w;
      w.vertices = search.path;
      w.triples = search.reals;
      return w;
    }
  }
  return std::nullopt;
}

SeparationVerdict d_separated(const Dag& dag, const VarSet& a, const VarSet& b,
                              const VarSet& c) {
  bool sep = moral_separated(dag, a, b, c);
  std::optional<WitnessPath> trail = find_active_trail(dag, a, b, c);
  if (sep == trail.has_value())
    throw std::logic_error("d-separation decision routes disagree");
  if (sep) return {true, std::nullopt};
  return {false, trail};
}

SeparationVerdict d_separated_mother(const MotherGraph& mg, const VarSet& a,
                                     const VarSet& b, const VarSet& c) {
  check_query_sets(mg.vertex_count(), a, b, c);
  for (int k = 0; k < mg.subdag_count(); ++k) {
    SeparationVerdict v = d_separated(mg.subdag(k), a, b, c);
    if (!v.separated) {
      v.witness->subdag = k;
      for (TripleRealization& r : v.witness->triples) r.subdag = k;
      return v;
    }
  }
  return {true, std::nullopt};
}

std::vector<VarSet> bounded_subsets(const std::vector<VarId>& candidates,
                                    int max_size) {
  std::vector<VarSet> out;
  int n = static_cast<int>(candidates.size());
  max_size = std::clamp(max_size, 0, n);
  out.push_back({});
  std::vector<int> idx;
  for (int s = 1; s <= max_size; ++s) {
    idx.resize(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
      VarSet set;
      for (int i : idx) set.insert(candidates[static_cast<size_t>(i)]);
      out.push_back(set);
      int pos = s - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - s + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (int i = pos + 1; i < s; ++i)
        idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
    }
  }
  return out;
}

namespace {

template <class Decide>
std::vector<Statement> enumerate_impl(const MotherGraph& mg,
                                      int max_conditioning_size,
                                      Decide decide) {
  std::vector<Statement> out;
  int p = mg.var_count();
  int bound = std::clamp(max_conditioning_size, 0, std::max(p - 2, 0));
  for (VarId i = 0; i < p; ++i) {
    for (VarId j = i + 1; j < p; ++j) {
      std::vector<VarId> candidates;
      for (VarId x = 0; x < p; ++x)
        if (x != i && x != j) candidates.push_back(x);
      for (const VarSet& c : bounded_subsets(candidates, bound))
        if (decide(i, j, c)) out.push_back({i, j, c});
    }
  }
  return out;
}

}  // namespace

std::vector<Statement> enumerate_statements(const MotherGraph& mg,
                                            int max_conditioning_size,
                                            Semantics semantics) {
  return enumerate_impl(mg, max_conditioning_size,
                        [&](VarId i, VarId j, const VarSet& c) {
                          SeparationQuery q{{i}, {j}, c, semantics};
                          return m_d_separated(mg, q).separated;
                        });
}

std::vector<Statement> enumerate_d_statements(const MotherGraph& mg,
                                              int max_conditioning_size) {
  return enumerate_impl(mg, max_conditioning_size,
                        [&](VarId i, VarId j, const VarSet& c) {
                          return d_separated_mother(mg, {i}, {j}, c).separated;
                        });
}

bool replay_m_witness(const MotherGraph& mg, const SeparationQuery& query,
                      const WitnessPath& w) {
  size_t n = w.vertices.size();
  if (n < 2) return false;
  if (w.triples.size() != n - 2) return false;
  if (!query.a.contains(w.vertices.front())) return false;
  if (!query.b.contains(w.vertices.back())) return false;
  VarSet seen;
  for (VarId v : w.vertices) {
    if (v < 0 || v > mg.t() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (size_t i = 1; i + 1 < n; ++i) {
    VarId v = w.vertices[i];
    if (query.a.contains(v) || query.b.contains(v)) return false;
  }
  for (size_t i = 0; i + 1 < n; ++i)
    if (!mg.adjacent(w.vertices[i], w.vertices[i + 1])) return false;

  VarSet anc_c = mg.ancestors(query.c);
  for (size_t i = 0; i + 2 < n; ++i) {
    VarId prev = w.vertices[i];
    VarId mid = w.vertices[i + 1];
    VarId next = w.vertices[i + 2];
    const TripleRealization& r = w.triples[i];
    if (r.middle != mid) return false;
    TripleStatus st = triple_status(mg, prev, mid, next);
    if (query.semantics == Semantics::LiteralCollider &&
        st.collider_realizable() && !r.as_collider)
      return false;
    switch (r.kind) {
      case RealizationKind::NonCollider: {
        if (r.as_collider) return false;
        if (query.c.contains(mid)) return false;
        const auto& v = st.noncollider_subdags;
        if (std::find(v.begin(), v.end(), r.subdag) == v.end()) return false;
        break;
      }
      case RealizationKind::Collider: {
        if (!r.as_collider) return false;
        const auto& v = st.collider_subdags;
        if (std::find(v.begin(), v.end(), r.subdag) == v.end()) return false;
        bool activated = query.semantics == Semantics::Default
                             ? anc_c.contains(mid)
                             : query.c.contains(mid);
        if (!activated) return false;
        break;
      }
      case RealizationKind::Cond2: {
        if (!r.as_collider) return false;
        const auto& v = st.cond2_pairs;
        if (std::find(v.begin(), v.end(), r.subdag_pair) == v.end())
          return false;
        bool activated = query.semantics == Semantics::Default
                             ? anc_c.contains(mid)
                             : query.c.contains(mid);
        if (!activated) return false;
        break;
      }
    }
  }
  return true;
}

bool replay_d_witness(const Dag& dag, const VarSet& c, const WitnessPath& w) {
  size_t n = w.vertices.size();
  if (n < 2) return false;
  if (w.triples.size() != n - 2) return false;
  VarSet seen;
  for (VarId v : w.vertices) {
    if (v < 0 || v >= dag.vertex_count() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (size_t i = 0; i + 1 < n; ++i)
    if (!dag.adjacent(w.vertices[i], w.vertices[i + 1])) return false;
  VarSet anc_c = dag.ancestors(c);
  for (size_t i = 0; i + 2 < n; ++i) {
    VarId prev = w.vertices[i];
    VarId mid = w.vertices[i + 1];
    VarId next = w.vertices[i + 2];
    if (w.triples[i].middle != mid) return false;
    bool collider = dag.has_edge(prev, mid) && dag.has_edge(next, mid);
    if (collider != w.triples[i].as_collider) return false;
    if (collider ? !anc_c.contains(mid) : c.contains(mid)) return false;
  }
  return true;
}

}  // namespace mixdag
