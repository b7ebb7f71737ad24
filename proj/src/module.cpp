#include "qf/module.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qf/bimorphism.hpp"
#include "qf/enumerate.hpp"

namespace qf {

namespace {

bool associative_at(const Quantale& q, Side side, const Table& act, int m, Elem a, Elem b, Elem x) {
  auto at = [&](Elem s, Elem y) { return act[static_cast<std::size_t>(s) * m + y]; };
  if (side == Side::left) return at(q.mul(a, b), x) == at(a, at(b, x));
  return at(q.mul(a, b), x) == at(b, at(a, x));
}

}  // namespace

ModulePtr make_module(QuantalePtr q, LatticePtr carrier, Side side, const std::vector<Table>& action) {
  if (static_cast<int>(action.size()) != q->size())
    throw ValidationError(ErrorCode::ShapeMismatch, "action needs one row per quantale element");
  Table flat;
  for (const auto& row : action) {
    if (static_cast<int>(row.size()) != carrier->size())
      throw ValidationError(ErrorCode::ShapeMismatch, "action row has the wrong size");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return make_module_flat(std::move(q), std::move(carrier), side, std::move(flat));
}

ModulePtr make_module_flat(QuantalePtr q, LatticePtr carrier, Side side, Table action) {
  Bimorphism b(q->carrier, carrier, carrier, action);
  const int m = carrier->size();
  for (Elem a = 0; a < q->size(); ++a)
    for (Elem c = 0; c < q->size(); ++c)
      for (Elem x = 0; x < m; ++x)
        if (!associative_at(*q, side, action, m, a, c, x))
          throw ValidationError(ErrorCode::NotAssociativeAction,
                                "action is not associative at (" + std::to_string(a) + ", " + std::to_string(c) +
                                    ", " + std::to_string(x) + ")",
                                {a, c, x});
  auto mod = std::make_shared<Module>();
  mod->over = std::move(q);
  mod->carrier = std::move(carrier);
  mod->side = side;
  mod->action = std::move(action);
  if (mod->over->unit) {
    mod->unital = true;
    for (Elem x = 0; x < m; ++x) mod->unital = mod->unital && mod->act(*mod->over->unit, x) == x;
  }
  return mod;
}

ModulePtr regular_module(const QuantalePtr& q, Side side) {
  const int n = q->size();
  Table action(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < n; ++x) action[static_cast<std::size_t>(a) * n + x] = side == Side::left ? q->mul(a, x) : q->mul(x, a);
  return make_module_flat(q, q->carrier, side, std::move(action));
}

bool sided_for(const Module& m, Elem a) {
  const Quantale& q = m.quantale();
  const Elem p = m.side == Side::left ? q.mul(q.top(), a) : q.mul(a, q.top());
  return q.lattice().leq(p, a);
}

Elem residual(const Module& m, Elem target, Elem x) {
  return m.quantale().lattice().join_where([&](Elem a) { return m.lattice().leq(m.act(a, x), target); });
}

Elem annihilator(const Module& m, Elem x) { return residual(m, m.lattice().bottom(), x); }

bool is_invariant(const Module& m, Elem x) {
  for (Elem a = 0; a < m.quantale().size(); ++a)
    if (!m.lattice().leq(m.act(a, x), x)) return false;
  return true;
}

std::vector<Elem> invariants(const Module& m) {
  std::vector<Elem> out;
  for (Elem x = 0; x < m.size(); ++x)
    if (is_invariant(m, x)) out.push_back(x);
  return out;
}

bool is_generator(const Module& m, Elem x) {
  std::vector<bool> hit(m.size(), false);
  for (Elem a = 0; a < m.quantale().size(); ++a) hit[m.act(a, x)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<Elem> generators(const Module& m) {
  std::vector<Elem> out;
  for (Elem x = 0; x < m.size(); ++x)
    if (is_generator(m, x)) out.push_back(x);
  return out;
}

std::optional<Elem> first_generator(const Module& m) {
  for (Elem x = 0; x < m.size(); ++x)
    if (is_generator(m, x)) return x;
  return std::nullopt;
}

bool is_irreducible(const Module& m) {
  for (Elem x : invariants(m))
    if (x != m.lattice().bottom() && x != m.lattice().top()) return false;
  return true;
}

bool is_everywhere_principal(const Module& m) {
  for (Elem y = 0; y < m.size(); ++y) {
    if (y == m.lattice().bottom()) continue;
    bool found = false;
    for (Elem x = 0; x < m.size() && !found; ++x) found = m.lattice().leq(x, y) && is_generator(m, x);
    if (!found) return false;
  }
  return true;
}

bool has_generator_with_maximal_annihilator(const Module& m) {
  const Lattice& Q = m.quantale().lattice();
  for (Elem x : generators(m)) {
    const Elem an = annihilator(m, x);
    if (an == Q.top()) continue;
    bool maximal = true;
    for (Elem a = 0; a < Q.size() && maximal; ++a)
      if (Q.lt(an, a) && a != Q.top() && sided_for(m, a)) maximal = false;
    if (maximal) return true;
  }
  return false;
}

bool is_module_hom(const Table& h, const Module& a, const Module& b) {
  if (!is_join_preserving(h, a.lattice(), b.lattice())) return false;
  for (Elem s = 0; s < a.quantale().size(); ++s)
    for (Elem x = 0; x < a.size(); ++x)
      if (h[a.act(s, x)] != b.act(s, h[x])) return false;
  return true;
}

bool is_module_nucleus(const Module& m, const Table& k) {
  if (!is_closure_operator(k, m.lattice())) return false;
  for (Elem a = 0; a < m.quantale().size(); ++a)
    for (Elem x = 0; x < m.size(); ++x)
      if (!m.lattice().leq(m.act(a, k[x]), k[m.act(a, x)])) return false;
  return true;
}

std::vector<Table> enumerate_module_nuclei(const Module& m) {
  std::vector<Table> out;
  for (auto& k : enumerate_closure_operators(m.lattice()))
    if (is_module_nucleus(m, k)) out.push_back(k);
  return out;
}

ModuleQuotient module_quotient(const Module& m, const Table& k) {
  if (!is_module_nucleus(m, k)) throw ValidationError(ErrorCode::NotNucleus, "not a module nucleus");
  ClosureQuotient cq = closure_quotient(check_closure_operator(k, m.carrier));
  const SubLattice& fx = cq.fixed;
  const int n = fx.lattice->size();
  Table action(static_cast<std::size_t>(m.quantale().size()) * n);
  for (Elem a = 0; a < m.quantale().size(); ++a)
    for (int x = 0; x < n; ++x)
      action[static_cast<std::size_t>(a) * n + x] = fx.from_parent[k[m.act(a, fx.to_parent[x])]];
  ModuleQuotient mq;
  mq.module = make_module_flat(m.over, fx.lattice, m.side, std::move(action));
  mq.fixed = fx;
  mq.projection = cq.projection.table;
  return mq;
}

SegmentConditions segment_conditions(const Module& m, Elem x) {
  const Lattice& M = m.lattice();
  SegmentConditions c;
  Table k(m.size());
  for (Elem y = 0; y < m.size(); ++y) k[y] = M.join(y, x);
  c.nucleus = is_module_nucleus(m, k);
  c.submodule = true;
  for (Elem y = 0; y < m.size(); ++y)
    if (M.leq(y, x))
      for (Elem a = 0; a < m.quantale().size(); ++a) c.submodule = c.submodule && M.leq(m.act(a, y), x);
  c.invariant = is_invariant(m, x);
  return c;
}

std::optional<SegmentModules> segment_modules(const Module& m, Elem x) {
  if (!is_invariant(m, x)) return std::nullopt;
  const Lattice& M = m.lattice();
  const int nq = m.quantale().size();
  SegmentModules s;
  s.up_sub = up_segment(M, x);
  s.down_sub = down_segment(M, x);
  const int nu = s.up_sub.lattice->size(), nd = s.down_sub.lattice->size();
  Table up(static_cast<std::size_t>(nq) * nu), down(static_cast<std::size_t>(nq) * nd);
  for (Elem a = 0; a < nq; ++a) {
    for (int y = 0; y < nu; ++y)
      up[static_cast<std::size_t>(a) * nu + y] = s.up_sub.from_parent[M.join(m.act(a, s.up_sub.to_parent[y]), x)];
    for (int y = 0; y < nd; ++y)
      down[static_cast<std::size_t>(a) * nd + y] = s.down_sub.from_parent[m.act(a, s.down_sub.to_parent[y])];
  }
  s.up = make_module_flat(m.over, s.up_sub.lattice, m.side, std::move(up));
  s.down = make_module_flat(m.over, s.down_sub.lattice, m.side, std::move(down));
  s.projection.resize(m.size());
  for (Elem y = 0; y < m.size(); ++y) s.projection[y] = s.up_sub.from_parent[M.join(y, x)];
  return s;
}

GeneratorAnalysis generator_analysis(const Module& m, Elem x) {
  const Lattice& Q = m.quantale().lattice();
  const Lattice& M = m.lattice();
  GeneratorAnalysis g;
  g.generator = is_generator(m, x);
  g.ann = annihilator(m, x);
  g.claims.push_back({"ann(x) is sided", true, sided_for(m, g.ann)});
  bool to_inv = true, to_sided = true, reflects = true, adj = true;
  for (Elem a = 0; a < Q.size(); ++a)
    if (sided_for(m, a)) to_inv = to_inv && is_invariant(m, m.act(a, x));
  for (Elem y = 0; y < M.size(); ++y) {
    const Elem r = residual(m, y, x);
    if (is_invariant(m, y)) to_sided = to_sided && sided_for(m, r);
    reflects = reflects && is_invariant(m, y) == sided_for(m, r);
    for (Elem a = 0; a < Q.size(); ++a) adj = adj && M.leq(m.act(a, x), y) == Q.leq(a, r);
  }
  g.claims.push_back({"(−)x sends sided elements to invariants", true, to_inv});
  g.claims.push_back({"(−)/x sends invariants to sided elements", true, to_sided});
  g.claims.push_back({"x generator ⟹ (m invariant ⟺ m/x sided)", g.generator, reflects});
  g.claims.push_back({"a·x ≤ m ⟺ a ≤ m/x", true, adj});
  std::vector<bool> hit(M.size(), false);
  for (Elem a = 0; a < Q.size(); ++a)
    if (Q.leq(g.ann, a)) hit[m.act(a, x)] = true;
  const bool covers = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  g.claims.push_back({"x generator ⟺ (↑ann(x))x = M", true, covers == g.generator});
  return g;
}

DenseFactorization dense_quotient_factorization(const Module& m, Elem x) {
  if (!is_generator(m, x))
    throw ValidationError(ErrorCode::NotAGenerator, std::to_string(x) + " is not a generator", {x});
  const Lattice& Q = m.quantale().lattice();
  const Lattice& M = m.lattice();
  DenseFactorization d;
  d.ann = annihilator(m, x);
  auto reg = regular_module(m.over, m.side);
  auto seg = segment_modules(*reg, d.ann);
  if (!seg) throw ValidationError(ErrorCode::LawViolated, "ann(x) is not invariant in Q", {d.ann});
  d.segment = *seg;
  const SubLattice& up = d.segment.up_sub;
  d.projection = d.segment.projection;
  d.dense.resize(up.lattice->size());
  for (int u = 0; u < up.lattice->size(); ++u) d.dense[u] = m.act(up.to_parent[u], x);
  bool factors = true;
  for (Elem a = 0; a < Q.size(); ++a) factors = factors && d.dense[d.projection[a]] == m.act(a, x);
  d.claims.push_back({"(−)x = φ ∘ ((−) ∨ ann(x))", true, factors});
  bool dense = true;
  for (int u = 0; u < up.lattice->size(); ++u)
    if (d.dense[u] == M.bottom()) dense = dense && u == up.lattice->bottom();
  d.claims.push_back({"φ is dense", true, dense});
  d.claims.push_back({"φ is surjective", true, is_surjective(d.dense, M.size())});
  d.claims.push_back({"φ is a module homomorphism", true, is_module_hom(d.dense, *d.segment.up, m)});
  d.claims.push_back({"(−) ∨ ann(x) is a module homomorphism", true, is_module_hom(d.projection, *reg, *d.segment.up)});
  bool iso = true;
  for (Elem y = 0; y < M.size(); ++y) {
    const Elem r = residual(m, y, x);
    iso = iso && m.act(r, x) == y;
    for (Elem z = 0; z < M.size(); ++z) iso = iso && M.leq(y, z) == Q.leq(r, residual(m, z, x));
  }
  d.claims.push_back({"M/x ≅ M via m ↦ m/x", true, iso});
  return d;
}

std::vector<Table> enumerate_actions(const QuantalePtr& q, const LatticePtr& carrier, Side side, const Caps& caps) {
  const int n = q->size(), m = carrier->size();
  EndoQuantale end = endo_quantale(carrier, caps);
  std::vector<Table> out;
  for (auto& h : enumerate_join_homs(q->lattice(), end.quantale->lattice())) {
    Table act(static_cast<std::size_t>(n) * m);
    for (Elem a = 0; a < n; ++a)
      for (Elem x = 0; x < m; ++x) act[static_cast<std::size_t>(a) * m + x] = end.maps[h[a]][x];
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        for (Elem x = 0; x < m && ok; ++x) ok = associative_at(*q, side, act, m, a, b, x);
    if (ok) out.push_back(std::move(act));
  }
  return out;
}

std::vector<ModulePtr> enumerate_modules(const QuantalePtr& q, const LatticePtr& carrier, Side side, const Caps& caps) {
  const int n = q->size(), m = carrier->size();
  const auto autos = automorphisms(*carrier);
  std::set<Table> seen;
  for (auto& act : enumerate_actions(q, carrier, side, caps)) {
    Table best = act;
    for (const auto& s : autos) {
      Table conj(act.size());
      for (Elem a = 0; a < n; ++a)
        for (Elem x = 0; x < m; ++x) conj[static_cast<std::size_t>(a) * m + s[x]] = s[act[static_cast<std::size_t>(a) * m + x]];
      best = std::min(best, conj);
    }
    seen.insert(best);
  }
  std::vector<ModulePtr> out;
  for (const auto& t : seen) out.push_back(make_module_flat(q, carrier, side, t));
  return out;
}

std::vector<Table> enumerate_module_homs(const Module& a, const Module& b) {
  std::vector<Table> out;
  for (auto& h : enumerate_join_homs(a.lattice(), b.lattice()))
    if (is_module_hom(h, a, b)) out.push_back(h);
  return out;
}

}  // namespace qf
