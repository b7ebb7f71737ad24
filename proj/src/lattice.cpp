#include "qf/lattice.hpp"

#include <algorithm>
#include <string>

namespace qf {

namespace {

std::string pair_str(Elem a, Elem b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

}  // namespace

Lattice Lattice::from_order(const BoolMatrix& leq) {
  const int n = static_cast<int>(leq.size());
  if (n == 0) throw ValidationError(ErrorCode::ShapeMismatch, "empty order matrix");
  for (const auto& row : leq) {
    if (static_cast<int>(row.size()) != n) {
      throw ValidationError(ErrorCode::ShapeMismatch, "order matrix is not square");
    }
  }
  Lattice l;
  l.n_ = n;
  l.leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) l.leq_[l.idx(a, b)] = leq[a][b] ? 1 : 0;

  for (int a = 0; a < n; ++a) {
    if (!l.leq(a, a)) throw ValidationError(ErrorCode::NotAPartialOrder, "not reflexive at " + std::to_string(a), {a});
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (l.leq(a, b) && l.leq(b, a))
        throw ValidationError(ErrorCode::NotAPartialOrder, "not antisymmetric at " + pair_str(a, b), {a, b});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!l.leq(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (l.leq(b, c) && !l.leq(a, c))
          throw ValidationError(ErrorCode::NotAPartialOrder,
                                "not transitive at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                    std::to_string(c) + ")",
                                {a, b, c});
    }

  int bottom = -1;
  for (int a = 0; a < n && bottom < 0; ++a) {
    bool below_all = true;
    for (int b = 0; b < n; ++b) below_all = below_all && l.leq(a, b);
    if (below_all) bottom = a;
  }
  if (bottom < 0) throw ValidationError(ErrorCode::NoBottom, "no least element");
  l.bottom_ = bottom;

  l.join_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int lub = -1;
      for (int u = 0; u < n && lub < 0; ++u) {
        if (!l.leq(a, u) || !l.leq(b, u)) continue;
        bool least = true;
        for (int v = 0; v < n && least; ++v)
          if (l.leq(a, v) && l.leq(b, v) && !l.leq(u, v)) least = false;
        if (least) lub = u;
      }
      if (lub < 0) throw ValidationError(ErrorCode::MissingJoin, "no join of " + pair_str(a, b), {a, b});
      l.join_[l.idx(a, b)] = lub;
      l.join_[l.idx(b, a)] = lub;
    }

  Elem top = bottom;
  for (int a = 0; a < n; ++a) top = l.join(top, a);
  l.top_ = top;

  l.meet_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Elem acc = bottom;
      for (int c = 0; c < n; ++c)
        if (l.leq(c, a) && l.leq(c, b)) acc = l.join(acc, c);
      l.meet_[l.idx(a, b)] = acc;
    }
  return l;
}

Elem Lattice::join_of(std::span<const Elem> xs) const {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

Elem Lattice::meet_of(std::span<const Elem> xs) const {
  return join_where([&](Elem c) {
    return std::all_of(xs.begin(), xs.end(), [&](Elem x) { return leq(c, x); });
  });
}

BoolMatrix Lattice::order_matrix() const {
  BoolMatrix m(n_, std::vector<bool>(n_, false));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) m[a][b] = leq(a, b);
  return m;
}

LatticePtr make_lattice(const BoolMatrix& leq) { return std::make_shared<const Lattice>(Lattice::from_order(leq)); }

LatticePtr dual(const Lattice& l) {
  const int n = l.size();
  BoolMatrix m(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m[a][b] = l.leq(b, a);
  return make_lattice(m);
}

LatticePtr chain(int n) {
  BoolMatrix m(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) m[a][b] = true;
  return make_lattice(m);
}

LatticePtr powerset(int k) {
  const int n = 1 << k;
  BoolMatrix m(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m[a][b] = (a & ~b) == 0;
  return make_lattice(m);
}

LatticePtr diamond() {
  BoolMatrix m{{true, true, true, true}, {false, true, false, true}, {false, false, true, true},
               {false, false, false, true}};
  return make_lattice(m);
}

LatticePtr one_element() { return make_lattice(BoolMatrix{{true}}); }

SubLattice induced_sublattice(const Lattice& parent, std::span<const Elem> members) {
  SubLattice s;
  s.to_parent.assign(members.begin(), members.end());
  std::sort(s.to_parent.begin(), s.to_parent.end());
  s.to_parent.erase(std::unique(s.to_parent.begin(), s.to_parent.end()), s.to_parent.end());
  s.from_parent.assign(parent.size(), -1);
  const int k = static_cast<int>(s.to_parent.size());
  for (int i = 0; i < k; ++i) s.from_parent[s.to_parent[i]] = i;
  BoolMatrix m(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = parent.leq(s.to_parent[i], s.to_parent[j]);
  s.lattice = make_lattice(m);
  return s;
}

SubLattice up_segment(const Lattice& l, Elem m) {
  std::vector<Elem> members;
  for (Elem x = 0; x < l.size(); ++x)
    if (l.leq(m, x)) members.push_back(x);
  return induced_sublattice(l, members);
}

SubLattice down_segment(const Lattice& l, Elem m) {
  std::vector<Elem> members;
  for (Elem x = 0; x < l.size(); ++x)
    if (l.leq(x, m)) members.push_back(x);
  return induced_sublattice(l, members);
}

Table identity_table(int n) {
  Table t(n);
  for (int i = 0; i < n; ++i) t[i] = i;
  return t;
}

Table compose(const Table& g, const Table& f) {
  Table h(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) h[x] = g[f[x]];
  return h;
}

bool is_monotone(const Table& f, const Lattice& src, const Lattice& dst) {
  for (Elem a = 0; a < src.size(); ++a)
    for (Elem b = 0; b < src.size(); ++b)
      if (src.leq(a, b) && !dst.leq(f[a], f[b])) return false;
  return true;
}

bool is_antitone(const Table& f, const Lattice& src, const Lattice& dst) {
  for (Elem a = 0; a < src.size(); ++a)
    for (Elem b = 0; b < src.size(); ++b)
      if (src.leq(a, b) && !dst.leq(f[b], f[a])) return false;
  return true;
}

bool is_surjective(const Table& f, int dst_size) {
  std::vector<bool> hit(dst_size, false);
  for (Elem y : f) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_injective(const Table& f) {
  Table sorted = f;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_order_embedding(const Table& f, const Lattice& src, const Lattice& dst) {
  for (Elem a = 0; a < src.size(); ++a)
    for (Elem b = 0; b < src.size(); ++b)
      if (src.leq(a, b) != dst.leq(f[a], f[b])) return false;
  return true;
}

bool pointwise_leq(const Table& f, const Table& g, const Lattice& dst) {
  for (std::size_t x = 0; x < f.size(); ++x)
    if (!dst.leq(f[x], g[x])) return false;
  return true;
}

std::optional<std::vector<int>> join_preservation_failure(const Table& f, const Lattice& src,
                                                          const Lattice& dst) {
  if (f[src.bottom()] != dst.bottom()) return std::vector<int>{src.bottom()};
  for (Elem a = 0; a < src.size(); ++a)
    for (Elem b = a + 1; b < src.size(); ++b)
      if (f[src.join(a, b)] != dst.join(f[a], f[b])) return std::vector<int>{a, b};
  return std::nullopt;
}

bool is_join_preserving(const Table& f, const Lattice& src, const Lattice& dst) {
  return !join_preservation_failure(f, src, dst).has_value();
}

bool is_meet_preserving(const Table& f, const Lattice& src, const Lattice& dst) {
  if (f[src.top()] != dst.top()) return false;
  for (Elem a = 0; a < src.size(); ++a)
    for (Elem b = a + 1; b < src.size(); ++b)
      if (f[src.meet(a, b)] != dst.meet(f[a], f[b])) return false;
  return true;
}

JoinHom check_join_hom(Table table, LatticePtr src, LatticePtr dst) {
  if (static_cast<int>(table.size()) != src->size())
    throw ValidationError(ErrorCode::ShapeMismatch, "table length differs from source size");
  for (Elem y : table)
    if (y < 0 || y >= dst->size()) throw ValidationError(ErrorCode::ShapeMismatch, "table entry out of range", {y});
  if (auto w = join_preservation_failure(table, *src, *dst)) {
    if (w->size() == 1) throw ValidationError(ErrorCode::BottomNotPreserved, "f(0) is not 0");
    throw ValidationError(ErrorCode::NotJoinPreserving, "f(x ∨ y) ≠ f(x) ∨ f(y) at " + pair_str((*w)[0], (*w)[1]),
                          *w);
  }
  JoinHom h;
  h.strong = table[src->top()] == dst->top();
  h.dense = true;
  for (Elem x = 0; x < src->size(); ++x)
    if (table[x] == dst->bottom() && x != src->bottom()) h.dense = false;
  h.table = std::move(table);
  h.src = std::move(src);
  h.dst = std::move(dst);
  return h;
}

Table right_adjoint(const Table& f, const Lattice& src, const Lattice& dst) {
  Table g(dst.size());
  for (Elem y = 0; y < dst.size(); ++y) g[y] = src.join_where([&](Elem x) { return dst.leq(f[x], y); });
  for (Elem x = 0; x < src.size(); ++x)
    for (Elem y = 0; y < dst.size(); ++y)
      if (dst.leq(f[x], y) != src.leq(x, g[y]))
        throw ValidationError(ErrorCode::NotJoinPreserving, "adjunction fails; map is not join-preserving", {x, y});
  return g;
}

Table right_adjoint(const JoinHom& f) { return right_adjoint(f.table, *f.src, *f.dst); }

bool is_closure_operator(const Table& j, const Lattice& l) {
  if (static_cast<int>(j.size()) != l.size()) return false;
  for (Elem x = 0; x < l.size(); ++x) {
    if (!l.leq(x, j[x]) || j[j[x]] != j[x]) return false;
  }
  return is_monotone(j, l, l);
}

ClosureOperator check_closure_operator(Table table, LatticePtr carrier) {
  if (!is_closure_operator(table, *carrier))
    throw ValidationError(ErrorCode::NotClosureOperator, "not monotone, inflationary and idempotent");
  return ClosureOperator{std::move(carrier), std::move(table)};
}

ClosureQuotient closure_quotient(const ClosureOperator& j) {
  const Lattice& l = *j.carrier;
  std::vector<Elem> fixed;
  for (Elem x = 0; x < l.size(); ++x)
    if (j.table[x] == x) fixed.push_back(x);
  ClosureQuotient q;
  q.fixed = induced_sublattice(l, fixed);
  Table proj(l.size());
  for (Elem x = 0; x < l.size(); ++x) proj[x] = q.fixed.from_parent[j.table[x]];
  q.projection = check_join_hom(std::move(proj), j.carrier, q.fixed.lattice);
  return q;
}

std::vector<Table> enumerate_closure_operators(const Lattice& l) {
  const int n = l.size();
  if (n > 20) throw ValidationError(ErrorCode::CapExceeded, "closure enumeration limited to 20 elements");
  std::vector<Table> out;
  const Elem top = l.top();
  std::vector<Elem> others;
  for (Elem x = 0; x < n; ++x)
    if (x != top) others.push_back(x);
  const std::uint32_t count = 1u << others.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    std::vector<bool> in(n, false);
    in[top] = true;
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask & (1u << i)) in[others[i]] = true;
    bool closed = true;
    for (Elem a = 0; a < n && closed; ++a)
      for (Elem b = a + 1; b < n && closed; ++b)
        if (in[a] && in[b] && !in[l.meet(a, b)]) closed = false;
    if (!closed) continue;
    Table j(n);
    for (Elem x = 0; x < n; ++x) j[x] = l.meet_where([&](Elem c) { return in[c] && l.leq(x, c); });
    out.push_back(std::move(j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Elem, Elem>> covering_pairs(const Lattice& l) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b) {
      if (!l.lt(a, b)) continue;
      bool covers = true;
      for (Elem c = 0; c < l.size() && covers; ++c)
        if (l.lt(a, c) && l.lt(c, b)) covers = false;
      if (covers) out.emplace_back(a, b);
    }
  return out;
}

}  // namespace qf
