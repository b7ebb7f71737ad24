#include "qf/quantale.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "qf/enumerate.hpp"

namespace qf {

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

SubLattice join_closed_sublattice(const Lattice& l, const std::vector<Elem>& members, const char* what) {
  std::vector<bool> in(l.size(), false);
  for (Elem m : members) in[m] = true;
  if (!in[l.bottom()]) throw ValidationError(ErrorCode::LawViolated, std::string(what) + " lacks bottom");
  for (Elem a : members)
    for (Elem b : members)
      if (!in[l.join(a, b)])
        throw ValidationError(ErrorCode::LawViolated, std::string(what) + " not closed under joins", {a, b});
  return induced_sublattice(l, members);
}

}  // namespace

std::vector<Table> Quantale::mult_rows() const {
  const int n = size();
  std::vector<Table> rows(n, Table(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) rows[a][b] = mul(a, b);
  return rows;
}

QuantalePtr make_quantale(LatticePtr carrier, const std::vector<Table>& mult, std::optional<Elem> unit,
                          std::optional<Table> involution) {
  const int n = carrier->size();
  if (static_cast<int>(mult.size()) != n) throw ValidationError(ErrorCode::ShapeMismatch, "mult has the wrong number of rows");
  Table flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : mult) {
    if (static_cast<int>(row.size()) != n) throw ValidationError(ErrorCode::ShapeMismatch, "mult row has the wrong size");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return make_quantale_flat(std::move(carrier), std::move(flat), unit, std::move(involution));
}

QuantalePtr make_quantale_flat(LatticePtr carrier, Table mult, std::optional<Elem> unit,
                               std::optional<Table> involution) {
  const int n = carrier->size();
  Bimorphism b(carrier, carrier, carrier, mult);  // shape, range, bimorphism
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (b(b(x, y), z) != b(x, b(y, z)))
          throw ValidationError(ErrorCode::NotAssociative, "(xy)z ≠ x(yz) at " + triple(x, y, z), {x, y, z});
  if (unit) {
    if (*unit < 0 || *unit >= n) throw ValidationError(ErrorCode::BadUnit, "unit out of range", {*unit});
    for (Elem a = 0; a < n; ++a)
      if (b(*unit, a) != a || b(a, *unit) != a)
        throw ValidationError(ErrorCode::BadUnit, "e⊙a = a⊙e = a fails at " + std::to_string(a), {a});
  }
  if (involution) {
    const Table& s = *involution;
    if (static_cast<int>(s.size()) != n) throw ValidationError(ErrorCode::ShapeMismatch, "involution has the wrong size");
    for (Elem v : s)
      if (v < 0 || v >= n) throw ValidationError(ErrorCode::ShapeMismatch, "involution value out of range", {v});
    for (Elem a = 0; a < n; ++a)
      if (s[s[a]] != a) throw ValidationError(ErrorCode::BadInvolution, "a** ≠ a at " + std::to_string(a), {0, a});
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (s[b(x, y)] != b(s[y], s[x]))
          throw ValidationError(ErrorCode::BadInvolution,
                                "(ab)* ≠ b*a* at (" + std::to_string(x) + ", " + std::to_string(y) + ")", {1, x, y});
    if (auto w = join_preservation_failure(s, *carrier, *carrier)) {
      std::vector<int> wit{2};
      wit.insert(wit.end(), w->begin(), w->end());
      throw ValidationError(ErrorCode::BadInvolution, "involution does not preserve joins", wit);
    }
  }
  auto q = std::make_shared<Quantale>();
  q->carrier = std::move(carrier);
  q->mult = std::move(mult);
  q->unit = unit;
  q->involution = std::move(involution);
  return q;
}

Bimorphism multiplication(const Quantale& q) { return Bimorphism(q.carrier, q.carrier, q.carrier, q.mult); }

std::optional<Elem> find_unit(const Quantale& q) {
  for (Elem e = 0; e < q.size(); ++e) {
    bool ok = true;
    for (Elem a = 0; a < q.size() && ok; ++a) ok = q.mul(e, a) == a && q.mul(a, e) == a;
    if (ok) return e;
  }
  return std::nullopt;
}

QuantalePtr with_structure(const Quantale& q, std::optional<Elem> unit, std::optional<Table> involution) {
  return make_quantale_flat(q.carrier, q.mult, unit, std::move(involution));
}

SidedElements sided_elements(const Quantale& q) {
  const Lattice& L = q.lattice();
  SidedElements s;
  for (Elem a = 0; a < q.size(); ++a) {
    const bool l = L.leq(q.mul(q.top(), a), a);
    const bool r = L.leq(q.mul(a, q.top()), a);
    if (l) s.left.push_back(a);
    if (r) s.right.push_back(a);
    if (l && r) s.two_sided.push_back(a);
  }
  std::vector<Elem> trivial{q.bottom(), q.top()};
  std::sort(trivial.begin(), trivial.end());
  trivial.erase(std::unique(trivial.begin(), trivial.end()), trivial.end());
  s.factor = s.two_sided == trivial;
  return s;
}

SubLattice left_sided_lattice(const Quantale& q) {
  return join_closed_sublattice(q.lattice(), sided_elements(q).left, "ls(Q)");
}

SubLattice right_sided_lattice(const Quantale& q) {
  return join_closed_sublattice(q.lattice(), sided_elements(q).right, "rs(Q)");
}

Elem EndoQuantale::index_of(const Table& f) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), f);
  return it != maps.end() && *it == f ? static_cast<Elem>(it - maps.begin()) : -1;
}

EndoQuantale endo_quantale(const LatticePtr& s, const Caps& caps) {
  if (s->size() > caps.endo_quantale)
    throw ValidationError(ErrorCode::CapExceeded, "|S| = " + std::to_string(s->size()) + " exceeds endo_quantale cap " +
                                                      std::to_string(caps.endo_quantale));
  Caps inner = caps;
  inner.endo_enum = std::max(caps.endo_enum, caps.endo_quantale);
  EndoQuantale eq;
  for (auto& h : enumerate_join_endos(s, inner)) eq.maps.push_back(std::move(h.table));
  const int n = static_cast<int>(eq.maps.size());
  BoolMatrix order(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) order[i][j] = pointwise_leq(eq.maps[i], eq.maps[j], *s);
  auto carrier = make_lattice(order);
  Table mult(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mult[static_cast<std::size_t>(i) * n + j] = eq.index_of(compose(eq.maps[j], eq.maps[i]));
  eq.quantale = make_quantale_flat(carrier, std::move(mult), eq.index_of(identity_table(s->size())));
  return eq;
}

Table constant_map(const Lattice& l, Elem s) {
  Table t(l.size(), s);
  t[l.bottom()] = l.bottom();
  return t;
}

Table annihilator_map(const Lattice& l, Elem s) {
  Table t(l.size());
  for (Elem x = 0; x < l.size(); ++x) t[x] = l.leq(x, s) ? l.bottom() : l.top();
  return t;
}

QuantalePtr powerset_monoid_quantale(const std::vector<Table>& table, bool inverse_involution, const Caps& caps) {
  const int k = static_cast<int>(table.size());
  if (k == 0) throw ValidationError(ErrorCode::NotAMonoid, "empty monoid");
  if (k > caps.monoid)
    throw ValidationError(ErrorCode::CapExceeded,
                          "|M| = " + std::to_string(k) + " exceeds monoid cap " + std::to_string(caps.monoid));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != k) throw ValidationError(ErrorCode::ShapeMismatch, "monoid table is not square");
    for (Elem v : row)
      if (v < 0 || v >= k) throw ValidationError(ErrorCode::NotAMonoid, "product out of range", {v});
  }
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          throw ValidationError(ErrorCode::NotAMonoid, "not associative at " + triple(x, y, z), {x, y, z});
  int e = -1;
  for (int c = 0; c < k && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < k && ok; ++x) ok = table[c][x] == x && table[x][c] == x;
    if (ok) e = c;
  }
  if (e < 0) throw ValidationError(ErrorCode::NotAMonoid, "no identity element");
  auto carrier = powerset(k);
  const int n = 1 << k;
  Table mult(static_cast<std::size_t>(n) * n, 0);
  for (int X = 0; X < n; ++X)
    for (int Y = 0; Y < n; ++Y) {
      int prod = 0;
      for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
          if ((X >> x & 1) && (Y >> y & 1)) prod |= 1 << table[x][y];
      mult[static_cast<std::size_t>(X) * n + Y] = prod;
    }
  std::optional<Table> inv;
  if (inverse_involution) {
    Table point_inv(k, -1);
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y)
        if (table[x][y] == e && table[y][x] == e) point_inv[x] = y;
    for (int x = 0; x < k; ++x)
      if (point_inv[x] < 0) throw ValidationError(ErrorCode::NotAMonoid, "no inverse for " + std::to_string(x), {x});
    Table s(n, 0);
    for (int X = 0; X < n; ++X)
      for (int x = 0; x < k; ++x)
        if (X >> x & 1) s[X] |= 1 << point_inv[x];
    inv = std::move(s);
  }
  return make_quantale_flat(carrier, std::move(mult), 1 << e, std::move(inv));
}

PhiOfQuantale phi_of_quantale(const Quantale& q) {
  SubLattice ls = left_sided_lattice(q);
  SubLattice rs = right_sided_lattice(q);
  const int n = ls.lattice->size(), m = rs.lattice->size();
  BoolMatrix orth(n, std::vector<bool>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) orth[i][j] = q.mul(ls.to_parent[i], rs.to_parent[j]) == q.bottom();
  TwoForm form = TwoForm::from_orthogonality(ls.lattice, rs.lattice, orth);
  return PhiOfQuantale{std::move(form), std::move(ls), std::move(rs)};
}

Elem FormQuantale::index_of(const Table& f, const Table& g) const {
  auto key = std::pair<Table, Table>{f, g};
  auto it = std::lower_bound(pairs.begin(), pairs.end(), key);
  return it != pairs.end() && *it == key ? static_cast<Elem>(it - pairs.begin()) : -1;
}

FormQuantale form_quantale(const TwoForm& phi, const Caps& caps) {
  const Lattice& L = phi.left();
  const Lattice& R = phi.right();
  const int cells = L.size() * R.size();
  if (cells > caps.form_quantale_cells)
    throw ValidationError(ErrorCode::CapExceeded, "|L|·|R| = " + std::to_string(cells) +
                                                      " exceeds form_quantale cap " +
                                                      std::to_string(caps.form_quantale_cells));
  Caps inner = caps;
  inner.endo_enum = std::max({caps.endo_enum, L.size(), R.size()});
  auto fs = enumerate_join_endos(phi.left_ptr(), inner);
  auto gs = enumerate_join_endos(phi.right_ptr(), inner);
  FormQuantale fq;
  for (auto& f : fs)
    for (auto& g : gs)
      if (is_continuous(f.table, g.table, phi, phi)) fq.pairs.emplace_back(f.table, g.table);
  std::sort(fq.pairs.begin(), fq.pairs.end());
  const int n = static_cast<int>(fq.pairs.size());
  auto join_pair = [&](int i, int j) {
    Table f(L.size()), g(R.size());
    for (Elem x = 0; x < L.size(); ++x) f[x] = L.join(fq.pairs[i].first[x], fq.pairs[j].first[x]);
    for (Elem y = 0; y < R.size(); ++y) g[y] = R.join(fq.pairs[i].second[y], fq.pairs[j].second[y]);
    return std::pair{f, g};
  };
  BoolMatrix order(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      order[i][j] = pointwise_leq(fq.pairs[i].first, fq.pairs[j].first, L) &&
                    pointwise_leq(fq.pairs[i].second, fq.pairs[j].second, R);
  auto carrier = make_lattice(order);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto [f, g] = join_pair(i, j);
      if (fq.index_of(f, g) != carrier->join(i, j))
        throw ValidationError(ErrorCode::LawViolated, "continuous pairs not closed under componentwise joins", {i, j});
    }
  Table mult(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& [f, g] = fq.pairs[i];
      const auto& [f2, g2] = fq.pairs[j];
      const Elem k = fq.index_of(compose(f2, f), compose(g, g2));
      if (k < 0) throw ValidationError(ErrorCode::LawViolated, "continuous pairs not closed under composition", {i, j});
      mult[static_cast<std::size_t>(i) * n + j] = k;
    }
  fq.quantale = make_quantale_flat(carrier, std::move(mult), fq.index_of(identity_table(L.size()), identity_table(R.size())));
  return fq;
}

Table phi_quantale_involution(const Quantale& q, const PhiOfQuantale& phi, const FormQuantale& target) {
  if (!q.involution) throw ValidationError(ErrorCode::PreconditionViolated, "quantale has no involution");
  const SubLattice& ls = phi.ls;
  const SubLattice& rs = phi.rs;
  const int nl = ls.lattice->size(), nr = rs.lattice->size();
  // * sends ls(Q) onto rs(Q) and back
  Table l_to_r(nl), r_to_l(nr);
  for (int i = 0; i < nl; ++i) l_to_r[i] = rs.from_parent[q.star(ls.to_parent[i])];
  for (int j = 0; j < nr; ++j) r_to_l[j] = ls.from_parent[q.star(rs.to_parent[j])];
  for (Elem v : l_to_r)
    if (v < 0) throw ValidationError(ErrorCode::LawViolated, "involution does not map ls(Q) into rs(Q)");
  for (Elem v : r_to_l)
    if (v < 0) throw ValidationError(ErrorCode::LawViolated, "involution does not map rs(Q) into ls(Q)");
  Table out(target.pairs.size());
  for (std::size_t k = 0; k < target.pairs.size(); ++k) {
    const auto& [f, g] = target.pairs[k];
    Table f2(nr), g2(nl);
    for (int y = 0; y < nr; ++y) f2[y] = l_to_r[f[r_to_l[y]]];
    for (int x = 0; x < nl; ++x) g2[x] = r_to_l[g[l_to_r[x]]];
    const Elem idx = target.index_of(g2, f2);
    if (idx < 0) throw ValidationError(ErrorCode::LawViolated, "(g', f') is not continuous", {static_cast<int>(k)});
    out[k] = idx;
  }
  return out;
}

ComparisonHom comparison_hom(const Quantale& q, const Caps& caps) {
  ComparisonHom c{phi_of_quantale(q), {}, {}};
  c.target = form_quantale(c.phi.form, caps);
  const SubLattice& ls = c.phi.ls;
  const SubLattice& rs = c.phi.rs;
  const int nl = ls.lattice->size(), nr = rs.lattice->size();
  c.kappa.resize(q.size());
  for (Elem a = 0; a < q.size(); ++a) {
    Table f(nl), g(nr);
    for (int i = 0; i < nl; ++i) f[i] = ls.from_parent[q.mul(ls.to_parent[i], a)];
    for (int j = 0; j < nr; ++j) g[j] = rs.from_parent[q.mul(a, rs.to_parent[j])];
    const Elem k = c.target.index_of(f, g);
    if (k < 0) throw ValidationError(ErrorCode::LawViolated, "κ(a) is not a continuous endomap", {a});
    c.kappa[a] = k;
  }
  const Quantale& t = *c.target.quantale;
  c.hom = is_quantale_hom(c.kappa, q, t);
  if (q.unit) c.unital = c.kappa[*q.unit] == t.unit;
  if (q.involution) {
    const Table inv = phi_quantale_involution(q, c.phi, c.target);
    for (Elem a = 0; a < q.size(); ++a) c.involutive = c.involutive && c.kappa[q.star(a)] == inv[c.kappa[a]];
  }
  c.injective = is_injective(c.kappa);
  c.faithful = true;
  for (Elem a = 0; a < q.size() && c.faithful; ++a)
    for (Elem b = a + 1; b < q.size() && c.faithful; ++b) {
      bool same = true;
      for (Elem x : ls.to_parent) same = same && q.mul(x, a) == q.mul(x, b);
      for (Elem y : rs.to_parent) same = same && q.mul(a, y) == q.mul(b, y);
      if (same) c.faithful = false;
    }
  return c;
}

bool is_quantic_nucleus(const Quantale& q, const Table& j) {
  if (!is_closure_operator(j, q.lattice())) return false;
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem b = 0; b < q.size(); ++b)
      if (!q.lattice().leq(q.mul(j[a], j[b]), j[q.mul(a, b)])) return false;
  return true;
}

void check_quantic_nucleus(const Quantale& q, const Table& j) {
  try {
    check_closure_operator(j, q.carrier);
  } catch (const ValidationError& e) {
    throw ValidationError(ErrorCode::NotNucleus, std::string("not a closure operator: ") + e.what(), e.witness());
  }
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem b = 0; b < q.size(); ++b)
      if (!q.lattice().leq(q.mul(j[a], j[b]), j[q.mul(a, b)]))
        throw ValidationError(ErrorCode::NotNucleus,
                              "j(a)⊙j(b) ≰ j(a⊙b) at (" + std::to_string(a) + ", " + std::to_string(b) + ")", {a, b});
}

std::vector<Table> enumerate_quantic_nuclei(const Quantale& q) {
  std::vector<Table> out;
  for (auto& j : enumerate_closure_operators(q.lattice()))
    if (is_quantic_nucleus(q, j)) out.push_back(j);
  return out;
}

NucleusQuotient nucleus_quotient(const Quantale& q, const Table& j) {
  check_quantic_nucleus(q, j);
  ClosureQuotient cq = closure_quotient(check_closure_operator(j, q.carrier));
  const SubLattice& fx = cq.fixed;
  const int k = fx.lattice->size();
  Table mult(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      mult[static_cast<std::size_t>(a) * k + b] = fx.from_parent[j[q.mul(fx.to_parent[a], fx.to_parent[b])]];
  std::optional<Elem> unit;
  if (q.unit) unit = fx.from_parent[j[*q.unit]];
  NucleusQuotient nq;
  nq.quantale = make_quantale_flat(fx.lattice, std::move(mult), unit);
  nq.fixed = fx;
  nq.projection = cq.projection.table;
  const Quantale& t = *nq.quantale;
  nq.claims.push_back({"projection preserves joins", true, is_join_preserving(nq.projection, q.lattice(), t.lattice())});
  bool multiplicative = true;
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem b = 0; b < q.size(); ++b)
      multiplicative = multiplicative && nq.projection[q.mul(a, b)] == t.mul(nq.projection[a], nq.projection[b]);
  nq.claims.push_back({"projection is multiplicative", true, multiplicative});
  nq.claims.push_back({"projection preserves the unit", q.unit.has_value(),
                       q.unit && t.unit && nq.projection[*q.unit] == *t.unit});
  return nq;
}

bool is_quantale_hom(const Table& h, const Quantale& a, const Quantale& b) {
  if (!is_join_preserving(h, a.lattice(), b.lattice())) return false;
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (h[a.mul(x, y)] != b.mul(h[x], h[y])) return false;
  return true;
}

std::optional<Table> find_quantale_isomorphism(const Quantale& a, const Quantale& b) {
  if (a.size() != b.size() || a.unit.has_value() != b.unit.has_value() ||
      a.involution.has_value() != b.involution.has_value())
    return std::nullopt;
  std::optional<Table> found;
  for_each_order_isomorphism(a.lattice(), b.lattice(), [&](const Table& h) {
    for (Elem x = 0; x < a.size(); ++x)
      for (Elem y = 0; y < a.size(); ++y)
        if (h[a.mul(x, y)] != b.mul(h[x], h[y])) return true;
    if (a.unit && h[*a.unit] != *b.unit) return true;
    if (a.involution)
      for (Elem x = 0; x < a.size(); ++x)
        if (h[a.star(x)] != b.star(h[x])) return true;
    found = h;
    return false;
  });
  return found;
}

std::vector<QuantalePtr> enumerate_quantales(const LatticePtr& l, const Caps& caps) {
  const int n = l->size();
  if (n > caps.endo_quantale)
    throw ValidationError(ErrorCode::CapExceeded,
                          "|L| = " + std::to_string(n) + " exceeds quantale cap " + std::to_string(caps.endo_quantale));
  EndoQuantale end = endo_quantale(l, caps);
  const auto autos = automorphisms(*l);
  std::set<Table> seen;
  for (auto& h : enumerate_join_homs(*l, end.quantale->lattice())) {
    Table mult(static_cast<std::size_t>(n) * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) mult[static_cast<std::size_t>(a) * n + b] = end.maps[h[a]][b];
    bool assoc = true;
    auto m = [&](Elem a, Elem b) { return mult[static_cast<std::size_t>(a) * n + b]; };
    for (Elem a = 0; a < n && assoc; ++a)
      for (Elem b = 0; b < n && assoc; ++b)
        for (Elem c = 0; c < n && assoc; ++c) assoc = m(m(a, b), c) == m(a, m(b, c));
    if (!assoc) continue;
    Table best = mult;
    for (const auto& s : autos) {
      Table conj(mult.size());
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) conj[static_cast<std::size_t>(s[a]) * n + s[b]] = s[m(a, b)];
      best = std::min(best, conj);
    }
    seen.insert(best);
  }
  std::vector<QuantalePtr> out;
  for (const auto& t : seen) out.push_back(make_quantale_flat(l, t));
  return out;
}

std::vector<Table> enumerate_involutions(const Quantale& q) {
  std::vector<Table> out;
  for (const auto& s : automorphisms(q.lattice())) {
    bool ok = true;
    for (Elem a = 0; a < q.size() && ok; ++a) ok = s[s[a]] == a;
    for (Elem a = 0; a < q.size() && ok; ++a)
      for (Elem b = 0; b < q.size() && ok; ++b) ok = s[q.mul(a, b)] == q.mul(s[b], s[a]);
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace qf
