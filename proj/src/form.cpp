#include "qf/form.hpp"

#include <algorithm>
#include <string>

#include "qf/enumerate.hpp"

namespace qf {

namespace {

std::string xy(Elem x, Elem y) { return "(" + std::to_string(x) + ", " + std::to_string(y) + ")"; }

bool antitone_order_iso(const Table& t, const Lattice& src, const Lattice& dst) {
  if (src.size() != dst.size() || !is_injective(t)) return false;
  for (Elem a = 0; a < src.size(); ++a)
    for (Elem b = 0; b < src.size(); ++b)
      if (src.leq(a, b) != dst.leq(t[b], t[a])) return false;
  return true;
}

}  // namespace

std::optional<ValidationError> two_form_failure(const Lattice& left, const Lattice& right, const BoolMatrix& values) {
  const int n = left.size(), m = right.size();
  if (static_cast<int>(values.size()) != n)
    return ValidationError(ErrorCode::ShapeMismatch, "form matrix has wrong number of rows");
  for (const auto& row : values)
    if (static_cast<int>(row.size()) != m)
      return ValidationError(ErrorCode::ShapeMismatch, "form matrix has wrong number of columns");
  for (Elem y = 0; y < m; ++y)
    if (values[left.bottom()][y])
      return ValidationError(ErrorCode::BottomViolation, "φ(0, " + std::to_string(y) + ") ≠ 0", {left.bottom(), y});
  for (Elem x = 0; x < n; ++x)
    if (values[x][right.bottom()])
      return ValidationError(ErrorCode::BottomViolation, "φ(" + std::to_string(x) + ", 0) ≠ 0", {x, right.bottom()});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      for (Elem y = 0; y < m; ++y)
        if (values[left.join(a, b)][y] != (values[a][y] || values[b][y]))
          return ValidationError(ErrorCode::JoinViolation,
                                 "left join " + xy(a, b) + " not preserved at y = " + std::to_string(y), {0, a, b, y});
  for (Elem a = 0; a < m; ++a)
    for (Elem b = a + 1; b < m; ++b)
      for (Elem x = 0; x < n; ++x)
        if (values[x][right.join(a, b)] != (values[x][a] || values[x][b]))
          return ValidationError(ErrorCode::JoinViolation,
                                 "right join " + xy(a, b) + " not preserved at x = " + std::to_string(x), {1, a, b, x});
  return std::nullopt;
}

TwoForm TwoForm::validate(LatticePtr left, LatticePtr right, const BoolMatrix& values) {
  if (auto err = two_form_failure(*left, *right, values)) throw *err;
  TwoForm f;
  const int n = left->size(), m = right->size();
  f.values_.resize(static_cast<std::size_t>(n) * m);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < m; ++y) f.values_[static_cast<std::size_t>(x) * m + y] = values[x][y] ? 1 : 0;
  f.left_ = std::move(left);
  f.right_ = std::move(right);
  return f;
}

TwoForm TwoForm::from_orthogonality(LatticePtr left, LatticePtr right, const BoolMatrix& orth) {
  BoolMatrix values = orth;
  for (auto& row : values) row.flip();
  return validate(std::move(left), std::move(right), values);
}

BoolMatrix TwoForm::values() const {
  BoolMatrix m(left_->size(), std::vector<bool>(right_->size(), false));
  for (Elem x = 0; x < left_->size(); ++x)
    for (Elem y = 0; y < right_->size(); ++y) m[x][y] = value(x, y);
  return m;
}

BoolMatrix TwoForm::orthogonality() const {
  BoolMatrix m = values();
  for (auto& row : m) row.flip();
  return m;
}

OrthImages orth_images(const TwoForm& phi) {
  const Lattice& l = phi.left();
  const Lattice& r = phi.right();
  OrthImages o;
  o.right.resize(l.size());
  o.left.resize(r.size());
  for (Elem x = 0; x < l.size(); ++x) o.right[x] = r.join_where([&](Elem y) { return phi.orthogonal(x, y); });
  for (Elem y = 0; y < r.size(); ++y) o.left[y] = l.join_where([&](Elem x) { return phi.orthogonal(x, y); });
  return o;
}

bool is_galois_connection(const Lattice& l, const Lattice& r, const Table& to_right, const Table& to_left) {
  if (static_cast<int>(to_right.size()) != l.size() || static_cast<int>(to_left.size()) != r.size()) return false;
  if (!is_antitone(to_right, l, r) || !is_antitone(to_left, r, l)) return false;
  for (Elem x = 0; x < l.size(); ++x)
    if (!l.leq(x, to_left[to_right[x]])) return false;
  for (Elem y = 0; y < r.size(); ++y)
    if (!r.leq(y, to_right[to_left[y]])) return false;
  return true;
}

TwoForm form_from_galois(LatticePtr left, LatticePtr right, const Table& r, const Table& l) {
  if (static_cast<int>(r.size()) != left->size() || static_cast<int>(l.size()) != right->size())
    throw ValidationError(ErrorCode::ShapeMismatch, "Galois maps have wrong lengths");
  if (!is_galois_connection(*left, *right, r, l)) {
    for (Elem x = 0; x < left->size(); ++x)
      if (!left->leq(x, l[r[x]]))
        throw ValidationError(ErrorCode::NotGalois, "x ≰ l(r(x)) at x = " + std::to_string(x), {x});
    for (Elem y = 0; y < right->size(); ++y)
      if (!right->leq(y, r[l[y]]))
        throw ValidationError(ErrorCode::NotGalois, "y ≰ r(l(y)) at y = " + std::to_string(y), {y});
    throw ValidationError(ErrorCode::NotGalois, "maps are not antitone");
  }
  BoolMatrix orth(left->size(), std::vector<bool>(right->size(), false));
  for (Elem x = 0; x < left->size(); ++x)
    for (Elem y = 0; y < right->size(); ++y) orth[x][y] = left->leq(x, l[y]);
  return TwoForm::from_orthogonality(std::move(left), std::move(right), orth);
}

FormFlags classify_form(const TwoForm& phi) {
  const Lattice& l = phi.left();
  const Lattice& r = phi.right();
  FormFlags f;
  f.dense_right = true;
  for (Elem y = 0; y < r.size(); ++y)
    if (phi.orthogonal(l.top(), y) && y != r.bottom()) f.dense_right = false;
  f.dense_left = true;
  for (Elem x = 0; x < l.size(); ++x)
    if (phi.orthogonal(x, r.top()) && x != l.bottom()) f.dense_left = false;
  f.faithful_right = true;
  for (Elem a = 0; a < r.size() && f.faithful_right; ++a)
    for (Elem b = a + 1; b < r.size() && f.faithful_right; ++b) {
      bool same = true;
      for (Elem z = 0; z < l.size() && same; ++z) same = phi.value(z, a) == phi.value(z, b);
      if (same) f.faithful_right = false;
    }
  f.faithful_left = true;
  for (Elem a = 0; a < l.size() && f.faithful_left; ++a)
    for (Elem b = a + 1; b < l.size() && f.faithful_left; ++b) {
      bool same = true;
      for (Elem z = 0; z < r.size() && same; ++z) same = phi.value(a, z) == phi.value(b, z);
      if (same) f.faithful_left = false;
    }
  f.symmetric = l == r;
  for (Elem x = 0; x < l.size() && f.symmetric; ++x)
    for (Elem y = 0; y < l.size() && f.symmetric; ++y) f.symmetric = phi.value(x, y) == phi.value(y, x);
  return f;
}

std::vector<std::string> GaloisReport::disagreeing_groups() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    for (std::size_t j = 0; j < conditions.size(); ++j) {
      if (conditions[j].group == conditions[i].group && conditions[j].value != conditions[i].value) {
        if (std::find(out.begin(), out.end(), conditions[i].group) == out.end()) out.push_back(conditions[i].group);
      }
    }
  }
  return out;
}

GaloisReport galois_report(const TwoForm& phi) {
  const Lattice& l = phi.left();
  const Lattice& r = phi.right();
  const OrthImages o = orth_images(phi);
  const FormFlags flags = classify_form(phi);
  GaloisReport rep;
  rep.galois = is_galois_connection(l, r, o.right, o.left);
  rep.round_trip = false;
  if (rep.galois) {
    try {
      rep.round_trip = form_from_galois(phi.left_ptr(), phi.right_ptr(), o.right, o.left) == phi;
    } catch (const ValidationError&) {
      rep.round_trip = false;
    }
  }

  auto count = [](const Table& t, Elem v) { return std::count(t.begin(), t.end(), v); };
  auto fixes_all = [](const Table& outer, const Table& inner) {
    for (std::size_t y = 0; y < inner.size(); ++y)
      if (outer[inner[y]] != static_cast<Elem>(y)) return false;
    return true;
  };
  auto add = [&](const char* group, const char* name, bool v) { rep.conditions.push_back({group, name, v}); };

  add("dense-right", "dense on the right", flags.dense_right);
  add("dense-right", "1^⊥ = 0", o.right[l.top()] == r.bottom());
  add("dense-right", "0 is the only y with ^⊥y = 1", count(o.left, l.top()) == 1);

  add("dense-left", "dense on the left", flags.dense_left);
  add("dense-left", "^⊥1 = 0", o.left[r.top()] == l.bottom());
  add("dense-left", "0 is the only x with x^⊥ = 1", count(o.right, r.top()) == 1);

  add("faithful-right", "faithful on the right", flags.faithful_right);
  add("faithful-right", "(-)^⊥ surjective", is_surjective(o.right, r.size()));
  add("faithful-right", "^⊥(-) injective", is_injective(o.left));
  add("faithful-right", "(^⊥y)^⊥ = y", fixes_all(o.right, o.left));

  add("faithful-left", "faithful on the left", flags.faithful_left);
  add("faithful-left", "(-)^⊥ injective", is_injective(o.right));
  add("faithful-left", "^⊥(-) surjective", is_surjective(o.left, l.size()));
  add("faithful-left", "^⊥(x^⊥) = x", fixes_all(o.left, o.right));

  add("faithful", "faithful", flags.faithful_left && flags.faithful_right);
  add("faithful", "(-)^⊥ antitone order isomorphism", antitone_order_iso(o.right, l, r));
  add("faithful", "^⊥(-) antitone order isomorphism", antitone_order_iso(o.left, r, l));
  return rep;
}

bool is_orthomorphism(const Table& f, const Table& g, const TwoForm& src, const TwoForm& dst) {
  for (Elem x = 0; x < src.left().size(); ++x)
    for (Elem y = 0; y < src.right().size(); ++y)
      if (dst.value(f[x], g[y]) != src.value(x, y)) return false;
  return true;
}

Orthomorphism check_orthomorphism(const Table& f, const Table& g, const TwoForm& src, const TwoForm& dst) {
  check_join_hom(f, src.left_ptr(), dst.left_ptr());
  check_join_hom(g, src.right_ptr(), dst.right_ptr());
  for (Elem x = 0; x < src.left().size(); ++x)
    for (Elem y = 0; y < src.right().size(); ++y)
      if (dst.value(f[x], g[y]) != src.value(x, y))
        throw ValidationError(ErrorCode::NotOrthomorphism, "⟨f(x)|g(y)⟩ ≠ ⟨x|y⟩ at " + xy(x, y), {x, y});

  const Lattice& L = src.left();
  const Lattice& R = src.right();
  const Lattice& L2 = dst.left();
  const Lattice& R2 = dst.right();
  const OrthImages so = orth_images(src);
  const OrthImages d_o = orth_images(dst);
  const FormFlags sf = classify_form(src);
  const FormFlags df = classify_form(dst);
  const bool f_surj = is_surjective(f, L2.size());
  const bool g_surj = is_surjective(g, R2.size());
  const bool f_strong = f[L.top()] == L2.top();
  const bool g_strong = g[R.top()] == R2.top();
  auto dense_map = [](const Table& t, const Lattice& s, const Lattice& d) {
    for (Elem x = 0; x < s.size(); ++x)
      if (t[x] == d.bottom() && x != s.bottom()) return false;
    return true;
  };
  const bool f_dense = dense_map(f, L, L2);
  const bool g_dense = dense_map(g, R, R2);

  Orthomorphism o;
  o.f = f;
  o.g = g;
  o.quotient = f_surj && g_surj;

  bool commutes_right = true;
  for (Elem x = 0; x < L.size(); ++x) commutes_right = commutes_right && g[so.right[x]] == d_o.right[f[x]];
  bool commutes_left = true;
  for (Elem y = 0; y < R.size(); ++y) commutes_left = commutes_left && f[so.left[y]] == d_o.left[g[y]];

  o.claims.push_back({"g surjective ⟹ g(x^⊥) = f(x)^⊥", g_surj, commutes_right});
  o.claims.push_back({"f surjective ⟹ f(^⊥y) = ^⊥g(y)", f_surj, commutes_left});
  o.claims.push_back({"g surjective, f strong, φ dense right ⟹ φ' dense right", g_surj && f_strong && sf.dense_right,
                      df.dense_right});
  o.claims.push_back({"g surjective dense, f strong ⟹ (φ dense right ⟺ φ' dense right)",
                      g_surj && f_strong && g_dense, sf.dense_right == df.dense_right});
  o.claims.push_back({"f surjective, g strong, φ dense left ⟹ φ' dense left", f_surj && g_strong && sf.dense_left,
                      df.dense_left});
  o.claims.push_back({"f surjective dense, g strong ⟹ (φ dense left ⟺ φ' dense left)",
                      f_surj && g_strong && f_dense, sf.dense_left == df.dense_left});
  o.claims.push_back({"g surjective, φ faithful left ⟹ f order embedding", g_surj && sf.faithful_left,
                      is_order_embedding(f, L, L2)});
  o.claims.push_back({"f surjective, φ faithful right ⟹ g order embedding", f_surj && sf.faithful_right,
                      is_order_embedding(g, R, R2)});
  o.claims.push_back({"quotient of a faithful form ⟹ f, g order isomorphisms",
                      o.quotient && sf.faithful_left && sf.faithful_right,
                      is_order_embedding(f, L, L2) && is_order_embedding(g, R, R2) && L.size() == L2.size() &&
                          R.size() == R2.size()});
  o.claims.push_back({"g strong, φ dense left ⟹ f dense", g_strong && sf.dense_left, f_dense});
  o.claims.push_back({"f strong, φ dense right ⟹ g dense", f_strong && sf.dense_right, g_dense});
  return o;
}

OrthogonalQuotient orthogonal_quotient(const TwoForm& phi) {
  const Lattice& L = phi.left();
  const Lattice& R = phi.right();
  const OrthImages o = orth_images(phi);
  Table cl_left(L.size()), cl_right(R.size());
  for (Elem x = 0; x < L.size(); ++x) cl_left[x] = o.left[o.right[x]];
  for (Elem y = 0; y < R.size(); ++y) cl_right[y] = o.right[o.left[y]];
  std::vector<Elem> lf, rf;
  for (Elem x = 0; x < L.size(); ++x)
    if (cl_left[x] == x) lf.push_back(x);
  for (Elem y = 0; y < R.size(); ++y)
    if (cl_right[y] == y) rf.push_back(y);
  SubLattice ls = induced_sublattice(L, lf);
  SubLattice rs = induced_sublattice(R, rf);
  BoolMatrix values(ls.to_parent.size(), std::vector<bool>(rs.to_parent.size(), false));
  for (std::size_t i = 0; i < ls.to_parent.size(); ++i)
    for (std::size_t j = 0; j < rs.to_parent.size(); ++j) values[i][j] = phi.value(ls.to_parent[i], rs.to_parent[j]);
  TwoForm q = TwoForm::validate(ls.lattice, rs.lattice, values);
  Table f(L.size()), g(R.size());
  for (Elem x = 0; x < L.size(); ++x) f[x] = ls.from_parent[cl_left[x]];
  for (Elem y = 0; y < R.size(); ++y) g[y] = rs.from_parent[cl_right[y]];
  Orthomorphism proj = check_orthomorphism(f, g, phi, q);
  return OrthogonalQuotient{std::move(q), std::move(ls), std::move(rs), std::move(proj)};
}

ContinuityReport continuity_report(const Table& f, const Table& g, const TwoForm& src, const TwoForm& dst) {
  const Lattice& L = src.left();
  const Lattice& R = src.right();
  const Lattice& L2 = dst.left();
  const Lattice& R2 = dst.right();
  ContinuityReport rep;
  rep.continuous = is_continuous(f, g, src, dst);
  const OrthImages so = orth_images(src);
  const OrthImages d_o = orth_images(dst);
  const Table g_star = right_adjoint(g, R2, R);  // R -> R'
  const Table f_star = right_adjoint(f, L, L2);  // L' -> L
  bool c1 = true, c2 = true, c3 = true, c4 = true;
  for (Elem x = 0; x < L.size(); ++x) {
    c1 = c1 && g_star[so.right[x]] == d_o.right[f[x]];
    c3 = c3 && dst.orthogonal(f[x], g_star[so.right[x]]) && src.orthogonal(x, g[d_o.right[f[x]]]);
  }
  for (Elem y = 0; y < R2.size(); ++y) {
    c2 = c2 && f_star[d_o.left[y]] == so.left[g[y]];
    c4 = c4 && src.orthogonal(f_star[d_o.left[y]], g[y]) && dst.orthogonal(f[so.left[g[y]]], y);
  }
  rep.conditions = {c1, c2, c3, c4};
  return rep;
}

bool is_continuous(const Table& f, const Table& g, const TwoForm& src, const TwoForm& dst) {
  for (Elem x = 0; x < src.left().size(); ++x)
    for (Elem y = 0; y < dst.right().size(); ++y)
      if (dst.value(f[x], y) != src.value(x, g[y])) return false;
  return true;
}

ContinuousMap check_continuous(const Table& f, const Table& g, const TwoForm& src, const TwoForm& dst) {
  check_join_hom(f, src.left_ptr(), dst.left_ptr());
  check_join_hom(g, dst.right_ptr(), src.right_ptr());
  for (Elem x = 0; x < src.left().size(); ++x)
    for (Elem y = 0; y < dst.right().size(); ++y)
      if (dst.value(f[x], y) != src.value(x, g[y]))
        throw ValidationError(ErrorCode::NotContinuous, "⟨f(x)|y⟩ ≠ ⟨x|g(y)⟩ at " + xy(x, y), {x, y});
  const ContinuityReport rep = continuity_report(f, g, src, dst);
  ContinuousMap c{f, g, {}};
  c.claims.push_back({"g_*(x^⊥) = f(x)^⊥", true, rep.conditions[0]});
  c.claims.push_back({"f_*(^⊥y) = ^⊥g(y)", true, rep.conditions[1]});
  c.claims.push_back({"f(x) ⊥ g_*(x^⊥) and x ⊥ g(f(x)^⊥)", true, rep.conditions[2]});
  c.claims.push_back({"f_*(^⊥y) ⊥ g(y) and f(^⊥g(y)) ⊥ y", true, rep.conditions[3]});
  return c;
}

std::pair<Table, Table> compose_continuous(const std::pair<Table, Table>& first, const std::pair<Table, Table>& second) {
  return {compose(second.first, first.first), compose(first.second, second.second)};
}

bool closure_continuous(const Table& f, const TwoForm& src, const TwoForm& dst) {
  const OrthImages so = orth_images(src);
  const OrthImages d_o = orth_images(dst);
  for (Elem x = 0; x < src.left().size(); ++x) {
    const Elem lhs = f[so.left[so.right[x]]];
    const Elem rhs = d_o.left[d_o.right[f[x]]];
    if (!dst.left().leq(lhs, rhs)) return false;
  }
  return true;
}

std::optional<Table> extend_to_continuous(const Table& f, const TwoForm& src, const TwoForm& dst) {
  if (!classify_form(src).faithful_right || !classify_form(dst).faithful_right)
    throw ValidationError(ErrorCode::PreconditionViolated, "both forms must be faithful on the right");
  if (!closure_continuous(f, src, dst)) return std::nullopt;
  const OrthImages so = orth_images(src);
  const OrthImages d_o = orth_images(dst);
  const Table f_star = right_adjoint(f, src.left(), dst.left());
  Table g(dst.right().size());
  for (Elem y = 0; y < dst.right().size(); ++y) g[y] = so.right[f_star[d_o.left[y]]];
  return g;
}

std::optional<std::pair<Table, Table>> find_form_isomorphism(const TwoForm& a, const TwoForm& b) {
  std::optional<std::pair<Table, Table>> found;
  for_each_order_isomorphism(a.left(), b.left(), [&](const Table& fl) {
    for_each_order_isomorphism(a.right(), b.right(), [&](const Table& fr) {
      if (is_orthomorphism(fl, fr, a, b)) {
        found = std::pair{fl, fr};
        return false;
      }
      return true;
    });
    return !found.has_value();
  });
  return found;
}

std::vector<TwoForm> enumerate_two_forms(const LatticePtr& left, const LatticePtr& right, Exec exec,
                                         const Caps& caps) {
  const int n = left->size(), m = right->size();
  const int cells = n * m;
  if (cells > caps.form_cells || cells > 30)
    throw ValidationError(ErrorCode::CapExceeded,
                          "|L|·|R| = " + std::to_string(cells) + " exceeds form cap " + std::to_string(caps.form_cells));
  const long count = 1L << cells;
  auto decode = [&](long mask) {
    BoolMatrix v(n, std::vector<bool>(m, false));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < m; ++y) v[x][y] = (mask >> (x * m + y)) & 1;
    return v;
  };
  std::vector<long> hits;
  if (exec == Exec::serial) {
    for (long mask = 0; mask < count; ++mask)
      if (!two_form_failure(*left, *right, decode(mask))) hits.push_back(mask);
  } else {
#pragma omp parallel
    {
      std::vector<long> local;
#pragma omp for schedule(static) nowait
      for (long mask = 0; mask < count; ++mask)
        if (!two_form_failure(*left, *right, decode(mask))) local.push_back(mask);
#pragma omp critical
      hits.insert(hits.end(), local.begin(), local.end());
    }
    std::sort(hits.begin(), hits.end());
  }
  std::vector<TwoForm> out;
  out.reserve(hits.size());
  for (long mask : hits) out.push_back(TwoForm::validate(left, right, decode(mask)));
  return out;
}

}  // namespace qf
