#include "qf/balanced.hpp"

#include <algorithm>
#include <string>

#include "qf/error.hpp"

namespace qf {

namespace {

bool same_quantale(const Quantale& a, const Quantale& b) {
  return &a == &b || (a.lattice() == b.lattice() && a.mult == b.mult);
}

// a\z in R: the right adjoint of y ↦ a·y.
Elem under_action(const Module& r, Elem a, Elem z) {
  return r.lattice().join_where([&](Elem y) { return r.lattice().leq(r.act(a, y), z); });
}

// z/a in L: the right adjoint of x ↦ x·a.
Elem over_action(const Module& l, Elem a, Elem z) {
  return l.lattice().join_where([&](Elem x) { return l.lattice().leq(l.act(a, x), z); });
}

Claim claim(std::string name, bool applicable, bool holds) { return Claim{std::move(name), applicable, holds}; }

}  // namespace

BalancedForm make_balanced_form(ModulePtr left, ModulePtr right, TwoForm form) {
  if (left->side != Side::right || right->side != Side::left)
    throw ValidationError(ErrorCode::ShapeMismatch, "need a right module on the left and a left module on the right");
  if (!same_quantale(left->quantale(), right->quantale()))
    throw ValidationError(ErrorCode::ShapeMismatch, "modules are over different quantales");
  if (!(form.left() == left->lattice()) || !(form.right() == right->lattice()))
    throw ValidationError(ErrorCode::ShapeMismatch, "form carriers differ from the module carriers");
  return BalancedForm{std::move(left), std::move(right), std::move(form)};
}

BalanceReport balance_report(const BalancedForm& bf) {
  const Module& L = *bf.left;
  const Module& R = *bf.right;
  const TwoForm& phi = bf.form;
  const OrthImages o = orth_images(phi);
  const int nq = bf.quantale().size();
  BalanceReport rep;
  rep.conditions.fill(true);
  auto& c = rep.conditions;
  for (Elem a = 0; a < nq; ++a) {
    for (Elem x = 0; x < L.size(); ++x) {
      const Elem xa = L.act(a, x);
      const Elem u = under_action(R, a, o.right[x]);
      c[0] = c[0] && u == o.right[xa];
      c[2] = c[2] && phi.orthogonal(xa, u) && phi.orthogonal(x, R.act(a, o.right[xa]));
    }
    for (Elem y = 0; y < R.size(); ++y) {
      const Elem ay = R.act(a, y);
      const Elem v = over_action(L, a, o.left[y]);
      c[1] = c[1] && v == o.left[ay];
      c[3] = c[3] && phi.orthogonal(v, ay) && phi.orthogonal(L.act(a, o.left[ay]), y);
    }
    for (Elem x = 0; x < L.size(); ++x)
      for (Elem y = 0; y < R.size(); ++y)
        if (phi.value(L.act(a, x), y) != phi.value(x, R.act(a, y))) {
          if (!rep.witness) rep.witness = std::vector<int>{x, a, y};
          c[4] = false;
        }
  }
  rep.balanced = c[4];
  return rep;
}

BalancedForm phi_n_form(const QuantalePtr& q, Elem n) {
  const int s = q->size();
  BoolMatrix orth(s, std::vector<bool>(s));
  for (Elem x = 0; x < s; ++x)
    for (Elem y = 0; y < s; ++y) orth[x][y] = q->lattice().leq(q->mul(x, y), n);
  return make_balanced_form(regular_module(q, Side::right), regular_module(q, Side::left),
                            TwoForm::from_orthogonality(q->carrier, q->carrier, orth));
}

Elem greatest_sided_below(const Quantale& q, Elem n, Side side) {
  return q.lattice().join_where([&](Elem a) {
    const Elem p = side == Side::left ? q.mul(q.top(), a) : q.mul(a, q.top());
    return q.lattice().leq(a, n) && q.lattice().leq(p, a);
  });
}

Orthogonalizer orthogonalizer_of(const BalancedForm& bf, Elem x, Elem y) {
  const OrthImages o = orth_images(bf.form);
  Orthogonalizer r;
  r.value = bf.quantale().lattice().join_where([&](Elem a) { return bf.form.orthogonal(x, bf.right->act(a, y)); });
  r.via_right_orth = residual(*bf.right, o.right[x], y);
  r.via_left_orth = residual(*bf.left, o.left[y], x);
  return r;
}

Orthogonalizer orthogonalizer(const BalancedForm& bf, Elem x, Elem y) {
  if (!is_generator(*bf.left, x))
    throw ValidationError(ErrorCode::NotAGenerator, std::to_string(x) + " does not generate the left module", {0, x});
  if (!is_generator(*bf.right, y))
    throw ValidationError(ErrorCode::NotAGenerator, std::to_string(y) + " does not generate the right module", {1, y});
  return orthogonalizer_of(bf, x, y);
}

PrincipalOrthoquotient principal_orthoquotient(const BalancedForm& bf, Elem x, Elem y) {
  if (!is_generator(*bf.left, x) || !is_generator(*bf.right, y))
    throw ValidationError(ErrorCode::NotPrincipal, "x and y must generate their modules", {x, y});
  const QuantalePtr& q = bf.left->over;
  const Elem n = orthogonalizer_of(bf, x, y).value;
  PrincipalOrthoquotient p{n, phi_n_form(q, n), {}, {}, {}};
  p.f.resize(q->size());
  p.g.resize(q->size());
  for (Elem a = 0; a < q->size(); ++a) {
    p.f[a] = bf.left->act(a, x);
    p.g[a] = bf.right->act(a, y);
  }
  const bool balanced = balance_report(bf).balanced;
  p.claims.push_back(claim("f is surjective", true, is_surjective(p.f, bf.left->size())));
  p.claims.push_back(claim("g is surjective", true, is_surjective(p.g, bf.right->size())));
  p.claims.push_back(claim("f is a right module homomorphism", true, is_module_hom(p.f, *p.source.left, *bf.left)));
  p.claims.push_back(claim("g is a left module homomorphism", true, is_module_hom(p.g, *p.source.right, *bf.right)));
  p.claims.push_back(claim("(f, g) is an orthomorphism", balanced, is_orthomorphism(p.f, p.g, p.source.form, bf.form)));
  return p;
}

SegmentForm upsegment_restricted_form(const QuantalePtr& q, Elem n, Elem r, Elem l) {
  const Lattice& Q = q->lattice();
  const SidedElements sided = sided_elements(*q);
  auto has = [](const std::vector<Elem>& v, Elem a) { return std::find(v.begin(), v.end(), a) != v.end(); };
  if (!has(sided.right, r) || !has(sided.left, l) || !Q.leq(Q.join(r, l), n))
    throw ValidationError(ErrorCode::PreconditionViolated, "need r right-sided, l left-sided and r ∨ l ≤ n", {n, r, l});

  const BalancedForm base = phi_n_form(q, n);
  auto up_r = segment_modules(*base.left, r);
  auto up_l = segment_modules(*base.right, l);
  const SubLattice& ls = up_r->up_sub;
  const SubLattice& rs = up_l->up_sub;
  const int nl = ls.lattice->size(), nr = rs.lattice->size();
  BoolMatrix orth(nl, std::vector<bool>(nr));
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nr; ++j) orth[i][j] = base.form.orthogonal(ls.to_parent[i], rs.to_parent[j]);
  SegmentForm s{make_balanced_form(up_r->up, up_l->up, TwoForm::from_orthogonality(ls.lattice, rs.lattice, orth)),
                ls, rs, false, false, 0, 0, {}};
  const FormFlags flags = classify_form(s.form.form);
  s.dense_left = flags.dense_left;
  s.dense_right = flags.dense_right;
  s.greatest_right_sided = greatest_sided_below(*q, n, Side::right);
  s.greatest_left_sided = greatest_sided_below(*q, n, Side::left);

  s.claims.push_back(claim("ψ is balanced", true, balance_report(s.form).balanced));
  const Table& pl = up_r->projection;
  const Table& pr = up_l->projection;
  s.claims.push_back(claim("φ_n -> ψ is an orthomorphism", true, is_orthomorphism(pl, pr, base.form, s.form.form)));
  s.claims.push_back(claim("φ_n -> ψ is a pair of module homomorphisms", true,
                           is_module_hom(pl, *base.left, *s.form.left) && is_module_hom(pr, *base.right, *s.form.right)));
  const OrthogonalQuotient oq = orthogonal_quotient(base.form);
  bool factors = true;
  for (Elem a = 0; a < q->size(); ++a)
    for (Elem b = 0; b < q->size(); ++b) {
      if (pl[a] == pl[b]) factors = factors && oq.projection.f[a] == oq.projection.f[b];
      if (pr[a] == pr[b]) factors = factors && oq.projection.g[a] == oq.projection.g[b];
    }
  s.claims.push_back(claim("orthogonal quotient of φ_n factors through ψ", true, factors));
  s.claims.push_back(claim("dense on the right ⟹ l is the greatest left-sided element below n", s.dense_right,
                           l == s.greatest_left_sided));
  s.claims.push_back(claim("dense on the left ⟹ r is the greatest right-sided element below n", s.dense_left,
                           r == s.greatest_right_sided));
  const bool unital = q->unit.has_value();
  s.claims.push_back(claim("unital: dense on the right ⟺ l greatest", unital,
                           s.dense_right == (l == s.greatest_left_sided)));
  s.claims.push_back(claim("unital: dense on the left ⟺ r greatest", unital,
                           s.dense_left == (r == s.greatest_right_sided)));
  return s;
}

Claims principal_density(const BalancedForm& bf, Elem x, Elem y) {
  const QuantalePtr& q = bf.left->over;
  const Orthogonalizer o = orthogonalizer(bf, x, y);
  const Elem n = o.value;
  const Elem ann_x = annihilator(*bf.left, x);
  const Elem ann_y = annihilator(*bf.right, y);
  const FormFlags flags = classify_form(bf.form);
  const Elem gl = greatest_sided_below(*q, n, Side::left);
  const Elem gr = greatest_sided_below(*q, n, Side::right);
  const bool balanced = balance_report(bf).balanced;
  const bool unital = q->unit.has_value();
  Claims cs;
  cs.push_back(claim("orth(x, y) = (x^⊥)/y = x\\(^⊥y)", balanced, n == o.via_right_orth && n == o.via_left_orth));
  cs.push_back(claim("dense on the right ⟹ ann(y) greatest left-sided below orth", balanced && flags.dense_right,
                     ann_y == gl));
  cs.push_back(claim("dense on the left ⟹ ann(x) greatest right-sided below orth", balanced && flags.dense_left,
                     ann_x == gr));
  cs.push_back(claim("unital: dense on the right ⟺ ann(y) greatest", balanced && unital,
                     flags.dense_right == (ann_y == gl)));
  cs.push_back(claim("unital: dense on the left ⟺ ann(x) greatest", balanced && unital,
                     flags.dense_left == (ann_x == gr)));
  // The factorization through ψ on ↑ann(x) × ↑ann(y).
  if (!balanced) return cs;
  const SegmentForm seg = upsegment_restricted_form(q, n, ann_x, ann_y);
  Table f(seg.left_sub.lattice->size()), g(seg.right_sub.lattice->size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = bf.left->act(seg.left_sub.to_parent[i], x);
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = bf.right->act(seg.right_sub.to_parent[j], y);
  auto dense = [](const Table& h, Elem bottom_src, Elem bottom_dst) {
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i] == bottom_dst && static_cast<Elem>(i) != bottom_src) return false;
    return true;
  };
  cs.push_back(claim("ψ -> φ is a surjective dense orthomorphism", true,
                     is_orthomorphism(f, g, seg.form.form, bf.form) && is_surjective(f, bf.left->size()) &&
                         is_surjective(g, bf.right->size()) &&
                         dense(f, seg.left_sub.lattice->bottom(), bf.left->lattice().bottom()) &&
                         dense(g, seg.right_sub.lattice->bottom(), bf.right->lattice().bottom())));
  cs.push_back(claim("φ and ψ agree on density", true,
                     flags.dense_right == seg.dense_right && flags.dense_left == seg.dense_left));
  return cs;
}

std::optional<BalancedForm> pushforward(const BalancedForm& bf, const ModuleQuotient& left,
                                        const ModuleQuotient& right) {
  const int nl = left.module->size(), nr = right.module->size();
  std::vector<std::vector<int>> val(nl, std::vector<int>(nr, -1));
  for (Elem x = 0; x < bf.left->size(); ++x)
    for (Elem y = 0; y < bf.right->size(); ++y) {
      int& v = val[left.projection[x]][right.projection[y]];
      const int w = bf.form.value(x, y) ? 1 : 0;
      if (v >= 0 && v != w) return std::nullopt;
      v = w;
    }
  BoolMatrix values(nl, std::vector<bool>(nr));
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nr; ++j) values[i][j] = val[i][j] == 1;
  if (two_form_failure(left.module->lattice(), right.module->lattice(), values)) return std::nullopt;
  return make_balanced_form(left.module, right.module,
                            TwoForm::validate(left.module->carrier, right.module->carrier, values));
}

BalancedQuotient balanced_orthogonal_quotient(const BalancedForm& bf) {
  if (!balance_report(bf).balanced)
    throw ValidationError(ErrorCode::PreconditionViolated, "form is not balanced");
  const OrthImages o = orth_images(bf.form);
  Table kl(bf.left->size()), kr(bf.right->size());
  for (Elem x = 0; x < bf.left->size(); ++x) kl[x] = o.left[o.right[x]];
  for (Elem y = 0; y < bf.right->size(); ++y) kr[y] = o.right[o.left[y]];
  BalancedQuotient bq;
  const bool nl = is_module_nucleus(*bf.left, kl);
  const bool nr = is_module_nucleus(*bf.right, kr);
  bq.claims.push_back(claim("x ↦ ^⊥(x^⊥) is a module nucleus", true, nl));
  bq.claims.push_back(claim("y ↦ (^⊥y)^⊥ is a module nucleus", true, nr));
  if (!nl || !nr) return bq;
  const ModuleQuotient ql = module_quotient(*bf.left, kl);
  const ModuleQuotient qr = module_quotient(*bf.right, kr);
  bq.form = pushforward(bf, ql, qr);
  bq.claims.push_back(claim("the restricted form is well defined", true, bq.form.has_value()));
  if (!bq.form) return bq;
  const OrthogonalQuotient oq = orthogonal_quotient(bf.form);
  bq.claims.push_back(claim("quotient agrees with the orthogonal quotient", true,
                            ql.fixed.to_parent == oq.left.to_parent && qr.fixed.to_parent == oq.right.to_parent &&
                                bq.form->form == oq.form));
  bq.claims.push_back(claim("quotient form is balanced", true, balance_report(*bq.form).balanced));
  return bq;
}

std::vector<BalancedForm> enumerate_balanced_forms(const ModulePtr& left, const ModulePtr& right, const Caps& caps) {
  std::vector<BalancedForm> out;
  for (auto& f : enumerate_two_forms(left->carrier, right->carrier, Exec::serial, caps)) {
    BalancedForm bf = make_balanced_form(left, right, f);
    if (balance_report(bf).balanced) out.push_back(std::move(bf));
  }
  return out;
}

}  // namespace qf
