#include "qf/involutive.hpp"

#include <algorithm>
#include <string>

#include "qf/enumerate.hpp"
#include "qf/error.hpp"

namespace qf {

namespace {

Claim claim(std::string name, bool applicable, bool holds) { return Claim{std::move(name), applicable, holds}; }

void require_symmetric(const TwoForm& phi) {
  if (!is_symmetric(phi)) throw ValidationError(ErrorCode::NotSymmetric, "form is not symmetric");
}

int find_index(const std::vector<Table>& v, const Table& t) {
  auto it = std::find(v.begin(), v.end(), t);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

}  // namespace

bool is_symmetric(const TwoForm& phi) {
  if (!(phi.left() == phi.right())) return false;
  for (Elem x = 0; x < phi.left().size(); ++x)
    for (Elem y = x + 1; y < phi.right().size(); ++y)
      if (phi.value(x, y) != phi.value(y, x)) return false;
  return true;
}

FormQuantale involution_on_form_quantale(const TwoForm& phi, const Caps& caps) {
  require_symmetric(phi);
  FormQuantale fq = form_quantale(phi, caps);
  Table swap(fq.pairs.size());
  for (std::size_t i = 0; i < fq.pairs.size(); ++i) {
    const Elem j = fq.index_of(fq.pairs[i].second, fq.pairs[i].first);
    if (j < 0) throw ValidationError(ErrorCode::LawViolated, "swapped pair is not continuous", {static_cast<int>(i)});
    swap[i] = j;
  }
  fq.quantale = with_structure(*fq.quantale, fq.quantale->unit, swap);
  return fq;
}

InvolutiveReport involutive_report(const Module& m, const TwoForm& phi) {
  const Quantale& q = m.quantale();
  if (!q.involution) throw ValidationError(ErrorCode::PreconditionViolated, "quantale has no involution");
  if (m.side != Side::left) throw ValidationError(ErrorCode::PreconditionViolated, "involutive modules are left modules");
  require_symmetric(phi);
  if (!(phi.left() == m.lattice())) throw ValidationError(ErrorCode::ShapeMismatch, "form is not on the module carrier");
  const Lattice& M = m.lattice();
  const OrthImages o = orth_images(phi);
  const FormFlags flags = classify_form(phi);
  InvolutiveReport rep;
  rep.involutive = true;
  rep.residuation = true;
  bool formula = true;
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem x = 0; x < M.size(); ++x) {
      const Elem sx = m.act(q.star(a), x);
      const Elem under = M.join_where([&](Elem y) { return M.leq(m.act(a, y), o.right[x]); });
      rep.residuation = rep.residuation && o.right[sx] == under;
      formula = formula && sx == o.left[under];
      for (Elem y = 0; y < M.size(); ++y)
        if (phi.value(sx, y) != phi.value(x, m.act(a, y))) {
          if (!rep.witness) rep.witness = std::vector<int>{a, x, y};
          rep.involutive = false;
        }
    }
  if (flags.faithful_left) rep.faithful_formula = formula;
  return rep;
}

InvolutiveModule check_involutive_module(ModulePtr m, TwoForm phi) {
  const InvolutiveReport rep = involutive_report(*m, phi);
  if (!rep.involutive) {
    const auto& w = *rep.witness;
    throw ValidationError(ErrorCode::LawViolated,
                          "⟨a*x|y⟩ ≠ ⟨x|ay⟩ at (" + std::to_string(w[0]) + ", " + std::to_string(w[1]) + ", " +
                              std::to_string(w[2]) + ")",
                          w);
  }
  return InvolutiveModule{std::move(m), std::move(phi)};
}

std::vector<TwoForm> enumerate_symmetric_forms(const LatticePtr& l, const Caps& caps) {
  std::vector<TwoForm> out;
  for (auto& f : enumerate_two_forms(l, l, Exec::serial, caps))
    if (is_symmetric(f)) out.push_back(f);
  return out;
}

InvolutiveBijection involutive_structure_bijection(const QuantalePtr& q, const TwoForm& phi, const Caps& caps) {
  if (!q->involution) throw ValidationError(ErrorCode::PreconditionViolated, "quantale has no involution");
  InvolutiveBijection b{involution_on_form_quantale(phi, caps), {}, {}, {}, {}, {}};
  const Quantale& T = *b.target.quantale;
  // the hom search is |Q(φ)|^(join-irreducibles of Q)
  if (T.size() > caps.bijection_target)
    throw ValidationError(ErrorCode::CapExceeded, "|Q(φ)| = " + std::to_string(T.size()) +
                                                      " exceeds bijection_target cap " +
                                                      std::to_string(caps.bijection_target));
  const LatticePtr& carrier = phi.left_ptr();
  const int nq = q->size(), nm = carrier->size();

  for (auto& act : enumerate_actions(q, carrier, Side::left, caps)) {
    auto m = make_module_flat(q, carrier, Side::left, act);
    if (involutive_report(*m, phi).involutive) b.structures.push_back(std::move(act));
  }
  for (auto& h : enumerate_join_homs(q->lattice(), T.lattice())) {
    bool ok = true;
    for (Elem a = 0; a < nq && ok; ++a) {
      ok = h[q->star(a)] == T.star(h[a]);
      for (Elem c = 0; c < nq && ok; ++c) ok = h[q->mul(a, c)] == T.mul(h[a], h[c]);
    }
    if (ok) b.homs.push_back(h);
  }

  for (const auto& act : b.structures) {
    Table h(nq);
    bool ok = true;
    for (Elem a = 0; a < nq && ok; ++a) {
      Table f(nm), g(nm);
      for (Elem x = 0; x < nm; ++x) {
        f[x] = act[static_cast<std::size_t>(q->star(a)) * nm + x];
        g[x] = act[static_cast<std::size_t>(a) * nm + x];
      }
      h[a] = b.target.index_of(f, g);
      ok = h[a] >= 0;
    }
    b.to_hom.push_back(ok ? find_index(b.homs, h) : -1);
  }
  for (const auto& h : b.homs) {
    Table act(static_cast<std::size_t>(nq) * nm);
    for (Elem a = 0; a < nq; ++a)
      for (Elem y = 0; y < nm; ++y) act[static_cast<std::size_t>(a) * nm + y] = b.target.pairs[h[a]].second[y];
    b.to_structure.push_back(find_index(b.structures, act));
  }

  auto all_found = [](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int i) { return i >= 0; });
  };
  bool round_trip = all_found(b.to_hom) && all_found(b.to_structure);
  for (std::size_t i = 0; i < b.to_hom.size() && round_trip; ++i)
    round_trip = b.to_structure[b.to_hom[i]] == static_cast<int>(i);
  for (std::size_t j = 0; j < b.to_structure.size() && round_trip; ++j)
    round_trip = b.to_hom[b.to_structure[j]] == static_cast<int>(j);
  b.claims.push_back(claim("each involutive structure gives an involution-preserving homomorphism", true,
                           all_found(b.to_hom)));
  b.claims.push_back(claim("each involution-preserving homomorphism gives an involutive structure", true,
                           all_found(b.to_structure)));
  b.claims.push_back(claim("the two maps are mutually inverse", true, round_trip));
  return b;
}

SelfAdjointOrth self_adjoint_orthogonalizer(const InvolutiveModule& im, Elem x) {
  const Module& m = *im.module;
  const Quantale& q = m.quantale();
  SelfAdjointOrth s;
  s.orth = q.lattice().join_where([&](Elem a) { return im.form.orthogonal(x, m.act(a, x)); });
  s.self_adjoint = q.star(s.orth) == s.orth;
  s.generator = is_generator(m, x);
  return s;
}

SegmentInvolutive upsegment_involutive(const QuantalePtr& q, Elem m, Elem n) {
  const Lattice& Q = q->lattice();
  if (!q->involution) throw ValidationError(ErrorCode::PreconditionViolated, "quantale has no involution");
  if (!Q.leq(q->mul(q->top(), m), m) || q->star(n) != n || !Q.leq(m, n))
    throw ValidationError(ErrorCode::PreconditionViolated, "need m left-sided, n self-adjoint and m ≤ n", {m, n});
  auto reg = regular_module(q, Side::left);
  auto seg = segment_modules(*reg, m);
  const SubLattice& sub = seg->up_sub;
  const int k = sub.lattice->size();
  BoolMatrix orth(k, std::vector<bool>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) orth[i][j] = Q.leq(q->mul(q->star(sub.to_parent[i]), sub.to_parent[j]), n);
  TwoForm form = TwoForm::from_orthogonality(sub.lattice, sub.lattice, orth);
  SegmentInvolutive s{InvolutiveModule{seg->up, form}, sub, {}};
  const bool sym = is_symmetric(form);
  s.claims.push_back(claim("a ⊥ b ⟺ a*b ≤ n is symmetric", true, sym));
  s.claims.push_back(claim("↑m is an involutive module", sym, sym && involutive_report(*seg->up, form).involutive));
  return s;
}

UpsegAnn upseg_ann_involutive(const InvolutiveModule& im, Elem x) {
  const Module& m = *im.module;
  const QuantalePtr& q = m.over;
  if (!is_generator(m, x)) throw ValidationError(ErrorCode::NotAGenerator, std::to_string(x) + " is not a generator", {x});
  const Elem ann = annihilator(m, x);
  const SelfAdjointOrth o = self_adjoint_orthogonalizer(im, x);
  if (!q->lattice().leq(ann, o.orth))
    throw ValidationError(ErrorCode::LawViolated, "ann(x) is not below orth(x, x)", {ann, o.orth});
  if (!o.self_adjoint) throw ValidationError(ErrorCode::LawViolated, "orth(x, x) is not self-adjoint", {o.orth});
  UpsegAnn u{ann, o.orth, upsegment_involutive(q, ann, o.orth), {}, false, {}};
  const SubLattice& sub = u.segment.sub;
  u.hom.resize(sub.lattice->size());
  for (int i = 0; i < sub.lattice->size(); ++i) u.hom[i] = m.act(sub.to_parent[i], x);
  u.faithful = classify_form(u.segment.module.form).faithful_left;
  const Module& seg = *u.segment.module.module;
  const bool hom = is_module_hom(u.hom, seg, m);
  const bool orthomorphism = is_orthomorphism(u.hom, u.hom, u.segment.module.form, im.form);
  const bool onto = is_surjective(u.hom, m.size());
  u.claims.push_back(claim("a ↦ ax is a module homomorphism", true, hom));
  u.claims.push_back(claim("a ⊥_x b ⟺ ax ⊥ bx", true, orthomorphism));
  u.claims.push_back(claim("a ↦ ax is surjective", true, onto));
  u.claims.push_back(claim("faithful segment form ⟹ a ↦ ax is an isomorphism", u.faithful,
                           onto && is_injective(u.hom)));
  return u;
}

SymmetrizedPhi symmetrized_phi(const Quantale& q, const Caps& caps) {
  if (!q.involution) throw ValidationError(ErrorCode::PreconditionViolated, "quantale has no involution");
  const PhiOfQuantale phi = phi_of_quantale(q);
  const SubLattice& ls = phi.ls;
  const SubLattice& rs = phi.rs;
  const int nl = ls.lattice->size(), nr = rs.lattice->size();
  if (nl != nr) throw ValidationError(ErrorCode::LawViolated, "ls(Q) and rs(Q) differ in size");
  Table l_to_r(nl), r_to_l(nr);
  for (int i = 0; i < nl; ++i) l_to_r[i] = rs.from_parent[q.star(ls.to_parent[i])];
  for (int j = 0; j < nr; ++j) r_to_l[j] = ls.from_parent[q.star(rs.to_parent[j])];
  if (std::any_of(l_to_r.begin(), l_to_r.end(), [](Elem v) { return v < 0; }) ||
      std::any_of(r_to_l.begin(), r_to_l.end(), [](Elem v) { return v < 0; }))
    throw ValidationError(ErrorCode::LawViolated, "involution does not exchange ls(Q) and rs(Q)");
  BoolMatrix orth(nl, std::vector<bool>(nl));
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nl; ++j) orth[i][j] = phi.form.orthogonal(i, l_to_r[j]);
  SymmetrizedPhi s{TwoForm::from_orthogonality(ls.lattice, ls.lattice, orth), {}};
  const bool sym = is_symmetric(s.form);
  s.claims.push_back(claim("x ⊥ x' ⟺ x ⊙ x'* = 0 is symmetric", true, sym));
  if (!sym) return s;

  const FormQuantale fphi = form_quantale(phi.form, caps);
  const FormQuantale fsym = involution_on_form_quantale(s.form, caps);
  const Table inv = phi_quantale_involution(q, phi, fphi);
  Table theta(fphi.pairs.size());
  bool bijective = fphi.pairs.size() == fsym.pairs.size();
  for (std::size_t k = 0; k < fphi.pairs.size() && bijective; ++k) {
    const Table& g = fphi.pairs[k].second;
    Table g2(nl);
    for (int x = 0; x < nl; ++x) g2[x] = r_to_l[g[l_to_r[x]]];
    theta[k] = fsym.index_of(fphi.pairs[k].first, g2);
    bijective = theta[k] >= 0;
  }
  bijective = bijective && is_injective(theta);
  s.claims.push_back(claim("(f, g) ↦ (f, * g *) is a bijection Q(Φ(Q)) -> Q(ψ)", true, bijective));
  bool matches = bijective;
  for (std::size_t k = 0; k < theta.size() && matches; ++k)
    matches = theta[inv[k]] == fsym.quantale->star(theta[k]);
  s.claims.push_back(claim("transported swap is the involution (f, g)* = (g', f')", true, matches));
  bool hom = bijective;
  for (std::size_t a = 0; a < theta.size() && hom; ++a)
    for (std::size_t b = 0; b < theta.size() && hom; ++b)
      hom = theta[fphi.quantale->mul(a, b)] == fsym.quantale->mul(theta[a], theta[b]);
  s.claims.push_back(claim("(f, g) ↦ (f, * g *) is multiplicative", true, hom));
  return s;
}

Claims endomorphism_involution_claims(const TwoForm& phi, const Caps& caps) {
  require_symmetric(phi);
  const FormFlags flags = classify_form(phi);
  Claims cs;
  if (!flags.faithful_left) {
    cs.push_back(claim("φ faithful", false, true));
    return cs;
  }
  const Lattice& L = phi.left();
  const FormQuantale fq = involution_on_form_quantale(phi, caps);
  Caps inner = caps;
  inner.endo_enum = std::max(caps.endo_enum, L.size());
  const auto endos = enumerate_join_endos(phi.left_ptr(), inner);
  std::vector<Table> firsts;
  for (const auto& p : fq.pairs) firsts.push_back(p.first);
  std::vector<Table> all;
  for (const auto& e : endos) all.push_back(e.table);
  std::sort(firsts.begin(), firsts.end());
  std::sort(all.begin(), all.end());
  cs.push_back(claim("(f, g) ↦ f is a bijection onto the join-endomorphisms", true,
                     firsts == all && std::adjacent_find(firsts.begin(), firsts.end()) == firsts.end()));
  const OrthImages o = orth_images(phi);
  bool formula = true;
  for (std::size_t k = 0; k < fq.pairs.size(); ++k) {
    const Table& f = fq.pairs[k].first;
    const Table fstar_adj = right_adjoint(f, L, L);
    Table fstar(L.size());
    for (Elem y = 0; y < L.size(); ++y) fstar[y] = o.right[fstar_adj[o.right[y]]];
    formula = formula && fq.pairs[fq.quantale->star(static_cast<Elem>(k))].first == fstar;
  }
  cs.push_back(claim("f* = y ↦ (f_*(y^⊥))^⊥", true, formula));
  return cs;
}

}  // namespace qf
