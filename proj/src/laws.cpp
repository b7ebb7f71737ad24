#include "qf/laws.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "qf/enumerate.hpp"
#include "qf/error.hpp"
#include "qf/generators.hpp"

namespace qf {

std::string to_string(LawStatus s) {
  switch (s) {
    case LawStatus::pass: return "pass";
    case LawStatus::fail: return "fail";
    case LawStatus::skipped: return "skipped";
  }
  return "?";
}

namespace {

// ---- outcomes

LawOutcome pass() { return {}; }
LawOutcome not_applicable() { return {LawStatus::pass, false, nullptr}; }

LawOutcome fail(const std::string& reason, std::vector<int> elements = {}) {
  json w{{"reason", reason}};
  if (!elements.empty()) w["elements"] = elements;
  return {LawStatus::fail, true, w};
}

LawOutcome from_claims(const Claims& cs) {
  if (all_hold(cs)) return pass();
  json names = json::array();
  for (const auto& c : cs)
    if (c.applicable && !c.holds) names.push_back(c.name);
  return {LawStatus::fail, true, json{{"reason", "claims failed"}, {"claims", names}}};
}

// Accumulates the first failure of a law over many sub-cases.
class Verdict {
 public:
  void require(bool ok, const std::string& reason, std::vector<int> elements = {}) {
    if (!ok && !failed_) failed_ = fail(reason, std::move(elements));
  }
  void claims(const Claims& cs, std::vector<int> elements = {}) {
    if (failed_ || all_hold(cs)) return;
    auto o = from_claims(cs);
    if (!elements.empty()) o.witness["elements"] = elements;
    failed_ = o;
  }
  bool failed() const { return failed_.has_value(); }
  LawOutcome outcome() const { return failed_ ? *failed_ : pass(); }

 private:
  std::optional<LawOutcome> failed_;
};

template <class T>
T as(const json& doc) {
  return std::get<T>(from_json(doc));
}

// ---- shared constructions

QuantalePtr meet_quantale(const LatticePtr& l) {
  std::vector<Table> m(l->size(), Table(l->size()));
  for (Elem a = 0; a < l->size(); ++a)
    for (Elem b = 0; b < l->size(); ++b) m[a][b] = l->meet(a, b);
  return make_quantale(l, m, l->top());
}

QuantalePtr identity_involution(const QuantalePtr& q) { return with_structure(*q, q->unit, identity_table(q->size())); }

// 2, the 3-chain under meets, P(Z/2) with inverses.
std::vector<QuantalePtr> module_quantales() {
  return {identity_involution(meet_quantale(chain(2))), identity_involution(meet_quantale(chain(3))),
          powerset_monoid_quantale({{0, 1}, {1, 0}}, true)};
}

TwoForm c3_self_duality() {
  BoolMatrix orth(3, std::vector<bool>(3));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) orth[x][y] = x + y <= 2;
  return TwoForm::from_orthogonality(chain(3), chain(3), orth);
}

std::vector<QuantalePtr> involutive_quantales(const Caps& caps) {
  auto out = module_quantales();
  out.push_back(with_structure(*meet_quantale(diamond()), 3, Table{0, 2, 1, 3}));
  out.push_back(powerset_monoid_quantale({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, true, caps));
  out.push_back(involution_on_form_quantale(c3_self_duality(), caps).quantale);
  return out;
}

std::vector<LatticePtr> lattices_up_to(int n, const Caps& caps) {
  std::vector<LatticePtr> out;
  for (int k = 1; k <= n; ++k)
    for (auto& l : enumerate_sup_lattices(k, caps)) out.push_back(l);
  return out;
}

std::vector<TwoForm> forms_up_to(const Caps& caps) {
  std::vector<TwoForm> out;
  const auto ls = lattices_up_to(caps.carrier, caps);
  for (auto& l : ls)
    for (auto& r : ls)
      for (auto& f : enumerate_two_forms(l, r, Exec::serial, caps)) out.push_back(f);
  return out;
}

std::vector<ModulePtr> modules_over(const QuantalePtr& q, Side side, const Caps& caps) {
  std::vector<ModulePtr> out;
  for (auto& l : lattices_up_to(caps.carrier, caps))
    for (auto& m : enumerate_modules(q, l, side, caps)) out.push_back(m);
  return out;
}

std::string numbered(const std::string& prefix, std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%05zu", i);
  return prefix + "-" + buf;
}

std::vector<Instance> numbered_docs(const std::string& prefix, const std::vector<json>& docs) {
  std::vector<Instance> out;
  for (std::size_t i = 0; i < docs.size(); ++i) out.push_back({numbered(prefix, i), docs[i]});
  return out;
}

template <class T>
json doc_of(const std::shared_ptr<const T>& p) {
  return to_json(*p);
}
template <class T>
json doc_of(const T& x) {
  return to_json(x);
}

template <class Range>
std::vector<json> docs_of(const Range& xs) {
  std::vector<json> out;
  for (const auto& x : xs) out.push_back(doc_of(x));
  return out;
}

// ---- lattices

LawOutcome background_adjoints(const json& doc, const Caps&) {
  auto lp = lattice_from_json(doc);
  const Lattice& l = *lp;
  Verdict v;
  for (auto& f : enumerate_join_homs(l, l)) {
    const Table g = right_adjoint(f, l, l);
    v.require(is_meet_preserving(g, l, l), "right adjoint preserves meets", f);
    for (Elem x = 0; x < l.size(); ++x)
      for (Elem y = 0; y < l.size(); ++y) v.require(l.leq(f[x], y) == l.leq(x, g[y]), "f(x) ≤ y ⟺ x ≤ f_*(y)", {x, y});
    v.require(is_closure_operator(compose(g, f), l), "f_* ∘ f is a closure operator", f);
    if (v.failed()) break;
  }
  return v.outcome();
}

LawOutcome background_closure_quotients(const json& doc, const Caps&) {
  auto lp = lattice_from_json(doc);
  const Lattice& l = *lp;
  Verdict v;
  for (auto& j : enumerate_closure_operators(l)) {
    auto cq = closure_quotient(check_closure_operator(j, lp));
    const Lattice& s = *cq.fixed.lattice;
    v.require(is_surjective(cq.projection.table, s.size()), "x ↦ j(x) is onto the fixed points", j);
    v.require(is_join_preserving(cq.projection.table, l, s), "x ↦ j(x) preserves joins", j);
    for (Elem a = 0; a < s.size(); ++a)
      for (Elem b = 0; b < s.size(); ++b)
        v.require(cq.fixed.to_parent[s.join(a, b)] == j[l.join(cq.fixed.to_parent[a], cq.fixed.to_parent[b])],
                  "joins of fixed points are j of joins", {a, b});
    if (v.failed()) break;
  }
  // every join-endo is the quotient by f_* ∘ f followed by an embedding
  for (auto& f : enumerate_join_homs(l, l)) {
    const Table k = compose(right_adjoint(f, l, l), f);
    auto cq = closure_quotient(check_closure_operator(k, lp));
    v.require(static_cast<int>(std::set<Elem>(f.begin(), f.end()).size()) == cq.fixed.lattice->size(),
              "the image of f has the size of its kernel quotient", f);
  }
  return v.outcome();
}

LawOutcome endo_quantale_law(const json& doc, const Caps& caps) {
  auto s = lattice_from_json(doc);
  auto eq = endo_quantale(s, caps);
  auto sided = sided_elements(*eq.quantale);
  std::set<Table> ls, rs, consts, anns;
  for (Elem a : sided.left) ls.insert(eq.maps[a]);
  for (Elem a : sided.right) rs.insert(eq.maps[a]);
  for (Elem x = 0; x < s->size(); ++x) {
    consts.insert(constant_map(*s, x));
    anns.insert(annihilator_map(*s, x));
  }
  Verdict v;
  v.require(ls == consts, "left-sided elements are the constant maps");
  v.require(rs == anns, "right-sided elements are the annihilator maps");
  v.require(sided.factor, "Q(S) is a factor");
  v.require(order_isomorphic(*left_sided_lattice(*eq.quantale).lattice, *s), "ls(Q(S)) ≅ S");
  v.require(order_isomorphic(*right_sided_lattice(*eq.quantale).lattice, *dual(*s)), "rs(Q(S)) ≅ S^op");
  return v.outcome();
}

// ---- forms

LawOutcome forms_vs_galois(const json& doc, const Caps&) {
  auto phi = form_from_json(doc);
  auto rep = galois_report(phi);
  Verdict v;
  v.require(rep.galois, "orthogonal images form a Galois connection");
  v.require(rep.round_trip, "the Galois connection determines the form");
  for (auto& g : rep.disagreeing_groups()) v.require(false, "conditions disagree: " + g);
  auto fl = classify_form(phi);
  v.require(!fl.faithful_left || fl.dense_left, "faithful on the left ⟹ dense on the left");
  v.require(!fl.faithful_right || fl.dense_right, "faithful on the right ⟹ dense on the right");
  return v.outcome();
}

LawOutcome simple_orthoquotient(const json& doc, const Caps&) {
  auto phi = form_from_json(doc);
  auto q = orthogonal_quotient(phi);
  auto fl = classify_form(q.form);
  Verdict v;
  v.require(fl.faithful_left && fl.faithful_right, "the orthogonal quotient is faithful");
  v.require(q.projection.quotient, "the projection is an orthoquotient");
  v.claims(q.projection.claims);
  v.require(find_form_isomorphism(orthogonal_quotient(q.form).form, q.form).has_value(),
            "the orthogonal quotient of a faithful form is itself");
  return v.outcome();
}

LawOutcome sided_isos(const json& doc, const Caps& caps) {
  auto phi = form_from_json(doc);
  auto fl = classify_form(phi);
  if (!fl.dense_left || !fl.dense_right) return not_applicable();
  auto fq = form_quantale(phi, caps);
  const Quantale& q = *fq.quantale;
  Verdict v;
  v.require(order_isomorphic(*left_sided_lattice(q).lattice, phi.left()), "ls(Q(φ)) ≅ L");
  v.require(order_isomorphic(*right_sided_lattice(q).lattice, phi.right()), "rs(Q(φ)) ≅ R");
  auto sided = sided_elements(q);
  v.require(sided.factor, "Q(φ) is a factor");
  auto o = orth_images(phi);
  std::set<std::pair<Table, Table>> ls, rs, expect_l, expect_r;
  for (Elem a : sided.left) ls.insert(fq.pairs[a]);
  for (Elem a : sided.right) rs.insert(fq.pairs[a]);
  for (Elem l = 0; l < phi.left().size(); ++l)
    expect_l.insert({constant_map(phi.left(), l), annihilator_map(phi.right(), o.right[l])});
  for (Elem r = 0; r < phi.right().size(); ++r)
    expect_r.insert({annihilator_map(phi.left(), o.left[r]), constant_map(phi.right(), r)});
  v.require(ls == expect_l, "left-sided elements are (c_l, a_{l^⊥})");
  v.require(rs == expect_r, "right-sided elements are (a_{^⊥r}, c_r)");
  return v.outcome();
}

LawOutcome phi_of_q_of_phi(const json& doc, const Caps& caps) {
  auto phi = form_from_json(doc);
  auto fl = classify_form(phi);
  if (!fl.dense_left || !fl.dense_right) return not_applicable();
  auto fq = form_quantale(phi, caps);
  if (!find_form_isomorphism(phi_of_quantale(*fq.quantale).form, phi)) return fail("Φ(Q(φ)) is not isomorphic to φ");
  return pass();
}

LawOutcome sym_vs_inv_form(const json& doc, const Caps& caps) {
  auto phi = form_from_json(doc);
  if (!(phi.left() == phi.right()) || !is_symmetric(phi)) return not_applicable();
  auto fq = involution_on_form_quantale(phi, caps);
  const Quantale& q = *fq.quantale;
  Verdict v;
  for (Elem a = 0; a < q.size(); ++a) {
    const auto& [f, g] = fq.pairs[a];
    v.require(fq.pairs[q.star(a)] == std::pair{g, f}, "(f, g)* = (g, f)", {a});
    v.require(q.star(q.star(a)) == a, "a** = a", {a});
    for (Elem b = 0; b < q.size(); ++b) {
      v.require(q.star(q.mul(a, b)) == q.mul(q.star(b), q.star(a)), "(ab)* = b*a*", {a, b});
      v.require(q.star(q.lattice().join(a, b)) == q.lattice().join(q.star(a), q.star(b)), "involution preserves joins",
                {a, b});
    }
  }
  return v.outcome();
}

LawOutcome endomorphisms_example(const json& doc, const Caps& caps) {
  auto phi = form_from_json(doc);
  auto fl = classify_form(phi);
  if (!fl.faithful_left || !fl.faithful_right) return not_applicable();
  Verdict v;
  auto fq = form_quantale(phi, caps);
  auto eq = endo_quantale(phi.left_ptr(), caps);
  v.require(find_quantale_isomorphism(*fq.quantale, *eq.quantale).has_value(), "Q(φ) ≅ Q(L)");
  if (phi.left() == phi.right() && is_symmetric(phi)) v.claims(endomorphism_involution_claims(phi, caps));
  return v.outcome();
}

// ---- pairs of forms

using Maps = std::vector<std::pair<Table, Table>>;

Maps continuous_maps(const TwoForm& a, const TwoForm& b) {
  Maps out;
  auto gs = enumerate_join_homs(b.right(), a.right());
  for (auto& f : enumerate_join_homs(a.left(), b.left()))
    for (auto& g : gs)
      if (is_continuous(f, g, a, b)) out.emplace_back(f, g);
  return out;
}

LawOutcome continuities(const json& doc, const Caps&) {
  auto p = as<FormPair>(doc);
  Verdict v;
  auto gs = enumerate_join_homs(p.target.right(), p.source.right());
  for (auto& f : enumerate_join_homs(p.source.left(), p.target.left()))
    for (auto& g : gs) {
      auto rep = continuity_report(f, g, p.source, p.target);
      for (int i = 0; i < 4; ++i) v.require(rep.conditions[i] == rep.continuous, "condition disagrees with continuity", {i});
      if (rep.continuous) v.require(closure_continuous(f, p.source, p.target), "continuous ⟹ f preserves closures");
      if (v.failed()) return v.outcome();
    }
  return v.outcome();
}

LawOutcome unique_det(const json& doc, const Caps&) {
  auto p = as<FormPair>(doc);
  const auto& a = p.source;
  const auto& b = p.target;
  if (!classify_form(a).faithful_right || !classify_form(b).faithful_right) return not_applicable();
  Verdict v;
  auto gs = enumerate_join_homs(b.right(), a.right());
  for (auto& f : enumerate_join_homs(a.left(), b.left())) {
    std::vector<Table> found;
    for (auto& g : gs)
      if (is_continuous(f, g, a, b)) found.push_back(g);
    auto ext = extend_to_continuous(f, a, b);
    v.require(found.size() <= 1, "g is unique", f);
    v.require(ext.has_value() == !found.empty(), "the formula finds g exactly when some g exists", f);
    v.require(ext.has_value() == closure_continuous(f, a, b), "g exists ⟺ f(^⊥(x^⊥)) ≤ ^⊥(f(x)^⊥)", f);
    if (ext && !found.empty()) v.require(*ext == found.front(), "g(y) = (f_*(^⊥y))^⊥", f);
    if (classify_form(a).faithful_left) v.require(ext.has_value(), "faithful source ⟹ g exists", f);
  }
  return v.outcome();
}

LawOutcome continuous_composition(const json& doc, const Caps&) {
  auto p = as<FormPair>(doc);
  const auto& a = p.source;
  const auto& b = p.target;
  const std::pair<Table, Table> ida{identity_table(a.left().size()), identity_table(a.right().size())};
  const std::pair<Table, Table> idb{identity_table(b.left().size()), identity_table(b.right().size())};
  Verdict v;
  v.require(is_continuous(ida.first, ida.second, a, a), "identities are continuous");
  const auto ab = continuous_maps(a, b);
  const auto ba = continuous_maps(b, a);
  for (auto& m : ab) {
    v.require(compose_continuous(ida, m) == m && compose_continuous(m, idb) == m, "identities are units", m.first);
    for (auto& n : ba) {
      auto c = compose_continuous(m, n);
      v.require(is_continuous(c.first, c.second, a, a), "composites are continuous", c.first);
      v.require(compose_continuous(compose_continuous(m, n), m) == compose_continuous(m, compose_continuous(n, m)),
                "composition is associative", c.first);
    }
    if (v.failed()) break;
  }
  return v.outcome();
}

// Orthomorphism consequences, grouped by the result they come from.
LawOutcome orthomorphism_claims(const json& doc, const std::set<std::string>& names) {
  auto p = as<FormPair>(doc);
  const auto& a = p.source;
  const auto& b = p.target;
  auto gs = enumerate_join_homs(a.right(), b.right());
  Verdict v;
  for (auto& f : enumerate_join_homs(a.left(), b.left()))
    for (auto& g : gs) {
      if (!is_orthomorphism(f, g, a, b)) continue;
      Claims picked;
      for (auto& c : check_orthomorphism(f, g, a, b).claims)
        if (names.count(c.name)) picked.push_back(c);
      auto fg = f;
      fg.insert(fg.end(), g.begin(), g.end());
      v.claims(picked, fg);
      if (v.failed()) return v.outcome();
    }
  return v.outcome();
}

LawOutcome pseudo(const json& doc, const Caps&) {
  return orthomorphism_claims(doc, {"g surjective ⟹ g(x^⊥) = f(x)^⊥", "f surjective ⟹ f(^⊥y) = ^⊥g(y)"});
}

LawOutcome surj_vs_embed(const json& doc, const Caps&) {
  return orthomorphism_claims(doc, {"g surjective, φ faithful left ⟹ f order embedding",
                                    "f surjective, φ faithful right ⟹ g order embedding",
                                    "quotient of a faithful form ⟹ f, g order isomorphisms"});
}

LawOutcome orthomorphism_density(const json& doc, const Caps&) {
  return orthomorphism_claims(doc, {"g surjective, f strong, φ dense right ⟹ φ' dense right",
                                    "g surjective dense, f strong ⟹ (φ dense right ⟺ φ' dense right)",
                                    "f surjective, g strong, φ dense left ⟹ φ' dense left",
                                    "f surjective dense, g strong ⟹ (φ dense left ⟺ φ' dense left)",
                                    "g strong, φ dense left ⟹ f dense", "f strong, φ dense right ⟹ g dense"});
}

// ---- quantales

LawOutcome background_sided(const json& doc, const Caps&) {
  auto q = quantale_from_json(doc);
  auto sided = sided_elements(*q);
  Verdict v;
  // both throw unless the sided elements are closed under joins
  left_sided_lattice(*q);
  right_sided_lattice(*q);
  const std::set<Elem> l(sided.left.begin(), sided.left.end()), r(sided.right.begin(), sided.right.end());
  for (Elem a = 0; a < q->size(); ++a) {
    v.require(std::count(sided.two_sided.begin(), sided.two_sided.end(), a) == (l.count(a) && r.count(a)),
              "two-sided = left- and right-sided", {a});
    if (l.count(a)) v.require(l.count(q->mul(q->top(), a)) > 0, "1a is left-sided for left-sided a", {a});
  }
  v.require(l.count(q->bottom()) && l.count(q->top()) && r.count(q->bottom()) && r.count(q->top()),
            "0 and 1 are sided");
  return v.outcome();
}

LawOutcome comparison_hom_law(const json& doc, const Caps& caps) {
  auto q = quantale_from_json(doc);
  auto c = comparison_hom(*q, caps);
  Verdict v;
  v.require(c.hom, "κ is a quantale homomorphism");
  v.require(c.unital, "κ preserves the unit");
  v.require(c.involutive, "κ preserves the involution");
  v.require(c.injective == c.faithful, "κ injective ⟺ Q acts faithfully on sided elements");
  return v.outcome();
}

LawOutcome sym_vs_inv_quantale(const json& doc, const Caps& caps) {
  auto q = quantale_from_json(doc);
  if (!q->involution) return not_applicable();
  return from_claims(symmetrized_phi(*q, caps).claims);
}

LawOutcome nucleus_quotients(const json& doc, const Caps&) {
  auto q = quantale_from_json(doc);
  Verdict v;
  for (auto& j : enumerate_quantic_nuclei(*q)) v.claims(nucleus_quotient(*q, j).claims, j);
  return v.outcome();
}

LawOutcome phi_n_law(const json& doc, const Caps&) {
  auto q = quantale_from_json(doc);
  Verdict v;
  for (Elem n = 0; n < q->size(); ++n) {
    auto bf = phi_n_form(q, n);
    auto rep = balance_report(bf);
    v.require(rep.balanced, "φ_n is balanced", rep.witness.value_or(std::vector<int>{n}));
    for (int i = 0; i < 5; ++i) v.require(rep.conditions[i], "balance condition fails on φ_n", {n, i});
    if (q->unit) {
      auto o = orthogonalizer_of(bf, *q->unit, *q->unit);
      v.require(o.value == n, "orth(e, e) = n", {n, o.value});
      v.require(o.via_right_orth == n && o.via_left_orth == n, "residual forms of orth(e, e) agree", {n});
    }
  }
  return v.outcome();
}

LawOutcome dense_forms_law(const json& doc, const Caps&) {
  auto q = quantale_from_json(doc);
  const auto sided = sided_elements(*q);
  Verdict v;
  for (Elem n = 0; n < q->size(); ++n)
    for (Elem r : sided.right)
      for (Elem l : sided.left)
        if (q->lattice().leq(q->lattice().join(r, l), n)) v.claims(upsegment_restricted_form(q, n, r, l).claims, {n, r, l});
  return v.outcome();
}

LawOutcome upsegment_involutive_law(const json& doc, const Caps&) {
  auto q = quantale_from_json(doc);
  if (!q->involution) return not_applicable();
  const auto sided = sided_elements(*q);
  Verdict v;
  for (Elem m : sided.left)
    for (Elem n = 0; n < q->size(); ++n)
      if (q->star(n) == n && q->lattice().leq(m, n)) v.claims(upsegment_involutive(q, m, n).claims, {m, n});
  return v.outcome();
}

// ---- modules

LawOutcome up_down_segments(const json& doc, const Caps&) {
  auto m = module_from_json(doc);
  Verdict v;
  for (Elem x = 0; x < m->size(); ++x) {
    auto c = segment_conditions(*m, x);
    v.require(c.nucleus == c.invariant, "(−) ∨ m is a nucleus ⟺ m invariant", {x});
    v.require(c.submodule == c.invariant, "↓m is a submodule ⟺ m invariant", {x});
    auto seg = segment_modules(*m, x);
    v.require(seg.has_value() == c.invariant, "segments exist exactly for invariants", {x});
    if (seg) v.require(is_module_hom(seg->projection, *m, *seg->up), "M -> ↑m is a module homomorphism", {x});
  }
  return v.outcome();
}

LawOutcome inv_vs_left_sided(const json& doc, const Caps&) {
  auto m = module_from_json(doc);
  Verdict v;
  for (Elem x = 0; x < m->size(); ++x) v.claims(generator_analysis(*m, x).claims, {x});
  return v.outcome();
}

LawOutcome dense_quotient(const json& doc, const Caps&) {
  auto m = module_from_json(doc);
  Verdict v;
  for (Elem x : generators(*m)) v.claims(dense_quotient_factorization(*m, x).claims, {x});
  return v.outcome();
}

LawOutcome principal_modules(const json& doc, const Caps&) {
  auto m = module_from_json(doc);
  Verdict v;
  const bool principal = first_generator(*m).has_value();
  if (m->unital) {
    bool onto = false;
    for (auto& h : enumerate_module_homs(*regular_module(m->over, m->side), *m)) onto = onto || is_surjective(h, m->size());
    v.require(principal == onto, "principal ⟺ a quotient of Q");
  }
  if (principal)
    for (auto& k : enumerate_module_nuclei(*m))
      v.require(first_generator(*module_quotient(*m, k).module).has_value(), "quotients of principal modules are principal", k);
  return v.outcome();
}

LawOutcome irreducible(const json& doc, const Caps&) {
  auto m = module_from_json(doc);
  const bool irr = is_irreducible(*m);
  Verdict v;
  v.require(!is_everywhere_principal(*m) || irr, "everywhere principal ⟹ irreducible");
  v.require(!has_generator_with_maximal_annihilator(*m) || irr, "generator with maximal annihilator ⟹ irreducible");
  return v.outcome();
}

// ---- forms over Q

LawOutcome equivalent_forms_over_q(const json& doc, const Caps&) {
  auto bf = as<BalancedForm>(doc);
  auto rep = balance_report(bf);
  Verdict v;
  for (int i = 0; i < 4; ++i) v.require(rep.conditions[i] == rep.balanced, "condition disagrees with balance", {i});
  return v.outcome();
}

LawOutcome simple_q_quotient(const json& doc, const Caps&) {
  auto bf = as<BalancedForm>(doc);
  if (!balance_report(bf).balanced) return not_applicable();
  Verdict v;
  auto bq = balanced_orthogonal_quotient(bf);
  v.claims(bq.claims);
  for (auto& kl : enumerate_module_nuclei(*bf.left))
    for (auto& kr : enumerate_module_nuclei(*bf.right)) {
      auto pushed = pushforward(bf, module_quotient(*bf.left, kl), module_quotient(*bf.right, kr));
      if (pushed) v.require(balance_report(*pushed).balanced, "forms pushed to module quotients stay balanced", kl);
    }
  return v.outcome();
}

LawOutcome principal_forms(const json& doc, const Caps&) {
  auto bf = as<BalancedForm>(doc);
  auto xs = generators(*bf.left), ys = generators(*bf.right);
  if (xs.empty() || ys.empty() || !balance_report(bf).balanced) return not_applicable();
  Verdict v;
  for (Elem x : xs)
    for (Elem y : ys) {
      auto o = orthogonalizer(bf, x, y);
      v.require(o.value == o.via_right_orth && o.value == o.via_left_orth, "orth(x, y) = (x^⊥)/y = x\\(^⊥y)", {x, y});
      v.claims(principal_orthoquotient(bf, x, y).claims, {x, y});
    }
  auto fl = classify_form(bf.form);
  if (fl.faithful_left && fl.faithful_right) {
    const Elem n = orthogonalizer(bf, xs.front(), ys.front()).value;
    auto oq = orthogonal_quotient(phi_n_form(bf.left->over, n).form);
    v.require(find_form_isomorphism(bf.form, oq.form).has_value(), "faithful ⟹ φ is the orthogonal quotient of φ_n",
              {n});
  }
  return v.outcome();
}

LawOutcome principal_density_law(const json& doc, const Caps&) {
  auto bf = as<BalancedForm>(doc);
  auto xs = generators(*bf.left), ys = generators(*bf.right);
  if (xs.empty() || ys.empty() || !balance_report(bf).balanced) return not_applicable();
  Verdict v;
  for (Elem x : xs)
    for (Elem y : ys) v.claims(principal_density(bf, x, y), {x, y});
  return v.outcome();
}

// ---- involutive

LawOutcome involutive_bijection(const json& doc, const Caps& caps) {
  auto c = as<InvolutiveContext>(doc);
  auto b = involutive_structure_bijection(c.quantale, c.form, caps);
  Verdict v;
  v.claims(b.claims);
  v.require(b.structures.size() == b.homs.size(), "as many structures as homomorphisms");
  return v.outcome();
}

// The defining law first: a document claiming to be an involutive module
// that is not one fails here, with (a, x, y).
std::variant<InvolutiveModule, LawOutcome> involutive_module(const json& doc) {
  auto c = as<InvolutiveCandidate>(doc);
  auto rep = involutive_report(*c.module, c.form);
  if (!rep.involutive) return fail("⟨a*x|y⟩ ≠ ⟨x|ay⟩", rep.witness.value_or(std::vector<int>{}));
  return InvolutiveModule{c.module, c.form};
}

LawOutcome involutive_residuation(const json& doc, const Caps&) {
  auto c = as<InvolutiveCandidate>(doc);
  auto rep = involutive_report(*c.module, c.form);
  if (!rep.involutive) return fail("⟨a*x|y⟩ ≠ ⟨x|ay⟩", rep.witness.value_or(std::vector<int>{}));
  Verdict v;
  v.require(rep.residuation, "(a*x)^⊥ = a\\(x^⊥)");
  if (rep.faithful_formula) v.require(*rep.faithful_formula, "faithful ⟹ a*x = (a\\(x^⊥))^⊥");
  return v.outcome();
}

LawOutcome orth_self_adjoint(const json& doc, const Caps&) {
  auto im = involutive_module(doc);
  if (auto* o = std::get_if<LawOutcome>(&im)) return *o;
  const auto& m = std::get<InvolutiveModule>(im);
  Verdict v;
  for (Elem x = 0; x < m.module->size(); ++x) {
    auto s = self_adjoint_orthogonalizer(m, x);
    if (!s.generator) continue;
    v.require(s.self_adjoint, "orth(x, x)* = orth(x, x)", {x});
    v.require(m.module->quantale().lattice().leq(annihilator(*m.module, x), s.orth), "ann(x) ≤ orth(x, x)", {x});
  }
  return v.outcome();
}

LawOutcome upseg_ann(const json& doc, const Caps&) {
  auto im = involutive_module(doc);
  if (auto* o = std::get_if<LawOutcome>(&im)) return *o;
  const auto& m = std::get<InvolutiveModule>(im);
  Verdict v;
  for (Elem x : generators(*m.module)) {
    auto u = upseg_ann_involutive(m, x);
    v.claims(u.claims, {x});
    v.claims(u.segment.claims, {x});
  }
  return v.outcome();
}

// ---- residuation


LawOutcome residuation(const json& doc, const Caps&) {
  Verdict v;
  const std::string kind = kind_of(doc);
  if (kind == "quantale") {
    v.claims(residuation_claims(multiplication(*quantale_from_json(doc))));
  } else if (kind == "module") {
    auto m = module_from_json(doc);
    const int nq = m->quantale().size(), nm = m->size();
    Table t(static_cast<std::size_t>(nq) * nm);
    for (Elem a = 0; a < nq; ++a)
      for (Elem x = 0; x < nm; ++x) {
        if (m->side == Side::left) t[a * nm + x] = m->act(a, x);
        else t[x * nq + a] = m->act(a, x);
      }
    auto b = m->side == Side::left ? Bimorphism(m->over->carrier, m->carrier, m->carrier, t)
                                   : Bimorphism(m->carrier, m->over->carrier, m->carrier, t);
    v.claims(residuation_claims(b));
    for (Elem x = 0; x < nm; ++x)
      for (Elem y = 0; y < nm; ++y)
        for (Elem a = 0; a < nq; ++a)
          v.require(m->lattice().leq(m->act(a, x), y) == m->quantale().lattice().leq(a, residual(*m, y, x)),
                    "a·x ≤ y ⟺ a ≤ residual(y, x)", {a, x, y});
  } else {
    auto phi = form_from_json(doc);
    Table t(static_cast<std::size_t>(phi.left().size()) * phi.right().size());
    for (Elem x = 0; x < phi.left().size(); ++x)
      for (Elem y = 0; y < phi.right().size(); ++y) t[x * phi.right().size() + y] = phi.value(x, y) ? 1 : 0;
    v.claims(residuation_claims(Bimorphism(phi.left_ptr(), phi.right_ptr(), chain(2), t)));
  }
  return v.outcome();
}

// ---- registry

std::vector<Law> build_registry() {
  std::vector<Law> r{
      {"background-adjoints", "Every join-endomorphism f has a meet-preserving right adjoint, f(x) ≤ y ⟺ x ≤ f_*(y), and f_*∘f is a closure operator.",
       {"lattice"}, {"lattices"}, background_adjoints},
      {"background-closure-quotients", "For a closure operator j the fixed points form a sup-lattice with joins j(⋁X), and x ↦ j(x) is a surjective join-homomorphism onto it.",
       {"lattice"}, {"lattices"}, background_closure_quotients},
      {"background-residuation", "For a bimorphism *: y ≤ x\\z ⟺ x*y ≤ z ⟺ x ≤ z/y, and the derived identities from (z/y)*y ≤ z through x*(x\\(x*y)) = x*y.",
       {"quantale", "module", "form"}, {"quantales", "modules", "forms"}, residuation},
      {"background-nucleus-quotients", "For a quantic nucleus j, Q_j with a∗b = j(a⊙b) is a quantale and a ↦ j(a) a (unital) homomorphism.",
       {"quantale"}, {"quantales"}, nucleus_quotients},
      {"background-sided", "Sided elements: 0 and 1 are sided, two-sided means left- and right-sided, and 1⊙a is left-sided for left-sided a.",
       {"quantale"}, {"quantales"}, background_sided},
      {"continuous-composition", "Continuous maps compose by (f2∘f1, g1∘g2), associatively, with identities as units.",
       {"form-pair"}, {"form-pairs"}, continuous_composition},
      {"endo-quantale", "Q(S): left-sided elements are the constant maps, right-sided ones the annihilators, ls ≅ S, rs ≅ S^op, and Q(S) is a factor.",
       {"lattice"}, {"endo-lattices"}, endo_quantale_law},
      {"exm-endomorphisms", "For faithful φ on L × R, Q(φ) ≅ Q(L); for symmetric faithful φ the swap is f ↦ (y ↦ (f_*(y^⊥))^⊥).",
       {"form"}, {"forms"}, endomorphisms_example},
      {"lem-denseforms", "φ_n restricted to ↑r × ↑l is balanced and a quotient of φ_n; density on a side forces the other bound to be greatest below n, and conversely when Q is unital.",
       {"quantale"}, {"quantales"}, dense_forms_law},
      {"lem-phi-n", "φ_n (x ⊥ y ⟺ x⊙y ≤ n) is balanced for every n, and orth(e, e) = n when Q is unital.",
       {"quantale"}, {"quantales"}, phi_n_law},
      {"lem-sidedisos", "For dense φ: ls(Q(φ)) ≅ L, rs(Q(φ)) ≅ R, and Q(φ) is a factor.",
       {"form"}, {"forms"}, sided_isos},
      {"prop-comparison-hom", "κ: Q -> Q(Φ(Q)) is a homomorphism, unital and involutive when Q is, and injective exactly when Q acts faithfully on its sided elements.",
       {"quantale"}, {"quantales"}, comparison_hom_law},
      {"prop-continuities", "(f, g) is continuous ⟺ each of the four orthogonal-image conditions holds.",
       {"form-pair"}, {"form-pairs"}, continuities},
      {"prop-densequotient", "For a generator x, (−)x factors as a ↦ a ∨ ann(x) onto ↑ann(x) followed by a dense surjective homomorphism.",
       {"module"}, {"modules"}, dense_quotient},
      {"prop-equivalentformsoverQ", "⟨xa|y⟩ = ⟨x|ay⟩ ⟺ each of the four residuation conditions.",
       {"module-form"}, {"module-forms"}, equivalent_forms_over_q},
      {"prop-formsvsGalois", "Orthogonal images form a Galois connection which determines φ; density and faithfulness have the listed equivalent forms.",
       {"form"}, {"forms"}, forms_vs_galois},
      {"prop-involutive-bijection", "Involutive module structures on (M, φ) correspond to involution-preserving homomorphisms Q -> Q(φ).",
       {"involutive-context"}, {"involutive-contexts"}, involutive_bijection},
      {"prop-involutive-residuation", "⟨a*x|y⟩ = ⟨x|ay⟩ ⟺ (a*x)^⊥ = a\\(x^⊥); for faithful φ, a*x = (a\\(x^⊥))^⊥.",
       {"involutive-module"}, {"involutive-modules"}, involutive_residuation},
      {"prop-invvsleftsided", "(−)x sends sided elements to invariants, (−)/x sends invariants to sided elements, ann(x) is sided, and for a generator these are mutually inverse.",
       {"module"}, {"modules"}, inv_vs_left_sided},
      {"prop-orth-self-adjoint", "In an involutive module, orth(x, x) is self-adjoint for every generator x.",
       {"involutive-module"}, {"involutive-modules"}, orth_self_adjoint},
      {"prop-orthomorphism-density", "Orthomorphisms with strong or surjective components transfer density between the forms.",
       {"form-pair"}, {"form-pairs"}, orthomorphism_density},
      {"prop-principalmodules", "A unital module is principal ⟺ it is a quotient of Q; quotients of principal modules are principal.",
       {"module"}, {"modules"}, principal_modules},
      {"prop-pseudo", "For an orthomorphism (f, g): g surjective ⟹ g(x^⊥) = f(x)^⊥, and f surjective ⟹ f(^⊥y) = ^⊥g(y).",
       {"form-pair"}, {"form-pairs"}, pseudo},
      {"prop-simpleorthoquotient", "The orthogonal quotient of φ is faithful and the projection is an orthoquotient.",
       {"form"}, {"forms"}, simple_orthoquotient},
      {"prop-surjvsembed", "For an orthomorphism (f, g): g surjective and φ faithful on the left ⟹ f order embedding, and symmetrically.",
       {"form-pair"}, {"form-pairs"}, surj_vs_embed},
      {"prop-symvsinv-form", "For symmetric φ, (f, g)* = (g, f) is an involution on Q(φ).",
       {"form"}, {"forms"}, sym_vs_inv_form},
      {"prop-symvsinv-quantale", "For involutive Q, Φ(Q) is isomorphic to a symmetric form and Q(Φ(Q)) is involutive with (f, g)* = (g', f').",
       {"quantale"}, {"quantales"}, sym_vs_inv_quantale},
      {"prop-updownsegments", "For m in M: (−) ∨ m is a module nucleus ⟺ ↓m is a submodule ⟺ m is invariant.",
       {"module"}, {"modules"}, up_down_segments},
      {"prop-upseg-involutive", "For left-sided m ≤ n = n*, ↑m with a ⊥ b ⟺ a*⊙b ≤ n is an involutive module.",
       {"quantale"}, {"quantales"}, upsegment_involutive_law},
      {"prop-upsegannx", "For a generator x of an involutive module, a ↦ ax is a surjective involutive homomorphism from ↑ann(x) with a ⊥ b ⟺ a*⊙b ≤ orth(x, x), an isomorphism when that form is faithful.",
       {"involutive-module"}, {"involutive-modules"}, upseg_ann},
      {"prop-uniquedet", "For forms faithful on the right, a continuous (f, g) has unique g, existing ⟺ f preserves closures, given by g(y) = (f_*(^⊥y))^⊥.",
       {"form-pair"}, {"form-pairs"}, unique_det},
      {"thm-irreducible", "Everywhere principal modules, and modules with a generator whose annihilator is maximal, are irreducible.",
       {"module"}, {"modules"}, irreducible},
      {"thm-phi-of-Q-of-phi", "For dense φ, Φ(Q(φ)) ≅ φ.",
       {"form"}, {"forms"}, phi_of_q_of_phi},
      {"thm-principal-density", "For principal balanced φ with generators x, y: dense on a side ⟺ the annihilator is the greatest sided element below orth(x, y), for unital Q.",
       {"module-form"}, {"module-forms"}, principal_density_law},
      {"thm-principalforms", "A principal balanced form is a Q-orthoquotient of φ_n for n = orth(x, y), and the orthogonal quotient of φ_n when faithful.",
       {"module-form"}, {"module-forms"}, principal_forms},
      {"thm-simpleQquotient", "The orthogonal quotient of a balanced form is balanced over the quotient modules, and pushforwards to module quotients stay balanced.",
       {"module-form"}, {"module-forms"}, simple_q_quotient},
  };
  std::sort(r.begin(), r.end(), [](const Law& a, const Law& b) { return a.id < b.id; });
  return r;
}

// ---- families

std::vector<Instance> lattice_family(int max, const Caps& caps) {
  return numbered_docs("lattice", docs_of(lattices_up_to(max, caps)));
}

std::vector<json> quantale_docs(const Caps& caps) {
  std::vector<QuantalePtr> qs;
  for (auto& l : lattices_up_to(caps.carrier, caps))
    for (auto& q : enumerate_quantales(l, caps)) {
      qs.push_back(q);
      if (auto e = find_unit(*q)) qs.push_back(with_structure(*q, e, std::nullopt));
      for (auto& s : enumerate_involutions(*q)) qs.push_back(with_structure(*q, find_unit(*q), s));
    }
  for (auto& q : involutive_quantales(caps)) qs.push_back(q);
  return docs_of(qs);
}

std::vector<json> module_docs(const Caps& caps) {
  std::vector<ModulePtr> ms;
  for (auto& q : module_quantales())
    for (Side s : {Side::left, Side::right})
      for (auto& m : modules_over(q, s, caps)) ms.push_back(m);
  return docs_of(ms);
}

std::vector<json> module_form_docs(const Caps& caps) {
  std::vector<json> out;
  for (auto& q : module_quantales()) {
    auto rights = modules_over(q, Side::right, caps);
    auto lefts = modules_over(q, Side::left, caps);
    for (auto& l : rights)
      for (auto& r : lefts)
        for (auto& f : enumerate_two_forms(l->carrier, r->carrier, Exec::serial, caps))
          out.push_back(to_json(make_balanced_form(l, r, f)));
  }
  return out;
}

struct Contexts {
  std::vector<json> contexts;
  std::vector<json> modules;
};

Contexts involutive_docs(const Caps& caps, bool with_modules) {
  Contexts c;
  for (auto& q : involutive_quantales(caps))
    for (auto& l : lattices_up_to(caps.carrier, caps))
      for (auto& phi : enumerate_symmetric_forms(l, caps)) {
        c.contexts.push_back(to_json(InvolutiveContext{q, phi}));
        if (!with_modules) continue;
        try {
          for (auto& act : involutive_structure_bijection(q, phi, caps).structures)
            c.modules.push_back(to_json(InvolutiveCandidate{make_module_flat(q, l, Side::left, act), phi}));
        } catch (const ValidationError& e) {
          // Q(φ) over the cap: the context itself is reported as skipped
          if (e.code() != ErrorCode::CapExceeded) throw;
        }
      }
  return c;
}

std::vector<Instance> build_family(const std::string& name, const Caps& caps) {
  if (name == "lattices") return lattice_family(caps.lattice_laws, caps);
  if (name == "endo-lattices") return lattice_family(std::min({4, caps.lattice_laws, caps.endo_quantale}), caps);
  if (name == "forms") return numbered_docs("form", docs_of(forms_up_to(caps)));
  if (name == "form-pairs") {
    auto fs = forms_up_to(caps);
    std::vector<json> out;
    for (auto& a : fs)
      for (auto& b : fs) out.push_back(to_json(FormPair{a, b}));
    return numbered_docs("form-pair", out);
  }
  if (name == "quantales") return numbered_docs("quantale", quantale_docs(caps));
  if (name == "modules") return numbered_docs("module", module_docs(caps));
  if (name == "module-forms") return numbered_docs("module-form", module_form_docs(caps));
  if (name == "involutive-contexts") return numbered_docs("involutive-context", involutive_docs(caps, false).contexts);
  if (name == "involutive-modules") return numbered_docs("involutive-module", involutive_docs(caps, true).modules);
  throw ValidationError(ErrorCode::UnknownLaw, "unknown instance family \"" + name + "\"");
}

LawOutcome run_check(const Law& law, const json& doc, const Caps& caps) {
  try {
    return law.check(doc, caps);
  } catch (const ValidationError& e) {
    json w{{"error", std::string(to_string(e.code()))}, {"reason", e.what()}};
    if (!e.witness().empty()) w["elements"] = e.witness();
    return {e.code() == ErrorCode::CapExceeded ? LawStatus::skipped : LawStatus::fail, true, w};
  }
}

struct Task {
  const Law* law;
  const Instance* instance;
};

LawResult evaluate(const Task& t, const Caps& caps, bool& applicable) {
  const auto start = std::chrono::steady_clock::now();
  auto o = run_check(*t.law, t.instance->doc, caps);
  const auto stop = std::chrono::steady_clock::now();
  applicable = o.applicable;
  LawResult r{t.law->id, t.instance->id, o.status, o.witness, nullptr,
              std::chrono::duration<double, std::milli>(stop - start).count()};
  if (o.status == LawStatus::fail) r.instance_doc = t.instance->doc;
  return r;
}

}  // namespace

const std::vector<Law>& law_registry() {
  static const std::vector<Law> registry = build_registry();
  return registry;
}

const Law* find_law(const std::string& id) {
  for (const auto& l : law_registry())
    if (l.id == id) return &l;
  return nullptr;
}

std::vector<std::string> family_names() {
  return {"lattices", "endo-lattices", "forms", "form-pairs", "quantales", "modules", "module-forms",
          "involutive-contexts", "involutive-modules"};
}

std::vector<Instance> enumerate_family(const std::string& family, const Caps& caps) { return build_family(family, caps); }

std::vector<LawResult> run_laws(const RunOptions& opts) {
  std::vector<const Law*> laws;
  if (opts.laws.empty()) {
    for (const auto& l : law_registry()) laws.push_back(&l);
  } else {
    for (const auto& id : opts.laws) {
      const Law* l = find_law(id);
      if (!l) throw ValidationError(ErrorCode::UnknownLaw, "unknown law \"" + id + "\"");
      if (std::find(laws.begin(), laws.end(), l) == laws.end()) laws.push_back(l);
    }
  }

  std::map<std::string, std::vector<Instance>> families;
  std::vector<Task> tasks;
  if (opts.scope) {
    for (const Law* l : laws)
      for (const auto& inst : *opts.scope) {
        const std::string k = kind_of(inst.doc);
        if (std::find(l->kinds.begin(), l->kinds.end(), k) != l->kinds.end()) tasks.push_back({l, &inst});
      }
  } else {
    for (const Law* l : laws)
      for (const auto& f : l->families)
        if (!families.count(f)) families.emplace(f, build_family(f, opts.caps));
    for (const Law* l : laws)
      for (const auto& f : l->families)
        for (const auto& inst : families.at(f)) tasks.push_back({l, &inst});
  }

  std::vector<LawResult> results(tasks.size());
  std::vector<char> keep(tasks.size(), 0);
  const long n = static_cast<long>(tasks.size());
  if (opts.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      bool applicable = false;
      results[i] = evaluate(tasks[i], opts.caps, applicable);
      keep[i] = applicable;
    }
  } else {
    for (long i = 0; i < n; ++i) {
      bool applicable = false;
      results[i] = evaluate(tasks[i], opts.caps, applicable);
      keep[i] = applicable;
    }
  }

  std::vector<LawResult> out;
  for (long i = 0; i < n; ++i)
    if (keep[i]) out.push_back(std::move(results[i]));
  std::stable_sort(out.begin(), out.end(), [](const LawResult& a, const LawResult& b) {
    return std::tie(a.law, a.instance) < std::tie(b.law, b.instance);
  });
  return out;
}

json report_json(const std::vector<LawResult>& results, const Caps& caps) {
  json summary{{"pass", 0}, {"fail", 0}, {"skipped", 0}};
  json rs = json::array();
  for (const auto& r : results) {
    summary[to_string(r.status)] = summary[to_string(r.status)].get<int>() + 1;
    json j{{"law", r.law}, {"instance", r.instance}, {"status", to_string(r.status)}, {"elapsed_ms", r.elapsed_ms}};
    if (!r.witness.is_null()) j["witness"] = r.witness;
    if (!r.instance_doc.is_null()) j["instance_doc"] = r.instance_doc;
    rs.push_back(std::move(j));
  }
  json c{{"carrier", caps.carrier},         {"lattice_laws", caps.lattice_laws},
         {"form_cells", caps.form_cells},   {"form_quantale_cells", caps.form_quantale_cells},
         {"endo_enum", caps.endo_enum},     {"bijection_target", caps.bijection_target},     {"endo_quantale", caps.endo_quantale},
         {"lattice_enum", caps.lattice_enum}, {"monoid", caps.monoid}};
  return json{{"schema", "qf-law-report/1"}, {"caps", c}, {"summary", summary}, {"results", rs}};
}

json strip_timing(json report) {
  if (report.contains("results"))
    for (auto& r : report["results"]) r.erase("elapsed_ms");
  return report;
}

std::string report_text(const json& report) {
  struct Row {
    int pass = 0, fail = 0, skipped = 0;
    double ms = 0;
  };
  std::map<std::string, Row> rows;
  for (const auto& r : report.at("results")) {
    Row& row = rows[r.at("law").get<std::string>()];
    const std::string s = r.at("status");
    (s == "pass" ? row.pass : s == "fail" ? row.fail : row.skipped)++;
    if (r.contains("elapsed_ms")) row.ms += r["elapsed_ms"].get<double>();
  }
  std::size_t width = 3;
  for (const auto& [id, _] : rows) width = std::max(width, id.size());
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-*s %7s %7s %7s %10s\n", static_cast<int>(width), "law", "pass", "fail", "skipped", "ms");
  os << buf;
  for (const auto& [id, row] : rows) {
    std::snprintf(buf, sizeof buf, "%-*s %7d %7d %7d %10.1f\n", static_cast<int>(width), id.c_str(), row.pass, row.fail,
                  row.skipped, row.ms);
    os << buf;
  }
  const auto& s = report.at("summary");
  os << "\ntotal: " << s.at("pass").get<int>() << " pass, " << s.at("fail").get<int>() << " fail, "
     << s.at("skipped").get<int>() << " skipped\n";
  for (const auto& r : report.at("results")) {
    if (r.at("status") == "pass") continue;
    os << "\n" << r.at("status").get<std::string>() << ": " << r.at("law").get<std::string>() << " on "
       << r.at("instance").get<std::string>() << "\n  " << r.value("witness", json()).dump() << "\n";
  }
  return os.str();
}

std::vector<Instance> instances_from_file_json(const json& j, const std::string& label) {
  std::vector<Instance> out;
  auto add = [&](const json& doc, std::string id) {
    from_json(doc);  // reject malformed documents before any law runs
    if (doc.contains("name") && doc["name"].is_string()) id = doc["name"].get<std::string>();
    out.push_back({std::move(id), doc});
  };
  if (j.is_object() && j.value("schema", "") == "qf-law-report/1") {
    for (const auto& r : j.at("results"))
      if (r.contains("instance_doc")) {
        const std::string id = r.at("instance").get<std::string>();
        if (std::none_of(out.begin(), out.end(), [&](const Instance& i) { return i.id == id; })) add(r["instance_doc"], id);
      }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) add(j[i], numbered(label, i));
  } else {
    add(j, label);
  }
  return out;
}

}  // namespace qf
