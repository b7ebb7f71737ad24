#include <algorithm>

#include "doctest.h"
#include "families.hpp"
#include "qf/enumerate.hpp"
#include "qf/error.hpp"
#include "qf/generators.hpp"
#include "qf/involutive.hpp"

using namespace qf;
using namespace qf::testing;

namespace {

QuantalePtr two_inv() { return with_identity_involution(two()); }

Caps wide() {
  Caps c;
  c.form_quantale_cells = 16;
  return c;
}

TwoForm all_orthogonal(const LatticePtr& l) {
  return TwoForm::from_orthogonality(l, l, BoolMatrix(l->size(), std::vector<bool>(l->size(), true)));
}

// Oracle: every table Q × M -> M satisfying the left-module axioms and
// ⟨a*x|y⟩ = ⟨x|ay⟩, checked directly.
std::size_t brute_force_involutive_actions(const Quantale& q, const TwoForm& phi) {
  const Lattice& M = phi.left();
  const Lattice& Q = q.lattice();
  const int nq = q.size(), nm = M.size(), cells = nq * nm;
  std::vector<int> t(cells, 0);
  std::size_t count = 0;
  while (true) {
    auto act = [&](int a, int x) { return t[a * nm + x]; };
    bool ok = true;
    for (int x = 0; x < nm && ok; ++x) ok = act(Q.bottom(), x) == M.bottom();
    for (int a = 0; a < nq && ok; ++a) ok = act(a, M.bottom()) == M.bottom();
    for (int a = 0; a < nq && ok; ++a)
      for (int b = 0; b < nq && ok; ++b)
        for (int x = 0; x < nm && ok; ++x)
          ok = act(Q.join(a, b), x) == M.join(act(a, x), act(b, x)) && act(q.mul(a, b), x) == act(a, act(b, x));
    for (int a = 0; a < nq && ok; ++a)
      for (int x = 0; x < nm && ok; ++x)
        for (int y = 0; y < nm && ok; ++y)
          ok = act(a, M.join(x, y)) == M.join(act(a, x), act(a, y)) &&
               phi.value(act(q.star(a), x), y) == phi.value(x, act(a, y));
    if (ok) ++count;
    int i = cells - 1;
    while (i >= 0 && t[i] == nm - 1) t[i--] = 0;
    if (i < 0) return count;
    ++t[i];
  }
}

}  // namespace

TEST_CASE("involution on form quantales") {
  auto p0 = meet_form(chain(2));
  auto fq = involution_on_form_quantale(p0);
  REQUIRE(fq.pairs.size() == 2);
  CHECK(*fq.quantale->involution == Table{0, 1});
  for (auto& [f, g] : fq.pairs) CHECK(f == g);

  auto ao = involution_on_form_quantale(all_orthogonal(chain(2)));
  CHECK(fq.quantale->size() == 2);
  CHECK(ao.pairs.size() == 4);
  for (std::size_t k = 0; k < ao.pairs.size(); ++k) {
    const auto& [f, g] = ao.pairs[k];
    CHECK(ao.pairs[ao.quantale->star(static_cast<Elem>(k))] == std::pair{g, f});
  }

  for (auto& phi : {c3_self_duality(), meet_form(diamond()), meet_form(chain(2))}) {
    auto cs = endomorphism_involution_claims(phi, wide());
    CHECK_MESSAGE(all_hold(cs), failed_claims(cs));
  }

  try {
    involution_on_form_quantale(order_form(chain(2)));
    FAIL("expected NotSymmetric");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::NotSymmetric);
  }
}

TEST_CASE("involution on form quantales is always valid") {
  for (auto& l : {one_element(), chain(2), chain(3), diamond()})
    for (auto& phi : enumerate_symmetric_forms(l)) {
      auto fq = involution_on_form_quantale(phi, wide());
      const Quantale& q = *fq.quantale;
      for (Elem a = 0; a < q.size(); ++a) {
        CHECK(q.star(q.star(a)) == a);
        for (Elem b = 0; b < q.size(); ++b) {
          CHECK(q.star(q.mul(a, b)) == q.mul(q.star(b), q.star(a)));
          CHECK(q.star(q.lattice().join(a, b)) == q.lattice().join(q.star(a), q.star(b)));
        }
      }
      auto cs = endomorphism_involution_claims(phi, wide());
      CHECK_MESSAGE(all_hold(cs), failed_claims(cs));
    }
}

TEST_CASE("involutive module examples") {
  auto q = two_inv();
  auto meet2 = regular_module(q, Side::left);
  auto im = check_involutive_module(meet2, meet_form(chain(2)));
  auto rep = involutive_report(*meet2, meet_form(chain(2)));
  CHECK(rep.involutive);
  CHECK(rep.residuation);
  REQUIRE(rep.faithful_formula);
  CHECK(*rep.faithful_formula);

  auto trivial = make_module(q, chain(3), Side::left, {{0, 0, 0}, {0, 0, 0}});
  CHECK(involutive_report(*trivial, all_orthogonal(chain(3))).involutive);

  // The diamond acting on itself by meets, with disjointness as the form:
  // involutive for the identity involution, not when the atoms are swapped.
  auto dmeet = meet_quantale(diamond());
  auto with_id = with_structure(*dmeet, 3, identity_table(4));
  CHECK(involutive_report(*regular_module(with_id, Side::left), meet_form(diamond())).involutive);
  auto swapped = with_structure(*dmeet, 3, Table{0, 2, 1, 3});
  try {
    check_involutive_module(regular_module(swapped, Side::left), meet_form(diamond()));
    FAIL("expected LawViolated");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::LawViolated);
    CHECK(e.witness() == std::vector<int>{1, 1, 1});
  }
  auto bad = involutive_report(*regular_module(swapped, Side::left), meet_form(diamond()));
  CHECK_FALSE(bad.residuation);
  CHECK_FALSE(*bad.faithful_formula);

  CHECK_THROWS_AS(involutive_report(*regular_module(two(), Side::left), meet_form(chain(2))), ValidationError);
  CHECK_THROWS_AS(involutive_report(*regular_module(q, Side::right), meet_form(chain(2))), ValidationError);
}

TEST_CASE("involutive structure bijection examples") {
  auto b = involutive_structure_bijection(two_inv(), meet_form(chain(2)));
  CHECK(b.structures.size() == 2);
  CHECK(b.homs.size() == 2);
  CHECK(all_hold(b.claims));

  auto one = make_quantale(one_element(), {{0}}, 0, Table{0});
  for (auto& l : {chain(2), chain(3)})
    for (auto& phi : enumerate_symmetric_forms(l)) {
      auto t = involutive_structure_bijection(one, phi);
      CHECK(t.structures.size() == 1);
      CHECK(t.homs.size() == 1);
      CHECK(all_hold(t.claims));
    }

  for (auto& phi : enumerate_symmetric_forms(chain(3))) {
    auto t = involutive_structure_bijection(two_inv(), phi);
    CHECK(t.structures.size() == t.homs.size());
    CHECK(t.structures.size() == brute_force_involutive_actions(*two_inv(), phi));
    CHECK(all_hold(t.claims));
  }
}

TEST_CASE("self-adjoint orthogonalizer examples") {
  auto q = two_inv();
  auto im = check_involutive_module(regular_module(q, Side::left), meet_form(chain(2)));
  auto s = self_adjoint_orthogonalizer(im, 1);
  CHECK(s.orth == 0);
  CHECK(s.self_adjoint);
  CHECK(s.generator);
  auto ao = check_involutive_module(regular_module(q, Side::left), all_orthogonal(chain(2)));
  for (Elem x : {0, 1}) {
    auto t = self_adjoint_orthogonalizer(ao, x);
    CHECK(t.orth == 1);
    CHECK(t.self_adjoint);
  }
}

TEST_CASE("up-segment of the annihilator examples") {
  auto q = two_inv();
  auto im = check_involutive_module(regular_module(q, Side::left), meet_form(chain(2)));
  auto u = upseg_ann_involutive(im, 1);
  CHECK(u.ann == 0);
  CHECK(u.segment.sub.to_parent == Table{0, 1});
  CHECK(u.hom == Table{0, 1});
  CHECK(u.faithful);
  CHECK(all_hold(u.claims));
  CHECK(all_hold(u.segment.claims));

  auto ao = check_involutive_module(regular_module(q, Side::left), all_orthogonal(chain(2)));
  auto v = upseg_ann_involutive(ao, 1);
  CHECK(v.orth == 1);
  for (Elem a = 0; a < 2; ++a)
    for (Elem b = 0; b < 2; ++b) CHECK(v.segment.module.form.orthogonal(a, b));
  CHECK(all_hold(v.claims));

  try {
    upseg_ann_involutive(im, 0);
    FAIL("expected NotAGenerator");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::NotAGenerator);
  }
}

TEST_CASE("involutive suite over enumerated instances") {
  std::size_t instances = 0, generators_seen = 0, faithful_iso = 0;
  for (auto& q : involutive_quantales())
    for (int n = 1; n <= 3; ++n)
      for (auto& phi : enumerate_symmetric_forms(chain(n))) {
        auto b = involutive_structure_bijection(q, phi);
        CHECK_MESSAGE(all_hold(b.claims), failed_claims(b.claims));
        CHECK(b.structures.size() == b.homs.size());
        for (auto& act : enumerate_actions(q, chain(n), Side::left)) {
          auto m = make_module_flat(q, chain(n), Side::left, act);
          auto rep = involutive_report(*m, phi);
          CHECK(rep.involutive == rep.residuation);
          if (rep.faithful_formula) CHECK(*rep.faithful_formula == rep.involutive);
          CHECK(rep.involutive == (std::find(b.structures.begin(), b.structures.end(), act) != b.structures.end()));
          if (!rep.involutive) continue;
          ++instances;
          InvolutiveModule im{m, phi};
          for (Elem x = 0; x < n; ++x) {
            auto s = self_adjoint_orthogonalizer(im, x);
            if (!s.generator) continue;
            ++generators_seen;
            CHECK(s.self_adjoint);
            CHECK(q->lattice().leq(annihilator(*m, x), s.orth));
            auto u = upseg_ann_involutive(im, x);
            CHECK_MESSAGE(all_hold(u.claims), failed_claims(u.claims));
            CHECK_MESSAGE(all_hold(u.segment.claims), failed_claims(u.segment.claims));
            if (u.faithful) ++faithful_iso;
          }
        }
      }
  CHECK(instances > 0);
  CHECK(generators_seen > 0);
  CHECK(faithful_iso > 0);
}

TEST_CASE("up-segments with a self-adjoint bound are involutive") {
  for (auto& q : involutive_quantales()) {
    const auto sided = sided_elements(*q);
    for (Elem m : sided.left)
      for (Elem n = 0; n < q->size(); ++n) {
        if (q->star(n) != n || !q->lattice().leq(m, n)) continue;
        auto s = upsegment_involutive(q, m, n);
        CHECK_MESSAGE(all_hold(s.claims), failed_claims(s.claims));
      }
  }
  auto pz3 = powerset_monoid_quantale({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, true);
  // {1} has inverse {2}, so it is not self-adjoint
  CHECK_THROWS_AS(upsegment_involutive(pz3, 0, 2), ValidationError);
}

TEST_CASE("symmetrized Phi(Q)") {
  std::vector<QuantalePtr> qs = involutive_quantales();
  for (int n = 1; n <= 3; ++n)
    for (auto& q : enumerate_quantales(chain(n)))
      for (auto& s : enumerate_involutions(*q)) qs.push_back(with_structure(*q, find_unit(*q), s));
  for (auto& s : enumerate_involutions(*meet_quantale(diamond())))
    qs.push_back(with_structure(*meet_quantale(diamond()), 3, s));
  for (auto& q : qs) {
    if (static_cast<long>(sided_elements(*q).left.size()) * static_cast<long>(sided_elements(*q).right.size()) > 16)
      continue;
    auto s = symmetrized_phi(*q, wide());
    CHECK_MESSAGE(all_hold(s.claims), failed_claims(s.claims));
  }
}
