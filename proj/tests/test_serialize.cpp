#include "doctest.h"
#include "families.hpp"
#include "qf/error.hpp"
#include "qf/generators.hpp"
#include "qf/serialize.hpp"

using namespace qf;
using namespace qf::testing;

namespace {

ErrorCode code_of(const json& doc) {
  try {
    validate_document(doc);
  } catch (const ValidationError& e) {
    return e.code();
  }
  FAIL("document validated");
  return ErrorCode::BadDocument;
}

void round_trips(const json& doc) {
  const json c = canonicalize(doc);
  CHECK(canonicalize(c) == c);
  CHECK(dump(c) == dump(canonicalize(json::parse(dump(c)))));
}

}  // namespace

TEST_CASE("documents written by hand") {
  auto c2 = json::parse(R"({"kind":"lattice","n":2,"leq":[[true,true],[false,true]]})");
  auto l = lattice_from_json(c2);
  CHECK(*l == *chain(2));
  CHECK(to_json(*l) == c2);

  auto q = json::parse(R"({"kind":"quantale","carrier":{"kind":"lattice","n":2,"leq":[[1,1],[0,1]]},
                          "mult":[[0,0],[0,1]],"unit":1,"involution":null})");
  auto qq = quantale_from_json(q);
  CHECK(qq->unit == std::optional<Elem>{1});
  CHECK_FALSE(qq->involution);
  CHECK(to_json(*qq)["carrier"] == c2);

  auto f = json::parse(R"({"kind":"form","left":{"kind":"lattice","n":2,"leq":[[true,true],[false,true]]},
      "right":{"kind":"lattice","n":2,"leq":[[true,true],[false,true]]},"orthogonal":[[true,true],[true,false]]})");
  CHECK(form_from_json(f) == meet_form(chain(2)));
}

TEST_CASE("round trips are canonical") {
  round_trips(to_json(*diamond()));
  round_trips(to_json(sierpinski_form()));
  round_trips(to_json(*powerset_monoid_quantale({{0, 1}, {1, 0}}, true)));
  for (auto& m : module_family()) round_trips(to_json(*m));
  auto bfs = balanced_family();
  for (std::size_t i = 0; i < bfs.size(); i += 97) round_trips(to_json(bfs[i]));
  round_trips(to_json(FormPair{meet_form(chain(2)), order_form(chain(3))}));
  round_trips(to_json(InvolutiveContext{with_identity_involution(two()), c3_self_duality()}));

  json named = to_json(*chain(3));
  named["name"] = "c3";
  named["extra"] = 1;
  auto c = canonicalize(named);
  CHECK(c["name"] == "c3");
  CHECK_FALSE(c.contains("extra"));
}

TEST_CASE("bad documents") {
  CHECK(code_of(json::parse("[1,2]")) == ErrorCode::BadDocument);
  CHECK(code_of(json::parse(R"({"kind":"bogus"})")) == ErrorCode::BadDocument);
  CHECK(code_of(json::parse(R"({"kind":"lattice","n":2})")) == ErrorCode::BadDocument);
  CHECK(code_of(json::parse(R"({"kind":"lattice","n":3,"leq":[[true,true],[false,true]]})")) ==
        ErrorCode::ShapeMismatch);
  CHECK(code_of(json::parse(R"({"kind":"lattice","n":2,"leq":[["a",true],[false,true]]})")) ==
        ErrorCode::BadDocument);
  // two incomparable elements: no bottom
  CHECK(code_of(json::parse(R"({"kind":"lattice","n":2,"leq":[[true,false],[false,true]]})")) ==
        ErrorCode::NoBottom);

  json q = to_json(*two());
  q["mult"][1][1] = 5;
  CHECK(code_of(q) == ErrorCode::ShapeMismatch);
  q["mult"][1][1] = "x";
  CHECK(code_of(q) == ErrorCode::BadDocument);
  q = to_json(*two());
  q["unit"] = 0;
  CHECK(code_of(q) == ErrorCode::BadUnit);

  json m = to_json(*regular_module(two(), Side::left));
  m["side"] = "up";
  CHECK(code_of(m) == ErrorCode::BadDocument);

  json ctx = to_json(InvolutiveContext{with_identity_involution(two()), meet_form(chain(2))});
  ctx["form"] = to_json(order_form(chain(2)));
  CHECK(code_of(ctx) == ErrorCode::NotSymmetric);
  ctx = to_json(InvolutiveContext{two(), meet_form(chain(2))});
  CHECK(code_of(ctx) == ErrorCode::PreconditionViolated);
}

TEST_CASE("the involutive law is checked on validation, not on load") {
  auto swapped = with_structure(*meet_quantale(diamond()), 3, Table{0, 2, 1, 3});
  json doc = to_json(InvolutiveCandidate{regular_module(swapped, Side::left), meet_form(diamond())});
  CHECK_NOTHROW(from_json(doc));
  try {
    validate_document(doc);
    FAIL("expected LawViolated");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::LawViolated);
    CHECK(e.witness() == std::vector<int>{1, 1, 1});
  }
  auto fine = with_structure(*meet_quantale(diamond()), 3, identity_table(4));
  CHECK_NOTHROW(validate_document(to_json(InvolutiveCandidate{regular_module(fine, Side::left), meet_form(diamond())})));
}
