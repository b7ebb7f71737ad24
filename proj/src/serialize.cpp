#include "qf/serialize.hpp"

#include <string>

#include "qf/error.hpp"

namespace qf {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ValidationError(ErrorCode::BadDocument, what); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object()) bad("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

void expect_kind(const json& doc, const char* kind) {
  if (kind_of(doc) != kind) bad(std::string("expected kind \"") + kind + "\", got \"" + kind_of(doc) + "\"");
}

BoolMatrix bool_matrix(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of arrays");
  BoolMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) bad(std::string(what) + " must be an array of arrays");
    std::vector<bool> r;
    for (const auto& v : row) {
      if (v.is_boolean()) r.push_back(v.get<bool>());
      else if (v.is_number_integer() && (v.get<int>() == 0 || v.get<int>() == 1)) r.push_back(v.get<int>() == 1);
      else bad(std::string(what) + " entries must be booleans");
    }
    m.push_back(std::move(r));
  }
  return m;
}

std::vector<Table> int_rows(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of arrays");
  std::vector<Table> rows;
  for (const auto& row : j) {
    if (!row.is_array()) bad(std::string(what) + " must be an array of arrays");
    Table r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) bad(std::string(what) + " entries must be integers");
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

void check_range(const std::vector<Table>& rows, int n, const char* what) {
  for (const auto& r : rows)
    for (Elem v : r)
      if (v < 0 || v >= n) throw ValidationError(ErrorCode::ShapeMismatch, std::string(what) + " entry out of range");
}

json bool_rows(const BoolMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (bool b : row) r.push_back(static_cast<bool>(b));
    out.push_back(std::move(r));
  }
  return out;
}

json rows(const Table& flat, int width) {
  json out = json::array();
  for (std::size_t i = 0; i < flat.size(); i += width) out.push_back(Table(flat.begin() + i, flat.begin() + i + width));
  return out;
}

TwoForm symmetric_form_from(const json& doc) {
  TwoForm f = form_from_json(doc);
  if (!is_symmetric(f)) throw ValidationError(ErrorCode::NotSymmetric, "form is not symmetric");
  return f;
}

}  // namespace

std::string kind_of(const json& doc) {
  const json& k = field(doc, "kind");
  if (!k.is_string()) bad("\"kind\" must be a string");
  return k.get<std::string>();
}

json to_json(const Lattice& l) {
  return json{{"kind", "lattice"}, {"n", l.size()}, {"leq", bool_rows(l.order_matrix())}};
}

json to_json(const TwoForm& f) {
  return json{{"kind", "form"}, {"left", to_json(f.left())}, {"right", to_json(f.right())},
              {"orthogonal", bool_rows(f.orthogonality())}};
}

json to_json(const Quantale& q) {
  json j{{"kind", "quantale"}, {"carrier", to_json(q.lattice())}, {"mult", rows(q.mult, q.size())}};
  j["unit"] = q.unit ? json(*q.unit) : json(nullptr);
  j["involution"] = q.involution ? json(*q.involution) : json(nullptr);
  return j;
}

json to_json(const Module& m) {
  return json{{"kind", "module"},
              {"side", m.side == Side::left ? "left" : "right"},
              {"quantale", to_json(m.quantale())},
              {"carrier", to_json(m.lattice())},
              {"action", rows(m.action, m.size())}};
}

json to_json(const BalancedForm& bf) {
  return json{{"kind", "module-form"}, {"left", to_json(*bf.left)}, {"right", to_json(*bf.right)},
              {"form", to_json(bf.form)}};
}

json to_json(const FormPair& p) {
  return json{{"kind", "form-pair"}, {"source", to_json(p.source)}, {"target", to_json(p.target)}};
}

json to_json(const InvolutiveContext& c) {
  return json{{"kind", "involutive-context"}, {"quantale", to_json(*c.quantale)}, {"form", to_json(c.form)}};
}

json to_json(const InvolutiveCandidate& c) {
  return json{{"kind", "involutive-module"}, {"module", to_json(*c.module)}, {"form", to_json(c.form)}};
}

json to_json(const Structure& s) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LatticePtr> || std::is_same_v<T, QuantalePtr> || std::is_same_v<T, ModulePtr>)
          return to_json(*v);
        else
          return to_json(v);
      },
      s);
}

LatticePtr lattice_from_json(const json& doc) {
  expect_kind(doc, "lattice");
  const BoolMatrix leq = bool_matrix(field(doc, "leq"), "leq");
  const json& n = field(doc, "n");
  if (!n.is_number_integer() || n.get<int>() != static_cast<int>(leq.size()))
    throw ValidationError(ErrorCode::ShapeMismatch, "\"n\" does not match the order matrix");
  return make_lattice(leq);
}

TwoForm form_from_json(const json& doc) {
  expect_kind(doc, "form");
  return TwoForm::from_orthogonality(lattice_from_json(field(doc, "left")), lattice_from_json(field(doc, "right")),
                                     bool_matrix(field(doc, "orthogonal"), "orthogonal"));
}

QuantalePtr quantale_from_json(const json& doc) {
  expect_kind(doc, "quantale");
  auto carrier = lattice_from_json(field(doc, "carrier"));
  auto mult = int_rows(field(doc, "mult"), "mult");
  check_range(mult, carrier->size(), "mult");
  std::optional<Elem> unit;
  std::optional<Table> inv;
  if (doc.contains("unit") && !doc["unit"].is_null()) {
    if (!doc["unit"].is_number_integer()) bad("\"unit\" must be an integer or null");
    unit = doc["unit"].get<int>();
    if (*unit < 0 || *unit >= carrier->size()) throw ValidationError(ErrorCode::ShapeMismatch, "unit out of range");
  }
  if (doc.contains("involution") && !doc["involution"].is_null()) {
    auto r = int_rows(json::array({doc["involution"]}), "involution");
    check_range(r, carrier->size(), "involution");
    inv = r.front();
  }
  return make_quantale(carrier, mult, unit, inv);
}

ModulePtr module_from_json(const json& doc) {
  expect_kind(doc, "module");
  const json& side = field(doc, "side");
  if (!side.is_string() || (side != "left" && side != "right")) bad("\"side\" must be \"left\" or \"right\"");
  auto q = quantale_from_json(field(doc, "quantale"));
  auto carrier = lattice_from_json(field(doc, "carrier"));
  auto action = int_rows(field(doc, "action"), "action");
  check_range(action, carrier->size(), "action");
  return make_module(q, carrier, side == "left" ? Side::left : Side::right, action);
}

Structure from_json(const json& doc) {
  try {
    const std::string kind = kind_of(doc);
    if (kind == "lattice") return lattice_from_json(doc);
    if (kind == "form") return form_from_json(doc);
    if (kind == "quantale") return quantale_from_json(doc);
    if (kind == "module") return module_from_json(doc);
    if (kind == "form-pair") return FormPair{form_from_json(field(doc, "source")), form_from_json(field(doc, "target"))};
    if (kind == "module-form") {
      auto l = module_from_json(field(doc, "left"));
      auto r = module_from_json(field(doc, "right"));
      // both modules must share one quantale object
      auto r2 = make_module_flat(l->over, r->carrier, r->side, r->action);
      return make_balanced_form(l, r2, form_from_json(field(doc, "form")));
    }
    if (kind == "involutive-context") {
      auto q = quantale_from_json(field(doc, "quantale"));
      if (!q->involution) throw ValidationError(ErrorCode::PreconditionViolated, "quantale has no involution");
      return InvolutiveContext{q, symmetric_form_from(field(doc, "form"))};
    }
    if (kind == "involutive-module") {
      auto m = module_from_json(field(doc, "module"));
      TwoForm f = symmetric_form_from(field(doc, "form"));
      if (!m->quantale().involution)
        throw ValidationError(ErrorCode::PreconditionViolated, "quantale has no involution");
      if (m->side != Side::left) throw ValidationError(ErrorCode::PreconditionViolated, "involutive modules are left modules");
      if (!(f.left() == m->lattice())) throw ValidationError(ErrorCode::ShapeMismatch, "form is not on the module carrier");
      return InvolutiveCandidate{m, f};
    }
    bad("unknown kind \"" + kind + "\"");
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

json canonicalize(const json& doc) {
  json out = to_json(from_json(doc));
  if (doc.contains("name")) out["name"] = doc["name"];
  return out;
}

void validate_document(const json& doc) {
  Structure s = from_json(doc);
  if (auto* c = std::get_if<InvolutiveCandidate>(&s)) check_involutive_module(c->module, c->form);
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace qf
