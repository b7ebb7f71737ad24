#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qf/config.hpp"
#include "qf/serialize.hpp"

namespace qf {

enum class LawStatus { pass, fail, skipped };

std::string to_string(LawStatus s);

/// What a single check reports. `applicable` false drops the result: the
/// instance does not meet the law's hypotheses.
struct LawOutcome {
  LawStatus status = LawStatus::pass;
  bool applicable = true;
  json witness;  // null unless failed or skipped
};

struct Law {
  std::string id;
  std::string statement;
  std::vector<std::string> kinds;  // document kinds the check accepts
  std::vector<std::string> families;  // enumerated instances used by default
  std::function<LawOutcome(const json& doc, const Caps& caps)> check;
};

/// Sorted by id.
const std::vector<Law>& law_registry();
const Law* find_law(const std::string& id);

struct Instance {
  std::string id;
  json doc;
};

/// The named instance families, enumerated up to the caps. Unknown names
/// throw UnknownLaw.
std::vector<Instance> enumerate_family(const std::string& family, const Caps& caps);
std::vector<std::string> family_names();

struct LawResult {
  std::string law;
  std::string instance;
  LawStatus status = LawStatus::pass;
  json witness;
  json instance_doc;  // kept for failures so they can be replayed
  double elapsed_ms = 0;
};

struct RunOptions {
  std::vector<std::string> laws;           // empty: all
  std::optional<std::vector<Instance>> scope;  // absent: each law's family
  Caps caps;
  Exec exec = Exec::parallel;
};

/// One result per applicable (law, instance), sorted by (law, instance).
/// Throws UnknownLaw.
std::vector<LawResult> run_laws(const RunOptions& opts);

/// {"schema", "caps", "summary", "results"}.
json report_json(const std::vector<LawResult>& results, const Caps& caps);

/// The report without elapsed times, for comparing runs.
json strip_timing(json report);

/// Aligned table, one row per law with counts, then each failure.
std::string report_text(const json& report);

/// Docs from a scope file: a single document, an array of documents, or a
/// report whose failed instances are replayed. Throws BadDocument.
std::vector<Instance> instances_from_file_json(const json& j, const std::string& label);

}  // namespace qf
