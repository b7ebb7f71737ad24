#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace qf {

/// A derived fact checked alongside a construction. `applicable` is false when
/// the fact's hypotheses do not hold for this instance; such claims are vacuous.
struct Claim {
  std::string name;
  bool applicable = true;
  bool holds = true;
};

using Claims = std::vector<Claim>;

inline bool all_hold(const Claims& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Claim& c) { return !c.applicable || c.holds; });
}

/// Names of the applicable claims that fail, comma separated.
inline std::string failed_claims(const Claims& cs) {
  std::string out;
  for (const auto& c : cs) {
    if (c.applicable && !c.holds) {
      if (!out.empty()) out += ", ";
      out += c.name;
    }
  }
  return out;
}

}  // namespace qf
