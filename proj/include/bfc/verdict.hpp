#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace bfc {

/// Outcome of checking one stated inequality or identity on one instance.
struct Verdict {
  std::string claim;
  std::string instance;
  bool holds = false;
  std::string lhs, rhs;
  std::vector<nlohmann::json> witnesses;

  nlohmann::json to_json() const {
    return {{"claim", claim}, {"instance", instance}, {"holds", holds},
            {"lhs", lhs},     {"rhs", rhs},           {"witnesses", witnesses}};
  }
};

}  // namespace bfc
