#pragma once

#include <string>
#include <vector>

#include "bfc/verdict.hpp"

namespace bfc {

struct ClaimInfo {
  std::string id;
  std::string title;
  std::string params;  // parameter syntax
};

/// Registered claim checkers in a fixed order.
const std::vector<ClaimInfo>& claim_registry();

/// Runs one checker. Throws UnknownClaim, ParseError / BadParams on bad parameters,
/// CapExceeded when the instance is too large.
Verdict check(const std::string& claim_id, const std::string& params);

/// The shipped regression instances whose variable count is at most max_size.
std::vector<Verdict> check_all(int max_size);

}  // namespace bfc
