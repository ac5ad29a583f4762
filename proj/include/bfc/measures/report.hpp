#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "bfc/core/boolean_function.hpp"
#include "bfc/rational.hpp"

namespace bfc {

/// {"num": "..", "den": "..", "float": double}
nlohmann::json rational_json(const Rational& r);

/// Parses "1/3", "0.25" or "2" exactly. Throws ParseError.
Rational parse_exact(const std::string& text);

struct MeasureEntry {
  std::string name;  // as requested, e.g. "adeg:1/4"
  nlohmann::json result;
};

/// Results in request order; only requested measures are present.
struct MeasureReport {
  std::vector<MeasureEntry> entries;
  nlohmann::json to_json() const;
};

/// Names: deg, ndeg, rdeg, s, bs, cert, signdeg, adeg[:eps], lambda[:tol], dimand,
/// dimor. Unknown names throw ParseError before anything is computed.
MeasureReport compute_measures(const BooleanFunction& f, const std::vector<std::string>& names);

}  // namespace bfc
