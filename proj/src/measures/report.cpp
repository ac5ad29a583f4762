#include "bfc/measures/report.hpp"

#include <functional>
#include <map>

#include "bfc/measures/combinatorial.hpp"
#include "bfc/measures/lp_degrees.hpp"
#include "bfc/measures/ndeg.hpp"
#include "bfc/measures/spectral.hpp"

namespace bfc {

nlohmann::json rational_json(const Rational& r) {
  return {{"num", numerator_string(r)}, {"den", denominator_string(r)}, {"float", r.get_d()}};
}

Rational parse_exact(const std::string& text) {
  const auto fail = [&] { return Error(ErrorCode::ParseError, "not an exact number: '" + text + "'"); };
  if (text.empty()) throw fail();
  const auto dot = text.find('.');
  std::string digits = text;
  std::size_t places = 0;
  if (dot != std::string::npos) {
    if (text.find('/') != std::string::npos) throw fail();
    digits = text.substr(0, dot) + text.substr(dot + 1);
    places = text.size() - dot - 1;
  }
  Rational r;
  try {
    r = Rational(digits, 10);
  } catch (const std::invalid_argument&) {
    throw fail();
  }
  if (r.get_den() == 0) throw fail();
  r.canonicalize();
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  return Rational(r / scale);
}

nlohmann::json MeasureReport::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : entries) out.push_back({{"measure", e.name}, {"result", e.result}});
  return out;
}

namespace {

using Runner = std::function<nlohmann::json(const BooleanFunction&, const std::string& arg)>;

nlohmann::json plain(int v) { return {{"value", v}}; }

void no_argument(const std::string& name, const std::string& arg) {
  if (!arg.empty()) throw Error(ErrorCode::ParseError, "measure '" + name + "' takes no argument");
}

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table = {
      {"deg", [](const BooleanFunction& f, const std::string&) { return plain(deg(f)); }},
      {"ndeg",
       [](const BooleanFunction& f, const std::string&) {
         const auto r = ndeg(f);
         return nlohmann::json{{"value", r.value}, {"witness", bfc::to_json(r.witness)}, {"domain_only", !f.is_total()}};
       }},
      {"rdeg",
       [](const BooleanFunction& f, const std::string&) {
         const auto r = rdeg(f);
         return nlohmann::json{{"value", r.value}, {"p", bfc::to_json(r.p)}, {"q", bfc::to_json(r.q)}, {"domain_only", !f.is_total()}};
       }},
      {"s",
       [](const BooleanFunction& f, const std::string&) {
         return nlohmann::json{{"value", sensitivity(f)},
                               {"s0", one_sided_sensitivity(f, false)},
                               {"s1", one_sided_sensitivity(f, true)},
                               {"domain_only", !f.is_total()}};
       }},
      {"bs", [](const BooleanFunction& f, const std::string&) { return plain(block_sensitivity(f)); }},
      {"cert",
       [](const BooleanFunction& f, const std::string&) {
         const auto c = certificate_complexity(f);
         return nlohmann::json{{"value", c.value}, {"c0", c.zero}, {"c1", c.one}};
       }},
      {"signdeg",
       [](const BooleanFunction& f, const std::string&) {
         const auto r = sign_degree(f);
         return nlohmann::json{{"value", r.value}, {"witness", bfc::to_json(r.witness)}};
       }},
      {"adeg",
       [](const BooleanFunction& f, const std::string& arg) {
         const Rational eps = arg.empty() ? make_rational(1, 3) : parse_exact(arg);
         const auto r = approx_degree(f, eps);
         return nlohmann::json{{"value", r.value}, {"eps", rational_json(eps)}, {"witness", bfc::to_json(r.witness)}};
       }},
      {"lambda",
       [](const BooleanFunction& f, const std::string& arg) {
         double tol = kSpectralTolerance;
         if (!arg.empty()) {
           try {
             std::size_t used = 0;
             tol = std::stod(arg, &used);
             if (used != arg.size()) throw std::invalid_argument(arg);
           } catch (const std::exception&) {
             throw Error(ErrorCode::ParseError, "bad tolerance '" + arg + "'");
           }
         }
         const auto r = spectral_sensitivity(f, tol);
         return nlohmann::json{{"value", r.lambda},
                               {"lower", rational_json(r.lower)},
                               {"upper", rational_json(r.upper)},
                               {"tol", tol},
                               {"iterations", r.iterations}};
       }},
      {"dimand", [](const BooleanFunction& f, const std::string&) { return plain(and_dimension(f)); }},
      {"dimor", [](const BooleanFunction& f, const std::string&) { return plain(or_dimension(f)); }},
  };
  return table;
}

}  // namespace

MeasureReport compute_measures(const BooleanFunction& f, const std::vector<std::string>& names) {
  std::vector<std::pair<const Runner*, std::string>> plan;
  for (const auto& name : names) {
    const auto colon = name.find(':');
    const std::string key = name.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
    const auto it = runners().find(key);
    if (it == runners().end()) throw Error(ErrorCode::ParseError, "unknown measure '" + name + "'");
    if (key != "adeg" && key != "lambda") no_argument(key, arg);
    plan.emplace_back(&it->second, arg);
  }
  MeasureReport report;
  for (std::size_t i = 0; i < names.size(); ++i) {
    try {
      report.entries.push_back({names[i], (*plan[i].first)(f, plan[i].second)});
    } catch (const Error& e) {
      if (e.code() == ErrorCode::PartialNotSupported)
        throw Error(ErrorCode::PartialNotSupported, "measure '" + names[i] + "' is undefined for partial functions");
      throw;
    }
  }
  return report;
}

}  // namespace bfc
