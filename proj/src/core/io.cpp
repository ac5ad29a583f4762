#include "bfc/core/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "bfc/core/families.hpp"
#include "bfc/core/readonce.hpp"

namespace bfc {

nlohmann::json function_to_json(const BooleanFunction& f) {
  return {{"n", f.num_vars()}, {"domain", f.domain().to_hex()}, {"values", f.values().to_hex()}};
}

BooleanFunction function_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    check_arity(n);
    const std::size_t size = std::size_t{1} << n;
    BitVector domain = BitVector::from_hex(j.at("domain").get<std::string>(), size);
    BitVector values = BitVector::from_hex(j.at("values").get<std::string>(), size);
    return BooleanFunction::make(n, std::move(domain), std::move(values));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("truth-table JSON: ") + e.what());
  }
}

BooleanFunction read_function_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return function_from_json(j);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw Error(ErrorCode::ParseError, "write failed for " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int to_int(const std::string& s, const std::string& spec) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error(ErrorCode::ParseError, "bad number '" + s + "' in function spec '" + spec + "'");
  return std::stoi(s);
}

/// Recognizes a trailing `~1,3,4` and returns the position of '~', or npos.
std::size_t negation_suffix(const std::string& s) {
  const std::size_t pos = s.rfind('~');
  if (pos == std::string::npos || pos + 1 == s.size()) return std::string::npos;
  for (std::size_t i = pos + 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != ',') return std::string::npos;
  return pos;
}

BooleanFunction parse_body(const std::string& body, const std::string& spec) {
  const std::size_t colon = body.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "function spec '" + spec + "' lacks ':'");
  const std::string name = body.substr(0, colon);
  const std::string rest = body.substr(colon + 1);
  if (name == "file") return read_function_file(rest);
  if (name == "ro") return readonce_to_function(parse_formula(rest));
  std::vector<int> params;
  if (name == "andor") {
    const auto parts = split(rest, 'x');
    if (parts.size() != 2) throw Error(ErrorCode::ParseError, "andor expects AxB in '" + spec + "'");
    for (const auto& p : parts) params.push_back(to_int(p, spec));
  } else {
    for (const auto& p : split(rest, ':')) params.push_back(to_int(p, spec));
  }
  return family(name, params);
}

}  // namespace

BooleanFunction parse_function_spec(const std::string& spec) {
  std::string s = spec;
  bool negate = false;
  while (!s.empty() && s.front() == '!') {
    negate = !negate;
    s.erase(0, 1);
  }
  VarSet flips = 0;
  if (const std::size_t tilde = negation_suffix(s); tilde != std::string::npos) {
    for (const auto& item : split(s.substr(tilde + 1), ',')) {
      const int v = to_int(item, spec);
      if (v < 1 || v > kMaxVars) throw Error(ErrorCode::ParseError, "negated variable out of range in '" + spec + "'");
      flips |= VarSet{1} << (v - 1);
    }
    s.erase(tilde);
  }
  BooleanFunction f = parse_body(s, spec);
  if (flips) {
    if (f.num_vars() < 32 && (flips >> f.num_vars()) != 0)
      throw Error(ErrorCode::ParseError, "negated variable exceeds arity in '" + spec + "'");
    f = negate_inputs(f, flips);
  }
  return negate ? negate_output(f) : f;
}

}  // namespace bfc
