#include "bfc/cli/cli.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bfc/claims/claims.hpp"
#include "bfc/claims/witnesses.hpp"
#include "bfc/core/io.hpp"
#include "bfc/experiments/experiments.hpp"
#include "bfc/measures/report.hpp"

namespace bfc {

namespace {

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded: return kExitCap;
    case ErrorCode::PartialNotSupported: return kExitPartial;
    case ErrorCode::Internal: return kExitInternal;
    default: return kExitParse;
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

struct Options {
  std::string out_path;
  std::string format = "json";
  bool deterministic = false;

  std::string func, measures;
  std::string claim, params;
  bool all = false;
  int max_size = 20;
  int n = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string name, family;
};

class Emitter {
 public:
  Emitter(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  void json(nlohmann::json j) const {
    if (!opt_.deterministic) j["timestamp"] = utc_timestamp();
    text(j.dump(2) + "\n");
  }

  void text(const std::string& s) const {
    if (opt_.out_path.empty())
      out_ << s;
    else
      write_file_atomic(opt_.out_path, s);
  }

  bool csv() const { return opt_.format == "csv"; }

 private:
  const Options& opt_;
  std::ostream& out_;
};

int run_measure(const Options& opt, const Emitter& emit) {
  const auto names = split_list(opt.measures);
  if (names.empty()) throw Error(ErrorCode::ParseError, "--measures is empty");
  const auto f = parse_function_spec(opt.func);
  const auto report = compute_measures(f, names);
  if (emit.csv()) {
    std::string s = "measure,value\n";
    for (const auto& e : report.entries) s += csv_field(e.name) + "," + e.result.at("value").dump() + "\n";
    emit.text(s);
  } else {
    emit.json({{"function", opt.func}, {"n", f.num_vars()}, {"total", f.is_total()}, {"measures", report.to_json()}});
  }
  return kExitOk;
}

int run_verify(const Options& opt, const Emitter& emit) {
  if (opt.all == !opt.claim.empty()) throw Error(ErrorCode::ParseError, "give exactly one of --claim or --all");
  const auto verdicts = opt.all ? check_all(opt.max_size) : std::vector<Verdict>{check(opt.claim, opt.params)};
  bool all_hold = true;
  for (const auto& v : verdicts) all_hold = all_hold && v.holds;
  if (emit.csv()) {
    std::string s = "claim,instance,holds,lhs,rhs\n";
    for (const auto& v : verdicts)
      s += csv_field(v.claim) + "," + csv_field(v.instance) + "," + (v.holds ? "true" : "false") + "," + csv_field(v.lhs) +
           "," + csv_field(v.rhs) + "\n";
    emit.text(s);
  } else {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : verdicts) arr.push_back(v.to_json());
    emit.json({{"verdicts", arr}, {"all_hold", all_hold}});
  }
  return all_hold ? kExitOk : kExitVerdictFailed;
}

int run_census(const Options& opt, const Emitter& emit) {
  const auto r = census(opt.n, opt.count, opt.seed, opt.threads);
  if (emit.csv())
    emit.text(r.to_csv());
  else
    emit.json(r.to_json());
  return kExitOk;
}

std::vector<int> int_params(const std::string& params, std::size_t expected) {
  std::vector<int> out;
  for (const auto& tok : split_list(params)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad integer parameter '" + tok + "'");
    }
  }
  if (out.size() != expected)
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(expected) + " integer parameter(s)");
  return out;
}

int run_witness(const Options& opt, const Emitter& emit) {
  if (emit.csv()) throw Error(ErrorCode::ParseError, "witness output is JSON only");
  nlohmann::json j{{"name", opt.name}, {"params", opt.params}};
  if (opt.name == "andor") {
    const auto v = int_params(opt.params, 2);
    const auto [p, q] = andor_rational_rep(v[0], v[1]);
    j["p"] = to_json(p);
    j["q"] = to_json(q);
  } else if (opt.name == "bi") {
    const auto [p, q] = bi_rational_witness(int_params(opt.params, 1)[0]);
    j["p"] = to_json(p);
    j["q"] = to_json(q);
  } else if (opt.name == "ehbar") {
    j["polynomial"] = to_json(ehbar_witness(int_params(opt.params, 1)[0]));
  } else if (opt.name == "mt-complement") {
    j["polynomial"] = to_json(mt_complement_witness(int_params(opt.params, 1)[0]));
  } else if (opt.name == "mt-existence") {
    j["polynomial"] = to_json(mt_existence_witness(int_params(opt.params, 1)[0]));
  } else {
    throw Error(ErrorCode::ParseError, "unknown witness '" + opt.name + "' (andor, bi, ehbar, mt-complement, mt-existence)");
  }
  emit.json(j);
  return kExitOk;
}

int run_report(const Options& opt, const Emitter& emit) {
  if (emit.csv()) throw Error(ErrorCode::ParseError, "report output is JSON only");
  if (opt.family != "sep5.2") throw Error(ErrorCode::ParseError, "unknown report family '" + opt.family + "'");
  auto j = separation_report(opt.n);
  j["family"] = opt.family;
  emit.json(j);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact complexity measures of Boolean functions", "bfc"};
  app.require_subcommand(1, 1);
  app.add_option("--out", opt.out_path, "Write the result to this file (atomically)");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--deterministic", opt.deterministic, "Omit the timestamp field");

  auto* measure = app.add_subcommand("measure", "Compute measures of one function");
  measure->add_option("--func", opt.func, "Function spec, e.g. thr:2:5 or file:f.json")->required();
  measure->add_option("--measures", opt.measures, "Comma list: deg,ndeg,rdeg,s,bs,cert,signdeg,adeg[:eps],lambda[:tol],dimand,dimor")
      ->required();

  auto* verify = app.add_subcommand("verify", "Run claim checkers");
  auto* claim = verify->add_option("--claim", opt.claim, "Claim id");
  verify->add_option("--params", opt.params, "Checker parameters");
  auto* all = verify->add_flag("--all", opt.all, "Run the regression suite");
  verify->add_option("--max-size", opt.max_size, "Largest instance size in the suite");
  claim->excludes(all);

  auto* census_cmd = app.add_subcommand("census", "Random-function rdeg census");
  census_cmd->add_option("--n", opt.n, "Variables")->required();
  census_cmd->add_option("--count", opt.count, "Samples")->required();
  census_cmd->add_option("--seed", opt.seed, "Seed")->required();
  census_cmd->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");

  auto* witness = app.add_subcommand("witness", "Emit an explicit witness polynomial");
  witness->add_option("--name", opt.name, "andor, bi, ehbar, mt-complement or mt-existence")->required();
  witness->add_option("--params", opt.params, "Comma list of integers")->required();

  auto* report = app.add_subcommand("report", "Measure row of a named family");
  report->add_option("--family", opt.family, "sep5.2")->required();
  report->add_option("--n", opt.n, "Size parameter")->required();

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--out", opt.out_path, "Write the result to this file (atomically)");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--deterministic", opt.deterministic, "Omit the timestamp field");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  const Emitter emit(opt, out);
  try {
    if (measure->parsed()) return run_measure(opt, emit);
    if (verify->parsed()) return run_verify(opt, emit);
    if (census_cmd->parsed()) return run_census(opt, emit);
    if (witness->parsed()) return run_witness(opt, emit);
    return run_report(opt, emit);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace bfc
