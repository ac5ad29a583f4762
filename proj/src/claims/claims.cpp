#include "bfc/claims/claims.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "bfc/claims/witnesses.hpp"
#include "bfc/core/families.hpp"
#include "bfc/core/io.hpp"
#include "bfc/core/readonce.hpp"
#include "bfc/experiments/experiments.hpp"
#include "bfc/measures/combinatorial.hpp"
#include "bfc/measures/lp_degrees.hpp"
#include "bfc/measures/ndeg.hpp"
#include "bfc/measures/report.hpp"
#include "bfc/measures/spectral.hpp"
#include "bfc/postsel/postselection.hpp"

namespace bfc {

namespace {

constexpr int kMonotoneEnumerationCap = 5;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

/// Splits a comma-separated list of function specs. A token starting with a digit
/// continues the `~i,j` input-negation list of the previous spec.
std::vector<std::string> split_specs(const std::string& s) {
  std::vector<std::string> out;
  for (const auto& tok : split(s, ',')) {
    if (!out.empty() && !tok.empty() && std::isdigit(static_cast<unsigned char>(tok[0])) &&
        out.back().find('~') != std::string::npos)
      out.back() += "," + tok;
    else
      out.push_back(tok);
  }
  return out;
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, "expected an integer, got '" + s + "'");
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_int(tok));
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

/// Smallest r with r * r >= m.
int ceil_sqrt(int m) {
  int r = 0;
  while (r * r < m) ++r;
  return r;
}

std::string str(int v) { return std::to_string(v); }

ReadOnceFormula formula_param(const std::string& params) {
  const std::string text = params.rfind("ro:", 0) == 0 ? params.substr(3) : params;
  ReadOnceFormula phi = parse_formula(text);
  validate(phi);
  return phi;
}

/// All monotone increasing functions on n variables, built from pairs f0 <= f1 on n-1.
std::vector<BitVector> monotone_tables(int n) {
  if (n == 0) return {BitVector(1), BitVector(1, true)};
  const auto smaller = monotone_tables(n - 1);
  const std::size_t half = std::size_t{1} << (n - 1);
  std::vector<BitVector> out;
  for (const auto& lo : smaller)
    for (const auto& hi : smaller) {
      BitVector above = lo;
      above &= ~hi;
      if (!above.none()) continue;
      BitVector t(2 * half);
      for (std::size_t x = 0; x < half; ++x) {
        if (lo.test(x)) t.set(x);
        if (hi.test(x)) t.set(x + half);
      }
      out.push_back(std::move(t));
    }
  return out;
}

/// `all:N` expands to every monotone function on N variables; anything else is a
/// single function spec that must be monotone.
std::vector<BooleanFunction> monotone_instances(const std::string& params) {
  if (params.rfind("all:", 0) == 0) {
    const int n = parse_int(params.substr(4));
    require(n >= 1, "all:N needs N >= 1");
    if (n > kMonotoneEnumerationCap)
      throw Error(ErrorCode::CapExceeded, "monotone enumeration supports N <= " + str(kMonotoneEnumerationCap));
    std::vector<BooleanFunction> out;
    for (auto& t : monotone_tables(n)) out.push_back(BooleanFunction::total(n, std::move(t)));
    return out;
  }
  auto f = parse_function_spec(params);
  require(f.is_total() && is_monotone(f), "function must be total and monotone increasing");
  return {f};
}

Verdict aggregate(const std::string& claim, const std::string& instance, const std::vector<BooleanFunction>& fs,
                  const std::function<bool(const BooleanFunction&, std::string&)>& holds_on) {
  Verdict v{claim, instance, true, "", "", {}};
  std::size_t good = 0;
  for (const auto& f : fs) {
    std::string detail;
    if (holds_on(f, detail)) {
      ++good;
    } else if (v.holds) {
      v.holds = false;
      v.witnesses.push_back({{"counterexample", function_to_json(f)}, {"detail", detail}});
    }
  }
  if (fs.size() == 1) {
    std::string detail;
    holds_on(fs[0], detail);
    const auto eq = detail.find(" vs ");
    v.lhs = detail.substr(0, eq);
    v.rhs = eq == std::string::npos ? "" : detail.substr(eq + 4);
  } else {
    v.lhs = std::to_string(good) + " of " + std::to_string(fs.size()) + " instances hold";
    v.rhs = std::to_string(fs.size()) + " of " + std::to_string(fs.size());
  }
  return v;
}

Verdict slice_bound(const std::string& params) {
  const auto f = parse_function_spec(params);
  require(!f.is_constant(), "function must be non-constant on its domain");
  const auto prof = slice_profile(f);
  const int bound = ceil_div(static_cast<int>(std::max(prof.zero_slices.size(), prof.one_slices.size())), 2);
  const auto r = rdeg(f);
  return {"lemma:3.1", params, r.value >= bound, "rdeg=" + str(r.value), "ceil(max(|S0|,|S1|)/2)=" + str(bound),
          {bfc::to_json(r.p), bfc::to_json(r.q)}};
}

Verdict symmetric_bound(const std::string& params) {
  const auto f = parse_function_spec(params);
  require(f.is_total() && is_symmetric(f) && !f.is_constant(), "function must be total, symmetric and non-constant");
  const int d = deg(f), bound = ceil_div(d + 1, 3);
  const auto r = rdeg(f);
  return {"prop:3.2", params, r.value >= bound, "rdeg=" + str(r.value), "ceil((deg+1)/3)=" + str(bound),
          {bfc::to_json(r.p), bfc::to_json(r.q)}};
}

Verdict middle_third_upper(const std::string& params) {
  const int n = parse_int(params);
  require(n >= 3 && n % 3 == 0 && n <= 12, "n must be a multiple of 3 in [3, 12]");
  const auto comp = mt_complement_witness(n);
  const auto exist = mt_existence_witness(n);
  const int r = rdeg(middle_third(n)).value;
  const int bound = n / 3 + 1;
  const bool holds = r <= bound && comp.degree() == bound && exist.degree() <= n / 3 &&
                     r <= std::max(comp.degree(), exist.degree()) && binomial_fact(n).holds;
  return {"prop:3.3", "n=" + str(n), holds, "rdeg=" + str(r), "n/3+1=" + str(bound), {bfc::to_json(comp), bfc::to_json(exist)}};
}

Verdict monotone_sensitivity(const std::string& params) {
  return aggregate("claim:3.8", params, monotone_instances(params), [](const BooleanFunction& f, std::string& d) {
    const int s0 = one_sided_sensitivity(f, false), s1 = one_sided_sensitivity(f, true);
    const int n0 = ndeg(negate_output(f)).value, n1 = ndeg(f).value;
    d = "s0=" + str(s0) + ",s1=" + str(s1) + " vs ndeg(complement)=" + str(n0) + ",ndeg=" + str(n1);
    return s0 <= n0 && s1 <= n1;
  });
}

Verdict monotone_equality(const std::string& params) {
  return aggregate("cor:3.9", params, monotone_instances(params), [](const BooleanFunction& f, std::string& d) {
    const int r = rdeg(f).value, s = sensitivity(f);
    d = "rdeg=" + str(r) + " vs s=" + str(s);
    return r == s;
  });
}

Verdict negation_invariance(const std::string& params) {
  const auto at = params.rfind('@');
  require(at != std::string::npos, "parameters are SPEC@i,j,... (1-based inputs to negate)");
  const auto f = parse_function_spec(params.substr(0, at));
  VarSet mask = 0;
  for (int i : parse_ints(params.substr(at + 1))) {
    require(i >= 1 && i <= f.num_vars(), "negated input out of range");
    mask |= VarSet{1} << (i - 1);
  }
  const int a = rdeg(f).value, b = rdeg(negate_inputs(f, mask)).value;
  return {"claim:3.10", params, a == b, "rdeg(f)=" + str(a), "rdeg(f')=" + str(b), {}};
}

Verdict unate_bound(const std::string& params) {
  const auto f = parse_function_spec(params);
  require(f.is_total() && is_unate(f), "function must be total and unate");
  const int d = deg(f), bound = ceil_sqrt(d), r = rdeg(f).value;
  return {"cor:3.11", params, r >= bound, "rdeg=" + str(r), "ceil(sqrt(deg))=" + str(bound), {}};
}

Verdict trickle_down(const std::string& params) {
  const auto specs = split_specs(params);
  require(specs.size() >= 2, "parameters are OUTER,INNER1,...,INNERm");
  const auto outer = parse_function_spec(specs[0]);
  std::vector<BooleanFunction> inner;
  for (std::size_t i = 1; i < specs.size(); ++i) inner.push_back(parse_function_spec(specs[i]));
  require(static_cast<int>(inner.size()) == outer.num_vars(), "need one inner function per outer variable");
  auto all_relevant = [](const BooleanFunction& g) {
    return g.is_total() && relevant_vars(g) == static_cast<VarSet>((std::uint64_t{1} << g.num_vars()) - 1);
  };
  require(all_relevant(outer), "every variable of the outer function must be relevant");
  int rhs = rdeg(outer).value;
  for (const auto& g : inner) {
    require(all_relevant(g), "every variable of each inner function must be relevant");
    rhs = std::max(rhs, rdeg(g).value);
  }
  const int lhs = rdeg(compose_disjoint(outer, inner)).value;
  return {"lemma:3.12", params, lhs >= rhs, "rdeg(h)=" + str(lhs), "max rdeg of parts=" + str(rhs), {}};
}

Verdict branching_bound(const std::string& params) {
  const auto phi = formula_param(params);
  const auto st = readonce_stats(phi);
  const int r = rdeg(readonce_to_function(phi)).value, bound = ceil_div(st.max_branching, 2);
  return {"lemma:3.13", params, r >= bound, "rdeg=" + str(r), "ceil(w/2)=" + str(bound) + " (w=" + str(st.max_branching) + ")", {}};
}

bool covers_leaves(const ReadOnceStats& st) {
  double leaves = 1;
  for (int i = 0; i < st.depth; ++i) leaves *= st.max_branching;
  return leaves >= st.num_vars;
}

BooleanFunction gate_function(const ReadOnceFormula& node) {
  const int w = static_cast<int>(node.children().size());
  std::vector<ReadOnceFormula> leaves;
  for (int i = 0; i < w; ++i) leaves.push_back(ReadOnceFormula::leaf(i));
  switch (node.kind()) {
    case ReadOnceFormula::Kind::Not: return readonce_to_function(ReadOnceFormula::negation(std::move(leaves[0])));
    case ReadOnceFormula::Kind::Thr: return readonce_to_function(ReadOnceFormula::threshold(node.k(), std::move(leaves)));
    case ReadOnceFormula::Kind::Sym: return readonce_to_function(ReadOnceFormula::symmetric(node.spectrum(), std::move(leaves)));
    case ReadOnceFormula::Kind::And: return readonce_to_function(ReadOnceFormula::conjunction(std::move(leaves)));
    case ReadOnceFormula::Kind::Or: return readonce_to_function(ReadOnceFormula::disjunction(std::move(leaves)));
    case ReadOnceFormula::Kind::Parity: return readonce_to_function(ReadOnceFormula::exclusive_or(std::move(leaves)));
    case ReadOnceFormula::Kind::Leaf: break;
  }
  throw Error(ErrorCode::Internal, "leaf has no gate function");
}

/// Largest lower bound implied by a single gate: the slice bound for a symmetric
/// gate of fan-in w, and ceil(sqrt(deg)) when the gate is also unate.
int gate_bound(const ReadOnceFormula& node) {
  if (node.kind() == ReadOnceFormula::Kind::Leaf) return 0;
  int best = 0;
  for (const auto& c : node.children()) best = std::max(best, gate_bound(c));
  const auto g = gate_function(node);
  const auto prof = slice_profile(g);
  int b = ceil_div(static_cast<int>(std::max(prof.zero_slices.size(), prof.one_slices.size())), 2);
  if (is_unate(g)) b = std::max(b, ceil_sqrt(deg(g)));
  return std::max(best, b);
}

Verdict depth_bound_symmetric(const std::string& params) {
  const auto phi = formula_param(params);
  const auto st = readonce_stats(phi);
  const int r = rdeg(readonce_to_function(phi)).value, bound = ceil_div(st.max_branching + 1, 4);
  return {"cor:3.14", params, covers_leaves(st) && r >= bound, "rdeg=" + str(r),
          "ceil((w+1)/4)=" + str(bound) + " with w^depth >= m (w=" + str(st.max_branching) + ", depth=" + str(st.depth) +
              ", m=" + str(st.num_vars) + ")",
          {}};
}

Verdict depth_bound_mixed(const std::string& params) {
  const auto phi = formula_param(params);
  const auto st = readonce_stats(phi);
  const int r = rdeg(readonce_to_function(phi)).value, bound = gate_bound(phi);
  return {"cor:3.15", params, covers_leaves(st) && r >= bound, "rdeg=" + str(r),
          "max gate bound=" + str(bound) + " with w^depth >= m", {}};
}

bool threshold_only(const ReadOnceFormula& node) {
  switch (node.kind()) {
    case ReadOnceFormula::Kind::Sym:
    case ReadOnceFormula::Kind::Parity: return false;
    default: break;
  }
  return std::all_of(node.children().begin(), node.children().end(), threshold_only);
}

Verdict threshold_formula_bound(const std::string& params) {
  const auto phi = formula_param(params);
  require(threshold_only(phi), "formula may only use thr, and, or and not gates");
  const int m = readonce_stats(phi).num_vars, r = rdeg(readonce_to_function(phi)).value, bound = ceil_sqrt(m);
  return {"cor:3.16", params, r >= bound, "rdeg=" + str(r), "ceil(sqrt(m))=" + str(bound), {}};
}

Verdict census_claim(const std::string& params) {
  const auto v = parse_ints(params);
  require(v.size() == 3 && v[1] >= 1 && v[2] >= 0, "parameters are n,count,seed");
  const auto c = census(v[0], static_cast<std::size_t>(v[1]), static_cast<std::uint64_t>(v[2]));
  const Rational frac = c.fraction_at_least.at(c.threshold);
  return {"cor:3.20", params, frac == 1, "fraction with rdeg >= " + str(c.threshold) + " = " + frac.get_str(), "1",
          {c.to_json()}};
}

std::pair<BooleanFunction, BooleanFunction> two_functions(const std::string& params) {
  const auto specs = split_specs(params);
  require(specs.size() == 2, "parameters are F,G");
  auto f = parse_function_spec(specs[0]), g = parse_function_spec(specs[1]);
  require(f.is_total() && g.is_total() && !f.is_constant() && !g.is_constant(), "f and g must be total and non-constant");
  return {f, g};
}

Verdict and_composition(const std::string& params) {
  const auto [f, g] = two_functions(params);
  const int lhs = ndeg(and_compose(f, g)).value, a = ndeg(f).value, b = ndeg(g).value;
  return {"prop:4.1", params, lhs == a + b, "ndeg(f and g)=" + str(lhs), "ndeg(f)+ndeg(g)=" + str(a + b), {}};
}

Verdict or_composition(const std::string& params) {
  const auto [f, g] = two_functions(params);
  const int lhs = ndeg(or_compose(f, g)).value, a = ndeg(f).value, b = ndeg(g).value;
  return {"prop:4.3", params, lhs == std::max(a, b), "ndeg(f or g)=" + str(lhs), "max(ndeg f, ndeg g)=" + str(std::max(a, b)), {}};
}

Verdict composition_rdeg(const std::string& params) {
  const auto [f, g] = two_functions(params);
  const int nf = ndeg(f).value, ng = ndeg(g).value;
  const int nfb = ndeg(negate_output(f)).value, ngb = ndeg(negate_output(g)).value;
  const int r_and = rdeg(and_compose(f, g)).value, r_or = rdeg(or_compose(f, g)).value;
  const int e_and = std::max({nf + ng, nfb, ngb}), e_or = std::max({nf, ng, nfb + ngb});
  return {"cor:4.4", params, r_and == e_and && r_or == e_or,
          "rdeg(f and g)=" + str(r_and) + ", rdeg(f or g)=" + str(r_or),
          "max(nf+ng, nf', ng')=" + str(e_and) + ", max(nf, ng, nf'+ng')=" + str(e_or), {}};
}

Verdict avoidance_claim(const std::string& params) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : split(params, ';')) {
    std::vector<Rational> row;
    for (const auto& x : split(r, ',')) row.push_back(parse_exact(x));
    rows.push_back(std::move(row));
  }
  const auto alpha = avoidance_combine(rows);
  bool holds = std::all_of(alpha.begin(), alpha.end(), [](const Rational& a) { return a > 0; });
  std::string combo;
  for (std::size_t y = 0; y < rows[0].size(); ++y) {
    Rational s = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) s += alpha[i] * rows[i][y];
    holds = holds && s != 0;
    combo += (y ? "," : "") + s.get_str();
  }
  std::string weights;
  for (std::size_t i = 0; i < alpha.size(); ++i) weights += (i ? "," : "") + alpha[i].get_str();
  return {"lemma:4.2", params, holds, "alpha=(" + weights + ")", "combination=(" + combo + ") all nonzero", {}};
}

Verdict separation_claim(const std::string& params) {
  const int n = parse_int(params);
  const auto rep = separation_report(n);
  const double scale = std::pow(n, 1.5);
  const int r = rep["rdeg"], d = rep["deg"], s = rep["s"];
  const double lo = rep["lambda"]["lower"]["float"], hi = rep["lambda"]["upper"]["float"];
  const bool holds = r == n && d == n * n && 2 * s >= n * n - 2 * n && lo >= scale / 2 - 1e-6 && hi <= scale + 1e-6;
  return {"prop:5.2", "n=" + str(n), holds,
          "rdeg=" + str(r) + ", deg=" + str(d) + ", s=" + str(s) + ", lambda in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
          "rdeg=" + str(n) + ", deg=" + str(n * n) + ", s>=" + str((n * n - 2 * n) / 2) + ", lambda in [" +
              std::to_string(scale / 2) + ", " + std::to_string(scale) + "]",
          {rep}};
}

Verdict majority_or_none_claim(const std::string& params) {
  const int n = parse_int(params);
  require(n >= 2 && n % 2 == 0, "n must be even");
  const int bound = ceil_div(n / 2 + 1, 2);
  const auto r = rdeg(majority_or_none(n));
  return {"thm:6.1", "n=" + str(n), r.value >= bound, "rdeg=" + str(r.value), "ceil((n/2+1)/2)=" + str(bound),
          {bfc::to_json(r.p), bfc::to_json(r.q)}};
}

Verdict balanced_halves_claim(const std::string& params) {
  const auto v = parse_ints(params.empty() ? "6,10" : params);
  require(v.size() == 2 && v[0] < v[1], "parameters are n1,n2 with n1 < n2");
  bool holds = true;
  std::vector<nlohmann::json> wit;
  std::vector<int> adeg;
  for (int n : v) {
    const auto [p, q] = bi_rational_witness(n);
    holds = holds && std::max(p.degree(), q.degree()) <= 1;
    const auto [sp, sq] = to_sign_representation(p, q);
    const auto cert = certify_error(balanced_halves(n), sp, sq);
    holds = holds && cert.max_error == 0 && cert.postq_bound <= 2;
    adeg.push_back(approx_degree(balanced_halves(n)).value);
    wit.push_back({{"n", n}, {"p", bfc::to_json(p)}, {"q", bfc::to_json(q)}, {"postselection", cert.to_json()}});
  }
  holds = holds && adeg[0] >= 2 && adeg[0] < adeg[1];
  return {"lemma:6.4", params.empty() ? "6,10" : params, holds, "adeg(BI_" + str(v[0]) + ")=" + str(adeg[0]),
          "adeg(BI_" + str(v[1]) + ")=" + str(adeg[1]), wit};
}

Verdict and_or_dimension_claim(const std::string& params) {
  const auto phi = formula_param(params);
  require(threshold_only(phi), "formula may only use thr, and, or and not gates");
  const auto f = readonce_to_function(phi);
  const int m = readonce_stats(phi).num_vars, a = and_dimension(f), o = or_dimension(f);
  return {"prop:B.1", params, a * o >= m, "dimand*dimor=" + str(a) + "*" + str(o) + "=" + str(a * o), "m=" + str(m), {}};
}

Verdict sequence_claim(const std::string& params) {
  const auto parts = split(params, ';');
  require(parts.size() == 3, "parameters are x1,..,xn;y1,..,yn;k");
  std::vector<Rational> x, y;
  for (const auto& t : split(parts[0], ',')) x.push_back(parse_exact(t));
  for (const auto& t : split(parts[1], ',')) y.push_back(parse_exact(t));
  Verdict v = sequence_inequality(x, y, parse_int(parts[2]));
  v.instance = params;
  return v;
}

Verdict binomial_claim(const std::string& params) { return binomial_fact(parse_int(params)); }

struct Entry {
  ClaimInfo info;
  std::function<Verdict(const std::string&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"lemma:3.1", "rdeg at least half the number of constant full slices", "SPEC"}, slice_bound},
      {{"prop:3.2", "symmetric total functions: rdeg >= (deg+1)/3", "SPEC"}, symmetric_bound},
      {{"prop:3.3", "middle-third function: rdeg <= n/3 + 1 with explicit witnesses", "N"}, middle_third_upper},
      {{"fact:3.7", "outer slices are outweighed by the lower third", "N"}, binomial_claim},
      {{"claim:3.8", "monotone: one-sided sensitivity at most ndeg", "SPEC or all:N"}, monotone_sensitivity},
      {{"cor:3.9", "monotone: rdeg equals sensitivity", "SPEC or all:N"}, monotone_equality},
      {{"claim:3.10", "rdeg invariant under input negation", "SPEC@i,j,..."}, negation_invariance},
      {{"cor:3.11", "unate: rdeg >= sqrt(deg)", "SPEC"}, unate_bound},
      {{"lemma:3.12", "composition does not lower rdeg", "OUTER,INNER1,...,INNERm"}, trickle_down},
      {{"lemma:3.13", "symmetric-gate read-once: rdeg >= ceil(w/2)", "FORMULA"}, branching_bound},
      {{"cor:3.14", "symmetric-gate read-once: depth forces a wide gate", "FORMULA"}, depth_bound_symmetric},
      {{"cor:3.15", "symmetric or unate gates: widest gate bounds rdeg", "FORMULA"}, depth_bound_mixed},
      {{"cor:3.16", "read-once threshold formula: rdeg >= sqrt(m)", "FORMULA"}, threshold_formula_bound},
      {{"cor:3.20", "random functions have rdeg above the census threshold", "N,COUNT,SEED"}, census_claim},
      {{"prop:4.1", "ndeg adds under AND", "F,G"}, and_composition},
      {{"lemma:4.2", "positive combination avoiding every column", "ROW;ROW;..."}, avoidance_claim},
      {{"prop:4.3", "ndeg takes the max under OR", "F,G"}, or_composition},
      {{"cor:4.4", "rdeg of AND and OR compositions from ndeg values", "F,G"}, composition_rdeg},
      {{"prop:5.2", "AND of off-middle functions separates rdeg from lambda", "N (2 or 4)"}, separation_claim},
      {{"thm:6.1", "majority-or-none has large rdeg", "N"}, majority_or_none_claim},
      {{"lemma:6.4", "balanced halves: rdeg 1, zero-error post-selection, growing adeg", "N1,N2"}, balanced_halves_claim},
      {{"prop:B.1", "read-once threshold: dimand * dimor >= m", "FORMULA"}, and_or_dimension_claim},
      {{"fact:B.2", "sorted prefix sums dominate the inner product", "X;Y;K"}, sequence_claim},
  };
  return table;
}

struct SuiteCase {
  std::string claim, params;
  int size;
};

const std::vector<SuiteCase>& suite() {
  static const std::vector<SuiteCase> cases = {
      {"lemma:3.1", "parity:3", 3},
      {"lemma:3.1", "majn:4", 4},
      {"lemma:3.1", "mt:6", 6},
      {"prop:3.2", "mt:3", 3},
      {"prop:3.2", "parity:4", 4},
      {"prop:3.2", "eh:6", 6},
      {"prop:3.3", "3", 3},
      {"prop:3.3", "6", 6},
      {"prop:3.3", "9", 9},
      {"fact:3.7", "9", 1},
      {"fact:3.7", "60", 1},
      {"claim:3.8", "all:3", 3},
      {"claim:3.8", "andor:2x2", 4},
      {"cor:3.9", "all:3", 3},
      {"cor:3.9", "all:4", 4},
      {"claim:3.10", "mt:3@1", 3},
      {"claim:3.10", "thr:2:4@1,3", 4},
      {"cor:3.11", "and:3~2", 3},
      {"cor:3.11", "andor:2x2~1,3", 4},
      {"lemma:3.12", "and:2,or:2,parity:2", 4},
      {"lemma:3.13", "sym[0110](x1,x2,x3)", 3},
      {"lemma:3.13", "xor(and(x1,x2),x3,x4)", 4},
      {"cor:3.14", "and(or(x1,x2),or(x3,x4))", 4},
      {"cor:3.15", "xor(thr2(x1,x2,x3),x4)", 4},
      {"cor:3.16", "thr2(x1,x2,not(x3))", 3},
      {"cor:3.16", "and(or(x1,x2),thr2(x3,x4,x5))", 5},
      {"cor:3.20", "4,20,1", 4},
      {"prop:4.1", "or:2,and:2", 4},
      {"lemma:4.2", "1,0;0,1", 1},
      {"lemma:4.2", "1,-1;1,1", 1},
      {"prop:4.3", "or:2,and:2", 4},
      {"prop:4.3", "parity:2,and:2", 4},
      {"cor:4.4", "or:2,and:2", 4},
      {"cor:4.4", "mt:3,parity:2", 5},
      {"prop:5.2", "2", 4},
      {"prop:5.2", "4", 16},
      {"thm:6.1", "4", 4},
      {"thm:6.1", "8", 8},
      {"lemma:6.4", "6,10", 10},
      {"prop:B.1", "and(or(x1,x2),thr2(x3,x4,x5))", 5},
      {"fact:B.2", "1,1;1,1;1", 1},
  };
  return cases;
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

Verdict check(const std::string& claim_id, const std::string& params) {
  for (const auto& e : entries())
    if (e.info.id == claim_id) return e.run(params);
  throw Error(ErrorCode::UnknownClaim, "no checker for '" + claim_id + "'");
}

std::vector<Verdict> check_all(int max_size) {
  std::vector<Verdict> out;
  for (const auto& c : suite())
    if (c.size <= max_size) out.push_back(check(c.claim, c.params));
  return out;
}

}  // namespace bfc
