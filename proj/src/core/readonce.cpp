#include "bfc/core/readonce.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace bfc {

ReadOnceFormula ReadOnceFormula::leaf(int var) {
  ReadOnceFormula f;
  f.kind_ = Kind::Leaf;
  f.var_ = var;
  return f;
}

ReadOnceFormula ReadOnceFormula::negation(ReadOnceFormula child) {
  ReadOnceFormula f;
  f.kind_ = Kind::Not;
  f.children_.push_back(std::move(child));
  return f;
}

ReadOnceFormula ReadOnceFormula::threshold(int k, std::vector<ReadOnceFormula> children) {
  ReadOnceFormula f;
  f.kind_ = Kind::Thr;
  f.k_ = k;
  f.children_ = std::move(children);
  return f;
}

ReadOnceFormula ReadOnceFormula::symmetric(std::vector<bool> spectrum, std::vector<ReadOnceFormula> children) {
  ReadOnceFormula f;
  f.kind_ = Kind::Sym;
  f.spectrum_ = std::move(spectrum);
  f.children_ = std::move(children);
  return f;
}

ReadOnceFormula ReadOnceFormula::conjunction(std::vector<ReadOnceFormula> children) {
  ReadOnceFormula f;
  f.kind_ = Kind::And;
  f.children_ = std::move(children);
  return f;
}

ReadOnceFormula ReadOnceFormula::disjunction(std::vector<ReadOnceFormula> children) {
  ReadOnceFormula f;
  f.kind_ = Kind::Or;
  f.children_ = std::move(children);
  return f;
}

ReadOnceFormula ReadOnceFormula::exclusive_or(std::vector<ReadOnceFormula> children) {
  ReadOnceFormula f;
  f.kind_ = Kind::Parity;
  f.children_ = std::move(children);
  return f;
}

bool ReadOnceFormula::eval(Point x) const {
  if (kind_ == Kind::Leaf) return (x >> var_) & 1u;
  if (kind_ == Kind::Not) return !children_[0].eval(x);
  std::size_t ones = 0;
  for (const auto& c : children_) ones += c.eval(x);
  switch (kind_) {
    case Kind::Thr:
      return ones >= static_cast<std::size_t>(k_);
    case Kind::Sym:
      return spectrum_[ones];
    case Kind::And:
      return ones == children_.size();
    case Kind::Or:
      return ones > 0;
    case Kind::Parity:
      return ones % 2 == 1;
    default:
      return false;
  }
}

namespace {

void collect(const ReadOnceFormula& phi, std::vector<int>& vars) {
  using Kind = ReadOnceFormula::Kind;
  const auto& ch = phi.children();
  const int fanin = static_cast<int>(ch.size());
  switch (phi.kind()) {
    case Kind::Leaf:
      if (phi.var() < 0 || phi.var() >= kMaxVars) throw Error(ErrorCode::CapExceeded, "leaf variable out of range");
      vars.push_back(phi.var());
      return;
    case Kind::Not:
      if (fanin != 1) throw Error(ErrorCode::BadParams, "NOT gate needs exactly one input");
      break;
    case Kind::Thr:
      if (fanin < 1 || phi.k() < 1 || phi.k() > fanin)
        throw Error(ErrorCode::BadParams, "threshold gate needs 1 <= k <= fan-in");
      break;
    case Kind::Sym: {
      const auto& s = phi.spectrum();
      if (fanin < 1 || static_cast<int>(s.size()) != fanin + 1)
        throw Error(ErrorCode::BadParams, "symmetric gate spectrum must have fan-in + 1 entries");
      if (std::all_of(s.begin(), s.end(), [&](bool b) { return b == s[0]; }))
        throw Error(ErrorCode::BadParams, "symmetric gate spectrum is constant");
      break;
    }
    default:
      if (fanin < 1) throw Error(ErrorCode::BadParams, "gate has no inputs");
  }
  for (const auto& c : ch) collect(c, vars);
}

}  // namespace

void validate(const ReadOnceFormula& phi) {
  std::vector<int> vars;
  collect(phi, vars);
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
    throw Error(ErrorCode::NotReadOnce, "variable x" + std::to_string(*std::adjacent_find(vars.begin(), vars.end()) + 1) +
                                            " occurs more than once");
}

ReadOnceStats readonce_stats(const ReadOnceFormula& phi) {
  if (phi.kind() == ReadOnceFormula::Kind::Leaf) return {0, 0, 1};
  ReadOnceStats s;
  s.max_branching = static_cast<int>(phi.children().size());
  for (const auto& c : phi.children()) {
    const ReadOnceStats cs = readonce_stats(c);
    s.depth = std::max(s.depth, cs.depth + 1);
    s.max_branching = std::max(s.max_branching, cs.max_branching);
    s.num_vars += cs.num_vars;
  }
  return s;
}

BooleanFunction readonce_to_function(const ReadOnceFormula& phi) {
  validate(phi);
  std::vector<int> vars;
  collect(phi, vars);
  const int n = *std::max_element(vars.begin(), vars.end()) + 1;
  check_arity(n);
  return BooleanFunction::from_predicate(n, [&](Point x) { return phi.eval(x); });
}

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(const std::string& text) : s_(text) {}

  ReadOnceFormula parse() {
    ReadOnceFormula phi = node();
    skip_space();
    if (pos_ != s_.size()) fail("trailing characters");
    validate(phi);
    return phi;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "formula: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string w = s_.substr(start, pos_ - start);
    std::transform(w.begin(), w.end(), w.begin(), [](unsigned char c) { return std::tolower(c); });
    return w;
  }

  int number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected a number");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  std::vector<ReadOnceFormula> arguments() {
    expect('(');
    std::vector<ReadOnceFormula> out;
    do {
      out.push_back(node());
    } while (accept(','));
    expect(')');
    return out;
  }

  ReadOnceFormula node() {
    const std::string w = word();
    if (w == "x") {
      const int v = number();
      if (v < 1) fail("variables are numbered from 1");
      return ReadOnceFormula::leaf(v - 1);
    }
    if (w == "not") {
      auto args = arguments();
      if (args.size() != 1) fail("not takes one argument");
      return ReadOnceFormula::negation(std::move(args[0]));
    }
    if (w == "thr") {
      const int k = number();
      return ReadOnceFormula::threshold(k, arguments());
    }
    if (w == "sym") {
      expect('[');
      std::vector<bool> spectrum;
      skip_space();
      while (pos_ < s_.size() && (s_[pos_] == '0' || s_[pos_] == '1')) spectrum.push_back(s_[pos_++] == '1');
      expect(']');
      return ReadOnceFormula::symmetric(std::move(spectrum), arguments());
    }
    if (w == "and") return ReadOnceFormula::conjunction(arguments());
    if (w == "or") return ReadOnceFormula::disjunction(arguments());
    if (w == "xor") return ReadOnceFormula::exclusive_or(arguments());
    fail("unknown gate '" + w + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

ReadOnceFormula parse_formula(const std::string& text) { return FormulaParser(text).parse(); }

std::string to_string(const ReadOnceFormula& phi) {
  using Kind = ReadOnceFormula::Kind;
  std::string head;
  switch (phi.kind()) {
    case Kind::Leaf:
      return "x" + std::to_string(phi.var() + 1);
    case Kind::Not:
      head = "not";
      break;
    case Kind::Thr:
      head = "thr" + std::to_string(phi.k());
      break;
    case Kind::Sym:
      head = "sym[";
      for (bool b : phi.spectrum()) head += b ? '1' : '0';
      head += ']';
      break;
    case Kind::And:
      head = "and";
      break;
    case Kind::Or:
      head = "or";
      break;
    case Kind::Parity:
      head = "xor";
      break;
  }
  head += '(';
  for (std::size_t i = 0; i < phi.children().size(); ++i) {
    if (i) head += ',';
    head += to_string(phi.children()[i]);
  }
  return head + ')';
}

namespace {

/// Splits `vars` into `parts` non-empty consecutive groups at random cut points.
std::vector<std::vector<int>> random_split(const std::vector<int>& vars, int parts, std::mt19937_64& rng) {
  std::vector<int> cuts(vars.size() - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(static_cast<std::size_t>(parts - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(static_cast<int>(vars.size()));
  std::vector<std::vector<int>> out;
  int start = 0;
  for (int c : cuts) {
    out.emplace_back(vars.begin() + start, vars.begin() + c);
    start = c;
  }
  return out;
}

template <class MakeGate>
ReadOnceFormula random_tree(const std::vector<int>& vars, std::mt19937_64& rng, MakeGate& gate, bool negate_leaves) {
  if (vars.size() == 1) {
    ReadOnceFormula leaf = ReadOnceFormula::leaf(vars[0]);
    if (negate_leaves && std::uniform_int_distribution<int>(0, 3)(rng) == 0)
      return ReadOnceFormula::negation(std::move(leaf));
    return leaf;
  }
  const int max_fanin = std::min<int>(static_cast<int>(vars.size()), 5);
  const int fanin = std::uniform_int_distribution<int>(2, max_fanin)(rng);
  std::vector<ReadOnceFormula> children;
  for (const auto& group : random_split(vars, fanin, rng))
    children.push_back(random_tree(group, rng, gate, negate_leaves));
  return gate(std::move(children));
}

std::vector<int> shuffled_vars(int m, std::mt19937_64& rng) {
  if (m < 1 || m > kMaxVars) throw Error(ErrorCode::BadParams, "random formula needs 1 <= m <= 20");
  std::vector<int> vars(static_cast<std::size_t>(m));
  std::iota(vars.begin(), vars.end(), 0);
  std::shuffle(vars.begin(), vars.end(), rng);
  return vars;
}

}  // namespace

ReadOnceFormula random_threshold_formula(int m, std::mt19937_64& rng) {
  auto gate = [&](std::vector<ReadOnceFormula> children) {
    const int k = std::uniform_int_distribution<int>(1, static_cast<int>(children.size()))(rng);
    ReadOnceFormula g = ReadOnceFormula::threshold(k, std::move(children));
    if (std::uniform_int_distribution<int>(0, 4)(rng) == 0) return ReadOnceFormula::negation(std::move(g));
    return g;
  };
  return random_tree(shuffled_vars(m, rng), rng, gate, true);
}

ReadOnceFormula random_symmetric_formula(int m, std::mt19937_64& rng) {
  auto gate = [&](std::vector<ReadOnceFormula> children) {
    const std::size_t fanin = children.size();
    std::vector<bool> spectrum(fanin + 1);
    std::bernoulli_distribution coin(0.5);
    do {
      for (std::size_t w = 0; w <= fanin; ++w) spectrum[w] = coin(rng);
    } while (std::all_of(spectrum.begin(), spectrum.end(), [&](bool b) { return b == spectrum[0]; }));
    return ReadOnceFormula::symmetric(std::move(spectrum), std::move(children));
  };
  return random_tree(shuffled_vars(m, rng), rng, gate, false);
}

}  // namespace bfc
