#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "bfc/core/boolean_function.hpp"
#include "bfc/core/families.hpp"
#include "bfc/core/io.hpp"
#include "bfc/core/readonce.hpp"

namespace bfc {
namespace {

BooleanFunction from_bits(int n, const std::string& domain, const std::string& values) {
  return BooleanFunction::make(n, BitVector::from_msb_string(domain), BitVector::from_msb_string(values));
}

BooleanFunction random_total(int n, std::mt19937_64& rng) {
  return BooleanFunction::from_predicate(n, [&](Point) { return rng() & 1u; });
}

TEST(BooleanFunctionTest, MakeFromTables) {
  const auto dictator1 = from_bits(1, "11", "10");
  EXPECT_TRUE(dictator1.is_total());
  EXPECT_TRUE(dictator1.value(1));
  EXPECT_FALSE(dictator1.value(0));
  EXPECT_EQ(from_bits(2, "1111", "1000"), and_fn(2));

  const auto slice1 = from_bits(2, "0110", "0110");
  EXPECT_FALSE(slice1.is_total());
  EXPECT_EQ(slice1.domain_size(), 2u);
  EXPECT_TRUE(slice1.is_constant());
}

TEST(BooleanFunctionTest, ValuesOutsideDomainAreCleared) {
  const auto f = from_bits(2, "0011", "1111");
  EXPECT_EQ(f.count_ones(), 2u);
  EXPECT_FALSE(f.value(3));
}

TEST(BooleanFunctionTest, Errors) {
  EXPECT_THROW(BooleanFunction::make(21, BitVector(2), BitVector(2)), Error);
  try {
    from_bits(2, "0000", "0000");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyDomain);
  }
  try {
    BooleanFunction::make(2, BitVector(3, true), BitVector(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(BooleanFunctionTest, VariableCapFromEnvironment) {
  setenv("BFC_MAX_N", "5", 1);
  EXPECT_EQ(variable_cap(), 5);
  EXPECT_THROW(and_fn(6), Error);
  setenv("BFC_MAX_N", "99", 1);
  EXPECT_EQ(variable_cap(), 20);
  unsetenv("BFC_MAX_N");
  EXPECT_EQ(variable_cap(), 20);
}

TEST(FamilyTest, MiddleThird) {
  const auto f = family("MT", std::vector<int>{6});
  EXPECT_TRUE(f.is_total());
  for (Point x = 0; x < 64; ++x) EXPECT_EQ(f.value(x), weight(x) >= 2 && weight(x) <= 4);
}

TEST(FamilyTest, MajorityOrNone) {
  const auto f = family("majn", std::vector<int>{4});
  for (Point x = 0; x < 16; ++x) {
    EXPECT_EQ(f.in_domain(x), weight(x) == 0 || weight(x) >= 2);
    if (f.in_domain(x)) {
      EXPECT_EQ(f.value(x), x != 0);
    }
  }
}

TEST(FamilyTest, AndOfOrs) {
  const auto f = family("andor", std::vector<int>{2, 2});
  for (Point x = 0; x < 16; ++x) EXPECT_EQ(f.value(x), (x & 3) != 0 && (x & 12) != 0);
}

TEST(FamilyTest, BalancedHalves) {
  const auto f = balanced_halves(6);
  std::size_t zeros = 0, ones = 0;
  for (Point x = 0; x < 64; ++x) {
    const int l = weight(x & 7), r = weight(x >> 3);
    if (!f.in_domain(x)) continue;
    EXPECT_TRUE(std::abs(l - r) <= 1 && std::min(l, r) == 1);
    (f.value(x) ? ones : zeros)++;
  }
  EXPECT_EQ(zeros, 9u);
  EXPECT_EQ(ones, 18u);
}

TEST(FamilyTest, BadParamsAreNamed) {
  for (auto [name, params] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"mt", {4}}, {"eh", {3}}, {"bi", {8}}, {"majn", {1}}, {"thr", {0, 3}}, {"thr", {4, 3}}}) {
    try {
      family(name, params);
      FAIL() << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadParams);
    }
  }
}

TEST(OperationsTest, Negations) {
  EXPECT_EQ(negate_output(and_fn(2)), from_bits(2, "1111", "0111"));
  EXPECT_EQ(negate_inputs(and_fn(2), 0b11), from_bits(2, "1111", "0001"));
  const auto g = negate_inputs(parity_fn(3), 0b010);
  for (Point x = 0; x < 8; ++x) EXPECT_NE(g.value(x), parity_fn(3).value(x));
}

TEST(OperationsTest, NegateInputsIsAnInvolution) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto f = BooleanFunction::from_predicates(
        n, [&](Point x) { return x == 0 || (rng() % 4) != 0; }, [&](Point) { return rng() & 1u; });
    const VarSet s = static_cast<VarSet>(rng() % (1u << n));
    EXPECT_EQ(negate_inputs(negate_inputs(f, s), s), f);
  }
}

TEST(OperationsTest, Restrict) {
  EXPECT_EQ(restrict(and_fn(3), Restriction(3).fix(2, true)), and_fn(2));
  const auto c = restrict(or_fn(3), Restriction(3).fix(2, true));
  EXPECT_TRUE(c.is_constant());
  EXPECT_EQ(c.count_ones(), 4u);
  const auto m = restrict(middle_third(3), Restriction(3).fix(2, false));
  EXPECT_EQ(m, from_bits(2, "1111", "1110"));
  try {
    restrict(majority_or_none(4), Restriction(4).fix(0, true).fix(1, false).fix(2, false));
  } catch (const Error&) {
    FAIL() << "weight-2 completions exist";
  }
  const auto partial = from_bits(2, "0001", "0000");
  try {
    restrict(partial, Restriction(2).fix(0, true));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyDomain);
  }
}

TEST(OperationsTest, RestrictionsCompose) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_total(5, rng);
    // Fix x2 = b1 then (in the 4-variable result) its variable 2, which is original x4.
    const bool b1 = rng() & 1u, b2 = rng() & 1u;
    const auto step = restrict(restrict(f, Restriction(5).fix(1, b1)), Restriction(4).fix(2, b2));
    const auto merged = restrict(f, Restriction(5).fix(1, b1).fix(3, b2));
    EXPECT_EQ(step, merged);
  }
}

TEST(OperationsTest, Compositions) {
  const std::vector<BooleanFunction> ors{or_fn(2), or_fn(2)};
  EXPECT_EQ(compose_disjoint(and_fn(2), ors), and_of_ors(2, 2));
  EXPECT_EQ(and_compose(or_fn(2), or_fn(2)), and_of_ors(2, 2));
  EXPECT_EQ(and_compose(dictator(1), dictator(1)), and_fn(2));
  const std::vector<BooleanFunction> par{parity_fn(3)};
  EXPECT_EQ(compose_disjoint(dictator(1), par), parity_fn(3));
  const auto h = or_compose(and_fn(2), and_fn(2));
  for (Point x = 0; x < 16; ++x) EXPECT_EQ(h.value(x), (x & 3) == 3 || (x & 12) == 12);

  const std::vector<BooleanFunction> ehbars{exact_half_complement(2), exact_half_complement(2)};
  const auto sep = compose_disjoint(and_fn(2), ehbars);
  for (Point x = 0; x < 16; ++x) EXPECT_EQ(sep.value(x), weight(x & 3) != 1 && weight(x >> 2) != 1);
}

TEST(OperationsTest, ComposeWithIdentitiesIsIdentity) {
  std::mt19937_64 rng(3);
  const auto f = random_total(4, rng);
  const std::vector<BooleanFunction> ids(4, dictator(1));
  EXPECT_EQ(compose_disjoint(f, ids), f);
}

TEST(OperationsTest, CompositionRejectsPartialAndCap) {
  EXPECT_THROW(and_compose(majority_or_none(4), or_fn(2)), Error);
  EXPECT_THROW(and_compose(and_fn(12), or_fn(12)), Error);
}

TEST(PredicateTest, SliceProfile) {
  auto mt = slice_profile(middle_third(6));
  EXPECT_EQ(mt.zero_slices, (std::vector<int>{0, 1, 5, 6}));
  EXPECT_EQ(mt.one_slices, (std::vector<int>{2, 3, 4}));
  auto mj = slice_profile(majority_or_none(4));
  EXPECT_EQ(mj.zero_slices, (std::vector<int>{0}));
  EXPECT_EQ(mj.one_slices, (std::vector<int>{2, 3, 4}));
  auto par = slice_profile(parity_fn(2));
  EXPECT_EQ(par.zero_slices, (std::vector<int>{0, 2}));
  EXPECT_EQ(par.one_slices, (std::vector<int>{1}));
}

TEST(PredicateTest, SymmetricTotalSlicesCoverAllWeights) {
  for (int n = 1; n <= 6; ++n)
    for (Point spectrum = 1; spectrum + 1 < (Point{1} << (n + 1)); ++spectrum) {
      const auto f = BooleanFunction::from_predicate(n, [&](Point x) { return (spectrum >> weight(x)) & 1u; });
      ASSERT_TRUE(is_symmetric(f));
      const auto p = slice_profile(f);
      EXPECT_EQ(p.zero_slices.size() + p.one_slices.size(), static_cast<std::size_t>(n + 1));
    }
}

TEST(PredicateTest, MonotoneUnateSymmetric) {
  EXPECT_TRUE(is_monotone(and_fn(3)));
  EXPECT_FALSE(is_monotone(parity_fn(2)));
  const auto orient = unate_orientation(negate_inputs(and_fn(3), 0b010));
  ASSERT_TRUE(orient.has_value());
  EXPECT_EQ(*orient, (std::vector<Orientation>{Orientation::Positive, Orientation::Negative, Orientation::Positive}));
  EXPECT_FALSE(is_unate(parity_fn(2)));
  EXPECT_FALSE(is_symmetric(and_of_ors(2, 2)));
  EXPECT_TRUE(is_symmetric(majority_or_none(5)));
  EXPECT_THROW(is_monotone(majority_or_none(4)), Error);
  const auto irrelevant = unate_orientation(dictator(2, 0));
  EXPECT_EQ((*irrelevant)[1], Orientation::Irrelevant);
}

TEST(PredicateTest, SymmetryBlocks) {
  EXPECT_EQ(symmetry_blocks(and_of_ors(2, 3)), (std::vector<VarSet>{0b000111, 0b111000}));
  EXPECT_EQ(symmetry_blocks(parity_fn(4)), (std::vector<VarSet>{0b1111}));
  EXPECT_EQ(symmetry_blocks(dictator(3, 1)), (std::vector<VarSet>{0b101, 0b010}));
  EXPECT_EQ(symmetry_blocks(balanced_halves(6)), (std::vector<VarSet>{0b000111, 0b111000}));
  EXPECT_EQ(relevant_vars(dictator(3, 1)), 0b010u);
}

TEST(ReadOnceTest, ThresholdAndStats) {
  using F = ReadOnceFormula;
  const auto maj = F::threshold(2, {F::leaf(0), F::leaf(1), F::leaf(2)});
  EXPECT_EQ(readonce_to_function(maj), threshold_fn(2, 3));
  const auto s = readonce_stats(maj);
  EXPECT_EQ(s.depth, 1);
  EXPECT_EQ(s.max_branching, 3);
  EXPECT_EQ(s.num_vars, 3);

  const auto andor = F::conjunction({F::disjunction({F::leaf(0), F::leaf(1)}), F::disjunction({F::leaf(2), F::leaf(3)})});
  EXPECT_EQ(readonce_to_function(andor), and_of_ors(2, 2));
  EXPECT_EQ(readonce_stats(andor).max_branching, 2);
  EXPECT_EQ(readonce_stats(andor).depth, 2);

  EXPECT_EQ(readonce_to_function(F::negation(F::threshold(1, {F::leaf(0), F::leaf(1)}))), negate_output(or_fn(2)));
}

TEST(ReadOnceTest, Validation) {
  using F = ReadOnceFormula;
  try {
    validate(F::conjunction({F::leaf(0), F::leaf(0)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotReadOnce);
  }
  EXPECT_THROW(validate(F::threshold(3, {F::leaf(0), F::leaf(1)})), Error);
  EXPECT_THROW(validate(F::symmetric({true, true, true}, {F::leaf(0), F::leaf(1)})), Error);
  EXPECT_THROW(validate(F::symmetric({true, false}, {F::leaf(0), F::leaf(1)})), Error);
}

TEST(ReadOnceTest, DeMorgan) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 6);
    std::vector<ReadOnceFormula> parts;
    std::vector<ReadOnceFormula> negated;
    int next = 0;
    while (next < m) {
      const int take = std::min<int>(m - next, 1 + static_cast<int>(rng() % 3));
      std::vector<ReadOnceFormula> leaves, leaves2;
      for (int i = 0; i < take; ++i) {
        leaves.push_back(ReadOnceFormula::leaf(next + i));
        leaves2.push_back(ReadOnceFormula::leaf(next + i));
      }
      next += take;
      parts.push_back(ReadOnceFormula::exclusive_or(std::move(leaves)));
      negated.push_back(ReadOnceFormula::negation(ReadOnceFormula::exclusive_or(std::move(leaves2))));
    }
    const auto lhs = ReadOnceFormula::negation(ReadOnceFormula::conjunction(std::move(parts)));
    const auto rhs = ReadOnceFormula::disjunction(std::move(negated));
    EXPECT_EQ(readonce_to_function(lhs), readonce_to_function(rhs));
  }
}

TEST(ReadOnceTest, TextRoundTrip) {
  const std::string text = "and(x1,or(x2,not(x3)),thr2(x4,x5,x6),sym[0110](x7,x8,x9),xor(x10,x11))";
  const auto phi = parse_formula(text);
  EXPECT_EQ(to_string(phi), text);
  EXPECT_EQ(readonce_stats(phi).num_vars, 11);
  EXPECT_THROW(parse_formula("and(x1,x1)"), Error);
  EXPECT_THROW(parse_formula("and(x1,"), Error);
  EXPECT_THROW(parse_formula("nand(x1,x2)"), Error);
}

TEST(ReadOnceTest, RandomFormulasAreValid) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 9);
    const auto t = random_threshold_formula(m, rng);
    EXPECT_NO_THROW(validate(t));
    EXPECT_EQ(readonce_stats(t).num_vars, m);
    EXPECT_EQ(relevant_vars(readonce_to_function(t)), (VarSet{1} << m) - 1);
    const auto s = random_symmetric_formula(m, rng);
    EXPECT_NO_THROW(validate(s));
    EXPECT_EQ(readonce_to_function(s).num_vars(), m);
  }
}

TEST(IoTest, JsonRoundTripAndHexLayout) {
  const auto f = and_fn(2);
  const auto j = function_to_json(f);
  EXPECT_EQ(j["values"], "8");
  EXPECT_EQ(j["domain"], "f");
  EXPECT_EQ(function_from_json(j), f);
  const auto g = majority_or_none(5);
  EXPECT_EQ(function_from_json(function_to_json(g)), g);
  EXPECT_THROW(function_from_json(nlohmann::json{{"n", 2}, {"domain", "ff"}, {"values", "0"}}), Error);
  EXPECT_THROW(function_from_json(nlohmann::json{{"n", 2}, {"domain", "g"}, {"values", "0"}}), Error);
}

TEST(IoTest, SpecGrammar) {
  EXPECT_EQ(parse_function_spec("and:4"), and_fn(4));
  EXPECT_EQ(parse_function_spec("thr:2:5"), threshold_fn(2, 5));
  EXPECT_EQ(parse_function_spec("andor:3x3"), and_of_ors(3, 3));
  EXPECT_EQ(parse_function_spec("!eh:4"), exact_half_complement(4));
  EXPECT_EQ(parse_function_spec("and:2~1,2"), negate_inputs(and_fn(2), 0b11));
  EXPECT_EQ(parse_function_spec("!and:3~2"), negate_output(negate_inputs(and_fn(3), 0b10)));
  EXPECT_EQ(parse_function_spec("ro:thr2(x1,x2,x3)"), threshold_fn(2, 3));
  EXPECT_THROW(parse_function_spec("and"), Error);
  EXPECT_THROW(parse_function_spec("and:x"), Error);
  EXPECT_THROW(parse_function_spec("and:2~3"), Error);

  const auto path = std::filesystem::temp_directory_path() / "bfc_core_test_f.json";
  write_file_atomic(path, function_to_json(middle_third(3)).dump());
  EXPECT_EQ(parse_function_spec("file:" + path.string()), middle_third(3));
  EXPECT_EQ(parse_function_spec("!file:" + path.string() + "~1"), negate_output(negate_inputs(middle_third(3), 1)));
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace bfc
