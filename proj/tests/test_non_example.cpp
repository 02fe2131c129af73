#include <gtest/gtest.h>

#include "coxfold/coxfold.hpp"
#include "oracles.hpp"

using namespace coxfold;

TEST(NonExample, FamilyShape) {
  auto f = example_family(101);
  CoxeterMatrix const& m = f.matrix;
  ASSERT_EQ(m.rank(), 5u);
  EXPECT_EQ(m.entry(0, 1), 8u);
  for (Letter j = 2; j < 5; ++j) EXPECT_EQ(m.entry(1, j), 101u);
  EXPECT_EQ(m.entry(0, 2), CoxeterMatrix::infinity);
  EXPECT_EQ(m.entry(3, 4), CoxeterMatrix::infinity);
  ASSERT_EQ(f.generators_x.size(), 4u);
  EXPECT_EQ(f.generators_x[0], (Word{1}));
  // x2 = (s1 s2)^3 s1 (s3 s2)^50
  EXPECT_EQ(f.generators_x[1].size(), 7u + 100u);
  EXPECT_EQ(Word(f.generators_x[1].begin(), f.generators_x[1].begin() + 9), (Word{0, 1, 0, 1, 0, 1, 0, 2, 1}));
  EXPECT_EQ(f.generators_x[2].size(), 3u + 100u);
  EXPECT_EQ(f.generators_x[3].size(), 1u + 100u);
  EXPECT_EQ(f.generators_x[3].back(), 1);
  EXPECT_EQ(f.generators_x[3][1], 4);
}

TEST(NonExample, RejectsEvenOrSmallQ) {
  EXPECT_THROW(example_family(4), InvalidArguments);
  EXPECT_THROW(example_family(1), InvalidArguments);
  EXPECT_NO_THROW(example_family(3));
}

TEST(NonExample, SevenHasRankAtMostFour) {
  auto f = example_family(7);
  auto d = derive_witnesses(f);
  ASSERT_TRUE(d.complete);
  EXPECT_FALSE(d.indeterminate);
  EXPECT_EQ(verify_derivation(d, f), true);
  for (Letter s = 0; s < 5; ++s) {
    auto expr = expand_step(d, d.generator_step.at(s));
    ASSERT_TRUE(expr);
    EXPECT_EQ(equal_in_group(evaluate(f, *expr), Word{s}, f.matrix), true);
    EXPECT_EQ(parse_expression(format_expression(*expr)), *expr);
  }
}

TEST(NonExample, TamperedStepIsCaught) {
  auto f = example_family(7);
  auto d = derive_witnesses(f);
  ASSERT_TRUE(d.complete);
  auto bad = d;
  bad.steps.back().value = Word{0};
  if (d.steps.back().value == Word{0}) bad.steps.back().value = Word{1};
  EXPECT_EQ(verify_derivation(bad, f), false);
}

TEST(NonExample, StoredWitnessesEvaluateToGenerators) {
  auto f = example_family(7);
  Json j = parse_json(read_file(std::string(COXFOLD_DATA_DIR) + "/non_example/witnesses_q7.json"));
  EXPECT_EQ(j.at("q"), 7);
  EXPECT_EQ(j.at("verified"), true);
  std::size_t checked = 0;
  for (auto const& [name, w] : j.at("witnesses").items()) {
    if (!w.contains("expression")) continue;
    auto expr = parse_expression(w.at("expression").get<std::string>());
    Letter s = f.matrix.index_of(name);
    EXPECT_EQ(equal_in_group(evaluate(f, expr), Word{s}, f.matrix), true) << name;
    ++checked;
  }
  EXPECT_EQ(checked, 5u);
}

TEST(NonExample, ExpressionParsing) {
  auto e = parse_expression("x4 x1^-1 x2");
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[1], (Syllable{0, true}));
  EXPECT_TRUE(parse_expression("1").empty());
  EXPECT_THROW(parse_expression("x5"), ParseError);
  EXPECT_THROW(parse_expression("y1"), ParseError);
}
