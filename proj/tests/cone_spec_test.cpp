#include "cone_spec.hpp"

#include <gtest/gtest.h>

#include "error.hpp"

namespace toric {
namespace {

// Runs `f`, expecting a ToricError with `code` whose message contains `needle`.
template <class F>
void expect_error(F f, ErrorCode code, const std::string& needle) {
  try {
    f();
    ADD_FAILURE() << "no error, expected one mentioning '" << needle << "'";
  } catch (const ToricError& e) {
    EXPECT_EQ(e.code(), code) << e.what();
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

TEST(ParseCone, Inline) {
  const ConeSpec s = parse_cone("1,0,0; 2,3,0 ;3, 5,7");
  ASSERT_EQ(s.generators.size(), 3u);
  EXPECT_EQ(s.generators[1], make_vector({2, 3, 0}));
  EXPECT_EQ(s.generators[2], make_vector({3, 5, 7}));
  EXPECT_FALSE(s.label.has_value());
  EXPECT_EQ(parse_cone("-1,+4;0,-7").generators[0], make_vector({-1, 4}));
}

TEST(ParseCone, InlineHugeEntries) {
  const ConeSpec s = parse_cone("1,0;123456789012345678901234567890,7");
  EXPECT_EQ(s.generators[1][0], Integer("123456789012345678901234567890"));
}

TEST(ParseCone, InlineErrorsCarryColumns) {
  expect_error([] { parse_cone("1,0;2"); }, ErrorCode::kParse, "column 5: ragged rows");
  expect_error([] { parse_cone("1,0;2,1.5"); }, ErrorCode::kParse, "column 7: floating-point");
  expect_error([] { parse_cone("1,x;0,1"); }, ErrorCode::kParse, "column 3: malformed integer");
  expect_error([] { parse_cone("1,,0"); }, ErrorCode::kParse, "column 3: expected an integer");
  expect_error([] { parse_cone("1e3,0;0,1"); }, ErrorCode::kParse, "floating-point");
  expect_error([] { parse_cone(""); }, ErrorCode::kParse, "column 1");
}

TEST(ParseCone, Json) {
  ConeSpec s = parse_cone(R"({"generators": [[1, 0], [3, 7]], "label": "A"})");
  EXPECT_EQ(s.generators[1], make_vector({3, 7}));
  EXPECT_EQ(s.label, "A");

  s = parse_cone(R"({"inputs": {"generators": [["1", "0"], ["-3", "123456789012345678901"]]}})");
  EXPECT_EQ(s.generators[1][0], -3);
  EXPECT_EQ(s.generators[1][1], Integer("123456789012345678901"));
}

TEST(ParseCone, JsonErrorsCarryPaths) {
  expect_error([] { parse_cone(R"({"generators": [[1, 0], [2, 1.5]]})"); }, ErrorCode::kParse,
               "generators[1][1]: floating-point");
  expect_error([] { parse_cone(R"({"generators": [[1, 0], [2]]})"); }, ErrorCode::kParse,
               "generators[1]: ragged rows");
  expect_error([] { parse_cone(R"({"generators": [[1, 0], ["x", 1]]})"); }, ErrorCode::kParse,
               "generators[1][0]: malformed integer");
  expect_error([] { parse_cone(R"({"generators": [[1, true]]})"); }, ErrorCode::kParse,
               "generators[0][1]: expected an integer");
  expect_error([] { parse_cone(R"({"generators": []})"); }, ErrorCode::kParse, "nonempty");
  expect_error([] { parse_cone(R"({"gens": [[1]]})"); }, ErrorCode::kParse, "missing");
  expect_error([] { parse_cone(R"({"generators": [[1, 0)"); }, ErrorCode::kParse, "byte");
}

TEST(ToCone, ValidatesGenerators) {
  EXPECT_EQ(to_cone(parse_cone("1,0;3,7")).dim(), 2u);
  expect_error([] { to_cone(parse_cone("1,0;2,0")); }, ErrorCode::kDependentGenerators,
               "dependent");
  expect_error([] { to_cone(parse_cone("0,0;0,1")); }, ErrorCode::kZeroGenerator, "");
  expect_error([] { to_cone(parse_cone("1,0,0;0,1,0")); }, ErrorCode::kWrongCount, "");
}

TEST(ParseMatrix, RectangularShapes) {
  const IntMatrix m = parse_matrix("2,4,4;-6,6,12");
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(m(1, 0), -6);
  EXPECT_EQ(parse_matrix(R"({"matrix": [[1], [2], [3]]})").rows(), 3u);
  expect_error([] { parse_matrix(R"({"generators": [[1]]})"); }, ErrorCode::kParse, "matrix");
}

}  // namespace
}  // namespace toric
