#include "frieze/io.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

using namespace frieze;

namespace {

std::string read(const std::string& name) {
  std::ifstream in(std::string(FRIEZE_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count(const std::string& s, const std::regex& re) {
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(s.begin(), s.end(), re), std::sregex_iterator()));
}

void expect_parse_error(const std::string& text, std::size_t line, const std::string& fragment) {
  try {
    parse_frieze(text);
    ADD_FAILURE() << "parsed: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(Parse, Examples) {
  const FriezePattern a1 = parse_frieze("dynkin A1\nperiod 2\nrow 1 2\n");
  EXPECT_EQ(a1.dynkin(), DynkinType(Family::A, 1));
  EXPECT_EQ(a1.period(), 2u);
  EXPECT_EQ(a1.entry(0, 1), 2);

  const FriezePattern a2 = parse_frieze("dynkin A2\nperiod 5\nrow 1 3 1 2 2\nrow 1 2 2 1 3\n");
  EXPECT_EQ(a2.column(1).values(), (std::vector<BigInt>{3, 2}));
  EXPECT_EQ(a2.column(4).values(), (std::vector<BigInt>{2, 3}));

  const FriezePattern e8 = parse_frieze(read("e8_example.frieze"));
  EXPECT_EQ(e8.period(), 4u);
  EXPECT_EQ(e8.column(0).values(), (std::vector<BigInt>{4, 6, 11, 29, 21, 13, 5, 2}));
  EXPECT_EQ(e8.entry(3, 1), 41);
}

TEST(Parse, CommentsAndWhitespace) {
  const FriezePattern f = parse_frieze("# header\n\n  dynkin   a1\n# mid\nperiod 2\n\trow  1\t2  \n");
  EXPECT_EQ(f.entry(0, 0), 1);
  EXPECT_EQ(f.entry(0, 1), 2);
}

TEST(Parse, BigIntegers) {
  const std::string huge = "123456789012345678901234567890123456789";
  const FriezePattern f = parse_frieze("dynkin A1\nperiod 1\nrow " + huge + "\n");
  EXPECT_EQ(f.entry(0, 0), BigInt(huge));
  EXPECT_EQ(emit_frieze(f), "dynkin A1\nperiod 1\nrow " + huge + "\n");
}

TEST(Parse, Errors) {
  expect_parse_error("dynkin Q3\nperiod 1\nrow 1\n", 1, "unknown type token");
  expect_parse_error("dynkin E9\nperiod 1\nrow 1\n", 1, "unknown type token");
  expect_parse_error("dynkin A2\nperiod 2\nrow 1 2\nrow 1 2 3\n", 4, "period");
  expect_parse_error("dynkin A1\nperiod 2\nrow 1 0\n", 3, "non-positive");
  expect_parse_error("dynkin A1\nperiod 2\nrow 1 -2\n", 3, "non-positive");
  expect_parse_error("dynkin A1\nperiod 2\nrow 1 x\n", 3, "positive integer");
  expect_parse_error("dynkin A2\nperiod 2\nrow 1 2\n", 4, "missing rows");  // end of input
  expect_parse_error("dynkin A1\nperiod 2\nrow 1 2\nrow 2 1\n", 4, "too many rows");
  expect_parse_error("period 2\nrow 1 2\n", 2, "row before dynkin");
  expect_parse_error("dynkin A1\n", 2, "missing period");
  expect_parse_error("dynkin A1\nperiod 0\n", 2, "non-positive");
  expect_parse_error("dynkin A1\ncolumn 1\n", 2, "unknown keyword");
}

TEST(Parse, ErrorColumns) {
  try {
    parse_frieze("dynkin A1\nperiod 2\nrow 1 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 7u);
  }
}

TEST(Emit, RoundTrip) {
  for (const char* name : {"a1.frieze", "a2_orbit.frieze"}) {
    const std::string text = read(name);
    EXPECT_EQ(emit_frieze(parse_frieze(text)), text);
  }
  const std::string e8 = read("e8_example.frieze");
  const FriezePattern f = parse_frieze(e8);
  const std::string canon = emit_frieze(f);
  EXPECT_EQ(canon.substr(0, 17), "dynkin E8\nperiod ");
  EXPECT_EQ(parse_frieze(canon), f);
  EXPECT_EQ(emit_frieze(parse_frieze(canon)), canon);
  EXPECT_EQ(canon.back(), '\n');
}

TEST(Emit, RoundTripOverCatalogPatterns) {
  for (const DynkinType& t : catalog_up_to_rank(8)) {
    const FriezePattern one = constant_one_pattern(t);
    EXPECT_EQ(parse_frieze(emit_frieze(one)), one) << t.name();
  }
}

TEST(Dot, Examples) {
  const std::regex node(R"(v\d+_-?\d+ \[label=)");
  const std::regex edge(R"( -> )");
  const DynkinType a1(Family::A, 1), a2(Family::A, 2), e8(Family::E, 8);

  const std::string d1 = emit_quiver_dot(a1, 0, 1);
  EXPECT_EQ(count(d1, node), 2u);
  EXPECT_EQ(count(d1, edge), 0u);
  EXPECT_NE(d1.find("v1_0 [label=\"(1,0)\"]"), std::string::npos);

  const std::string d2 = emit_quiver_dot(a2, 0, 0);
  EXPECT_EQ(count(d2, edge), 2u);
  EXPECT_NE(d2.find("v1_0 -> v2_0;"), std::string::npos);
  EXPECT_NE(d2.find("v2_0 -> v1_1;"), std::string::npos);

  const FriezePattern f = parse_frieze(read("e8_example.frieze"));
  const std::string d8 = emit_quiver_dot(e8, 0, 3, &f);
  EXPECT_EQ(count(d8, node), 32u);
  EXPECT_EQ(count(d8, edge), 56u);
  EXPECT_NE(d8.find("v4_1 [label=\"41\"]"), std::string::npos);
  EXPECT_NE(d8.find("v8_3 [label=\"2\"]"), std::string::npos);
  EXPECT_EQ(d8.rfind("digraph", 0), 0u);
  EXPECT_EQ(emit_quiver_dot(e8, 0, 3, &f), d8);
}

TEST(Dot, NegativeColumnsAndTypeMismatch) {
  const std::string d = emit_quiver_dot(DynkinType(Family::A, 2), -2, -1);
  EXPECT_NE(d.find("v1_-2"), std::string::npos);
  const FriezePattern f = parse_frieze(read("a1.frieze"));
  EXPECT_THROW(emit_quiver_dot(DynkinType(Family::A, 2), 0, 1, &f), std::invalid_argument);
}

TEST(Json, AnalysisSchema) {
  const FriezePattern f = parse_frieze(read("e8_example.frieze"));
  const auto j = analysis_json(f, 16, a_vector(f, 16), lemma_check_exact(f, 16),
                               check_pattern_against_bounds(f, 16));
  for (const char* key : {"a", "ca", "lemma", "row_bounds"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["a"].size(), 8u);
  EXPECT_NEAR(j["a"][3].get<double>(), 5.10777, 1e-4);
}

TEST(Json, BoundsSchema) {
  const auto j = bounds_json(bounds_report(DynkinType(Family::E, 8), 16), true);
  for (const char* key : {"b", "entry_cap_exponents", "count_bound_exponent", "refined_formula_log2",
                          "refined_flat_log2", "unit_exponent_base"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["b"][0], "46/1");
  EXPECT_EQ(j["entry_cap_exponents"][7], "464/1");
  EXPECT_EQ(j["count_bound_exponent"], "158720/1");
  EXPECT_EQ(j["unit_exponent_base"], "151875/16384");
  const auto a1 = bounds_json(bounds_report(DynkinType(Family::A, 1), 2), false);
  EXPECT_EQ(a1["b"][0], "1/2");
  EXPECT_FALSE(a1.contains("refined_formula_log2"));
}

TEST(Json, EnumerationSchema) {
  SearchConfig cfg{DynkinType(Family::A, 2)};
  const auto j = enumeration_json(enumerate_friezes(cfg));
  EXPECT_EQ(j["frieze_count"], 5);
  EXPECT_TRUE(j.contains("orbits"));
  EXPECT_EQ(j["orbits"].size(), 1u);
  EXPECT_EQ(j["complete"], true);
}

TEST(Round9, SignificantDigits) {
  EXPECT_DOUBLE_EQ(round9(1.2345678904), 1.23456789);
  EXPECT_DOUBLE_EQ(round9(164.2421934567), 164.242193);
  EXPECT_DOUBLE_EQ(round9(0.0), 0.0);
}
