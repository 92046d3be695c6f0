// Copyright 2026 The expzero Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "frontend/commands.hpp"
#include "frontend/parser.hpp"
#include "frontend/printer.hpp"
#include "support/properties.hpp"
#include "util/error.hpp"

namespace expzero {
namespace {

using ec::ExpPoly;
using nlohmann::json;

ErrorCode parse_error(const std::string& s, std::size_t* pos = nullptr) {
  try {
    fe::parse(s);
  } catch (const Error& e) {
    if (pos) *pos = e.position();
    return e.code();
  }
  ADD_FAILURE() << "no error for " << s;
  return ErrorCode::InvariantViolation;
}

TEST(Parse, NestedExampleHasHeightTwo) {
  const ExpPoly p = fe::parse("exp(exp(x/2 + x^2)) + x^3");
  EXPECT_EQ(p.height(), 2);
  EXPECT_EQ(fe::print(p), "x^3 + exp(exp(x/2 + x^2))");
}

TEST(Parse, EmptyExpIsASyntaxError) {
  std::size_t pos = 0;
  EXPECT_EQ(parse_error("exp()", &pos), ErrorCode::SyntaxError);
  EXPECT_EQ(pos, 4u);
}

TEST(Parse, AlgebraicConstant) {
  const ExpPoly p = fe::parse("alg(t^2-2, 1, 2, 0, 0) * x");
  EXPECT_EQ(p.height(), 0);
  EXPECT_EQ(p.field()->degree(), 2);
  const auto c = p.poly_part().coeff(1);
  EXPECT_EQ(c * c, nf::FieldElement::rational(p.field(), 2));
  EXPECT_EQ(fe::print(p), "alg(t^2 - 2, 1, 2, 0, 0)*x");
}

TEST(Parse, Rejections) {
  std::size_t pos = 0;
  EXPECT_EQ(parse_error("x +", &pos), ErrorCode::SyntaxError);
  EXPECT_EQ(pos, 3u);
  EXPECT_EQ(parse_error("x^-1"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("x/0"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("y"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("(x"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("alg(t^2-2, 2, 3, 0, 0)"), ErrorCode::BadAlgebraicConstant);
  EXPECT_EQ(parse_error("alg(t^2-1, 0, 2, 0, 0)"), ErrorCode::BadAlgebraicConstant);
}

TEST(Parse, ImplicitProductsAndPowers) {
  EXPECT_EQ(fe::parse("2x"), fe::parse("2*x"));
  EXPECT_EQ(fe::parse("3exp(x)"), fe::parse("3*exp(x)"));
  EXPECT_EQ(fe::parse("(x+1)^2"), fe::parse("x^2 + 2x + 1"));
  EXPECT_EQ(fe::parse("exp(x)^3"), fe::parse("exp(3x)"));
  EXPECT_EQ(fe::parse("-x/2"), fe::parse("(-1/2)*x"));
}

TEST(Print, Examples) {
  EXPECT_EQ(fe::print(fe::parse("exp(1)*exp(x)")), "exp(1 + x)");
  EXPECT_EQ(fe::print(ExpPoly()), "0");
  EXPECT_EQ(fe::print(fe::parse("x - x")), "0");
}

TEST(Print, ParsePrintIsIdempotentOnText) {
  for (const char* s : {"exp(x)*exp(x) + 2x*(x-1)", "exp(  x/3 )-exp(x/6)^2", "alg(t^2+1,-1,1,1/2,2)*exp(x) + 1",
                        "((x))^3 - 1/4", "exp(exp(0))"}) {
    const std::string once = fe::print(fe::parse(s));
    EXPECT_EQ(fe::print(fe::parse(once)), once) << s;
  }
}

TEST(Print, RoundTripThousandValues) {
  const auto o = props::parse_print_roundtrip(1000, 90);
  EXPECT_EQ(o.cases, 1000u);
  EXPECT_TRUE(o.ok()) << o.failures << " failures, first: " << o.first;
}

TEST(Print, SharedFieldAcrossInputs) {
  const auto ps = fe::parse_all({"alg(t^2-2,1,2,0,0)*x", "alg(t^2-3,1,2,0,0) + x"});
  EXPECT_TRUE(nf::same_field(ps[0].field(), ps[1].field()));
  EXPECT_EQ(ps[0].field()->degree(), 4);
}

fe::CommandOptions quiet() {
  fe::CommandOptions o;
  o.reproducible = true;
  return o;
}

void expect_envelope(const json& d, const std::string& command) {
  EXPECT_EQ(d.at("schema"), "expzero/1");
  EXPECT_EQ(d.at("command"), command);
  ASSERT_TRUE(d.contains("flags"));
  EXPECT_TRUE(d["flags"].at("assumes_schanuel").is_boolean());
  EXPECT_TRUE(d["flags"].at("complete_for_all_common_zeros").is_boolean());
  EXPECT_TRUE(d.at("diagnostics").at("precision_bits").is_number_integer());
  EXPECT_TRUE(d["diagnostics"].at("messages").is_array());
  EXPECT_FALSE(d.contains("timestamp"));
}

TEST(Commands, Zeros) {
  const json d = fe::run_command("zeros", {"exp(x) - 1"}, quiet());
  expect_envelope(d, "zeros");
  EXPECT_EQ(d["result"]["zeros"], json::array({"0"}));
  EXPECT_TRUE(d["flags"]["assumes_schanuel"].get<bool>());
  const json& root = d["result"]["roots"][0];
  EXPECT_EQ(root["minpoly"], "t");
  EXPECT_EQ(root["box"].size(), 4u);
  EXPECT_EQ(root["witness"]["kind"], "ExponentCollision");
}

TEST(Commands, HeightAndDepth) {
  EXPECT_EQ(fe::run_command("height", {"exp(exp(x/2 + x^2)) + x^3"}, quiet())["result"]["height"], 2);
  EXPECT_EQ(fe::run_command("depth", {"exp(exp(1))"}, quiet())["result"]["depth"], 2);
}

TEST(Commands, Decompose) {
  const json d = fe::run_command("decompose", {"exp(exp(x/2 + x^2)) + x^3"}, quiet());
  expect_envelope(d, "decompose");
  std::set<std::string> bricks;
  for (const auto& b : d["result"]["bricks"]) bricks.insert(b.get<std::string>());
  EXPECT_EQ(bricks, (std::set<std::string>{"x/2", "x^2", "exp(x/2 + x^2)"}));
  EXPECT_EQ(d["result"]["L"], 2);
}

TEST(Commands, CommonZerosFlag) {
  const json d = fe::run_command("common-zeros", {"exp(x)+1", "exp(2x)+1"}, quiet());
  EXPECT_TRUE(d["result"]["zeros"].empty());
  EXPECT_TRUE(d["flags"]["complete_for_all_common_zeros"].get<bool>());
}

TEST(Commands, IsZeroAndEval) {
  EXPECT_TRUE(fe::run_command("iszero", {"exp(x)-1", "0"}, quiet())["result"]["is_zero"].get<bool>());
  EXPECT_FALSE(fe::run_command("iszero", {"exp(x)-x", "0"}, quiet())["result"]["is_zero"].get<bool>());
  EXPECT_TRUE(fe::run_command("iszero", {"exp(1)-exp(1)"}, quiet())["result"]["is_zero"].get<bool>());
  const json e = fe::run_command("eval", {"exp(x)", "1"}, quiet());
  EXPECT_EQ(e["result"]["value"], "exp(1)");
  EXPECT_EQ(e["result"]["enclosure"]["re"].get<std::string>().substr(0, 12), "2.7182818284");
}

TEST(Commands, EveryCommandCarriesFlags) {
  const std::map<std::string, std::vector<std::string>> args = {
      {"normalize", {"x"}}, {"height", {"x"}}, {"depth", {"1"}}, {"decompose", {"exp(x)"}},
      {"refine", {"exp(x)"}}, {"zeros", {"exp(x) - 1"}}, {"iszero", {"exp(x)-1", "0"}},
      {"common-zeros", {"exp(x)-1", "exp(2x)-1"}}, {"eval", {"exp(x)", "0"}}};
  ASSERT_EQ(args.size(), fe::command_names().size());
  for (const auto& name : fe::command_names()) expect_envelope(fe::run_command(name, args.at(name), quiet()), name);
}

TEST(Commands, Errors) {
  EXPECT_THROW(fe::run_command("frobnicate", {"x"}, quiet()), Error);
  EXPECT_THROW(fe::run_command("zeros", {}, quiet()), Error);
  EXPECT_THROW(fe::run_command("eval", {"x", "x"}, quiet()), Error);
  try {
    fe::run_command("zeros", {"0"}, quiet());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IdenticallyZero);
    const json d = fe::error_document("zeros", {"0"}, e, quiet());
    expect_envelope(d, "zeros");
    EXPECT_EQ(d["error"]["kind"], "IdenticallyZero");
  }
}

TEST(Commands, Deterministic) {
  for (const char* s : {"(x^2-2)exp(x^2) - (x^2-2)exp(2x)", "exp(exp(x/2 + x^2)) + x^3"}) {
    EXPECT_EQ(fe::run_command("zeros", {s}, quiet()).dump(), fe::run_command("zeros", {s}, quiet()).dump());
  }
  fe::CommandOptions stamped;
  EXPECT_TRUE(fe::run_command("height", {"x"}, stamped).contains("timestamp"));
}

}  // namespace
}  // namespace expzero
