#include <gtest/gtest.h>

#include "cli/format.hpp"
#include "cli/instance.hpp"
#include "goint/errors.hpp"

using namespace goint;
using namespace goint::cli;

namespace {

Json base() {
  return Json::parse(R"({
    "space": {"points": ["a", "b"]},
    "capacity": {"kind": "possibility", "densities": {"a": 1.0, "b": 0.5}},
    "function": {"a": 0.3, "b": 0.9}
  })");
}

int exit_code_of(const Json& doc) {
  try {
    parse_instance(doc);
    return kOk;
  } catch (const CliError& e) {
    return e.code();
  } catch (const goint::Error&) {
    return kValidation;
  }
}

}  // namespace

TEST(ParseInstance, Fixture) {
  const Instance inst = parse_instance(base());
  EXPECT_EQ(inst.capacity.kind(), CapacityKind::Possibility);
  EXPECT_EQ((*inst.function)[1], 0.9);
  EXPECT_EQ(parse_integral_spec(inst.integral).kind_name(), "sugeno");
}

TEST(ParseInstance, ShapeErrorsAreMalformed) {
  Json doc = base();
  doc.erase("capacity");
  EXPECT_EQ(exit_code_of(doc), kIo);
  doc = base();
  doc["function"]["a"] = "high";
  EXPECT_EQ(exit_code_of(doc), kIo);
  doc = base();
  doc["space"]["points"] = "ab";
  EXPECT_EQ(exit_code_of(doc), kIo);
}

TEST(ParseInstance, BrokenInvariantsAreValidationErrors) {
  Json doc = base();
  doc["function"].erase("b");
  EXPECT_EQ(exit_code_of(doc), kValidation);
  doc = base();
  doc["function"]["c"] = 0.1;
  EXPECT_EQ(exit_code_of(doc), kValidation);
  doc = base();
  doc["capacity"]["densities"]["a"] = 0.9;  // max density must be 1
  EXPECT_EQ(exit_code_of(doc), kValidation);
  doc = base();
  doc["integral"] = {{"kind", "go"}, {"overlap", {{"name", "mean"}}}, {"gpg", {{"name", "max"}}}};
  EXPECT_EQ(exit_code_of(doc), kValidation);
  doc = base();
  doc["sweep"] = {{"parameter", "gpg.gamma"}, {"from", 0}, {"to", 1}, {"steps", 3}};
  EXPECT_EQ(exit_code_of(doc), kValidation);
}

TEST(ParseInstance, TableTotalityAndDuplicates) {
  Json doc = base();
  doc["capacity"] = Json::parse(R"({"kind": "table", "values": [
    {"subset": [], "value": 0}, {"subset": ["a"], "value": 0.2}, {"subset": ["a", "b"], "value": 1}]})");
  EXPECT_EQ(exit_code_of(doc), kValidation);  // {b} missing
  doc["capacity"]["values"].push_back({{"subset", {"b"}}, {"value", 0.3}});
  EXPECT_EQ(exit_code_of(doc), kOk);
  doc["capacity"]["values"].push_back({{"subset", {"b"}}, {"value", 0.3}});
  EXPECT_EQ(exit_code_of(doc), kValidation);
}

TEST(ParseInstance, OperatorAndFunctionalSpecs) {
  EXPECT_EQ(parse_operator_spec(Json{{"name", "power_product"}, {"p", 2}}).describe(), "power_product:p=2");
  EXPECT_EQ(parse_operator_spec(Json("min_power:p=3")).describe(), "min_power:p=3");
  EXPECT_EQ(parse_gpg_spec(Json::parse(R"({"name": "kernel", "kernel": {"name": "tilt", "beta": 2}})")).describe(),
            "kernel:tilt:beta=2");
  EXPECT_THROW(parse_gpg_spec(Json{{"name", "sum"}}), ConfigurationError);
}

TEST(Format, TwelveSignificantDigits) {
  EXPECT_EQ(csv_num(0.1 + 0.2), "0.3");
  EXPECT_EQ(csv_num(2.0 / 3.0), "0.666666666667");
  EXPECT_EQ(round12(0.45000000000000007), 0.45);
  EXPECT_TRUE(num(std::nan("")).is_null());
  EXPECT_EQ(dump(Json{{"b", num(1.0 / 3.0)}, {"a", 1}}), "{\n  \"b\": 0.333333333333,\n  \"a\": 1\n}\n");
}
