#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "qp/verify.hpp"

using namespace qp;

namespace {

SuiteOptions small() {
  SuiteOptions o;
  o.order = 12;
  o.kmax = 6;
  o.faces = 3;
  return o;
}

}  // namespace

TEST(Verify, EveryCheckOnce) {
  std::set<std::string> names;
  for (const auto& c : all_checks()) EXPECT_TRUE(names.insert(c.name).second) << c.name;
  EXPECT_EQ(names.size(), 8U);
  const VerificationReport r = run_suite(small());
  EXPECT_EQ(r.checks.size(), 8U);
  EXPECT_TRUE(r.overall()) << r.to_table();
}

TEST(Verify, SuitesSelectChecks) {
  SuiteOptions o = small();
  for (const char* suite : {"series", "kernel", "maps"}) {
    o.suite = suite;
    const VerificationReport r = run_suite(o);
    EXPECT_FALSE(r.checks.empty());
    for (const auto& c : r.checks) {
      const auto it = std::find_if(all_checks().begin(), all_checks().end(), [&](const NamedCheck& n) { return n.name == c.name; });
      EXPECT_EQ(it->suite, suite);
    }
  }
}

TEST(Verify, InjectedFaultIsReported) {
  for (const auto& c : all_checks()) {
    SuiteOptions o = small();
    o.inject_fault = c.name;
    const CheckResult r = run_check(c.name, o);
    EXPECT_FALSE(r.pass) << c.name;
    EXPECT_FALSE(r.detail.empty());
    o.inject_fault.clear();
    EXPECT_TRUE(run_check(c.name, o).pass) << c.name;
  }
}

TEST(Verify, JsonIsDeterministic) {
  SuiteOptions o = small();
  o.suite = "series";
  const std::string a = run_suite(o).to_json(o);
  const std::string b = run_suite(o).to_json(o);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"overall\": true"), std::string::npos);
  EXPECT_EQ(a.find("ms"), std::string::npos);
}

TEST(Verify, Bounds) {
  SuiteOptions o = small();
  o.order = 65;
  EXPECT_THROW(validate_options(o), std::invalid_argument);
  o = small();
  o.kmax = 33;
  EXPECT_THROW(validate_options(o), std::invalid_argument);
  o = small();
  o.suite = "everything";
  EXPECT_THROW(validate_options(o), std::invalid_argument);
  o = small();
  o.faces = 7;
  unsetenv("QP_MAX_FACES");
  EXPECT_EQ(max_faces(), 6);
  EXPECT_THROW(validate_options(o), std::invalid_argument);
  setenv("QP_MAX_FACES", "8", 1);
  EXPECT_EQ(max_faces(), 8);
  EXPECT_NO_THROW(validate_options(o));
  setenv("QP_MAX_FACES", "9", 1);
  EXPECT_EQ(max_faces(), 6);
  unsetenv("QP_MAX_FACES");
}
