// One line per acceptance criterion: PASS/FAIL, measured time against budget.

#include <cstdio>
#include <string>
#include <vector>

#include "qp/verify.hpp"

namespace {

struct Criterion {
  int id;
  std::string check;
  qp::SuiteOptions options;
  double budget_ms;
  std::string label;
};

qp::SuiteOptions with(int order, int kmax, int faces) {
  qp::SuiteOptions o;
  o.order = order;
  o.kmax = kmax;
  o.faces = faces;
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "h4-triple-agreement", with(12, 12, 5), 5000, "p <= 12"},
      {2, "baseline-consistency", with(20, 32, 5), 2000, "N=20 K=32"},
      {3, "kernel-identities", with(16, 12, 5), 10000, "t-degree 16, G-order 16"},
      {4, "new-recursion-closed-form", with(16, 10, 5), 10000, "k <= 10, G-order 16"},
      {5, "bridge-final-formula", with(16, 10, 5), 10000, "k <= 10, g-order 16"},
      {6, "map-enumeration", with(20, 12, 5), 30000, "n <= 5"},
      {6, "map-enumeration", with(20, 12, 6), 300000, "n <= 6, extended"},
      {7, "slices-dividing-line", with(20, 12, 5), 60000, "n <= 5"},
      {8, "series-properties", with(12, 12, 5), 2000, "200 series, order 12"},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const qp::CheckResult r = qp::run_check(c.check, c.options);
    const bool in_time = r.elapsed_ms < c.budget_ms;
    const bool ok = r.pass && in_time;
    failures += !ok;
    std::printf("%s criterion %d %s [%s] %.0f ms (budget %.0f ms)%s: %s\n", ok ? "PASS" : "FAIL", c.id,
                c.check.c_str(), c.label.c_str(), r.elapsed_ms, c.budget_ms, in_time ? "" : " OVER BUDGET",
                r.detail.c_str());
  }
  std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
