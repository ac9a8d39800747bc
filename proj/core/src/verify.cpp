#include "qp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

#include "qp/baseline.hpp"
#include "qp/closed_forms.hpp"
#include "qp/kernel.hpp"
#include "qp/maps/canonical.hpp"
#include "qp/maps/decomposition.hpp"
#include "qp/maps/tally.hpp"

namespace qp {

namespace {

class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure(what);
}

void require_agree(const PowerSeries& a, const PowerSeries& b, int upto, const std::string& what) {
  require(std::min(a.order(), b.order()) >= upto, what + ": known only to order " +
                                                      std::to_string(std::min(a.order(), b.order())));
  for (int i = 0; i <= upto; ++i) {
    if (a[i] != b[i]) {
      throw CheckFailure(what + ": coefficient " + std::to_string(i) + " is " + a[i].get_str() +
                         ", expected " + b[i].get_str());
    }
  }
}

void require_same(const BiSeries& a, const BiSeries& b, int degree, int order, const std::string& what) {
  require(a.degree() >= degree && b.degree() >= degree, what + ": t-degree too small");
  for (int j = 0; j <= degree; ++j) require_agree(a[j], b[j], order, what + " (t^" + std::to_string(j) + ")");
}

void require_zero(const BiSeries& r, int degree, int order, const std::string& what) {
  require(r.degree() >= degree, what + ": t-degree too small");
  for (int j = 0; j <= degree; ++j) {
    require(r[j].order() >= order, what + ": residual known only to order " + std::to_string(r[j].order()));
    for (int i = 0; i <= order; ++i) {
      require(r[j][i] == 0, what + ": nonzero residual at t^" + std::to_string(j) + " " +
                                var_name(r.inner_var()).data() + "^" + std::to_string(i));
    }
  }
}

// Perturbs one coefficient so the failure path can be exercised end to end.
void corrupt(PowerSeries& s, int index) {
  std::vector<Rational> c(s.coefficients().begin(), s.coefficients().end());
  c.at(static_cast<std::size_t>(index)) += 1;
  s = PowerSeries(s.var(), std::move(c));
}

bool faulty(const SuiteOptions& o, const char* name) { return o.inject_fault == name; }

constexpr const char* kH4 = "h4-triple-agreement";
constexpr const char* kBaseline = "baseline-consistency";
constexpr const char* kKernel = "kernel-identities";
constexpr const char* kRecursion = "new-recursion-closed-form";
constexpr const char* kBridge = "bridge-final-formula";
constexpr const char* kTally = "map-enumeration";
constexpr const char* kSlices = "slices-dividing-line";
constexpr const char* kProperties = "series-properties";

std::string check_h4(const SuiteOptions& o) {
  const int P = std::max(12, o.order);
  PowerSeries solver = solve_phi(0, P)[0];
  const PowerSeries param = parametric_h4(P).h4;
  if (faulty(o, kH4)) corrupt(solver, 3);
  const int first[] = {1, 1, 3, 11, 46, 209};
  for (int p = 1; p <= 6; ++p) {
    require(solver[p] == first[p - 1], "solver h4 at p=" + std::to_string(p) + " is " + solver[p].get_str());
  }
  require_agree(param, solver, P, "parametric h4 vs solver");
  for (int p = 1; p <= P; ++p) {
    require(lagrange_h4(p) == solver[p], "Lagrange h4 at p=" + std::to_string(p) + " is " +
                                             lagrange_h4(p).get_str());
  }
  return "three routes agree to p=" + std::to_string(P) + ", [G^12] = " + solver[12].get_str();
}

std::string check_baseline(const SuiteOptions& o) {
  const int N = o.order, K = o.kmax;
  SeriesFamily R = solve_R_family(K + 1, N);
  if (faulty(o, kBaseline)) corrupt(R.entries[2], std::min(N, 2));
  const PowerSeries g = PowerSeries::identity(Var::g, N);
  for (int k = 1; k <= K; ++k) {
    const PowerSeries rhs = Rational(1) + g * R[k] * (R[k - 1] + R[k] + R[k + 1]);
    require_agree(R[k], rhs.truncated(N), N, "R_k equation at k=" + std::to_string(k));
  }
  const PowerSeries& rinf = *R.limit;
  require_agree(compute_R1(N), R[1], N, "R_1 = R_inf - g R_inf^3");
  Integer three_n = 1;
  for (int n = 0; n <= N; ++n) {
    require(rinf[n] == Rational(three_n * catalan(n)), "R_inf at n=" + std::to_string(n));
    three_n *= 3;
  }
  int stabilized = 0;
  for (int k = 1; k <= K; ++k) {
    for (int n = 0; n < k && n <= N; ++n) {
      require(R[k][n] == rinf[n], "stabilization [g^" + std::to_string(n) + "] R_" + std::to_string(k));
      ++stabilized;
    }
  }
  require(R.is_counting(), "R family has a non-counting coefficient");
  return "residual zero for k<=" + std::to_string(K) + " to g^" + std::to_string(N) + ", " +
         std::to_string(stabilized) + " stabilized coefficients";
}

std::string check_kernel(const SuiteOptions& o) {
  const int D = std::min(o.order, 16), N = std::min(o.order, 16);
  const PowerSeries C = parametric_h4(N + 2).C;
  BiSeries phi = solve_phi(D, N);
  const BiSeries Y = kernel_Y(D + 2, N + 2);
  if (faulty(o, kKernel)) {
    std::vector<PowerSeries> c = phi.coefficients();
    corrupt(c[1], 2);
    phi = BiSeries(std::move(c));
  }
  require_zero(kernel_residual(Y, C), D, N, "kernel equation");
  require_same(t_from_Y(Y, C), BiSeries::t(D, Var::G, N), D, N, "t recovered from Y");
  const BiSeries other = other_determination(Y, C);
  require_zero(kernel_residual(other, C), D, N, "kernel equation, second root");
  require_same(involution(Y, C), other, D, N, "involution on the first root");
  require_same(involution(other, C), Y, D, N, "involution on the second root");
  require_zero(phi_quadratic_residual(phi, C.truncated(N)), D, N, "quadratic Phi equation");
  require_same(phi_from_kernel(D, N), phi, D, N, "Phi from the kernel root");
  require_same(phi_from_kernel_factored(D, N), phi, D, N, "factored Phi");
  return "zero residuals to (t^" + std::to_string(D) + ", G^" + std::to_string(N) + ")";
}

std::string check_recursion(const SuiteOptions& o) {
  const int K = std::min(o.kmax, 10), N = std::min(o.order, 16);
  SeriesFamily it = iterate_t(K, N);
  if (faulty(o, kRecursion)) corrupt(it.entries[static_cast<std::size_t>(K)], N);
  const XParam xp = closed_forms_x(K, N);
  const SeriesFamily closed = in_G(xp.closed_t, xp, N);
  for (int k = 1; k <= K; ++k) {
    require_agree(it[k], closed[k], N, "t_" + std::to_string(k) + " iterated vs closed");
    require_agree(xp.W[k], PowerSeries::monomial(Var::x, k + 2, Rational(1), N), N,
                  "W_" + std::to_string(k) + " = x^" + std::to_string(k + 2));
  }
  return "t_k agree for k<=" + std::to_string(K) + " to G^" + std::to_string(N) + "; Y_k and W_k identities hold";
}

std::string check_bridge(const SuiteOptions& o) {
  const int K = std::min(o.kmax, 10), N = std::min(o.order, 16);
  const SeriesFamily base = solve_R_family(K + 1, N);
  SeriesFamily R = bridge_to_general(K, N);
  if (faulty(o, kBridge)) corrupt(R.entries[1], N);
  for (int k = 1; k <= K; ++k) require_agree(R[k], base[k], N, "bridged R_" + std::to_string(k));
  const SeriesFamily G = assemble_G(base);
  const SeriesFamily closed = closed_two_point(K + 1, N);
  for (int k = 1; k <= K; ++k) require_agree(closed[k], G[k], N, "closed G_" + std::to_string(k));
  return "R_k and G_k agree for k<=" + std::to_string(K) + " to g^" + std::to_string(N);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

PowerSeries random_series(std::mt19937_64& rng, int order, int valuation, const Rational* lead) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int i = valuation; i <= order; ++i) c[static_cast<std::size_t>(i)] = random_rational(rng);
  if (lead) c[static_cast<std::size_t>(valuation)] = *lead;
  return PowerSeries(Var::g, std::move(c));
}

std::string check_properties(const SuiteOptions& o) {
  constexpr int kCount = 200, kOrder = 12;
  std::mt19937_64 rng(o.seed);
  const Rational one(1), two(2);
  const PowerSeries id = PowerSeries::identity(Var::g, kOrder);
  const PowerSeries unit = PowerSeries::one(Var::g, kOrder);
  for (int trial = 0; trial < kCount; ++trial) {
    const std::string tag = " (trial " + std::to_string(trial) + ")";
    const PowerSeries a = random_series(rng, kOrder, 0, nullptr);
    const PowerSeries b = random_series(rng, kOrder, 0, nullptr);
    const PowerSeries c = random_series(rng, kOrder, 0, nullptr);
    require_agree(a + b, b + a, kOrder, "addition commutes" + tag);
    require_agree((a + b) + c, a + (b + c), kOrder, "addition associates" + tag);
    require_agree(a * b, b * a, kOrder, "multiplication commutes" + tag);
    require_agree((a * b) * c, a * (b * c), kOrder, "multiplication associates" + tag);
    require_agree(a * (b + c), a * b + a * c, kOrder, "distributivity" + tag);
    require_agree(a - a, PowerSeries::zero(Var::g, kOrder), kOrder, "additive inverse" + tag);

    const PowerSeries u = random_series(rng, kOrder, 0, &one);
    PowerSeries inv = unit / u;
    if (faulty(o, kProperties) && trial == kCount / 2) corrupt(inv, 5);
    require_agree(u * inv, unit, kOrder, "multiplicative inverse" + tag);
    const PowerSeries r = sqrt_one(u);
    require_agree(r * r, u, kOrder, "square root squared" + tag);

    Rational lead = random_rational(rng);
    if (lead == 0) lead = two;
    const PowerSeries s = random_series(rng, kOrder, 1, &lead);
    const PowerSeries rev = revert(s, Var::g);
    require_agree(compose(s, rev), id, kOrder, "s(revert(s)) = x" + tag);
    require_agree(compose(rev, s), id, kOrder, "revert(s)(s) = x" + tag);
  }
  return std::to_string(kCount) + " random series at order " + std::to_string(kOrder) + ", seed " +
         std::to_string(o.seed);
}

std::string check_tally(const SuiteOptions& o) {
  const int n_max = o.faces;
  const SeriesFamily G = assemble_G(solve_R_family(n_max + 3, n_max));
  std::ostringstream detail;
  detail << "totals";
  for (int n = 1; n <= n_max; ++n) {
    maps::TwoPointTally tally = maps::tally_two_point(n);
    if (faulty(o, kTally) && n == n_max) tally.by_distance[1] += 1;
    require(tally.by_distance[0] == tally.rooted_total, "pointed vertex at the root vertex, n=" + std::to_string(n));
    for (const auto& row : maps::compare_with_series(tally, G)) {
      require(row.match, "n=" + std::to_string(n) + " k=" + std::to_string(row.k) + ": " + std::to_string(row.count) +
                             " maps, series says " + row.series_coefficient);
    }
    std::uint64_t sum = 0;
    for (const auto& [k, c] : tally.by_distance) sum += c;
    require(sum == tally.total, "distance classes do not add up, n=" + std::to_string(n));
    if (n == 1) {
      require(tally.by_distance[1] == 3 && tally.by_distance[2] == 1, "one-face values G_1=3, G_2=1");
    }
    detail << (n == 1 ? " " : ", ") << tally.total;
  }
  return detail.str();
}

using SliceKey = std::tuple<int, int, std::vector<int>, int>;  // faces, ell, blocks a_1.., p

std::string check_slices(const SuiteOptions& o) {
  const int n_max = o.faces;
  const SeriesFamily R = solve_R_family(n_max + 3, n_max);
  std::map<SliceKey, std::uint64_t> census;
  std::uint64_t situation_a = 0, situation_b = 0, total = 0;
  for (int n = 1; n <= n_max; ++n) {
    std::map<int, std::uint64_t> by_ell;
    std::set<std::string> codes;
    maps::for_each_pointed_rooted(n, [&](const maps::CombinatorialMap& m) {
      const int ell = maps::root_distance(m);
      if (ell < 1) return;
      const maps::MapTopology topo(m);
      const auto dist = maps::bfs_distances(m, topo, topo.vertex_of[m.pointed]);
      if (dist[static_cast<std::size_t>(topo.target(m, m.root))] != ell - 1) return;
      const maps::SliceView s = maps::extract_slice(m);
      const maps::SliceCheck ok = maps::validate_slice(s);
      require(ok.valid, "extracted slice invalid (n=" + std::to_string(n) + "): " + ok.reason);
      require(codes.insert(maps::canonical_code(s.map, false)).second, "two maps give the same slice");
      ++by_ell[ell];
      ++total;
      if (ell < 2) return;
      const maps::DividingLine line = maps::dividing_line(s);
      (line.ends_through_boundary ? situation_b : situation_a) += 1;
      const maps::BlockDecomposition d = maps::decompose(s, line);
      require(!d.a_sequence.empty() && d.a_sequence[0] == 2, "a_0 != 2");
      require(static_cast<int>(d.upper_slices.size()) == line.p, "upper slice count != p");
      for (const auto& up : d.upper_slices) {
        const maps::SliceCheck uc = maps::validate_slice(up);
        require(uc.valid, "upper slice invalid: " + uc.reason);
        require(up.ell >= 2 && up.ell <= ell - 1, "upper slice length out of range");
      }
      for (const auto& b : d.blocks) {
        const std::string v = maps::property2_violation(b.core);
        require(v.empty(), "block core violates Property 2: " + v);
      }
      census[{n, ell, std::vector<int>(d.a_sequence.begin() + 1, d.a_sequence.end()), line.p}] += 1;
    });
    if (faulty(o, kSlices) && n == n_max) by_ell[1] += 1;
    for (int ell = 1; ell <= n + 2; ++ell) {
      const Rational expect = ell == 1 ? R[1][n] : R[ell][n] - R[ell - 1][n];
      require(Rational(static_cast<long>(by_ell[ell])) == expect,
              "n=" + std::to_string(n) + " ell=" + std::to_string(ell) + ": " + std::to_string(by_ell[ell]) +
                  " slices, series says " + expect.get_str());
    }
  }

  // Refined count: slices with 2 <= ell <= k, by block sequence and number of
  // upper slices, against R_1 prod W_{a_m} with u marking upper slices.
  const int D = n_max;
  const SeriesFamily T = T_family(R);
  const BiSeries phi = general_phi(D, D);
  const PowerSeries& r1 = R[1];
  std::size_t matched_keys = 0;
  for (int k = 2; k <= n_max + 1; ++k) {
    std::vector<BiSeries> xpow{BiSeries::constant(PowerSeries::one(Var::g, D), D)};
    const BiSeries X = BiSeries::monomial(1, T[k - 1], D);
    for (int j = 1; j <= D; ++j) xpow.push_back(xpow.back() * X);
    BiSeries w1(D, Var::g, D), w2(D, Var::g, D);
    for (int i = 2; i <= D + 2; ++i) {
      const PowerSeries& h = phi[i - 2];
      if (i - 1 <= D) w1 += xpow[static_cast<std::size_t>(i - 1)] * h;
      w2 += xpow[static_cast<std::size_t>(i - 2)] * h;
    }
    w1 *= r1;
    w2 *= r1 * r1;
    std::map<SliceKey, std::uint64_t> tallied;
    for (const auto& [key, c] : census) {
      if (std::get<1>(key) <= k) tallied[{std::get<0>(key), 0, std::get<2>(key), std::get<3>(key)}] += c;
    }
    std::size_t seen = 0;
    for (int len = 1; len <= n_max; ++len) {
      for (int mask = 0; mask < (1 << len); ++mask) {
        std::vector<int> seq;
        BiSeries prod = BiSeries::constant(r1, D);
        for (int m = 0; m < len; ++m) {
          seq.push_back((mask >> m) & 1 ? 1 : 2);
          prod = prod * (seq.back() == 1 ? w1 : w2);
        }
        for (int p = 0; p <= D; ++p) {
          for (int n = 1; n <= n_max; ++n) {
            const auto it = tallied.find({n, 0, seq, p});
            const std::uint64_t c = it == tallied.end() ? 0 : it->second;
            if (c) ++seen;
            require(Rational(static_cast<long>(c)) == prod[p][n],
                    "k=" + std::to_string(k) + " n=" + std::to_string(n) + " p=" + std::to_string(p) +
                        " blocks of length " + std::to_string(len) + ": " + std::to_string(c) +
                        " slices, series says " + prod[p][n].get_str());
          }
        }
      }
    }
    require(seen == tallied.size(), "slices with block sequences longer than n");
    matched_keys += seen;
  }
  return std::to_string(total) + " slices; " + std::to_string(situation_b) + " of " +
         std::to_string(situation_a + situation_b) + " lines end on the left boundary; " + std::to_string(matched_keys) +
         " refined classes match";
}

}  // namespace

bool VerificationReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string VerificationReport::to_table() const {
  std::size_t width = 5;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "check" << "  result  " << std::right << std::setw(9)
     << "ms" << "  detail\n";
  for (const auto& c : checks) {
    os << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << (c.pass ? "PASS  " : "FAIL  ")
       << "  " << std::right << std::setw(9) << std::fixed << std::setprecision(1) << c.elapsed_ms << "  "
       << c.detail << "\n";
  }
  os << (overall() ? "overall: PASS" : "overall: FAIL") << "\n";
  return os.str();
}

std::string VerificationReport::to_json(const SuiteOptions& o) const {
  nlohmann::ordered_json j;
  j["suite"] = o.suite;
  j["order"] = o.order;
  j["kmax"] = o.kmax;
  j["faces"] = o.faces;
  j["seed"] = o.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  j["overall"] = overall();
  return j.dump(2) + "\n";
}

int max_faces() {
  if (const char* env = std::getenv("QP_MAX_FACES")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 8) return static_cast<int>(v);
  }
  return 6;
}

void validate_options(const SuiteOptions& o) {
  if (o.order < 2 || o.order > 64) throw std::invalid_argument("--order must be in [2, 64]");
  if (o.kmax < 2 || o.kmax > 32) throw std::invalid_argument("--kmax must be in [2, 32]");
  const int cap = max_faces();
  if (o.faces < 1 || o.faces > cap) {
    throw std::invalid_argument("--faces must be in [1, " + std::to_string(cap) + "] (QP_MAX_FACES raises the cap to 8)");
  }
  if (o.suite != "all" && o.suite != "series" && o.suite != "kernel" && o.suite != "maps") {
    throw std::invalid_argument("unknown suite '" + o.suite + "'");
  }
}

const std::vector<NamedCheck>& all_checks() {
  static const std::vector<NamedCheck> checks = {
      {kH4, "series", check_h4},
      {kBaseline, "series", check_baseline},
      {kKernel, "kernel", check_kernel},
      {kRecursion, "kernel", check_recursion},
      {kBridge, "kernel", check_bridge},
      {kTally, "maps", check_tally},
      {kSlices, "maps", check_slices},
      {kProperties, "series", check_properties},
  };
  return checks;
}

CheckResult run_check(const std::string& name, const SuiteOptions& options) {
  for (const auto& c : all_checks()) {
    if (c.name != name) continue;
    CheckResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = c.run(options);
      r.pass = true;
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw std::invalid_argument("unknown check '" + name + "'");
}

VerificationReport run_suite(const SuiteOptions& options) {
  validate_options(options);
  std::vector<std::future<CheckResult>> jobs;
  for (const auto& c : all_checks()) {
    if (options.suite != "all" && options.suite != c.suite) continue;
    jobs.push_back(std::async(std::launch::async, [&options, name = c.name] { return run_check(name, options); }));
  }
  VerificationReport report;
  for (auto& j : jobs) report.checks.push_back(j.get());
  return report;
}

}  // namespace qp
