#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qp/baseline.hpp"
#include "qp/closed_forms.hpp"
#include "qp/kernel.hpp"
#include "qp/maps/dot_export.hpp"
#include "qp/maps/tally.hpp"
#include "qp/series_json.hpp"
#include "qp/verify.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to the file at path, or stdout when path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

qp::SeriesFamily single(std::string name, qp::PowerSeries s) {
  qp::SeriesFamily f;
  f.name = std::move(name);
  f.entries.push_back(std::move(s));
  return f;
}

qp::SeriesFamily truncated(qp::SeriesFamily f, int N) {
  for (auto& e : f.entries) e = e.truncated(N);
  if (f.limit) f.limit = f.limit->truncated(N);
  return f;
}

// Family for a target, plus the first index worth listing in CSV.
std::pair<qp::SeriesFamily, int> build_target(const std::string& target, int N, int K) {
  if (target == "R") return {qp::solve_R_family(K, N), 1};
  if (target == "G") return {qp::assemble_G(qp::solve_R_family(K + 1, N)), 1};
  if (target == "t") return {qp::iterate_t(K, N), 1};
  if (target == "h") {
    // Entry i holds h_{2i}(G); entries 0 and 1 are zero.
    const qp::BiSeries phi = qp::solve_phi(K, N);
    qp::SeriesFamily f;
    f.name = "h";
    f.entries.assign(2, qp::PowerSeries::zero(qp::Var::G, N));
    for (int i = 2; i <= K; ++i) f.entries.push_back(phi[i - 2]);
    return {f, 2};
  }
  if (target == "C") return {single("C", qp::parametric_h4(N).C), 0};
  if (target == "x") return {single("x", qp::closed_forms_x(2, N).x_of_g), 0};
  throw UsageError("unknown target '" + target + "'");
}

// The reversion-based targets need order >= 1; order 0 is cut down afterwards.
std::pair<qp::SeriesFamily, int> series_target(const std::string& target, int N, int K) {
  auto [family, first] = build_target(target, std::max(N, 1), K);
  return {truncated(std::move(family), N), first};
}

std::string family_csv(const qp::SeriesFamily& f, int first) {
  std::ostringstream os;
  os << "k,n,coefficient\n";
  for (int k = first; k <= f.max_index(); ++k) {
    for (int n = 0; n <= f[k].order(); ++n) os << k << ',' << n << ',' << f[k][n].get_str() << '\n';
  }
  return os.str();
}

int export_dot(int faces, const std::string& what, const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw std::runtime_error("cannot create directory " + dir);
  int count = 0;
  auto open = [&](const char* prefix) {
    char name[64];
    std::snprintf(name, sizeof name, "%s_n%d_%05d", prefix, faces, count++);
    const fs::path path = fs::path(dir) / (std::string(name) + ".dot");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return std::make_pair(std::move(out), std::string(name));
  };
  qp::maps::for_each_pointed_rooted(faces, [&](const qp::maps::CombinatorialMap& m) {
    if (what == "all") {
      auto [out, name] = open("map");
      qp::maps::write_pointed_dot(out, m, name);
      return;
    }
    const int ell = qp::maps::root_distance(m);
    if (ell < 1) return;
    const qp::maps::MapTopology topo(m);
    const auto dist = qp::maps::bfs_distances(m, topo, topo.vertex_of[m.pointed]);
    if (dist[static_cast<std::size_t>(topo.target(m, m.root))] != ell - 1) return;
    const qp::maps::SliceView s = qp::maps::extract_slice(m);
    if (what == "slices") {
      auto [out, name] = open("slice");
      qp::maps::write_slice_dot(out, s, nullptr, name);
    } else if (ell >= 2) {
      const qp::maps::DividingLine line = qp::maps::dividing_line(s);
      auto [out, name] = open("line");
      qp::maps::write_slice_dot(out, s, &line, name);
    }
  });
  std::cout << count << " files written to " << dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance statistics of quadrangulations: exact series and map enumeration"};
  app.require_subcommand(1);

  qp::SuiteOptions opt;
  std::string format, out, target = "R", what = "all";

  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--order", opt.order, "series order N")->capture_default_str();
  verify->add_option("--kmax", opt.kmax, "largest index K")->capture_default_str();
  verify->add_option("--faces", opt.faces, "largest map size n")->capture_default_str();
  verify->add_option("--suite", opt.suite, "all | series | kernel | maps")->capture_default_str();
  verify->add_option("--seed", opt.seed, "seed for the random series")->capture_default_str();
  verify->add_option("--format", format, "json to also emit a JSON report");
  verify->add_option("--out", out, "JSON report path (default stdout)");
  verify->add_option("--inject-fault", opt.inject_fault)->group("");

  auto* series = app.add_subcommand("series", "write coefficient tables");
  series->add_option("--target", target, "R | G | t | h | C | x")->capture_default_str();
  series->add_option("--order", opt.order, "series order N")->capture_default_str();
  series->add_option("--kmax", opt.kmax, "largest index K")->capture_default_str();
  series->add_option("--format", format, "json | csv");
  series->add_option("--out", out, "output file (default stdout)");

  auto* maps = app.add_subcommand("maps", "export enumerated maps");
  maps->add_option("--faces", opt.faces, "number of faces n")->capture_default_str();
  maps->add_option("--what", what, "all | slices | lines")->capture_default_str();
  maps->add_option("--format", format, "dot | csv");
  maps->add_option("--out", out, "output directory for dot, file for csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) {
      if (!format.empty() && format != "json") throw UsageError("verify supports --format json only");
      qp::VerificationReport report;
      try {
        report = qp::run_suite(opt);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::cout << report.to_table();
      if (format == "json") emit(out, report.to_json(opt));
      for (const auto& c : report.checks) {
        if (!c.pass) std::cerr << "failed: " << c.name << "\n";
      }
      return report.overall() ? 0 : 1;
    }
    if (*series) {
      if (opt.order < 0 || opt.order > 64) throw UsageError("--order must be in [0, 64]");
      if (opt.kmax < 1 || opt.kmax > 32) throw UsageError("--kmax must be in [1, 32]");
      if (format.empty()) format = "json";
      if (format != "json" && format != "csv") throw UsageError("series supports --format json|csv");
      const auto [family, first] = series_target(target, opt.order, opt.kmax);
      emit(out, format == "json" ? qp::to_json(family, 2) + "\n" : family_csv(family, first));
      return 0;
    }
    if (format.empty()) format = "dot";
    if (format == "csv") {
      if (opt.faces < 1 || opt.faces > qp::max_faces()) throw UsageError("--faces out of range");
      const auto G = qp::assemble_G(qp::solve_R_family(opt.faces + 3, opt.faces));
      std::ostringstream os;
      std::vector<qp::maps::TallyRow> rows;
      for (int n = 1; n <= opt.faces; ++n) {
        const auto part = qp::maps::compare_with_series(qp::maps::tally_two_point(n), G);
        rows.insert(rows.end(), part.begin(), part.end());
      }
      qp::maps::write_tally_csv(os, rows);
      emit(out, os.str());
      return 0;
    }
    if (format != "dot") throw UsageError("maps supports --format dot|csv");
    if (opt.faces < 1 || opt.faces > 5) throw UsageError("DOT export needs 1 <= --faces <= 5");
    if (what != "all" && what != "slices" && what != "lines") throw UsageError("--what must be all|slices|lines");
    if (out.empty()) throw UsageError("DOT export needs --out DIR");
    return export_dot(opt.faces, what, out);
  } catch (const UsageError& e) {
    std::cerr << "qp: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "qp: " << e.what() << "\n";
    return 1;
  }
}
