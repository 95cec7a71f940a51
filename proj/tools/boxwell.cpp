// Command-line front end: spectra, critical-value searches, wavefunction
// sampling, self-verification, and reproduction of the built-in reference
// tables.  Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 numerical failure, 4 I/O failure.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "boxwell/golden_tables.hpp"
#include "boxwell/oracle.hpp"
#include "boxwell/rootfind.hpp"
#include "boxwell/wavefunction.hpp"

using namespace boxwell;

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fixed4(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%11.4f", v);
  return buf;
}

// Stream selection: stdout by default, a file when --out is given.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::ios_base::failure("cannot open " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_spectrum(double a, double b, double c, double v0, int levels,
                 double tol_x, double tol_f, const std::string& format,
                 const std::string& out_path) {
  const auto spec = make_spec(a, b, c, v0);
  SpectrumOptions opt;
  opt.tol_x = tol_x;
  opt.tol_f = tol_f;
  const auto sp = find_spectrum(spec, levels, opt);
  Output out(out_path);
  auto& os = out.os();
  if (format == "csv") {
    os << "n,energy,kind,nodes\n";
    for (const auto& l : sp)
      os << l.n << ',' << num(l.energy) << ',' << to_string(l.kind) << ','
         << l.nodes << '\n';
  } else if (format == "json-lines") {
    for (const auto& l : sp)
      os << "{\"n\":" << l.n << ",\"energy\":" << num(l.energy)
         << ",\"kind\":\"" << to_string(l.kind) << "\",\"nodes\":" << l.nodes
         << "}\n";
  } else {
    os << "# a=" << num(a) << " b=" << num(b) << " c=" << num(c)
       << " v0=" << num(v0) << "\n";
    os << "  n       energy  kind         nodes\n";
    for (const auto& l : sp) {
      char line[96];
      std::snprintf(line, sizeof line, "%3d %12.6f  %-12s %5d\n", l.n,
                    l.energy, to_string(l.kind), l.nodes);
      os << line;
    }
  }
  return 0;
}

int cmd_special(const std::string& mode, double b, double d1, double d2,
                int count, int levels, const std::string& format,
                const std::string& out_path) {
  const auto roots = mode == "depths" ? find_special_depths(b, d1, d2, count)
                                      : find_special_heights(b, d1, d2, count);
  Output out(out_path);
  auto& os = out.os();
  if (format == "csv") {
    os << "order,v0";
    for (int i = 0; i < levels; ++i) os << ",E" << i;
    os << '\n';
  } else if (format == "pretty") {
    os << "# mode=" << mode << " b=" << num(b) << " d1=" << num(d1)
       << " d2=" << num(d2) << "\n";
    os << "  n          v0  levels (E = 0 marked Z, E = V0 marked T)\n";
  }
  for (const auto& r : roots) {
    const auto spec = make_spec(b + d1, b, b + d2, r.v0);
    const auto sp = find_spectrum(spec, levels);
    if (format == "csv") {
      os << r.order << ',' << num(r.v0);
      for (const auto& l : sp) os << ',' << num(l.energy);
      os << '\n';
    } else if (format == "json-lines") {
      os << "{\"order\":" << r.order << ",\"v0\":" << num(r.v0)
         << ",\"levels\":[";
      for (int i = 0; i < levels; ++i)
        os << (i ? "," : "") << num(sp[i].energy);
      os << "]}\n";
    } else {
      os << ' ' << r.order << ' ' << fixed4(r.v0) << ' ';
      for (const auto& l : sp) {
        os << fixed4(l.energy);
        if (l.kind == LevelKind::ZeroEnergy) os << "Z";
        else if (l.kind == LevelKind::BarrierTop) os << "T";
        else os << ' ';
      }
      os << '\n';
    }
  }
  return 0;
}

int cmd_wavefunction(double a, double b, double c, double v0, int level,
                     int points, const std::string& format,
                     const std::string& out_path) {
  const auto spec = make_spec(a, b, c, v0);
  const auto sp = find_spectrum(spec, std::max(level + 1, 1));
  const auto wf = build_wavefunction(spec, sp[level]);
  const int nodes = count_nodes(wf);
  const auto pts = sample(wf, points);
  Output out(out_path);
  auto& os = out.os();
  if (format == "json-lines") {
    os << "{\"a\":" << num(a) << ",\"b\":" << num(b) << ",\"c\":" << num(c)
       << ",\"v0\":" << num(v0) << ",\"n\":" << level
       << ",\"E\":" << num(sp[level].energy) << ",\"kind\":\""
       << to_string(sp[level].kind) << "\",\"nodes\":" << nodes << "}\n";
    for (const auto& [x, psi] : pts)
      os << "{\"x\":" << num(x) << ",\"psi\":" << num(psi) << "}\n";
  } else {
    os << "# a=" << num(a) << " b=" << num(b) << " c=" << num(c)
       << " v0=" << num(v0) << " n=" << level << " E=" << num(sp[level].energy)
       << " kind=" << to_string(sp[level].kind) << " nodes=" << nodes << "\n";
    for (const auto& [x, psi] : pts) os << num(x) << ',' << num(psi) << '\n';
  }
  return 0;
}

int cmd_verify(double a, double b, double c, double v0, int levels) {
  auto spec = make_spec(a, b, c, v0);
  // A v0 quoted near a critical value selects the idealized special spectrum;
  // its exactness claims hold at the refined critical value, so verify there.
  if (const auto v0_star = nearest_critical_v0(spec, 5e-4)) {
    if (*v0_star != v0) {
      std::printf("v0 %s matches the critical value %s; verifying there\n",
                  num(v0).c_str(), num(*v0_star).c_str());
      spec = make_spec(a, b, c, *v0_star);
    }
  }
  const auto sp = find_spectrum(spec, levels);
  std::vector<Wavefunction> wfs;
  wfs.reserve(sp.size());
  for (const auto& l : sp) wfs.push_back(build_wavefunction(spec, l));
  bool all_ok = true;
  auto line = [&](const char* name, bool ok, double dev) {
    std::printf("%s  %-24s max deviation %.3g\n", ok ? "PASS" : "FAIL", name,
                dev);
    if (!ok) all_ok = false;
  };

  double gram_dev = 0.0;
  for (int i = 0; i < levels; ++i)
    for (int j = 0; j < levels; ++j)
      gram_dev = std::fmax(gram_dev, std::fabs(inner_product(wfs[i], wfs[j]) -
                                               (i == j ? 1.0 : 0.0)));
  line("orthonormality", gram_dev < 1e-6, gram_dev);

  int node_dev = 0;
  for (const auto& wf : wfs)
    node_dev = std::max(node_dev, std::abs(count_nodes(wf) - wf.level.n));
  line("node counts", node_dev == 0, node_dev);

  double schr_dev = 0.0;
  std::mt19937 rng(99);
  for (const auto& wf : wfs) {
    double peak = 0.0;
    for (double x = -spec.a + 1e-3; x < spec.c; x += 0.01)
      peak = std::fmax(peak, std::fabs(evaluate(wf, x)));
    const double scale = peak * (1.0 + std::fabs(wf.level.energy));
    for (const auto& r : wf.regions) {
      std::uniform_real_distribution<double> in(r.x_lo + 1e-9, r.x_hi - 1e-9);
      const double v = spec.value_at(0.5 * (r.x_lo + r.x_hi));
      for (int i = 0; i < 100; ++i) {
        const double x = in(rng);
        const double res =
            r.second_derivative(x) + (wf.level.energy - v) * r.value(x);
        schr_dev = std::fmax(schr_dev, std::fabs(res) / scale);
      }
    }
  }
  line("local Schrodinger residual", schr_dev < 1e-6, schr_dev);

  const auto shot = numerov_spectrum(spec, levels, 1e-3);
  double oracle_dev = 0.0;
  for (int i = 0; i < levels; ++i)
    oracle_dev = std::fmax(oracle_dev, std::fabs(shot[i] - sp[i].energy));
  line("shooting oracle", oracle_dev < 1e-4, oracle_dev);

  return all_ok ? 0 : 1;
}

int cmd_reproduce(int table, double tolerance, const std::string& out_path) {
  Output out(out_path);
  auto& os = out.os();
  struct CellDiff {
    int table, row, col;
    double computed, printed;
  };
  std::vector<CellDiff> bad;
  for (const auto& row : golden::kRows) {
    if (table != 0 && row.table != table) continue;
    double v0 = row.v0;
    const double d1 = row.table == 1 ? 2.0 : 1.0;
    if (row.special == golden::SpecialTag::ZeroEnergy)
      v0 = find_special_depths(1.0, d1, 2.0, row.special_order + 1).back().v0;
    else if (row.special == golden::SpecialTag::BarrierTop)
      v0 = find_special_heights(1.0, d1, 2.0, row.special_order + 1).back().v0;
    const auto spec = golden::spec_for_table(row.table, v0);
    const auto sp = find_spectrum(spec, 6);
    double worst = 0.0;
    if (row.special != golden::SpecialTag::None)
      worst = std::fabs(v0 - row.v0);
    for (int i = 0; i < 6; ++i) {
      const double dev = std::fabs(sp[i].energy - row.levels[i]);
      if (i == row.corrupt_col) continue;
      worst = std::fmax(worst, dev);
      if (dev > tolerance)
        bad.push_back({row.table, row.row, i, sp[i].energy, row.levels[i]});
    }
    char line[160];
    std::snprintf(line, sizeof line,
                  "table %d row %2d  v0 %11.6f  max |dE| %8.2e%s\n", row.table,
                  row.row, v0, worst,
                  row.corrupt_col >= 0 ? "  (one cell excluded: source misprint)"
                                       : "");
    os << line;
  }
  if (!bad.empty()) {
    os << "mismatches beyond " << num(tolerance) << ":\n";
    for (const auto& d : bad) {
      char line[160];
      std::snprintf(line, sizeof line,
                    "  table %d row %d E%d: computed %.6f printed %.4f\n",
                    d.table, d.row, d.col, d.computed, d.printed);
      os << line;
    }
    return 1;
  }
  os << "all rows reproduced within " << num(tolerance) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bound states of a rectangular barrier or well between rigid walls"};
  app.require_subcommand(1);

  double a = 3, b = 1, c = 3, v0 = 0, d1 = 2, d2 = 2;
  double tol_x = 1e-10, tol_f = 1e-12, tolerance = 2e-3;
  int levels = 6, count = 4, level = 0, points = 601, table = 0;
  std::string format = "pretty", mode, out_path;

  auto* sc_spectrum = app.add_subcommand("spectrum", "first n eigenvalues at fixed v0");
  sc_spectrum->add_option("--a", a)->required();
  sc_spectrum->add_option("--b", b)->required();
  sc_spectrum->add_option("--c", c)->required();
  sc_spectrum->add_option("--v0", v0)->required();
  sc_spectrum->add_option("--levels", levels);
  sc_spectrum->add_option("--tol-x", tol_x);
  sc_spectrum->add_option("--tol-f", tol_f);
  sc_spectrum->add_option("--format", format)
      ->check(CLI::IsMember({"pretty", "csv", "json-lines"}));
  sc_spectrum->add_option("--out", out_path);

  auto* sc_special = app.add_subcommand(
      "special", "critical depths/heights and their spectra");
  sc_special->add_option("--mode", mode)
      ->required()
      ->check(CLI::IsMember({"depths", "heights"}));
  sc_special->add_option("--b", b)->required();
  sc_special->add_option("--d1", d1)->required();
  sc_special->add_option("--d2", d2)->required();
  sc_special->add_option("--count", count);
  sc_special->add_option("--levels", levels);
  sc_special->add_option("--format", format)
      ->check(CLI::IsMember({"pretty", "csv", "json-lines"}));
  sc_special->add_option("--out", out_path);

  auto* sc_wf = app.add_subcommand("wavefunction",
                                   "sampled normalized eigenfunction as CSV");
  sc_wf->add_option("--a", a)->required();
  sc_wf->add_option("--b", b)->required();
  sc_wf->add_option("--c", c)->required();
  sc_wf->add_option("--v0", v0)->required();
  sc_wf->add_option("--level", level);
  sc_wf->add_option("--points", points);
  sc_wf->add_option("--format", format)
      ->check(CLI::IsMember({"csv", "json-lines"}));
  sc_wf->add_option("--out", out_path);

  auto* sc_verify = app.add_subcommand(
      "verify", "orthonormality, node, residual, and oracle checks");
  sc_verify->add_option("--a", a)->required();
  sc_verify->add_option("--b", b)->required();
  sc_verify->add_option("--c", c)->required();
  sc_verify->add_option("--v0", v0)->required();
  sc_verify->add_option("--levels", levels);

  auto* sc_tables = app.add_subcommand(
      "reproduce-tables", "recompute the built-in reference tables and diff");
  sc_tables->add_option("--table", table)->check(CLI::IsMember({0, 1, 2}));
  sc_tables->add_option("--tolerance", tolerance);
  sc_tables->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sc_spectrum->parsed())
      return cmd_spectrum(a, b, c, v0, levels, tol_x, tol_f, format, out_path);
    if (sc_special->parsed())
      return cmd_special(mode, b, d1, d2, count, levels, format, out_path);
    if (sc_wf->parsed()) {
      if (sc_wf->count("--format") == 0) format = "csv";
      return cmd_wavefunction(a, b, c, v0, level, points, format, out_path);
    }
    if (sc_verify->parsed()) return cmd_verify(a, b, c, v0, levels);
    if (sc_tables->parsed()) return cmd_reproduce(table, tolerance, out_path);
  } catch (const GeometryError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const NoConvergence& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const SpectrumIncomplete& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const InconsistentSystem& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o failure: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
