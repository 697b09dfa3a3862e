// Command-line front end: deterministic CSV sweeps of the response
// functions, single-time dynamics, two-time correlators, the HBT steady
// state, the emission spectrum, and the full verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
// failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "udw/udw.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Grid {
  double start, stop;
  int count;

  std::vector<double> points() const {
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i) v[i] = start + (stop - start) * i / (count - 1);
    return v;
  }
};

Grid parse_grid(const std::string& text) {
  Grid g{};
  char c1, c2;
  std::istringstream is(text);
  if (!(is >> g.start >> c1 >> g.stop >> c2 >> g.count) || c1 != ':' || c2 != ':')
    throw UsageError("bad grid '" + text + "', expected start:stop:count");
  if (g.count < 2) throw UsageError("grid count must be >= 2");
  if (!(g.start < g.stop)) throw UsageError("grid start must be below stop");
  return g;
}

// Optional key=value defaults file; command-line flags win.
std::map<std::string, std::string> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = val;
  }
  return kv;
}

int thread_count() {
  if (const char* env = std::getenv("UDWB_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

// Computes fn(i) for i in [0, n) into a vector, chunked over threads;
// results land in index order, so output is independent of the schedule.
template <class F>
auto parallel_map(std::size_t n, F&& fn) {
  using R = decltype(fn(std::size_t{0}));
  std::vector<R> out(n);
  const int threads = std::min<std::size_t>(thread_count(), n == 0 ? 1 : n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) out[i] = fn(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw UsageError("output path '" + path + "' is not writable");
    os = &file;
  }
  std::ostream& stream() { return *os; }
};

std::string join_list(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += udw::csv::fmt(v[i]);
  }
  return s;
}

// ---- commands -------------------------------------------------------------

int cmd_spectral_scan(const std::vector<double>& a_list, const Grid& omega_grid, int fig,
                      const std::string& out_path) {
  using namespace udw;
  if (fig != 0 && (fig < 1 || fig > 3))
    throw UsageError("spectral-scan reproduces figures 1..3");
  Output out(out_path);
  auto& os = out.stream();
  csv::comment(os, "udwb spectral-scan");
  if (fig) csv::comment(os, "fig=" + std::to_string(fig));
  csv::comment(os, "a=" + join_list(a_list));
  csv::comment(os, "omega_grid=" + csv::fmt(omega_grid.start) + ":" + csv::fmt(omega_grid.stop) +
                       ":" + std::to_string(omega_grid.count));
  csv::row(os, {"a", "omega", "p_rod", "p1", "p2"});
  const auto omegas = omega_grid.points();
  for (double a : a_list) {
    const auto rows = parallel_map(omegas.size(), [&](std::size_t i) {
      const auto bs = spectral::response(PhysParams(a, omegas[i], 1.0));
      return std::array<double, 3>{bs.g_plus, bs.p1, bs.p2};
    });
    for (std::size_t i = 0; i < omegas.size(); ++i)
      csv::numeric_row(os, {a, omegas[i], rows[i][0], rows[i][1], rows[i][2]});
  }
  return 0;
}

int cmd_dynamics(double a, double omega, double mu, const Grid& tau_grid, double h_arg,
                 const std::string& out_path) {
  using namespace udw;
  if (tau_grid.start < 0.0) throw UsageError("dynamics requires tau >= 0");
  const PhysParams p(a, omega, mu);
  const auto bs = spectral::response(p);
  const auto gen = dynamics::build_generator(p, bs);
  const double h = h_arg > 0.0 ? h_arg : dynamics::default_step(p, bs);

  Output out(out_path);
  auto& os = out.stream();
  csv::comment(os, "udwb dynamics");
  csv::comment(os, "a=" + csv::fmt(a) + " omega=" + csv::fmt(omega) + " mu=" + csv::fmt(mu) +
                       " h=" + csv::fmt(h));
  csv::row(os, {"tau", "sx_analytic", "sx_rk4", "sx_absdiff", "number_analytic", "number_rk4",
                "number_absdiff", "antinumber_analytic", "rho_pp", "rho_pm_re", "rho_pm_im",
                "rho_mp_re", "rho_mp_im", "rho_mm"});
  auto rho = dynamics::DensityMatrix::excited();
  double t = tau_grid.start;
  rho = dynamics::propagate(gen, rho, tau_grid.start, h);
  for (double tau : tau_grid.points()) {
    rho = dynamics::propagate(gen, rho, tau - t, h);
    t = tau;
    const double sx_a = dynamics::expect_sigma_x(p, bs, tau);
    const double sx_n = rho.expectation(dynamics::pauli_x());
    const double num_a = dynamics::expect_number(p, bs, tau);
    const double num_n = rho.rho_pp.real();
    csv::numeric_row(os, {tau, sx_a, sx_n, std::abs(sx_a - sx_n), num_a, num_n,
                          std::abs(num_a - num_n), dynamics::expect_antinumber(p, bs, tau),
                          rho.rho_pp.real(), rho.rho_pm.real(), rho.rho_pm.imag(),
                          rho.rho_mp.real(), rho.rho_mp.imag(), rho.rho_mm.real()});
  }
  return 0;
}

int cmd_correlators(double a, double omega, double mu, double tau_prime, const Grid& tau_grid,
                    const std::string& kind_filter, const std::string& out_path) {
  using namespace udw;
  using regression::CorrelatorKind;
  if (tau_grid.start < 0.0) throw UsageError("correlators require tau >= 0");
  const PhysParams p(a, omega, mu);
  const auto bs = spectral::response(p);
  const std::vector<CorrelatorKind> all{
      CorrelatorKind::Absorption,       CorrelatorKind::Emission,
      CorrelatorKind::NumberNumber,     CorrelatorKind::NumberAntinumber,
      CorrelatorKind::Hbt,              CorrelatorKind::HbtSwapped};
  std::vector<CorrelatorKind> kinds;
  for (auto k : all)
    if (kind_filter.empty() || kind_filter == regression::kind_name(k)) kinds.push_back(k);
  if (kinds.empty()) throw UsageError("unknown correlator kind '" + kind_filter + "'");

  Output out(out_path);
  auto& os = out.stream();
  csv::comment(os, "udwb correlators");
  csv::comment(os, "tau_prime=" + csv::fmt(tau_prime));
  csv::row(os, {"kind", "a", "omega", "mu", "tau_prime", "tau", "re", "im"});
  const auto taus = tau_grid.points();
  for (auto kind : kinds) {
    const auto series = regression::correlator_series(p, bs, kind, tau_prime, taus);
    for (std::size_t i = 0; i < taus.size(); ++i)
      csv::row(os, {regression::kind_name(kind), csv::fmt(a), csv::fmt(omega), csv::fmt(mu),
                    csv::fmt(tau_prime), csv::fmt(taus[i]), csv::fmt(series.values[i].real()),
                    csv::fmt(series.values[i].imag())});
  }
  return 0;
}

int cmd_hbt(const std::vector<double>& a_list, double omega, double mu, int fig,
            const Grid& grid, const std::string& out_path) {
  using namespace udw;
  if (fig != 4 && fig != 5) throw UsageError("hbt reproduces figures 4 or 5");
  Output out(out_path);
  auto& os = out.stream();
  csv::comment(os, "udwb hbt");
  csv::comment(os, "fig=" + std::to_string(fig) + " omega=" + csv::fmt(omega) +
                       " mu=" + csv::fmt(mu) + " a=" + join_list(a_list));
  const auto xs = grid.points();
  if (fig == 4) {
    if (grid.start < 0.0) throw UsageError("hbt fig 4 requires tau >= 0");
    csv::row(os, {"a", "tau", "pss"});
    for (double a : a_list) {
      const PhysParams p(a, omega, mu);
      const auto bs = spectral::response(p);
      const auto rows = parallel_map(xs.size(), [&](std::size_t i) {
        return regression::hbt_pss(p, bs, xs[i]);
      });
      for (std::size_t i = 0; i < xs.size(); ++i) csv::numeric_row(os, {a, xs[i], rows[i]});
    }
  } else {
    csv::row(os, {"a", "omega", "p_hbt"});
    for (double a : a_list) {
      const auto rows = parallel_map(xs.size(), [&](std::size_t i) {
        const auto bs = spectral::response(PhysParams(a, xs[i], mu));
        return regression::hbt_infinite_delay(bs);
      });
      for (std::size_t i = 0; i < xs.size(); ++i) csv::numeric_row(os, {a, xs[i], rows[i]});
    }
  }
  return 0;
}

int cmd_spectrum(double a, double omega, double mu, double T,
                 const std::optional<Grid>& grid_arg, const std::string& out_path) {
  using namespace udw;
  const PhysParams p(a, omega, mu);
  const auto bs = spectral::response(p);
  const auto sp = spectrum::spectrum_params(p, bs);
  // even default count keeps the exact resonance off the grid
  const Grid grid = grid_arg ? *grid_arg : Grid{sp.resonance - 1.0, sp.resonance + 1.0, 200};
  const auto omegas = grid.points();

  const auto result = spectrum::spectrum_finite_T(p, bs, T, omegas);

  Output out(out_path);
  auto& os = out.stream();
  csv::comment(os, "udwb spectrum");
  csv::comment(os, "a=" + csv::fmt(a) + " omega=" + csv::fmt(omega) + " mu=" + csv::fmt(mu) +
                       " T=" + csv::fmt(T));
  csv::comment(os, "resonance=" + csv::fmt(sp.resonance) +
                       " peak_omega=" + csv::fmt(result.peak_omega) +
                       " fwhm=" + csv::fmt(result.fwhm));
  csv::row(os, {"omega", "re_p1", "im_p1", "re_p2", "im_p2", "re_total", "im_total"});
  for (std::size_t i = 0; i < omegas.size(); ++i)
    csv::numeric_row(os, {omegas[i], result.p1[i].real(), result.p1[i].imag(),
                          result.p2[i].real(), result.p2[i].imag(), result.total[i].real(),
                          result.total[i].imag()});
  return 0;
}

int cmd_verify(double a, double omega, double mu, const std::string& suite, bool quick,
               double fourier_eps, const std::string& out_path) {
  using namespace udw;
  verify::SuiteOptions opt{PhysParams(a, omega, mu), quick, fourier_eps};
  const auto results = suite.empty() ? verify::run_all(opt) : verify::run_suite(suite, opt);
  Output out(out_path);
  auto& os = out.stream();
  int failed = 0;
  for (const auto& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name << " residual=" << csv::fmt(r.residual)
       << " tol=" << csv::fmt(r.tolerance);
    if (!r.detail.empty()) os << " (" << r.detail << ")";
    os << "\n";
    if (!r.passed) ++failed;
  }
  os << (failed ? "FAILED " : "OK ") << results.size() - failed << "/" << results.size()
     << " checks\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Accelerated two-level emitter as an open quantum system: response functions, "
               "GKSL dynamics, regression-theorem correlators and emission spectra"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "key=value defaults file; flags override");

  // shared option storage
  std::vector<double> a_list;
  double a = 1.0, omega = 1.0, mu = 1.0, T = 50.0, h = 0.0, tau_prime = 1.0, eps = 3e-6;
  std::string grid_text, out_path, kind, suite;
  int fig = 0;
  bool quick = false;

  auto* scan = app.add_subcommand("spectral-scan", "response functions over an omega grid");
  auto* scan_a = scan->add_option("--a", a_list, "acceleration values");
  auto* scan_grid = scan->add_option("--grid", grid_text, "omega grid start:stop:count");
  auto* scan_fig = scan->add_option("--fig", fig, "figure preset (1, 2 or 3)");
  auto* scan_out = scan->add_option("--out", out_path, "output CSV path (default stdout)");

  auto* dyn = app.add_subcommand("dynamics", "analytic vs propagated single-time expectations");
  auto* dyn_a = dyn->add_option("--a", a, "acceleration");
  auto* dyn_om = dyn->add_option("--omega", omega, "gap parameter");
  auto* dyn_mu = dyn->add_option("--mu", mu, "coupling");
  auto* dyn_grid = dyn->add_option("--grid", grid_text, "tau grid start:stop:count");
  auto* dyn_h = dyn->add_option("--step", h, "integrator step (default: stability bound / 4)");
  auto* dyn_out = dyn->add_option("--out", out_path, "output CSV path");

  auto* corr = app.add_subcommand("correlators", "closed-form two-time correlators");
  auto* corr_a = corr->add_option("--a", a, "acceleration");
  auto* corr_om = corr->add_option("--omega", omega, "gap parameter");
  auto* corr_mu = corr->add_option("--mu", mu, "coupling");
  auto* corr_tp = corr->add_option("--tau-prime", tau_prime, "earlier time (inf for steady state)");
  auto* corr_grid = corr->add_option("--grid", grid_text, "delay grid start:stop:count");
  auto* corr_kind = corr->add_option("--kind", kind, "restrict to one correlator kind");
  auto* corr_out = corr->add_option("--out", out_path, "output CSV path");

  auto* hbt = app.add_subcommand("hbt", "steady-state intensity correlations");
  auto* hbt_a = hbt->add_option("--a", a_list, "acceleration values");
  auto* hbt_om = hbt->add_option("--omega", omega, "gap parameter (fig 4)");
  auto* hbt_mu = hbt->add_option("--mu", mu, "coupling");
  auto* hbt_fig = hbt->add_option("--fig", fig, "4: Pss over delay, 5: infinite-delay over omega");
  auto* hbt_grid = hbt->add_option("--grid", grid_text, "delay or omega grid start:stop:count");
  auto* hbt_out = hbt->add_option("--out", out_path, "output CSV path");

  auto* spec = app.add_subcommand("spectrum", "finite-window emission spectrum");
  auto* spec_a = spec->add_option("--a", a, "acceleration");
  auto* spec_om = spec->add_option("--omega", omega, "gap parameter");
  auto* spec_mu = spec->add_option("--mu", mu, "coupling");
  auto* spec_T = spec->add_option("--T", T, "observation window");
  auto* spec_grid = spec->add_option("--grid", grid_text, "frequency grid start:stop:count");
  auto* spec_out = spec->add_option("--out", out_path, "output CSV path");

  auto* ver = app.add_subcommand("verify", "run the invariant and oracle suites");
  auto* ver_a = ver->add_option("--a", a, "acceleration");
  auto* ver_om = ver->add_option("--omega", omega, "gap parameter");
  auto* ver_mu = ver->add_option("--mu", mu, "coupling");
  auto* ver_suite = ver->add_option("--suite", suite,
                                    "one of spectral, dynamics, regression, spectrum");
  ver->add_flag("--quick", quick, "smaller parameter boxes");
  auto* ver_eps = ver->add_option("--eps", eps, "regulator for the Fourier oracle (scaled by 1/a)");
  auto* ver_out = ver->add_option("--out", out_path, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::map<std::string, std::string> cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    auto num = [&](const char* key, double v, const CLI::Option* o) {
      if (o->count() > 0) return v;
      const auto it = cfg.find(key);
      return it == cfg.end() ? v : std::stod(it->second);
    };
    auto txt = [&](const char* key, const std::string& v, const CLI::Option* o) {
      if (o->count() > 0) return v;
      const auto it = cfg.find(key);
      return it == cfg.end() ? v : it->second;
    };

    if (scan->parsed()) {
      if (!scan_a->count() && cfg.count("a")) {
        a_list.clear();
        std::istringstream is(cfg.at("a"));
        for (double v; is >> v;) {
          a_list.push_back(v);
          if (is.peek() == ',') is.ignore();
        }
      }
      if (a_list.empty()) a_list = {0.5, 1.0, 2.0};
      const Grid g = parse_grid(txt("grid", grid_text.empty() ? "0.1:5:100" : grid_text, scan_grid));
      return cmd_spectral_scan(a_list, g, static_cast<int>(num("fig", fig, scan_fig)),
                               txt("out", out_path, scan_out));
    }
    if (dyn->parsed()) {
      const Grid g = parse_grid(txt("grid", grid_text.empty() ? "0:50:101" : grid_text, dyn_grid));
      return cmd_dynamics(num("a", a, dyn_a), num("omega", omega, dyn_om), num("mu", mu, dyn_mu),
                          g, num("step", h, dyn_h), txt("out", out_path, dyn_out));
    }
    if (corr->parsed()) {
      const Grid g =
          parse_grid(txt("grid", grid_text.empty() ? "0:25:101" : grid_text, corr_grid));
      return cmd_correlators(num("a", a, corr_a), num("omega", omega, corr_om),
                             num("mu", mu, corr_mu), num("tau_prime", tau_prime, corr_tp), g,
                             txt("kind", kind, corr_kind), txt("out", out_path, corr_out));
    }
    if (hbt->parsed()) {
      if (!hbt_a->count() && cfg.count("a")) {
        a_list.clear();
        std::istringstream is(cfg.at("a"));
        for (double v; is >> v;) {
          a_list.push_back(v);
          if (is.peek() == ',') is.ignore();
        }
      }
      if (a_list.empty()) a_list = {0.5, 1.0, 2.0};
      int f = static_cast<int>(num("fig", fig, hbt_fig));
      if (f == 0) f = 4;
      const std::string def_grid = f == 5 ? "0.1:5:100" : "0:25:101";
      const Grid g = parse_grid(txt("grid", grid_text.empty() ? def_grid : grid_text, hbt_grid));
      return cmd_hbt(a_list, num("omega", omega, hbt_om), num("mu", mu, hbt_mu), f, g,
                     txt("out", out_path, hbt_out));
    }
    if (spec->parsed()) {
      std::optional<Grid> g;
      const std::string gt = txt("grid", grid_text, spec_grid);
      if (!gt.empty()) g = parse_grid(gt);
      return cmd_spectrum(num("a", a, spec_a), num("omega", omega, spec_om),
                          num("mu", mu, spec_mu), num("T", T, spec_T), g,
                          txt("out", out_path, spec_out));
    }
    if (ver->parsed()) {
      return cmd_verify(num("a", a, ver_a), num("omega", omega, ver_om), num("mu", mu, ver_mu),
                        txt("suite", suite, ver_suite), quick, num("eps", eps, ver_eps),
                        txt("out", out_path, ver_out));
    }
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const udw::InvalidParameter& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const udw::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
