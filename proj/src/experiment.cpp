#include "tcs/experiment.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

namespace tcs {

using nlohmann::json;

std::string experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::trajectory: return "trajectory";
    case ExperimentKind::riccati: return "riccati";
    case ExperimentKind::minimality: return "minimality";
    case ExperimentKind::moments: return "moments";
    case ExperimentKind::oracle_compare: return "oracle_compare";
  }
  return "unknown";
}

namespace detail {
std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
}  // namespace detail

namespace {

using detail::fmt17;

const char* const kExperimentNames[] = {"trajectory", "riccati", "minimality",
                                        "moments", "oracle_compare"};

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigParseError("cannot open config file: " + path.string());
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigParseError("config is not valid JSON: " + std::string(e.what()));
  }
}

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Collects $.field-locator diagnostics for every schema violation.
class SchemaCheck {
 public:
  explicit SchemaCheck(const json& j) : j_(j) {}

  std::vector<std::string> run() {
    if (!j_.is_object()) {
      diags_.emplace_back("$: config must be a JSON object");
      return diags_;
    }
    const std::set<std::string> allowed = {
        "experiment", "potential", "mass", "hbar", "x0", "p0",
        "b_re", "b_im", "t_final", "dt", "grid", "output_dir",
        "tolerances", "snapshot_times"};
    for (const auto& item : j_.items()) {
      if (!allowed.count(item.key())) {
        diags_.push_back("$." + item.key() + ": unknown key");
      }
    }

    check_experiment();
    check_potential();
    optional_positive("mass");
    optional_positive("hbar");
    require_number("x0");
    require_number("p0");
    if (j_.contains("b_re") && !j_["b_re"].is_number()) {
      diags_.emplace_back("$.b_re: must be a number");
    }
    if (require_number("b_im") && !(j_["b_im"].get<double>() > 0.0)) {
      diags_.emplace_back("$.b_im: must be > 0 (the state is normalizable only for Im b > 0)");
    }
    const bool tf_ok =
        require_number("t_final") && j_["t_final"].get<double>() > 0.0;
    if (j_.contains("t_final") && j_["t_final"].is_number() &&
        !(j_["t_final"].get<double>() > 0.0)) {
      diags_.emplace_back("$.t_final: must be > 0");
    }
    const bool dt_ok = require_number("dt") && j_["dt"].get<double>() > 0.0;
    if (j_.contains("dt") && j_["dt"].is_number() &&
        !(j_["dt"].get<double>() > 0.0)) {
      diags_.emplace_back("$.dt: must be > 0");
    }
    if (tf_ok && dt_ok &&
        !(j_["dt"].get<double>() < j_["t_final"].get<double>())) {
      diags_.push_back("$.dt: must be smaller than $.t_final (dt=" +
                       fmt17(j_["dt"].get<double>()) + ", t_final=" +
                       fmt17(j_["t_final"].get<double>()) + ")");
    }
    check_grid();
    if (!j_.contains("output_dir")) {
      diags_.emplace_back("$.output_dir: required key is missing");
    } else if (!j_["output_dir"].is_string() ||
               j_["output_dir"].get<std::string>().empty()) {
      diags_.emplace_back("$.output_dir: must be a non-empty string");
    }
    check_tolerances();
    check_snapshot_times(tf_ok);
    return diags_;
  }

 private:
  bool require_number(const std::string& key) {
    if (!j_.contains(key)) {
      diags_.push_back("$." + key + ": required key is missing");
      return false;
    }
    if (!j_[key].is_number()) {
      diags_.push_back("$." + key + ": must be a number");
      return false;
    }
    return true;
  }

  void optional_positive(const std::string& key) {
    if (!j_.contains(key)) return;
    if (!j_[key].is_number() || !(j_[key].get<double>() > 0.0)) {
      diags_.push_back("$." + key + ": must be a number > 0");
    }
  }

  void check_experiment() {
    if (!j_.contains("experiment")) {
      diags_.emplace_back("$.experiment: required key is missing");
      return;
    }
    if (!j_["experiment"].is_string()) {
      diags_.emplace_back("$.experiment: must be a string");
      return;
    }
    const auto name = j_["experiment"].get<std::string>();
    for (const char* known : kExperimentNames) {
      if (name == known) return;
    }
    diags_.push_back(
        "$.experiment: unknown name '" + name +
        "'; allowed: trajectory, riccati, minimality, moments, oracle_compare");
  }

  void check_potential() {
    if (!j_.contains("potential")) {
      diags_.emplace_back("$.potential: required key is missing");
      return;
    }
    const json& p = j_["potential"];
    if (!p.is_object() || !p.contains("kind") || !p["kind"].is_string()) {
      diags_.emplace_back("$.potential: must be an object with a string 'kind'");
      return;
    }
    const auto kind = p["kind"].get<std::string>();
    std::set<std::string> allowed = {"kind"};
    if (kind == "free") {
      // no parameters
    } else if (kind == "harmonic") {
      allowed.insert("omega");
      if (!p.contains("omega") || !p["omega"].is_number() ||
          !(p["omega"].get<double>() > 0.0)) {
        diags_.emplace_back("$.potential.omega: must be a number > 0");
      }
    } else if (kind == "polynomial") {
      allowed.insert("coeffs");
      if (!p.contains("coeffs") || !p["coeffs"].is_array()) {
        diags_.emplace_back(
            "$.potential.coeffs: must be an array of numbers (lowest degree first)");
      } else {
        for (const auto& c : p["coeffs"]) {
          if (!c.is_number()) {
            diags_.emplace_back("$.potential.coeffs: entries must be numbers");
            break;
          }
        }
      }
    } else if (kind == "quartic") {
      allowed.insert("omega");
      allowed.insert("lambda");
      if (!p.contains("omega") || !p["omega"].is_number() ||
          !(p["omega"].get<double>() > 0.0)) {
        diags_.emplace_back("$.potential.omega: must be a number > 0");
      }
      if (!p.contains("lambda") || !p["lambda"].is_number()) {
        diags_.emplace_back("$.potential.lambda: must be a number");
      }
    } else {
      diags_.push_back("$.potential.kind: unknown kind '" + kind +
                       "'; allowed: free, harmonic, polynomial, quartic");
      return;
    }
    for (const auto& item : p.items()) {
      if (!allowed.count(item.key())) {
        diags_.push_back("$.potential." + item.key() + ": unknown key for kind '" +
                         kind + "'");
      }
    }
  }

  void check_grid() {
    if (!j_.contains("grid")) return;
    const json& g = j_["grid"];
    if (!g.is_object()) {
      diags_.emplace_back("$.grid: must be an object {x_min, x_max, n}");
      return;
    }
    const std::set<std::string> allowed = {"x_min", "x_max", "n"};
    for (const auto& item : g.items()) {
      if (!allowed.count(item.key())) {
        diags_.push_back("$.grid." + item.key() + ": unknown key");
      }
    }
    const bool lo = g.contains("x_min") && g["x_min"].is_number();
    const bool hi = g.contains("x_max") && g["x_max"].is_number();
    if (!lo) diags_.emplace_back("$.grid.x_min: must be a number");
    if (!hi) diags_.emplace_back("$.grid.x_max: must be a number");
    if (lo && hi &&
        !(g["x_max"].get<double>() > g["x_min"].get<double>())) {
      diags_.emplace_back("$.grid.x_max: must exceed $.grid.x_min");
    }
    if (!g.contains("n") || !g["n"].is_number_unsigned() ||
        g["n"].get<std::uint64_t>() < 16 ||
        !is_power_of_two(g["n"].get<std::uint64_t>())) {
      diags_.emplace_back("$.grid.n: must be a power-of-two integer >= 16");
    }
  }

  void check_tolerances() {
    if (!j_.contains("tolerances")) return;
    const json& t = j_["tolerances"];
    if (!t.is_object()) {
      diags_.emplace_back("$.tolerances: must be an object");
      return;
    }
    const std::set<std::string> allowed = {"tol_b", "tol_V"};
    for (const auto& item : t.items()) {
      if (!allowed.count(item.key())) {
        diags_.push_back("$.tolerances." + item.key() + ": unknown key");
      } else if (!item.value().is_number() ||
                 !(item.value().get<double>() > 0.0)) {
        diags_.push_back("$.tolerances." + item.key() + ": must be a number > 0");
      }
    }
  }

  void check_snapshot_times(bool t_final_ok) {
    if (!j_.contains("snapshot_times")) return;
    const json& s = j_["snapshot_times"];
    if (!s.is_array()) {
      diags_.emplace_back("$.snapshot_times: must be an array of numbers");
      return;
    }
    const double t_final =
        t_final_ok ? j_["t_final"].get<double>() : 0.0;
    for (const auto& v : s) {
      if (!v.is_number()) {
        diags_.emplace_back("$.snapshot_times: entries must be numbers");
        return;
      }
      if (t_final_ok &&
          (v.get<double>() < 0.0 || v.get<double>() > t_final)) {
        diags_.push_back("$.snapshot_times: entry " + fmt17(v.get<double>()) +
                         " outside [0, t_final]");
      }
    }
  }

  const json& j_;
  std::vector<std::string> diags_;
};

ExperimentConfig build_config(const json& j) {
  ExperimentConfig cfg;
  const auto name = j["experiment"].get<std::string>();
  if (name == "trajectory") cfg.experiment = ExperimentKind::trajectory;
  else if (name == "riccati") cfg.experiment = ExperimentKind::riccati;
  else if (name == "minimality") cfg.experiment = ExperimentKind::minimality;
  else if (name == "moments") cfg.experiment = ExperimentKind::moments;
  else cfg.experiment = ExperimentKind::oracle_compare;

  const double mass = j.value("mass", 1.0);
  const double hbar = j.value("hbar", 1.0);
  cfg.params = PhysicalParams(mass, hbar);

  const json& p = j["potential"];
  const auto kind = p["kind"].get<std::string>();
  if (kind == "free") {
    cfg.potential = PotentialSpec::free_particle();
  } else if (kind == "harmonic") {
    cfg.potential = PotentialSpec::harmonic(p["omega"].get<double>(), mass);
  } else if (kind == "polynomial") {
    cfg.potential =
        PotentialSpec::polynomial(p["coeffs"].get<std::vector<double>>());
  } else {
    cfg.potential = PotentialSpec::quartic(p["omega"].get<double>(),
                                           p["lambda"].get<double>(), mass);
  }

  cfg.init.x0 = j["x0"].get<double>();
  cfg.init.p0 = j["p0"].get<double>();
  cfg.init.b = Complex(j.value("b_re", 0.0), j["b_im"].get<double>());
  cfg.t_final = j["t_final"].get<double>();
  cfg.dt = j["dt"].get<double>();
  if (j.contains("grid")) {
    const json& g = j["grid"];
    cfg.grid = GridSpec(g["x_min"].get<double>(), g["x_max"].get<double>(),
                        g["n"].get<std::size_t>());
  }
  cfg.output_dir = j["output_dir"].get<std::string>();
  if (j.contains("tolerances")) {
    cfg.tolerances.tol_b = j["tolerances"].value("tol_b", cfg.tolerances.tol_b);
    cfg.tolerances.tol_V = j["tolerances"].value("tol_V", cfg.tolerances.tol_V);
  }
  if (j.contains("snapshot_times")) {
    cfg.snapshot_times = j["snapshot_times"].get<std::vector<double>>();
  } else {
    cfg.snapshot_times = {0.0, 0.5 * cfg.t_final, cfg.t_final};
  }
  std::sort(cfg.snapshot_times.begin(), cfg.snapshot_times.end());
  return cfg;
}

std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::size_t nearest_index(const std::vector<double>& times, double t) {
  const auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it == times.begin()) return 0;
  if (it == times.end()) return times.size() - 1;
  const auto hi = static_cast<std::size_t>(it - times.begin());
  return (t - times[hi - 1] <= times[hi] - t) ? hi - 1 : hi;
}

void write_wavefunction_csv(const std::filesystem::path& path,
                            const WaveFunction& psi) {
  std::ofstream out(path);
  if (!out) throw ConfigInvalid("cannot write " + path.string());
  out << "x,re_psi,im_psi,abs2_psi\n";
  for (std::size_t j = 0; j < psi.grid.n; ++j) {
    const Complex a = psi.amplitudes[j];
    out << fmt17(psi.grid.point(j)) << ',' << fmt17(a.real()) << ','
        << fmt17(a.imag()) << ',' << fmt17(std::norm(a)) << '\n';
  }
}

json moments_json(const Moments& m) {
  return json{{"mean_x", m.mean_x},
              {"mean_p", m.mean_p},
              {"var_x", m.var_x},
              {"var_p", m.var_p}};
}

double max_abs(const std::vector<double>& v) {
  double out = 0.0;
  for (double x : v) out = std::max(out, std::abs(x));
  return out;
}

}  // namespace

ExperimentConfig load_config(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  const std::vector<std::string> diags = SchemaCheck(j).run();
  if (!diags.empty()) {
    std::ostringstream msg;
    msg << "config fails schema check (" << diags.size() << " violation"
        << (diags.size() == 1 ? "" : "s") << "): " << diags.front();
    throw SchemaError(msg.str());
  }
  return build_config(j);
}

std::vector<std::string> validate_config(const std::filesystem::path& path) {
  return SchemaCheck(read_json_file(path)).run();
}

void run_experiment(const ExperimentConfig& config, std::ostream& log,
                    bool quiet) {
  const PhysicalParams& params = config.params;
  const InitialData& init = config.init;
  const Complex b = init.b;

  const SemiclassicalTrajectory traj =
      integrate(config.potential, params, init, config.t_final, config.dt);
  const std::vector<double> times = traj.times();

  const RiccatiTrace quotient = q_from_trajectory(traj);
  const RiccatiTrace direct =
      integrate_riccati(config.potential, params, traj, b);
  std::vector<SymbolPartials> partials(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    partials[i] =
        symbol_partials(config.potential, params, traj[i].x, traj[i].p, traj[i].t);
  }
  const MinimalityReport report =
      classify(config.potential, params, init, traj, quotient, config.tolerances);
  const std::vector<double> riccati_fd = riccati_residual(quotient, partials);

  std::vector<double> symplectic_res(traj.size());
  double max_path_gap = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    symplectic_res[i] = std::abs(symplectic_invariant(traj[i].w, traj[i].z) -
                                 Complex(0.0, 2.0 * b.imag()));
    max_path_gap = std::max(max_path_gap, std::abs(quotient.q[i] - direct.q[i]));
  }

  std::filesystem::create_directories(config.output_dir);

  // Unified per-time series; every column is cheap once the trajectory
  // exists, so each experiment writes the same schema.
  {
    const std::filesystem::path csv_path = config.output_dir / "series.csv";
    std::ofstream out(csv_path);
    if (!out) throw ConfigInvalid("cannot write " + csv_path.string());
    out << "t,x,p,action,re_w,im_w,re_z,im_z,q1,q2,var_x,var_p,product,"
           "symplectic_residual,eq6_residual,eq7_residual,eq14_residual\n";
    for (std::size_t i = 0; i < traj.size(); ++i) {
      const TrajectoryPoint& pt = traj[i];
      const Moments m = analytic_moments(pt, b, params.hbar);
      out << fmt17(pt.t) << ',' << fmt17(pt.x) << ',' << fmt17(pt.p) << ','
          << fmt17(pt.action) << ',' << fmt17(pt.w.real()) << ','
          << fmt17(pt.w.imag()) << ',' << fmt17(pt.z.real()) << ','
          << fmt17(pt.z.imag()) << ',' << fmt17(quotient.q[i].real()) << ','
          << fmt17(quotient.q[i].imag()) << ',' << fmt17(m.var_x) << ','
          << fmt17(m.var_p) << ',' << fmt17(report.product_trace[i]) << ','
          << fmt17(symplectic_res[i]) << ',' << fmt17(report.eq6_residual[i])
          << ',' << fmt17(report.eq7_residual[i]) << ','
          << fmt17(report.eq14_residual[i]) << '\n';
    }
    if (!quiet) {
      log << "wrote " << csv_path.string() << " (" << traj.size() << " rows)\n";
    }
  }

  json summary;
  summary["metadata"] = {
      {"tool", "tcsim"},
      {"experiment", experiment_name(config.experiment)},
      {"timestamp", iso8601_utc_now()},
      {"mass", params.mass},
      {"hbar", params.hbar},
      {"potential", config.potential.kind_name()},
      {"b_re", b.real()},
      {"b_im", b.imag()},
      {"x0", init.x0},
      {"p0", init.p0},
      {"t_final", config.t_final},
      {"dt", config.dt},
  };
  summary["times"] = times;
  const double floor = 0.25 * params.hbar * params.hbar;
  double product_dev = 0.0;
  for (double p : report.product_trace) {
    product_dev = std::max(product_dev, std::abs(p - floor));
  }
  summary["max_residuals"] = {
      {"symplectic", max_abs(symplectic_res)},
      {"eq6", max_abs(report.eq6_residual)},
      {"eq7", max_abs(report.eq7_residual)},
      {"eq14", max_abs(report.eq14_residual)},
      {"riccati_path_disagreement", max_path_gap},
      {"riccati_fd", max_abs(riccati_fd)},
      {"product_vs_floor", product_dev},
  };
  if (config.experiment == ExperimentKind::minimality) {
    summary["report"] = {
        {"re_b_zero", report.re_b_zero},
        {"re_b_residual", report.re_b_residual},
        {"product_trace", report.product_trace},
        {"eq6_residual", report.eq6_residual},
        {"eq7_residual", report.eq7_residual},
        {"eq14_residual", report.eq14_residual},
        {"verdict", verdict_name(report.verdict)},
    };
    if (!quiet) log << "verdict: " << verdict_name(report.verdict) << '\n';
  }
  if (config.experiment == ExperimentKind::riccati) {
    std::vector<double> q1(traj.size()), q2(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
      q1[i] = quotient.q[i].real();
      q2[i] = quotient.q[i].imag();
    }
    summary["riccati"] = {
        {"q1", q1},
        {"q2", q2},
        {"fd_residual", riccati_fd},
    };
  }

  const bool wants_snapshots =
      config.experiment == ExperimentKind::moments ||
      config.experiment == ExperimentKind::oracle_compare;
  if (wants_snapshots) {
    GridSpec grid = config.grid
                        ? *config.grid
                        : default_grid(traj, b, params.hbar);
    if (config.experiment == ExperimentKind::oracle_compare && !config.grid) {
      // Widen the auto-sized domain until the kinetic phase-wrap guard at
      // the Nyquist wavenumber holds for this dt.
      const double l_min =
          static_cast<double>(grid.n) *
          std::sqrt(std::numbers::pi * params.hbar * config.dt /
                    (2.0 * params.mass)) *
          (1.0 + 1e-9);
      const double length = grid.x_max - grid.x_min;
      if (length < l_min) {
        const double pad = 0.5 * (l_min - length);
        grid = GridSpec(grid.x_min - pad, grid.x_max + pad, grid.n);
      }
    }

    std::vector<std::size_t> indices;
    for (double s : config.snapshot_times) indices.push_back(nearest_index(times, s));

    json snaps = json::array();
    PhaseTracker tracker;
    std::size_t walked = 0;

    if (config.experiment == ExperimentKind::moments) {
      for (std::size_t k = 0; k < indices.size(); ++k) {
        const std::size_t idx = indices[k];
        for (; walked <= idx; ++walked) tracker.advance(traj[walked].z);
        const WaveFunction psi = build_tcs(params, traj[idx], b, grid, tracker);
        char name[32];
        std::snprintf(name, sizeof name, "psi_%03zu.csv", k);
        write_wavefunction_csv(config.output_dir / name, psi);
        snaps.push_back({{"time", times[idx]},
                         {"file", name},
                         {"norm_squared", psi.norm_squared()},
                         {"grid_moments", moments_json(grid_moments(psi, params.hbar))},
                         {"analytic_moments",
                          moments_json(analytic_moments(traj[idx], b, params.hbar))}});
      }
    } else {
      PropagatorConfig prop{config.dt, grid, params, config.potential};
      prop.validate();
      WaveFunction oracle = build_tcs(params, traj[0], b, grid, PhaseTracker{});
      double t_prev = 0.0;
      for (std::size_t k = 0; k < indices.size(); ++k) {
        const std::size_t idx = indices[k];
        for (; walked <= idx; ++walked) tracker.advance(traj[walked].z);
        const WaveFunction psi_tcs = build_tcs(params, traj[idx], b, grid, tracker);
        if (times[idx] > t_prev) {
          oracle = propagate(oracle, prop, times[idx] - t_prev);
          t_prev = times[idx];
        }
        char tcs_name[32], oracle_name[32];
        std::snprintf(tcs_name, sizeof tcs_name, "psi_tcs_%03zu.csv", k);
        std::snprintf(oracle_name, sizeof oracle_name, "psi_oracle_%03zu.csv", k);
        write_wavefunction_csv(config.output_dir / tcs_name, psi_tcs);
        write_wavefunction_csv(config.output_dir / oracle_name, oracle);
        snaps.push_back(
            {{"time", times[idx]},
             {"tcs_file", tcs_name},
             {"oracle_file", oracle_name},
             {"l2_distance", l2_distance(psi_tcs, oracle)},
             {"phase_aligned_distance", phase_aligned_distance(psi_tcs, oracle)},
             {"oracle_moments", moments_json(grid_moments(oracle, params.hbar))},
             {"analytic_moments",
              moments_json(analytic_moments(traj[idx], b, params.hbar))}});
      }
    }
    summary["snapshots"] = snaps;
    summary["grid"] = {{"x_min", grid.x_min}, {"x_max", grid.x_max}, {"n", grid.n}};
  }

  const std::filesystem::path summary_path = config.output_dir / "summary.json";
  std::ofstream out(summary_path);
  if (!out) throw ConfigInvalid("cannot write " + summary_path.string());
  out << summary.dump(2) << '\n';
  if (!quiet) log << "wrote " << summary_path.string() << '\n';
}

}  // namespace tcs
