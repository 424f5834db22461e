// Command-line front end: single-state queries, inflection-locus tables,
// Hugoniot loci with shock solves, and isentrope/integral-curve tables, for
// the exact and the high-temperature-limit closures. Tables are CSV with
// `# key=value` metadata lines or a single JSON document; identical
// invocations produce byte-identical output.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iongas/characteristics.hpp"
#include "iongas/htl.hpp"
#include "iongas/hugoniot.hpp"
#include "iongas/numerics.hpp"
#include "iongas/rarefaction.hpp"
#include "iongas/thermo.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitUsage = 64;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Options {
  std::string gas = "hydrogen";
  std::optional<double> a2, kappa, Ti;
  std::string model = "exact";
  std::string output = "csv";
};

iongas::GasModel resolve_gas(const Options& opt) {
  iongas::GasModel g{};
  bool found = false;
  if (opt.gas == "hydrogen") {
    g = iongas::GasModel::hydrogen();
    found = true;
  } else {
    std::string path = opt.gas;
    std::ifstream in(path);
    if (!in.good()) {
      if (const char* dir = std::getenv("IONGAS_PRESET_DIR")) {
        path = std::string(dir) + "/" + opt.gas + ".json";
        in.open(path);
      }
    }
    if (in.good()) {
      json j = json::parse(in);
      g.a2 = j.at("a2").get<double>();
      g.kappa = j.at("kappa").get<double>();
      g.Ti = j.at("Ti").get<double>();
      found = true;
    }
  }
  if (!found) throw std::domain_error("unknown gas preset: " + opt.gas);
  if (opt.a2) g.a2 = *opt.a2;
  if (opt.kappa) g.kappa = *opt.kappa;
  if (opt.Ti) g.Ti = *opt.Ti;
  iongas::validate(g);
  return g;
}

void emit_table(const Options& opt, const std::vector<std::pair<std::string, std::string>>& meta,
                const std::vector<std::string>& columns,
                const std::vector<std::vector<std::string>>& rows) {
  if (opt.output == "json") {
    json doc;
    for (const auto& [k, v] : meta) doc[k] = v;
    json data = json::array();
    for (const auto& r : rows) {
      json obj;
      for (size_t c = 0; c < columns.size(); ++c)
        obj[columns[c]] = r[c];
      data.push_back(obj);
    }
    doc["rows"] = data;
    std::fputs(doc.dump(2).c_str(), stdout);
    std::fputc('\n', stdout);
    return;
  }
  for (const auto& [k, v] : meta)
    std::printf("# %s=%s\n", k.c_str(), v.c_str());
  std::string header;
  for (size_t c = 0; c < columns.size(); ++c) {
    if (c) header += ',';
    header += columns[c];
  }
  std::printf("%s\n", header.c_str());
  for (const auto& r : rows) {
    std::string line;
    for (size_t c = 0; c < r.size(); ++c) {
      if (c) line += ',';
      line += r[c];
    }
    std::printf("%s\n", line.c_str());
  }
}

// ---- state ---------------------------------------------------------------

int cmd_state(const Options& opt, std::optional<double> p,
              std::optional<double> rho, std::optional<double> alpha,
              std::optional<double> T) {
  const int pairs = int(bool(p)) + int(bool(rho)) + int(bool(alpha));
  if (!T || pairs != 1) {
    std::fprintf(stderr,
                 "state: exactly one of --p/--rho/--alpha together with --T "
                 "is required\n");
    return kExitUsage;
  }
  const iongas::GasModel g = resolve_gas(opt);
  std::vector<std::pair<std::string, std::string>> meta{{"model", opt.model}};
  if (opt.model == "htl") {
    iongas::htl::HtlState s{};
    if (p)
      s = iongas::htl::state_from_pT(g, *p, *T);
    else if (alpha)
      s = iongas::htl::state_from_alphaT(g, *alpha, *T);
    else {
      // rho fixes alpha through the density form of the closure
      auto resid = [&](double x) {
        return iongas::htl::specific_volume(g, std::exp(x), *T) - 1.0 / *rho;
      };
      const double x = iongas::find_root(resid, {std::log(1e-300), std::log(1.0 - 1e-12)},
                                         1e-15, 300);
      s = iongas::htl::state_from_alphaT(g, std::exp(x), *T);
    }
    const auto f = iongas::htl::eigen(g, s);
    emit_table(opt, meta,
               {"alpha", "T", "p", "v", "e", "H", "eta_htl", "pseudo_entropy",
                "lambda", "gn_log_rate_plus"},
               {{fmt(s.alpha), fmt(s.T), fmt(s.p), fmt(s.v), fmt(s.e),
                 fmt(s.H), fmt(s.eta), fmt(s.pseudo_entropy), fmt(s.lambda),
                 fmt(f.gn_log_rate_plus)}});
    return kExitOk;
  }
  iongas::ThermoState s{};
  if (p)
    s = iongas::state_from_pT(g, *p, *T);
  else if (rho)
    s = iongas::state_from_rhoT(g, *rho, *T);
  else
    s = iongas::state_from_alphaT(g, *alpha, *T);
  const double f = iongas::inflection_f(g, s.alpha, s.T);
  const bool gn = iongas::is_gn_sufficient(g, s.alpha, s.T);
  const double rate = iongas::gn_log_rate_plus(g, s.alpha, s.T);
  emit_table(opt, meta,
             {"alpha", "ln_alpha", "T", "p", "rho", "v", "e", "H", "eta",
              "lambda", "f", "gn_sufficient", "gn_log_rate_plus"},
             {{fmt(s.alpha), fmt(s.ln_alpha), fmt(s.T), fmt(s.p), fmt(s.rho),
               fmt(s.v), fmt(s.e), fmt(s.H), fmt(s.eta), fmt(s.lambda),
               fmt(f), gn ? "true" : "false", fmt(rate)}});
  return kExitOk;
}

// ---- inflection ----------------------------------------------------------

int cmd_inflection(const Options& opt, double tmin, double tmax, int samples) {
  const iongas::GasModel g = resolve_gas(opt);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> meta{{"model", opt.model}};
  if (opt.model == "htl") {
    // acoustic fields stay genuinely nonlinear: empty locus
    emit_table(opt, meta, {"T", "alpha_left", "alpha_right", "f_residual"}, rows);
    return kExitOk;
  }
  const auto locus = iongas::trace_inflection_locus(g, tmin, tmax, samples);
  size_t il = 0, ir = 0;
  for (int i = 0; i < samples; ++i) {
    const double T =
        (samples == 1)
            ? tmin
            : std::exp(std::log(tmin) +
                       (std::log(tmax) - std::log(tmin)) * i / (samples - 1));
    std::string a_left, a_right, resid;
    double r = -1.0;
    if (il < locus.left.T.size() && locus.left.T[il] == T) {
      a_left = fmt(locus.left.alpha[il]);
      r = std::max(r, locus.left.f_residual[il]);
      ++il;
    }
    if (ir < locus.right.T.size() && locus.right.T[ir] == T) {
      a_right = fmt(locus.right.alpha[ir]);
      r = std::max(r, locus.right.f_residual[ir]);
      ++ir;
    }
    if (r >= 0.0) resid = fmt(r);
    rows.push_back({fmt(T), a_left, a_right, resid});
  }
  emit_table(opt, meta, {"T", "alpha_left", "alpha_right", "f_residual"}, rows);
  return kExitOk;
}

// ---- hugoniot ------------------------------------------------------------

int cmd_hugoniot(const Options& opt, double alpha0, double T0, double u0,
                 std::optional<double> u, int samples,
                 std::optional<double> amin, std::optional<double> amax,
                 std::optional<double> tmin, std::optional<double> tmax) {
  const iongas::GasModel g = resolve_gas(opt);
  std::vector<std::pair<std::string, std::string>> meta{{"model", opt.model}};
  std::vector<std::vector<std::string>> rows;

  if (opt.model == "htl") {
    const auto ref = iongas::htl::make_ref_state(g, alpha0, T0, u0);
    meta.emplace_back("alpha0", fmt(ref.alpha0));
    meta.emplace_back("T0", fmt(ref.T0));
    meta.emplace_back("u0", fmt(ref.u0));
    meta.emplace_back("p0", fmt(ref.p0));
    meta.emplace_back("v0", fmt(ref.v0));
    const double t_lo = tmin.value_or(T0 / 100.0);
    const double t_hi = tmax.value_or(T0 * 100.0);
    const auto curve = iongas::htl::trace_thermo_locus(g, ref, t_lo, t_hi, samples);
    for (const auto& s : curve.samples)
      rows.push_back({fmt(s.alpha), fmt(s.T), fmt(s.p), fmt(s.v), fmt(s.residual)});
    if (u && *u != u0) {
      const auto [pm, pp] = iongas::htl::kinetic_roots_p(g, ref, *u);
      meta.emplace_back("kinetic_p_plus", fmt(pp));
      if (pm) meta.emplace_back("kinetic_p_minus", fmt(*pm));
      const auto sol = iongas::htl::solve_shock_state(g, ref, *u);
      meta.emplace_back("intersection_alpha", fmt(sol.front.alpha));
      meta.emplace_back("intersection_T", fmt(sol.front.T));
      meta.emplace_back("intersection_u", fmt(sol.u_front));
      meta.emplace_back("intersection_m", fmt(sol.m));
      meta.emplace_back("intersection_s", fmt(sol.s));
      meta.emplace_back("intersection_dS", fmt(sol.dS));
    } else if (u) {
      meta.emplace_back("contact", "true");
      meta.emplace_back("contact_p", fmt(ref.p0));
      meta.emplace_back("contact_u", fmt(ref.u0));
    }
    emit_table(opt, meta, {"alpha", "T", "p", "v", "F_residual"}, rows);
    return kExitOk;
  }

  const auto ref = iongas::make_ref_state(g, alpha0, T0, u0);
  meta.emplace_back("alpha0", fmt(ref.alpha0));
  meta.emplace_back("T0", fmt(ref.T0));
  meta.emplace_back("u0", fmt(ref.u0));
  meta.emplace_back("p0", fmt(ref.p0));
  meta.emplace_back("v0", fmt(ref.v0));
  const double a_lo = amin.value_or(std::max(alpha0 * 1e-3, 1e-280));
  const double a_hi = amax.value_or(0.999999);
  const auto curve = iongas::trace_thermo_locus(g, ref, a_lo, a_hi, samples);

  const bool with_kinetic = bool(u) && *u != u0;
  std::vector<std::string> columns{"alpha", "T", "p", "v", "F_residual"};
  if (with_kinetic) {
    columns.push_back("T_kinetic_minus");
    columns.push_back("T_kinetic_plus");
  }
  for (const auto& s : curve.samples) {
    std::vector<std::string> row{fmt(s.alpha), fmt(s.T), fmt(s.p), fmt(s.v),
                                 fmt(s.F_residual)};
    if (with_kinetic) {
      try {
        const auto [tm, tp] = iongas::kinetic_roots(g, s.alpha, *u, ref);
        row.push_back(fmt(tm));
        row.push_back(fmt(tp));
      } catch (const iongas::NumericalError&) {
        row.emplace_back();
        row.emplace_back();
      }
    }
    rows.push_back(std::move(row));
  }
  if (with_kinetic) {
    const auto sol = iongas::solve_shock_state(g, ref, *u);
    meta.emplace_back("intersection_alpha", fmt(sol.front.alpha));
    meta.emplace_back("intersection_T", fmt(sol.front.T));
    meta.emplace_back("intersection_u", fmt(sol.u_front));
    meta.emplace_back("intersection_m", fmt(sol.m));
    meta.emplace_back("intersection_s", fmt(sol.s));
    meta.emplace_back("intersection_dS", fmt(sol.dS));
    meta.emplace_back("intersection_bethe", fmt(sol.bethe_estimate));
    meta.emplace_back("intersection_production", fmt(sol.production));
  } else if (u) {
    meta.emplace_back("contact", "true");
    meta.emplace_back("contact_p", fmt(ref.p0));
    meta.emplace_back("contact_u", fmt(ref.u0));
  }
  emit_table(opt, meta, columns, rows);
  return kExitOk;
}

// ---- isentrope -----------------------------------------------------------

int cmd_isentrope(const Options& opt, std::optional<double> eta0,
                  std::optional<double> alpha0, std::optional<double> T0,
                  double u0, int samples, std::optional<double> amin,
                  std::optional<double> amax, std::optional<double> tmin,
                  std::optional<double> tmax) {
  const bool by_eta = bool(eta0);
  const bool by_anchor = bool(alpha0) && bool(T0);
  if (by_eta == by_anchor) {
    std::fprintf(stderr,
                 "isentrope: give either --eta0 or the anchor --alpha0 --T0\n");
    return kExitUsage;
  }
  const iongas::GasModel g = resolve_gas(opt);
  std::vector<std::pair<std::string, std::string>> meta{{"model", opt.model}};
  std::vector<std::vector<std::string>> rows;
  const std::vector<std::string> columns{"alpha", "T",       "p",
                                         "u_plus", "u_minus", "eta_drift"};

  if (opt.model == "htl") {
    if (!by_anchor) {
      std::fprintf(stderr, "isentrope: the htl model needs --alpha0 --T0\n");
      return kExitUsage;
    }
    const auto ref = iongas::htl::make_ref_state(g, *alpha0, *T0, u0);
    meta.emplace_back("eta0", fmt(ref.eta0));
    meta.emplace_back("alpha0", fmt(ref.alpha0));
    const double t_lo = tmin.value_or(*T0 / 10.0), t_hi = tmax.value_or(*T0 * 10.0);
    for (int i = 0; i < samples; ++i) {
      const double T = std::exp(std::log(t_lo) +
                                (std::log(t_hi) - std::log(t_lo)) * i /
                                    std::max(1, samples - 1));
      const double p = iongas::htl::pressure(g, *alpha0, T);
      const double up = iongas::htl::integral_curve_u(g, ref.p0, u0, *alpha0, p, true);
      const double um = iongas::htl::integral_curve_u(g, ref.p0, u0, *alpha0, p, false);
      rows.push_back({fmt(*alpha0), fmt(T), fmt(p), fmt(up), fmt(um), fmt(0.0)});
    }
    emit_table(opt, meta, columns, rows);
    return kExitOk;
  }

  iongas::RefState ref;
  if (by_anchor) {
    ref = iongas::make_ref_state(g, *alpha0, *T0, u0);
  } else {
    const double ainf = iongas::alpha_infinity(g, *eta0);
    const double a_anchor = std::min(1e-8, ainf / 2.0);
    ref = iongas::make_ref_state(g, a_anchor,
                                 iongas::isentrope_T(g, a_anchor, *eta0), u0);
  }
  const double ainf = iongas::alpha_infinity(g, ref.eta0);
  const double a_lo = amin.value_or(std::min(1e-8, ainf / 2.0));
  const double a_hi = amax.value_or(ainf * (1.0 - 1e-6));
  const auto iso = iongas::sample_isentrope(g, ref, a_lo, a_hi, samples);
  meta.emplace_back("eta0", fmt(iso.eta0));
  meta.emplace_back("alpha_inf", fmt(iso.alpha_inf));
  for (const auto& s : iso.samples)
    rows.push_back({fmt(s.alpha), fmt(s.T), fmt(s.p), fmt(s.u_plus),
                    fmt(s.u_minus), fmt(s.eta_drift)});
  emit_table(opt, meta, columns, rows);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermodynamics and wave structure of a singly-ionized "
               "monatomic gas"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--gas", opt.gas, "gas preset name or JSON file");
  app.add_option("--a2", opt.a2, "specific gas constant R/m [J/(kg K)]");
  app.add_option("--kappa", opt.kappa, "ionization equilibrium constant");
  app.add_option("--Ti", opt.Ti, "ionization temperature [K]");
  app.add_option("--model", opt.model, "exact or htl")
      ->check(CLI::IsMember({"exact", "htl"}));
  app.add_option("--output", opt.output, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* st = app.add_subcommand("state", "thermodynamic state query");
  std::optional<double> st_p, st_rho, st_alpha, st_T;
  st->add_option("--p", st_p, "pressure [Pa]");
  st->add_option("--rho", st_rho, "density [kg/m^3]");
  st->add_option("--alpha", st_alpha, "ionization degree");
  st->add_option("--T", st_T, "temperature [K]");

  auto* infl = app.add_subcommand("inflection", "inflection-locus table");
  double in_tmin = 100.0, in_tmax = 1400.0;
  int in_samples = 64;
  infl->add_option("--tmin", in_tmin, "lowest temperature [K]");
  infl->add_option("--tmax", in_tmax, "highest temperature [K]");
  infl->add_option("--samples", in_samples, "number of temperatures");

  auto* hug = app.add_subcommand("hugoniot", "Hugoniot locus and shock solve");
  double h_alpha0 = 0.0, h_T0 = 0.0, h_u0 = 0.0;
  std::optional<double> h_u, h_amin, h_amax, h_tmin, h_tmax;
  int h_samples = 128;
  hug->add_option("--alpha0", h_alpha0, "reference ionization degree")->required();
  hug->add_option("--T0", h_T0, "reference temperature [K]")->required();
  hug->add_option("--u0", h_u0, "reference velocity [m/s]");
  hug->add_option("--u", h_u, "front velocity for the kinetic part [m/s]");
  hug->add_option("--samples", h_samples, "locus samples");
  hug->add_option("--alpha-min", h_amin, "smallest traced alpha");
  hug->add_option("--alpha-max", h_amax, "largest traced alpha");
  hug->add_option("--tmin", h_tmin, "htl model: lowest traced T [K]");
  hug->add_option("--tmax", h_tmax, "htl model: highest traced T [K]");

  auto* iso = app.add_subcommand("isentrope", "integral curves / isentropes");
  std::optional<double> i_eta0, i_alpha0, i_T0, i_amin, i_amax, i_tmin, i_tmax;
  double i_u0 = 0.0;
  int i_samples = 128;
  iso->add_option("--eta0", i_eta0, "entropy level");
  iso->add_option("--alpha0", i_alpha0, "anchor ionization degree");
  iso->add_option("--T0", i_T0, "anchor temperature [K]");
  iso->add_option("--u0", i_u0, "anchor velocity [m/s]");
  iso->add_option("--samples", i_samples, "samples");
  iso->add_option("--alpha-min", i_amin, "smallest sampled alpha");
  iso->add_option("--alpha-max", i_amax, "largest sampled alpha");
  iso->add_option("--tmin", i_tmin, "htl model: lowest sampled T [K]");
  iso->add_option("--tmax", i_tmax, "htl model: highest sampled T [K]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (st->parsed())
      return cmd_state(opt, st_p, st_rho, st_alpha, st_T);
    if (infl->parsed())
      return cmd_inflection(opt, in_tmin, in_tmax, in_samples);
    if (hug->parsed())
      return cmd_hugoniot(opt, h_alpha0, h_T0, h_u0, h_u, h_samples, h_amin,
                          h_amax, h_tmin, h_tmax);
    if (iso->parsed())
      return cmd_isentrope(opt, i_eta0, i_alpha0, i_T0, i_u0, i_samples,
                           i_amin, i_amax, i_tmin, i_tmax);
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return kExitDomain;
  } catch (const iongas::NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitUsage;
}
