#pragma once

// fracdiff command line: eval, density, moments, simulate, verify.
// Exit codes: 0 ok, 2 usage or parameter error, 3 numerical failure or failed verification row.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracdiff/io/serialize.hpp"
#include "fracdiff/laws.hpp"
#include "fracdiff/mc.hpp"
#include "fracdiff/specfun.hpp"
#include "fracdiff/verify/checks.hpp"

namespace fracdiff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr const char* kOutDirEnv = "FRACDIFF_OUT_DIR";

namespace detail {

struct Output {
  std::string path;    // "-" means stdout
  std::string format;  // csv or json
};

// explicit --out wins; otherwise FRACDIFF_OUT_DIR/<fallback>; otherwise stdout
inline Output resolve_output(const std::string& out, const std::string& format, const std::string& fallback) {
  if (!out.empty()) return {out, format};
  if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) {
    std::filesystem::create_directories(dir);
    return {(std::filesystem::path(dir) / (fallback + "." + format)).string(), format};
  }
  return {"-", format};
}

inline void emit(const Output& o, const std::string& text, std::ostream& out) {
  if (o.path == "-")
    out << text;
  else
    io::write_text(o.path, text);
}

inline std::string sibling(const std::string& path, const std::string& suffix) {
  const std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + suffix)).string();
}

inline void add_output(CLI::App* cmd, std::string& out, std::string& format) {
  cmd->add_option("--out,-o", out, "output path (default: $FRACDIFF_OUT_DIR/<name> or stdout)");
  cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace detail

struct Params {
  std::string selector;
  double alpha = NAN, beta = NAN, hurst = NAN, nu = NAN, t = 1.0, z = NAN, m = NAN, l = NAN, lambda = NAN, mu = NAN;
  double order = NAN, xmax = 5.0, gamma = NAN, eta = NAN;
  int n = 201, k = 0, max_moment = 4, sign = 1;
  std::size_t samples = 100000;
  std::uint64_t seed = 42, stream = 0;
  std::string method, out, format = "csv", suite = "all";
  bool raw = false;
};

namespace detail {

inline double need(double v, const char* flag) {
  if (std::isnan(v)) throw DomainError(std::string("missing required flag ") + flag);
  return v;
}

inline int run_eval(const Params& p, std::ostream& out) {
  using namespace specfun;
  double value = NAN, err = 0.0;
  const std::string& f = p.selector;
  if (f == "gamma") {
    value = gamma_fn(need(p.z, "--z"));
    err = 4e-16 * std::abs(value);
  } else if (f == "rgamma") {
    value = rgamma(need(p.z, "--z"));
    err = 4e-16 * std::abs(value);
  } else if (f == "wright") {
    const auto r = wright_series({need(p.lambda, "--lambda"), need(p.mu, "--mu")}, need(p.z, "--z"));
    value = r.value;
    err = r.abs_error;
  } else if (f == "mwright") {
    value = mwright(need(p.lambda, "--lambda"), need(p.z, "--z"));
    err = 1e-15 * std::abs(value);
  } else if (f == "ml") {
    const auto r = mittag_leffler_series({need(p.alpha, "--alpha"), std::isnan(p.beta) ? 1.0 : p.beta}, need(p.z, "--z"));
    value = r.value;
    err = r.abs_error;
  } else if (f == "ks") {
    const auto r = kilbas_saigo_series({need(p.alpha, "--alpha"), need(p.m, "--m"), need(p.l, "--l")}, need(p.z, "--z"));
    value = r.value;
    err = r.abs_error;
  } else if (f == "airy") {
    value = airy_ai(need(p.z, "--z"));
    err = 1e-15 * std::abs(value);
  } else if (f == "cf-mcbride") {
    value = laws::cf_mcbride(need(p.alpha, "--alpha"), need(p.hurst, "--hurst"), need(p.beta, "--beta"), p.t);
    err = 1e-15;
  } else if (f == "cf-caputo") {
    const auto r = laws::cf_caputo_detailed(need(p.nu, "--nu"), need(p.hurst, "--hurst"), need(p.beta, "--beta"), p.t);
    value = r.value;
    err = r.abs_error;
  } else {
    throw DomainError("eval: unknown function " + f);
  }
  if (!std::isfinite(value)) throw ConvergenceError("eval: non-finite result", value, err);
  out << io::num(value) << ' ' << io::num(err) << '\n';
  return kExitOk;
}

inline laws::ModelSpec model_from(const Params& p) {
  const std::string& s = p.selector;
  if (s == "mcbride") return laws::ModelSpec::mcbride(need(p.alpha, "--alpha"), need(p.hurst, "--hurst"));
  if (s == "caputo") return laws::ModelSpec::caputo(need(p.nu, "--nu"), need(p.hurst, "--hurst"));
  if (s == "caputo-riesz")
    return laws::ModelSpec::caputo_riesz(need(p.nu, "--nu"), need(p.hurst, "--hurst"), need(p.alpha, "--alpha"));
  if (s == "higher-mcbride") return laws::ModelSpec::higher_mcbride(p.k, need(p.hurst, "--hurst"));
  if (s == "higher-caputo") return laws::ModelSpec::higher_caputo(p.k, need(p.nu, "--nu"), need(p.hurst, "--hurst"), p.sign);
  throw DomainError("unknown model " + s);
}

inline std::optional<laws::DensityMethod> method_from(const std::string& s) {
  if (s.empty()) return std::nullopt;
  for (auto m : {laws::DensityMethod::ClosedForm, laws::DensityMethod::FourierInversion,
                 laws::DensityMethod::MixtureQuadrature})
    if (s == laws::to_string(m)) return m;
  throw DomainError("unknown density method " + s);
}

inline int run_density(const Params& p, std::ostream& out) {
  const auto model = model_from(p);
  model.validate();
  if (p.n < 2) throw DomainError("density: --n must be at least 2");
  if (!(p.xmax > 0.0)) throw DomainError("density: --xmax must be positive");
  if (!(p.t > 0.0)) throw DomainError("density: --t must be positive");
  const auto curve = laws::density_curve(model, laws::uniform_grid(-p.xmax, p.xmax, p.n), p.t, method_from(p.method));
  const auto o = resolve_output(p.out, p.format, std::string("density_") + p.selector);
  emit(o, p.format == "json" ? io::density_json(curve).dump(1) + "\n" : io::to_csv(io::density_table(curve)), out);
  return kExitOk;
}

inline int run_moments(const Params& p, std::ostream& out) {
  if (p.selector != "mcbride") throw DomainError("moments: only the mcbride model has closed-form moments");
  const double a = need(p.alpha, "--alpha"), h = need(p.hurst, "--hurst");
  laws::ModelSpec::mcbride(a, h).validate();
  if (p.max_moment < 1) throw DomainError("moments: --max-moment must be at least 1");
  io::CsvTable tab{{"order", "value", "alpha", "hurst", "t"}, {}};
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int m = 0; m <= p.max_moment; ++m) {
    const double v = laws::even_moment_mcbride(a, h, m, p.t);
    tab.rows.push_back({std::to_string(2 * m), io::num(v), io::num(a), io::num(h), io::num(p.t)});
    arr.push_back({{"order", 2 * m}, {"value", v}});
  }
  const auto o = resolve_output(p.out, p.format, "moments_mcbride");
  nlohmann::ordered_json j{{"schema_version", io::kSchemaVersion}, {"alpha", a}, {"hurst", h}, {"t", p.t},
                           {"variance", laws::variance_mcbride(a, h, p.t)}, {"even_moments", arr}};
  emit(o, p.format == "json" ? j.dump(1) + "\n" : io::to_csv(tab), out);
  return kExitOk;
}

inline mc::SampleBatch simulate(const Params& p) {
  const mc::RngStream rng{p.seed, p.stream};
  const std::string& s = p.selector;
  const std::size_t n = p.samples;
  if (s == "fbm") return mc::sample_fbm_marginal(need(p.hurst, "--hurst"), p.t, n, rng);
  if (s == "iterated-fbm") return mc::sample_iterated_fbm(need(p.hurst, "--hurst"), p.t, n, rng);
  if (s == "stable") return mc::sample_symmetric_stable(need(p.alpha, "--alpha"), n, rng);
  if (s == "one-sided-stable") return mc::sample_one_sided_stable(need(p.alpha, "--alpha"), n, rng);
  if (s == "lamperti") return mc::sample_lamperti(need(p.alpha, "--alpha"), n, rng);
  if (s == "wt") return mc::sample_Wt(p.t, n, rng, mc::Subordinator::Wt);
  if (s == "frak-wt") return mc::sample_Wt(p.t, n, rng, mc::Subordinator::FrakWt);
  if (s == "b-of-wt") return mc::sample_B_of_Wt(p.t, n, rng);
  if (s == "stable-of-wt") return mc::sample_stable_of_Wt(need(p.order, "--order"), p.t, n, rng);
  if (s == "lamperti-time")
    return mc::sample_stable_lamperti_time(mc::lamperti_time_single(need(p.nu, "--nu"), need(p.alpha, "--alpha"), p.t),
                                           p.t, n, rng);
  if (s == "lamperti-time-double")
    return mc::sample_stable_lamperti_time(
        mc::lamperti_time_double(need(p.gamma, "--gamma"), need(p.eta, "--eta"), need(p.alpha, "--alpha"), p.t), p.t, n,
        rng);
  if (s == "lamperti-time-mcbride")
    return mc::sample_stable_lamperti_time(
        mc::lamperti_time_mcbride(need(p.alpha, "--alpha"), need(p.hurst, "--hurst"), need(p.order, "--order"), p.t), p.t,
        n, rng);
  throw DomainError("unknown process " + s);
}

inline int run_simulate(const Params& p, std::ostream& out) {
  if (p.samples == 0) throw DomainError("simulate: --n must be positive");
  const auto b = simulate(p);
  const auto o = resolve_output(p.out, p.format, "simulate_" + p.selector);
  if (p.format == "json") {
    emit(o, io::summary_json(b, p.raw).dump(1) + "\n", out);
  } else {
    emit(o, io::to_csv(io::summary_table(b)), out);
    if (p.raw) {
      if (o.path == "-") throw DomainError("simulate: --raw with csv needs --out or $FRACDIFF_OUT_DIR");
      io::write_text(sibling(o.path, "_samples.csv"), io::to_csv(io::samples_table(b)));
    }
  }
  return kExitOk;
}

inline int run_verify(const Params& p, std::ostream& out) {
  const auto& names = verify::suite_names();
  if (p.suite != "all" && std::find(names.begin(), names.end(), p.suite) == names.end())
    throw DomainError("verify: unknown suite " + p.suite);
  bool numerical = false;
  const auto rep = verify::run_suite(p.suite, p.seed, &numerical);
  const auto o = resolve_output(p.out, p.format, "verify_" + p.suite);
  const std::string text = p.format == "json" ? io::report_json(rep, p.seed).dump(1) + "\n" : io::report_csv(rep, p.seed);
  emit(o, text, out);
  // with a file target, print a short summary
  if (o.path != "-") {
    for (const auto& r : rep.rows)
      if (!r.passed) out << "FAIL " << r.suite << ' ' << r.case_id << " metric=" << io::num(r.metric) << '\n';
    out << rep.rows.size() - rep.failures() << '/' << rep.rows.size() << " rows passed; report: " << o.path << '\n';
  }
  return rep.all_passed() && !numerical ? kExitOk : kExitNumerical;
}

}  // namespace detail

// args excludes the program name
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"fractional diffusion numerics"};
  app.require_subcommand(1);
  Params p;

  auto common = [&p](CLI::App* c) {
    c->add_option("--t", p.t, "time");
    c->add_option("--alpha", p.alpha);
    c->add_option("--hurst", p.hurst);
    c->add_option("--nu", p.nu);
  };

  auto* ev = app.add_subcommand("eval", "evaluate a special function or characteristic function");
  ev->add_option("function", p.selector, "gamma|rgamma|wright|mwright|ml|ks|airy|cf-mcbride|cf-caputo")->required();
  common(ev);
  ev->add_option("--beta", p.beta);
  ev->add_option("--z", p.z);
  ev->add_option("--m", p.m);
  ev->add_option("--l", p.l);
  ev->add_option("--lambda", p.lambda);
  ev->add_option("--mu", p.mu);

  auto* de = app.add_subcommand("density", "tabulate a fundamental solution on a uniform grid");
  de->add_option("model", p.selector, "mcbride|caputo|caputo-riesz|higher-mcbride")->required();
  common(de);
  de->add_option("--k", p.k, "space order for higher-order models");
  de->add_option("--sign", p.sign, "c_k for odd k");
  de->add_option("--xmax", p.xmax);
  de->add_option("--n", p.n, "grid points");
  de->add_option("--method", p.method, "closed-form|fourier-inversion|mixture-quadrature");
  detail::add_output(de, p.out, p.format);

  auto* mo = app.add_subcommand("moments", "closed-form even moments");
  mo->add_option("model", p.selector, "mcbride")->required();
  common(mo);
  mo->add_option("--max-moment", p.max_moment, "largest m in E X^{2m}");
  detail::add_output(mo, p.out, p.format);

  auto* si = app.add_subcommand("simulate", "Monte Carlo samples of a time-changed process");
  si->add_option("process", p.selector,
                 "fbm|iterated-fbm|stable|one-sided-stable|lamperti|wt|frak-wt|b-of-wt|stable-of-wt|lamperti-time|"
                 "lamperti-time-double|lamperti-time-mcbride")
      ->required();
  common(si);
  si->add_option("--order", p.order, "stable index of the outer process");
  si->add_option("--gamma", p.gamma);
  si->add_option("--eta", p.eta);
  si->add_option("--n", p.samples, "sample size");
  si->add_option("--seed", p.seed);
  si->add_option("--stream", p.stream);
  si->add_flag("--raw", p.raw, "also write raw samples");
  detail::add_output(si, p.out, p.format);

  auto* ve = app.add_subcommand("verify", "run the verification harness");
  ve->add_option("--suite", p.suite, "specfun|operators|laws|subordination|ode|montecarlo|all");
  ve->add_option("--seed", p.seed);
  detail::add_output(ve, p.out, p.format);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ev) return detail::run_eval(p, out);
    if (*de) return detail::run_density(p, out);
    if (*mo) return detail::run_moments(p, out);
    if (*si) return detail::run_simulate(p, out);
    return detail::run_verify(p, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace fracdiff::cli
