// qstar: discrete Wigner functions, spin tomograms and the kernels between them.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qstar/io.hpp"
#include "qstar/kernels.hpp"
#include "qstar/sampling.hpp"
#include "qstar/spin_tomography.hpp"
#include "qstar/verification.hpp"
#include "qstar/wigner.hpp"

namespace {

using qstar::io::Json;

enum ExitCode : int { kOk = 0, kUsage = 1, kPhysicality = 2, kVerification = 3 };

constexpr double kRoundtripTol = 1e-10;

struct Options {
  std::string state;
  std::string variant;
  int ntheta = qstar::kDefaultQuadratureTheta;
  int npsi = qstar::kDefaultQuadraturePsi;
  std::string out;
  std::string format;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 200;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw qstar::ParseError("cannot write '" + opt.out + "'");
  f << text;
}

std::vector<qstar::Variant> selected_variants(const Options& opt) {
  if (opt.variant.empty()) return {qstar::Variant::A, qstar::Variant::B};
  return {qstar::parse_variant(opt.variant)};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int run_wigner(const Options& opt) {
  const qstar::DensityMatrix rho = qstar::io::parse_state(opt.state);
  if (rho.dim() != 2) throw qstar::ShapeError("wigner needs a one-qubit state");
  const auto variants = selected_variants(opt);
  if (opt.format == "csv") {
    std::string text = "variant,j,k,value\n";
    for (qstar::Variant v : variants) {
      const qstar::WignerFunction w = qstar::wigner(rho, v);
      for (const qstar::PhasePoint& p : qstar::phase_points()) {
        text += std::string(1, qstar::variant_name(v)) + "," + std::to_string(p.j) + "," +
                std::to_string(p.k) + "," + qstar::io::format_csv_double(w(p)) + "\n";
      }
    }
    emit(opt, text);
    return kOk;
  }
  Json report;
  report["command"] = "wigner";
  report["state"] = qstar::io::matrix_to_json(rho.matrix());
  Json list = Json::array();
  for (qstar::Variant v : variants) list.push_back(qstar::io::wigner_to_json(qstar::wigner(rho, v)));
  report["wigner"] = std::move(list);
  emit(opt, dump(report));
  return kOk;
}

int run_tomogram(const Options& opt) {
  const qstar::DensityMatrix rho = qstar::io::parse_state(opt.state);
  if (rho.dim() != 2) throw qstar::ShapeError("tomogram needs a one-qubit state");
  const qstar::SphereQuadrature grid(opt.ntheta, opt.npsi);
  if (opt.format == "json") {
    Json rows = Json::array();
    for (qstar::SpinProjection m : qstar::kSpinProjections) {
      for (const qstar::SphereNode& node : grid.nodes()) {
        const qstar::Direction d(node.theta, node.psi);
        Json row;
        row["m"] = qstar::spin_value(m);
        row["theta"] = d.theta;
        row["psi"] = d.psi;
        row["w"] = qstar::tomogram(rho, m, d);
        rows.push_back(std::move(row));
      }
    }
    Json report;
    report["command"] = "tomogram";
    report["state"] = qstar::io::matrix_to_json(rho.matrix());
    report["grid"] = {opt.ntheta, opt.npsi};
    report["tomogram"] = std::move(rows);
    emit(opt, dump(report));
    return kOk;
  }
  emit(opt, qstar::io::tomogram_csv(rho, grid));
  return kOk;
}

int run_kernels(const Options& opt) {
  const qstar::SphereQuadrature grid(opt.ntheta, opt.npsi);
  const auto variants = selected_variants(opt);
  if (opt.format == "json") {
    Json rows = Json::array();
    for (qstar::Variant v : variants) {
      for (bool dual : {false, true}) {
        for (qstar::SpinProjection m : qstar::kSpinProjections) {
          for (const qstar::SphereNode& node : grid.nodes()) {
            const qstar::Direction d(node.theta, node.psi);
            for (const qstar::PhasePoint& p : qstar::phase_points()) {
              Json row;
              row["variant"] = std::string(1, qstar::variant_name(v));
              row["dual"] = dual;
              row["m"] = qstar::spin_value(m);
              row["theta"] = d.theta;
              row["psi"] = d.psi;
              row["j"] = p.j;
              row["k"] = p.k;
              row["value"] = qstar::kernel_value(v, dual, m, d, p);
              rows.push_back(std::move(row));
            }
          }
        }
      }
    }
    Json report;
    report["command"] = "kernels";
    report["grid"] = {opt.ntheta, opt.npsi};
    report["kernels"] = std::move(rows);
    emit(opt, dump(report));
    return kOk;
  }
  emit(opt, qstar::io::kernel_csv(variants, grid));
  return kOk;
}

int run_roundtrip(const Options& opt) {
  std::optional<qstar::DensityMatrix> rho;
  if (!opt.state.empty()) {
    rho = qstar::io::parse_state(opt.state);
  } else if (opt.seed) {
    qstar::Rng rng(*opt.seed);
    rho = qstar::random_qubit_state(rng);
  } else {
    throw qstar::ParseError("roundtrip needs a state or --seed");
  }
  if (rho->dim() != 2) throw qstar::ShapeError("roundtrip needs a one-qubit state");

  const qstar::SphereQuadrature q(opt.ntheta, opt.npsi);
  const qstar::Tomogram t(*rho);
  Json per_variant = Json::array();
  double worst = 0.0;
  for (qstar::Variant v : selected_variants(opt)) {
    const qstar::WignerFunction direct = qstar::wigner(*rho, v);
    const qstar::WignerFunction from_tomo = qstar::wigner_from_tomogram(t, v, q);
    double wigner_residual = 0.0;
    for (int a = 0; a < 4; ++a) {
      wigner_residual =
          std::max(wigner_residual, std::abs(from_tomo.values()[a] - direct.values()[a]));
    }
    const qstar::WignerReconstruction rec = qstar::density_from_wigner(from_tomo);
    const double state_residual = qstar::max_abs_diff(rec.matrix, rho->matrix());
    worst = std::max({worst, wigner_residual, state_residual});
    Json entry;
    entry["variant"] = std::string(1, qstar::variant_name(v));
    entry["wigner"] = qstar::io::wigner_to_json(from_tomo);
    entry["wigner_residual"] = wigner_residual;
    entry["state_residual"] = state_residual;
    per_variant.push_back(std::move(entry));
  }
  const qstar::DensityMatrix back = qstar::density_from_tomogram(t, q);
  const double tomo_residual = qstar::max_abs_diff(back.matrix(), rho->matrix());
  worst = std::max(worst, tomo_residual);

  Json report;
  report["command"] = "roundtrip";
  if (opt.seed && opt.state.empty()) report["seed"] = *opt.seed;
  report["state"] = qstar::io::matrix_to_json(rho->matrix());
  report["quadrature"] = {opt.ntheta, opt.npsi};
  report["variants"] = std::move(per_variant);
  report["tomogram_state_residual"] = tomo_residual;
  report["max_residual"] = worst;
  report["tolerance"] = kRoundtripTol;
  report["pass"] = worst <= kRoundtripTol;
  emit(opt, dump(report));
  return worst <= kRoundtripTol ? kOk : kVerification;
}

int run_verify(const Options& opt) {
  qstar::VerifyOptions vo;
  if (opt.seed) vo.seed = *opt.seed;
  vo.samples = opt.samples;
  const auto results = qstar::run_verification(vo);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;

  if (opt.format == "json") {
    Json checks = Json::array();
    for (const auto& r : results) {
      Json c;
      c["id"] = r.id;
      c["identity"] = r.identity;
      c["samples"] = r.samples;
      c["residual"] = r.residual;
      c["tolerance"] = r.tolerance;
      c["pass"] = r.passed;
      if (!r.error.empty()) c["error"] = r.error;
      checks.push_back(std::move(c));
    }
    Json report;
    report["command"] = "verify";
    report["seed"] = vo.seed;
    report["checks"] = std::move(checks);
    report["pass"] = all;
    emit(opt, dump(report));
  } else {
    std::string text;
    std::size_t passed = 0;
    for (const auto& r : results) {
      char line[160];
      std::snprintf(line, sizeof(line), "%s  %-34s residual %.3e  tol %.0e  n=%zu\n",
                    r.passed ? "PASS" : "FAIL", r.id.c_str(), r.residual, r.tolerance, r.samples);
      text += line;
      text += "      " + r.identity + "\n";
      if (!r.error.empty()) text += "      error: " + r.error + "\n";
      passed += r.passed ? 1 : 0;
    }
    text += std::to_string(passed) + "/" + std::to_string(results.size()) + " checks passed\n";
    emit(opt, text);
  }
  return all ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qstar - qubit Wigner functions, spin tomograms and star-product kernels"};
  app.require_subcommand(1);
  Options opt;

  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--ntheta", opt.ntheta, "Gauss-Legendre nodes in cos(theta)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--npsi", opt.npsi, "uniform nodes in psi")->check(CLI::PositiveNumber);
  };
  const std::string state_help = "bloch:x,y,z | polar:a,c,xi | matrix:@file.json";

  auto* wig = app.add_subcommand("wigner", "discrete Wigner function W^A / W^B of a qubit state");
  wig->add_option("state", opt.state, state_help)->required();
  wig->add_option("--variant", opt.variant, "A or B (default: both)")
      ->check(CLI::IsMember({"A", "B"}));

  auto* tomo = app.add_subcommand("tomogram", "spin tomogram w(m, theta, psi) on a direction grid");
  tomo->add_option("state", opt.state, state_help)->required();
  add_grid(tomo);

  auto* ker = app.add_subcommand("kernels", "tomogram <-> Wigner kernel tables");
  ker->add_option("--variant", opt.variant, "A or B (default: both)")
      ->check(CLI::IsMember({"A", "B"}));
  add_grid(ker);

  auto* rt = app.add_subcommand("roundtrip", "state -> tomogram -> Wigner -> state residuals");
  rt->add_option("state", opt.state, state_help);
  rt->add_option("--seed", opt.seed, "draw a random state from this seed when no state is given");
  rt->add_option("--variant", opt.variant, "A or B (default: both)")
      ->check(CLI::IsMember({"A", "B"}));
  add_grid(rt);

  auto* ver = app.add_subcommand("verify", "run the full identity verification suite");
  ver->add_option("--seed", opt.seed, "random seed for sampled checks");
  ver->add_option("--samples", opt.samples, "random draws per sampled check")
      ->check(CLI::PositiveNumber);

  for (auto* sub : {wig, tomo, ker, rt, ver}) {
    sub->add_option("--out", opt.out, "write output to this file instead of stdout");
  }
  wig->add_option("--format", opt.format, "json (default) or csv")->check(CLI::IsMember({"json", "csv"}));
  tomo->add_option("--format", opt.format, "csv (default) or json")->check(CLI::IsMember({"json", "csv"}));
  ker->add_option("--format", opt.format, "csv (default) or json")->check(CLI::IsMember({"json", "csv"}));
  rt->add_option("--format", opt.format, "json")->check(CLI::IsMember({"json"}));
  ver->add_option("--format", opt.format, "text (default) or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*wig) return run_wigner(opt);
    if (*tomo) return run_tomogram(opt);
    if (*ker) return run_kernels(opt);
    if (*rt) return run_roundtrip(opt);
    if (*ver) return run_verify(opt);
  } catch (const qstar::ParseError& e) {
    std::cerr << "qstar: " << e.what() << "\n";
    return kUsage;
  } catch (const qstar::ShapeError& e) {
    std::cerr << "qstar: " << e.what() << "\n";
    return kUsage;
  } catch (const qstar::DomainError& e) {
    std::cerr << "qstar: " << e.what() << "\n";
    return kPhysicality;
  } catch (const std::exception& e) {
    std::cerr << "qstar: " << e.what() << "\n";
    return kVerification;
  }
  return kUsage;
}
