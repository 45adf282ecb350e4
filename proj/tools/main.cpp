// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: spectra, localization reports, condition-number
// sweeps, non-unitary dynamics traces, and a self-check suite. Exit codes:
// 0 success, 1 self-check violation, 2 usage or runtime error.
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fockskin/criterion.hpp"
#include "fockskin/dynamics.hpp"
#include "fockskin/fockspace.hpp"
#include "fockskin/io.hpp"
#include "fockskin/models.hpp"
#include "fockskin/rng.hpp"
#include "fockskin/spectral.hpp"

namespace {

using namespace fockskin;

struct ModelOptions {
  int L = 8;
  int N = 4;
  double alpha = 0.5;
  double U = -1.0;
  std::string bc = "open";
};

// max_sites is 28 for many-body subcommands (the Fock basis cap) but much
// larger where a single-particle variant is available.
void add_model_options(CLI::App* sub, ModelOptions* m, int max_sites = 28) {
  sub->add_option("--L", m->L, "chain length")
      ->check(CLI::Range(2, max_sites));
  sub->add_option("--N", m->N, "particle number");
  sub->add_option("--alpha", m->alpha, "hopping asymmetry");
  sub->add_option("--U", m->U, "nearest-neighbour interaction");
  sub->add_option("--bc", m->bc, "boundary condition")
      ->check(CLI::IsMember({"open", "periodic"}));
}

ModelParams to_params(const ModelOptions& m) {
  ModelParams p;
  p.L = m.L;
  p.N = m.N;
  p.alpha = m.alpha;
  p.U = m.U;
  p.bc = m.bc == "open" ? BoundaryCondition::open : BoundaryCondition::periodic;
  if (p.N < 0 || p.N > p.L)
    throw std::invalid_argument("need 0 <= N <= L");
  return p;
}

// Gauge path is exact for the open chain; the periodic chain has a
// genuinely complex spectrum and needs the direct solver.
EigenSystem diagonalize_model(const Operator& h, const ModelParams& p,
                              const FockBasis& basis,
                              const std::string& method) {
  if (method == "gauge" ||
      (method == "auto" && p.bc == BoundaryCondition::open))
    return diagonalize_gauge(h, build_similarity_transform(p, basis));
  return diagonalize(h);
}

std::vector<double> time_grid(double tmax, int steps) {
  if (tmax <= 0 || steps < 1)
    throw std::invalid_argument("need tmax > 0 and steps >= 1");
  std::vector<double> t(steps + 1);
  for (int k = 0; k <= steps; ++k) t[k] = tmax * k / steps;
  return t;
}

// ---------------------------------------------------------------------------

struct SpectrumConfig {
  ModelOptions model;
  std::string which = "both";
  std::string method = "direct";
  std::string out = "spectrum.csv";
  std::string format = "csv";
  std::string dump;
};

int run_spectrum(const SpectrumConfig& cfg) {
  std::vector<std::string> bcs;
  if (cfg.which == "both")
    bcs = {"open", "periodic"};
  else
    bcs = {cfg.which};
  if (!cfg.dump.empty() && bcs.size() != 1)
    throw std::invalid_argument(
        "--dump-hamiltonian needs a single --which open|periodic");

  std::vector<io::SpectrumRow> rows;
  for (const std::string& bc : bcs) {
    ModelOptions m = cfg.model;
    m.bc = bc;
    const ModelParams p = to_params(m);
    const FockBasis basis(p.L, p.N);
    const Operator h = build_interacting_hn(p, basis);
    if (!cfg.dump.empty()) io::write_operator(h, cfg.dump);

    Eigen::VectorXcd w;
    if (cfg.method == "gauge") {
      if (p.bc != BoundaryCondition::open)
        throw std::invalid_argument("gauge method needs open bc");
      w = eigenvalues_gauge(h, build_similarity_transform(p, basis));
    } else {
      w = eigenvalues_only(h);
    }
    for (int k = 0; k < w.size(); ++k)
      rows.push_back({bc, w[k].real(), w[k].imag()});
  }

  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const io::SpectrumRow& r : rows)
      j.push_back({{"bc", r.bc}, {"re", r.re}, {"im", r.im}});
    std::ofstream out(cfg.out);
    if (!out) throw std::runtime_error("cannot open " + cfg.out);
    out << j.dump(2) << '\n';
  } else {
    io::write_spectrum_csv(rows, cfg.out);
  }
  std::cout << "wrote " << rows.size() << " rows to " << cfg.out << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

struct CriterionConfig {
  ModelOptions model;
  std::string variant = "interacting";
  double t = 1.0;
  double g = 0.5;
  std::optional<int> xi;
  std::optional<int> reference;
  std::optional<double> lambda;
  std::string method = "auto";
  std::string out = "report.json";
  std::string profiles;
};

int run_criterion(const CriterionConfig& cfg) {
  EigenSystem eig;
  if (cfg.variant == "single") {
    ModelParams p = to_params(cfg.model);
    p.t = cfg.t;
    p.g = cfg.g;
    if (cfg.method == "gauge" ||
        (cfg.method == "auto" && p.bc == BoundaryCondition::open))
      eig = diagonalize_gauge(build_hatano_nelson_single(p),
                              build_similarity_transform_single(p));
    else
      eig = diagonalize(build_hatano_nelson_single(p));
  } else {
    const ModelParams p = to_params(cfg.model);
    const FockBasis basis(p.L, p.N);
    eig = diagonalize_model(build_interacting_hn(p, basis), p, basis,
                            cfg.method);
  }

  DetectOptions opts;
  opts.xi = cfg.xi;
  opts.reference = cfg.reference;
  opts.lambda = cfg.lambda;
  const LocalizationReport rep = detect_skin_effect(eig, opts);
  io::write_report_json(rep, cfg.out);

  if (!cfg.profiles.empty()) {
    // Amplitude profiles of the selected eigenstates against the display
    // position, the raw material for localization plots.
    std::ofstream out(cfg.profiles);
    if (!out) throw std::runtime_error("cannot open " + cfg.profiles);
    out << "position";
    for (int m : rep.selected) out << ",state" << m;
    out << '\n';
    const int d = eig.v.rows();
    for (int k = 0; k < d; ++k) {
      out << k + 1;
      for (int m : rep.selected)
        out << ',' << io::format_double(std::abs(eig.v(rep.order[k], m)));
      out << '\n';
    }
    if (!out.flush()) throw std::runtime_error("write failed: " + cfg.profiles);
  }

  std::cout << "verdict=" << (rep.verdict ? "true" : "false")
            << " xi=" << rep.xi << " lambda=" << io::format_double(rep.lambda)
            << " lambda_xi=" << io::format_double(rep.lambda_xi)
            << " passing=" << rep.passing.size()
            << " distinct=" << rep.distinct_count << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

struct KappaConfig {
  int lmin = 4;
  int lmax = 12;
  double alpha = 0.5;
  double U = -1.0;
  std::string out = "kappa.csv";
  std::string format = "csv";
};

int run_kappa(const KappaConfig& cfg) {
  if (cfg.lmin < 2 || cfg.lmax > 28 || cfg.lmin > cfg.lmax)
    throw std::invalid_argument("need 2 <= Lmin <= Lmax <= 28");
  std::vector<io::KappaRow> rows;
  for (int L = cfg.lmin + (cfg.lmin % 2); L <= cfg.lmax; L += 2) {
    ModelParams p;
    p.L = L;
    p.N = L / 2;
    p.alpha = cfg.alpha;
    p.U = cfg.U;
    const FockBasis basis(p.L, p.N);
    const EigenSystem eig = diagonalize_gauge(
        build_interacting_hn(p, basis), build_similarity_transform(p, basis));
    const std::vector<int> order = reference_order(eig.v.col(0));
    rows.push_back({L, condition_number(eig.v), kappa_zero(eig, order),
                    kappa_zero_estimate(p)});
  }

  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const io::KappaRow& r : rows)
      j.push_back({{"L", r.L},
                   {"kappa", r.kappa},
                   {"kappa0", r.kappa0},
                   {"kappa0_estimate", r.kappa0_estimate}});
    std::ofstream out(cfg.out);
    if (!out) throw std::runtime_error("cannot open " + cfg.out);
    out << j.dump(2) << '\n';
  } else {
    io::write_kappa_csv(rows, cfg.out);
  }
  std::cout << "wrote " << rows.size() << " rows to " << cfg.out << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

struct DynamicsConfig {
  ModelOptions model;
  double tmax = 30.0;
  int steps = 300;
  std::string psi0 = "left";
  std::uint64_t seed = 1;
  std::string out = "trace.csv";
  std::string summary;
  std::string format = "csv";
};

int run_dynamics(const DynamicsConfig& cfg) {
  ModelParams p = to_params(cfg.model);
  if (p.bc != BoundaryCondition::open)
    throw std::invalid_argument("dynamics needs open bc");
  const FockBasis basis(p.L, p.N);
  const SectorOpenSystem sys = build_h0_and_jump_products(p, basis);
  const Operator heff = effective_hamiltonian_in_sector(sys);
  const EigenSystem eig =
      diagonalize_gauge(heff, build_similarity_transform(p, basis));

  const std::vector<double> times = time_grid(cfg.tmax, cfg.steps);
  DynamicsTrace trace = propagator_norm_trace(eig, times);

  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(basis.dim());
  if (cfg.psi0 == "random") {
    psi0 = Rng(cfg.seed).unit_vector(basis.dim());
  } else {
    // Particles packed against one edge: site sum minimal (left) or
    // maximal (right).
    const std::uint32_t occ =
        cfg.psi0 == "left"
            ? (1u << p.N) - 1u
            : ((1u << p.N) - 1u) << (p.L - p.N);
    psi0[basis.index_of(FockState{occ, p.L})] = 1.0;
  }
  trace.survival = survival_probability_pure(eig, psi0, times);

  const auto [tau0, tau] = relaxation_time(std::max(trace.kappa, 1.0), p.N,
                                           p.alpha);
  trace.tau0 = tau0;
  trace.tau = tau;

  if (cfg.format == "json") {
    nlohmann::json j;
    j["times"] = trace.times;
    j["norm"] = trace.norm;
    j["envelope"] = trace.envelope;
    j["survival"] = trace.survival;
    j["kappa"] = trace.kappa;
    j["fitted_slope"] = trace.fitted_slope;
    j["tau0"] = trace.tau0;
    j["tau"] = trace.tau;
    std::ofstream out(cfg.out);
    if (!out) throw std::runtime_error("cannot open " + cfg.out);
    out << j.dump(2) << '\n';
  } else {
    io::write_trace_csv(trace, cfg.out);
  }

  if (!cfg.summary.empty()) {
    nlohmann::json j;
    j["kappa"] = trace.kappa;
    j["fitted_slope"] = trace.fitted_slope;
    j["tau0"] = trace.tau0;
    j["tau"] = trace.tau;
    std::ofstream out(cfg.summary);
    if (!out) throw std::runtime_error("cannot open " + cfg.summary);
    out << j.dump(2) << '\n';
  }

  std::cout << "kappa=" << io::format_double(trace.kappa)
            << " fitted_slope=" << io::format_double(trace.fitted_slope)
            << " tau0=" << io::format_double(trace.tau0)
            << " tau=" << io::format_double(trace.tau) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

struct OracleConfig {
  int count = 200;
  std::uint64_t seed = 7;
  bool inject = false;
};

// Brute-force cross-check: evolving the full master equation and projecting
// onto the N-particle sector must reproduce the sector propagator applied
// to the initial state. --inject-violation swaps the jump-rate convention
// (cosh for sinh) to prove the check can fail.
bool oracle_lindblad_identity(bool inject) {
  ModelParams p;
  p.L = 4;
  p.N = 2;
  p.alpha = 0.5;
  p.U = -1.0;
  const UnionBasis ub(p.L, p.N);
  const FockBasis fb(p.L, p.N);

  OpenSystem sys = build_h0_and_lindblad(p, ub);
  if (inject) {
    const double wrong = std::sqrt(std::cosh(p.alpha) / std::sinh(p.alpha));
    for (Operator& l : sys.lindblads) l.mat *= wrong;
  }

  const SectorOpenSystem sector = build_h0_and_jump_products(p, fb);
  const EigenSystem eig =
      diagonalize_gauge(effective_hamiltonian_in_sector(sector),
                        build_similarity_transform(p, fb));

  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(fb.dim());
  psi0[0] = 1.0;
  Eigen::MatrixXcd rho0 = Eigen::MatrixXcd::Zero(ub.dim(), ub.dim());
  const int off = ub.sector_offset(p.N);
  rho0(off, off) = 1.0;

  const std::vector<double> times = time_grid(2.0, 20);
  const std::vector<Eigen::MatrixXcd> rhos =
      lindblad_evolve(sys.h0, sys.lindblads, rho0, times);
  const std::vector<double> survival =
      survival_probability_pure(eig, psi0, times);

  double worst = 0.0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double weight = sector_projection(rhos[k], ub, p.N).weight;
    worst = std::max(worst, std::abs(weight - survival[k]));
  }
  std::cout << "lindblad identity: max deviation " << io::format_double(worst)
            << (worst <= 1e-6 ? " (ok)" : " (VIOLATION)") << '\n';
  return worst <= 1e-6;
}

// No Hermitian matrix may pass the localization criterion at any xi.
bool oracle_hermitian_suite(int count, std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < count; ++trial) {
    const int d = rng.uniform_int(8, 64);
    const Operator h{rng.hermitian(d), "dense"};
    const EigenSystem eig = diagonalize(h);
    for (int xi = 0; xi < d; ++xi) {
      DetectOptions opts;
      opts.xi = xi;
      const LocalizationReport rep = detect_skin_effect(eig, opts);
      if (rep.verdict) {
        std::cout << "hermitian suite: trial " << trial << " dim " << d
                  << " xi " << xi << " false positive (VIOLATION)\n";
        return false;
      }
    }
  }
  std::cout << "hermitian suite: " << count
            << " random Hermitian matrices, no false positives (ok)\n";
  return true;
}

// The threshold is sharp: an exactly orthonormal family whose tail
// amplitudes all equal lambda_xi exists for every (xi, D).
bool oracle_witness_suite(int count, std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < count; ++trial) {
    const int d = rng.uniform_int(2, 200);
    const int xi = rng.uniform_int(0, d - 1);
    const Eigen::MatrixXcd w = tightness_witness(xi, d);
    const double gram_err =
        (w.adjoint() * w -
         Eigen::MatrixXcd::Identity(xi + 1, xi + 1)).cwiseAbs().maxCoeff();
    const double lam = lambda_threshold(xi, d);
    double tail_err = 0.0;
    for (int j = 0; j <= xi; ++j)
      for (int r = xi; r < d; ++r)
        tail_err = std::max(tail_err, std::abs(std::abs(w(r, j)) - lam));
    // Strictness: at lambda exactly lambda_xi these states do not pass.
    std::vector<int> identity_order(d);
    for (int k = 0; k < d; ++k) identity_order[k] = k;
    bool any_pass = false;
    for (int j = 0; j <= xi; ++j)
      any_pass = any_pass ||
                 is_lambda_localized(w.col(j), xi, lam, identity_order);
    if (gram_err > 1e-12 || tail_err > 1e-12 || any_pass) {
      std::cout << "witness suite: trial " << trial << " dim " << d << " xi "
                << xi << " gram_err " << io::format_double(gram_err)
                << " tail_err " << io::format_double(tail_err)
                << (any_pass ? " strictness broken" : "") << " (VIOLATION)\n";
      return false;
    }
  }
  std::cout << "witness suite: " << count
            << " random (xi, D) pairs, orthonormal with tails at the "
             "threshold (ok)\n";
  return true;
}

int run_oracle(const OracleConfig& cfg) {
  bool ok = oracle_lindblad_identity(cfg.inject);
  ok = oracle_hermitian_suite(cfg.count, cfg.seed) && ok;
  ok = oracle_witness_suite(std::max(cfg.count / 4, 1), cfg.seed + 1) && ok;
  std::cout << (ok ? "oracle checks passed\n" : "oracle checks FAILED\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fockskin: localization criterion for non-Hermitian skin effects in "
      "many-body spectra.\nSet OPENBLAS_NUM_THREADS to control linear "
      "algebra threading."};
  app.require_subcommand(1);

  SpectrumConfig sp;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "eigenvalues of the asymmetric-hopping chain");
  add_model_options(spectrum, &sp.model);
  spectrum->add_option("--which", sp.which, "which boundary conditions")
      ->check(CLI::IsMember({"both", "open", "periodic"}));
  spectrum->add_option("--method", sp.method, "eigensolver path")
      ->check(CLI::IsMember({"direct", "gauge"}));
  spectrum->add_option("--out", sp.out, "output path");
  spectrum->add_option("--format", sp.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  spectrum->add_option("--dump-hamiltonian", sp.dump,
                       "also write the matrix to this path");

  CriterionConfig cr;
  CLI::App* criterion = app.add_subcommand(
      "criterion", "tail-localization criterion and report");
  add_model_options(criterion, &cr.model, 4096);
  criterion->add_option("--variant", cr.variant, "model variant")
      ->check(CLI::IsMember({"interacting", "single"}));
  criterion->add_option("--t", cr.t, "single-particle symmetric hopping");
  criterion->add_option("--g", cr.g, "single-particle asymmetric hopping");
  criterion->add_option("--xi", cr.xi, "localization cut position");
  criterion->add_option("--reference", cr.reference,
                        "reference eigenstate index");
  criterion->add_option("--lambda", cr.lambda, "explicit threshold");
  criterion->add_option("--method", cr.method, "eigensolver path")
      ->check(CLI::IsMember({"auto", "direct", "gauge"}));
  criterion->add_option("--out", cr.out, "report JSON path");
  criterion->add_option("--profiles", cr.profiles,
                        "also write per-state amplitude profiles CSV");

  KappaConfig ka;
  CLI::App* kappa = app.add_subcommand(
      "kappa", "condition-number sweep over even chain lengths");
  kappa->add_option("--Lmin", ka.lmin, "smallest chain length");
  kappa->add_option("--Lmax", ka.lmax, "largest chain length");
  kappa->add_option("--alpha", ka.alpha, "hopping asymmetry");
  kappa->add_option("--U", ka.U, "nearest-neighbour interaction");
  kappa->add_option("--out", ka.out, "output path");
  kappa->add_option("--format", ka.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  DynamicsConfig dy;
  CLI::App* dynamics = app.add_subcommand(
      "dynamics", "propagator norm, decay envelope and surviving probability");
  add_model_options(dynamics, &dy.model);
  dynamics->add_option("--tmax", dy.tmax, "grid end time");
  dynamics->add_option("--steps", dy.steps, "grid steps");
  dynamics->add_option("--psi0", dy.psi0, "initial state")
      ->check(CLI::IsMember({"left", "right", "random"}));
  dynamics->add_option("--seed", dy.seed, "seed for --psi0 random");
  dynamics->add_option("--out", dy.out, "trace output path");
  dynamics->add_option("--summary", dy.summary, "summary JSON path");
  dynamics->add_option("--format", dy.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  OracleConfig orc;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "cross-check suite (exit 1 on violation)");
  oracle->add_option("--count", orc.count, "random trials")
      ->check(CLI::Range(1, 10000));
  oracle->add_option("--seed", orc.seed, "rng seed");
  oracle->add_flag("--inject-violation", orc.inject,
                   "deliberately break a convention to test the oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*spectrum) return run_spectrum(sp);
    if (*criterion) return run_criterion(cr);
    if (*kappa) return run_kappa(ka);
    if (*dynamics) return run_dynamics(dy);
    if (*oracle) return run_oracle(orc);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
