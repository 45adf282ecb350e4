// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#include "fockskin/io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>

#include <nlohmann/json.hpp>

#include "fockskin/rng.hpp"

using namespace fockskin;
using Catch::Approx;

namespace {

// Unique scratch file that cleans up after itself.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name)
      : path((std::filesystem::temp_directory_path() /
              ("fockskin_test_" + name))
                 .string()) {}
  ~TempFile() { std::remove(path.c_str()); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("format_double round-trips awkward values exactly") {
  const double cases[] = {0.1,   1e-308, -0.0, 1.0 / 3.0, 6.02214076e23,
                          -2.5e-17, 0.0};
  for (double x : cases) {
    const double back = io::parse_double(io::format_double(x));
    CHECK(back == x);
    CHECK(std::signbit(back) == std::signbit(x));
  }
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(io::parse_double(io::format_double(inf)) == inf);
  CHECK(io::parse_double(io::format_double(-inf)) == -inf);
  CHECK(std::isnan(io::parse_double(io::format_double(
      std::numeric_limits<double>::quiet_NaN()))));
}

TEST_CASE("parse_double rejects trailing garbage") {
  CHECK_THROWS_AS(io::parse_double("1.5x"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_double(""), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_double("  2.0"), std::invalid_argument);
}

TEST_CASE("operator files round-trip bit for bit") {
  Rng rng(5);
  Operator op{rng.hermitian(4), "fock:L=4,N=2"};
  op.mat(0, 1) = {0.1, -1e-17};  // exercise subnormal-ish imaginary parts

  TempFile f("op.txt");
  io::write_operator(op, f.path);
  const Operator back = io::read_operator(f.path);
  CHECK(back.basis == op.basis);
  REQUIRE(back.mat.rows() == 4);
  CHECK((back.mat - op.mat).cwiseAbs().maxCoeff() == 0.0);

  // A second write of the parsed operator is byte-identical.
  TempFile g("op2.txt");
  io::write_operator(back, g.path);
  CHECK(slurp(g.path) == slurp(f.path));
}

TEST_CASE("malformed operator files are rejected") {
  TempFile f("bad_op.txt");
  {
    std::ofstream out(f.path);
    out << "2 fock:L=2,N=1\n1,0,0,0\n";  // one row missing
  }
  CHECK_THROWS_AS(io::read_operator(f.path), std::invalid_argument);
  {
    std::ofstream out(f.path);
    out << "2 fock:L=2,N=1\n1,0,0\n0,0,1,0\n";  // odd field count
  }
  CHECK_THROWS_AS(io::read_operator(f.path), std::invalid_argument);
  {
    std::ofstream out(f.path);
    out << "x fock\n";
  }
  CHECK_THROWS_AS(io::read_operator(f.path), std::invalid_argument);
  CHECK_THROWS_AS(io::read_operator("/nonexistent/op.txt"),
                  std::runtime_error);
}

TEST_CASE("spectrum CSV round-trips") {
  std::vector<io::SpectrumRow> rows = {{"open", 1.25, 0.0},
                                       {"open", -1.25, 0.0},
                                       {"periodic", 0.5, -0.75}};
  TempFile f("spectrum.csv");
  io::write_spectrum_csv(rows, f.path);
  const auto back = io::read_spectrum_csv(f.path);
  REQUIRE(back.size() == rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(back[k].bc == rows[k].bc);
    CHECK(back[k].re == rows[k].re);
    CHECK(back[k].im == rows[k].im);
  }
}

TEST_CASE("trace CSV round-trips including metadata") {
  DynamicsTrace tr;
  tr.times = {0.0, 0.5, 1.0};
  tr.norm = {1.0, 0.8, 0.41};
  tr.envelope = {7.0, 5.6, 2.87};
  tr.survival = {1.0, 0.64, 0.1681};
  tr.kappa = 7.0;
  tr.fitted_slope = -2.3;
  tr.tau0 = 0.159919563502;
  tr.tau = 0.47;

  TempFile f("trace.csv");
  io::write_trace_csv(tr, f.path);
  const DynamicsTrace back = io::read_trace_csv(f.path);
  CHECK(back.times == tr.times);
  CHECK(back.norm == tr.norm);
  CHECK(back.envelope == tr.envelope);
  CHECK(back.survival == tr.survival);
  CHECK(back.kappa == tr.kappa);
  CHECK(back.fitted_slope == tr.fitted_slope);
  CHECK(back.tau0 == tr.tau0);
  CHECK(back.tau == tr.tau);

  TempFile g("trace2.csv");
  io::write_trace_csv(back, g.path);
  CHECK(slurp(g.path) == slurp(f.path));
}

TEST_CASE("trace CSV keeps absent columns absent") {
  DynamicsTrace tr;
  tr.times = {0.0, 1.0};
  tr.survival = {1.0, 0.5};  // no norm or envelope columns
  TempFile f("trace3.csv");
  io::write_trace_csv(tr, f.path);
  const DynamicsTrace back = io::read_trace_csv(f.path);
  CHECK(back.times == tr.times);
  CHECK(back.norm.empty());
  CHECK(back.envelope.empty());
  CHECK(back.survival == tr.survival);
  CHECK(std::isnan(back.kappa));
  CHECK(std::isnan(back.tau));
}

TEST_CASE("trace CSV rejects ragged columns") {
  DynamicsTrace tr;
  tr.times = {0.0, 1.0};
  tr.norm = {1.0};
  TempFile f("trace4.csv");
  CHECK_THROWS_AS(io::write_trace_csv(tr, f.path), std::invalid_argument);
}

TEST_CASE("kappa CSV round-trips the first four columns") {
  std::vector<io::KappaRow> rows = {{4, 7.7706, 3.2106, 3.3043},
                                    {6, 94.27, 9.2632, 21.9394},
                                    {8, 4105.5368, 273.94, 416.0831}};
  TempFile f("kappa.csv");
  io::write_kappa_csv(rows, f.path);
  const auto back = io::read_kappa_csv(f.path);
  REQUIRE(back.size() == rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(back[k].L == rows[k].L);
    CHECK(back[k].kappa == rows[k].kappa);
    CHECK(back[k].kappa0 == rows[k].kappa0);
    CHECK(back[k].kappa0_estimate == rows[k].kappa0_estimate);
  }
  // Derived log columns are present for plotting.
  const std::string text = slurp(f.path);
  CHECK(text.find("log_kappa_over_L") != std::string::npos);
}

TEST_CASE("localization reports survive a JSON round-trip") {
  LocalizationReport r;
  r.xi = 60;
  r.lambda = 0.0404888165;
  r.lambda_xi = 0.0404888165;
  r.passing = {0, 2, 5};
  r.distinct_count = 3;
  r.verdict = true;
  r.margins = {0.01, 0.02, 0.0404888165};
  r.reference = 0;
  r.order = {2, 0, 1};
  r.selected = {1, 0};

  const nlohmann::json j = io::report_to_json(r);
  CHECK(j.at("verdict").get<bool>());
  const LocalizationReport back = io::report_from_json(j);
  CHECK(back.xi == r.xi);
  CHECK(back.lambda == r.lambda);
  CHECK(back.lambda_xi == r.lambda_xi);
  CHECK(back.passing == r.passing);
  CHECK(back.distinct_count == r.distinct_count);
  CHECK(back.verdict == r.verdict);
  CHECK(back.margins == r.margins);
  CHECK(back.reference == r.reference);
  CHECK(back.order == r.order);
  CHECK(back.selected == r.selected);

  TempFile f("report.json");
  io::write_report_json(r, f.path);
  const LocalizationReport disk = io::read_report_json(f.path);
  CHECK(disk.lambda == r.lambda);
  CHECK(disk.order == r.order);
}
