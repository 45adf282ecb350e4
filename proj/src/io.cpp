// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#include "fockskin/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <nlohmann/json.hpp>

namespace fockskin::io {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

[[noreturn]] void bad_file(const std::string& path, const std::string& why) {
  throw std::invalid_argument("malformed file " + path + ": " + why);
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  if (res.ec != std::errc())
    throw std::runtime_error("format_double: to_chars failed");
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument("parse_double: not a number: '" + s + "'");
  return x;
}

void write_operator(const Operator& op, const std::string& path) {
  std::ofstream out = open_out(path);
  const int d = op.dim();
  out << d << ' ' << op.basis << '\n';
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (j) out << ',';
      out << format_double(op.mat(i, j).real()) << ','
          << format_double(op.mat(i, j).imag());
    }
    out << '\n';
  }
  finish(out, path);
}

Operator read_operator(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string header;
  if (!std::getline(in, header)) bad_file(path, "missing header");
  const std::size_t space = header.find(' ');
  if (space == std::string::npos) bad_file(path, "header needs 'D tag'");
  int d = 0;
  const auto res =
      std::from_chars(header.data(), header.data() + space, d);
  if (res.ec != std::errc() || d < 1) bad_file(path, "bad dimension");

  Operator op{Eigen::MatrixXcd(d, d), header.substr(space + 1)};
  std::string line;
  for (int i = 0; i < d; ++i) {
    if (!std::getline(in, line)) bad_file(path, "truncated matrix");
    const std::vector<std::string> f = split_fields(line);
    if (static_cast<int>(f.size()) != 2 * d)
      bad_file(path, "row " + std::to_string(i) + " has wrong arity");
    for (int j = 0; j < d; ++j)
      op.mat(i, j) = {parse_double(f[2 * j]), parse_double(f[2 * j + 1])};
  }
  return op;
}

void write_spectrum_csv(const std::vector<SpectrumRow>& rows,
                        const std::string& path) {
  std::ofstream out = open_out(path);
  out << "bc,re,im\n";
  for (const SpectrumRow& r : rows)
    out << r.bc << ',' << format_double(r.re) << ',' << format_double(r.im)
        << '\n';
  finish(out, path);
}

std::vector<SpectrumRow> read_spectrum_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line) || line != "bc,re,im")
    bad_file(path, "expected 'bc,re,im' header");
  std::vector<SpectrumRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_fields(line);
    if (f.size() != 3) bad_file(path, "spectrum row needs 3 fields");
    rows.push_back({f[0], parse_double(f[1]), parse_double(f[2])});
  }
  return rows;
}

void write_trace_csv(const DynamicsTrace& trace, const std::string& path) {
  const std::size_t n = trace.times.size();
  const auto column_ok = [n](const std::vector<double>& c) {
    return c.empty() || c.size() == n;
  };
  if (!column_ok(trace.norm) || !column_ok(trace.envelope) ||
      !column_ok(trace.survival))
    throw std::invalid_argument("write_trace_csv: ragged columns");

  std::ofstream out = open_out(path);
  out << "# kappa=" << format_double(trace.kappa) << '\n'
      << "# fitted_slope=" << format_double(trace.fitted_slope) << '\n'
      << "# tau0=" << format_double(trace.tau0) << '\n'
      << "# tau=" << format_double(trace.tau) << '\n'
      << "t,norm,envelope,survival\n";
  const auto cell = [](const std::vector<double>& c, std::size_t k) {
    return c.empty() ? std::string() : format_double(c[k]);
  };
  for (std::size_t k = 0; k < n; ++k)
    out << format_double(trace.times[k]) << ',' << cell(trace.norm, k) << ','
        << cell(trace.envelope, k) << ',' << cell(trace.survival, k) << '\n';
  finish(out, path);
}

DynamicsTrace read_trace_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  DynamicsTrace trace;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) != 0) break;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) bad_file(path, "metadata needs key=value");
    const std::string key = line.substr(2, eq - 2);
    const double value = parse_double(line.substr(eq + 1));
    if (key == "kappa")
      trace.kappa = value;
    else if (key == "fitted_slope")
      trace.fitted_slope = value;
    else if (key == "tau0")
      trace.tau0 = value;
    else if (key == "tau")
      trace.tau = value;
    else
      bad_file(path, "unknown metadata key '" + key + "'");
  }
  if (line != "t,norm,envelope,survival")
    bad_file(path, "expected 't,norm,envelope,survival' header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_fields(line);
    if (f.size() != 4) bad_file(path, "trace row needs 4 fields");
    trace.times.push_back(parse_double(f[0]));
    if (!f[1].empty()) trace.norm.push_back(parse_double(f[1]));
    if (!f[2].empty()) trace.envelope.push_back(parse_double(f[2]));
    if (!f[3].empty()) trace.survival.push_back(parse_double(f[3]));
  }
  return trace;
}

void write_kappa_csv(const std::vector<KappaRow>& rows,
                     const std::string& path) {
  std::ofstream out = open_out(path);
  out << "L,kappa,kappa0,kappa0_estimate,log_kappa,log_kappa0,"
         "log_kappa_over_L,log_kappa_over_L2\n";
  for (const KappaRow& r : rows) {
    const double lk = std::log(r.kappa);
    out << r.L << ',' << format_double(r.kappa) << ','
        << format_double(r.kappa0) << ',' << format_double(r.kappa0_estimate)
        << ',' << format_double(lk) << ',' << format_double(std::log(r.kappa0))
        << ',' << format_double(lk / r.L) << ','
        << format_double(lk / (static_cast<double>(r.L) * r.L)) << '\n';
  }
  finish(out, path);
}

std::vector<KappaRow> read_kappa_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("L,kappa,kappa0,", 0) != 0)
    bad_file(path, "expected kappa header");
  std::vector<KappaRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_fields(line);
    if (f.size() < 4) bad_file(path, "kappa row needs at least 4 fields");
    KappaRow r;
    const auto res = std::from_chars(f[0].data(), f[0].data() + f[0].size(),
                                     r.L);
    if (res.ec != std::errc()) bad_file(path, "bad L field");
    r.kappa = parse_double(f[1]);
    r.kappa0 = parse_double(f[2]);
    r.kappa0_estimate = parse_double(f[3]);
    rows.push_back(r);
  }
  return rows;
}

nlohmann::json report_to_json(const LocalizationReport& report) {
  nlohmann::json j;
  j["xi"] = report.xi;
  j["lambda"] = report.lambda;
  j["lambda_xi"] = report.lambda_xi;
  j["passing"] = report.passing;
  j["distinct_count"] = report.distinct_count;
  j["verdict"] = report.verdict;
  j["margins"] = report.margins;
  j["reference"] = report.reference;
  j["order"] = report.order;
  j["selected"] = report.selected;
  return j;
}

LocalizationReport report_from_json(const nlohmann::json& j) {
  LocalizationReport report;
  report.xi = j.at("xi").get<int>();
  report.lambda = j.at("lambda").get<double>();
  report.lambda_xi = j.at("lambda_xi").get<double>();
  report.passing = j.at("passing").get<std::vector<int>>();
  report.distinct_count = j.at("distinct_count").get<int>();
  report.verdict = j.at("verdict").get<bool>();
  report.margins = j.at("margins").get<std::vector<double>>();
  report.reference = j.at("reference").get<int>();
  report.order = j.at("order").get<std::vector<int>>();
  report.selected = j.at("selected").get<std::vector<int>>();
  return report;
}

void write_report_json(const LocalizationReport& report,
                       const std::string& path) {
  std::ofstream out = open_out(path);
  out << report_to_json(report).dump(2) << '\n';
  finish(out, path);
}

LocalizationReport read_report_json(const std::string& path) {
  std::ifstream in = open_in(path);
  nlohmann::json j;
  in >> j;
  if (!in && !in.eof()) bad_file(path, "json parse failed");
  return report_from_json(j);
}

}  // namespace fockskin::io
