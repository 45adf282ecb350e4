// Copyright 2026 The fockskin Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "fockskin/criterion.hpp"
#include "fockskin/dynamics.hpp"
#include "fockskin/operator.hpp"

namespace fockskin::io {

/// Shortest round-trip decimal representation (std::to_chars), locale-free.
std::string format_double(double x);
double parse_double(const std::string& s);

/// Matrix file: one header line "D <basis tag>", then D rows of 2D
/// comma-separated doubles (re,im per entry, row-major).
void write_operator(const Operator& op, const std::string& path);
Operator read_operator(const std::string& path);

struct SpectrumRow {
  std::string bc;
  double re = 0.0;
  double im = 0.0;
};
void write_spectrum_csv(const std::vector<SpectrumRow>& rows,
                        const std::string& path);
std::vector<SpectrumRow> read_spectrum_csv(const std::string& path);

void write_trace_csv(const DynamicsTrace& trace, const std::string& path);
DynamicsTrace read_trace_csv(const std::string& path);

struct KappaRow {
  int L = 0;
  double kappa = 0.0;
  double kappa0 = 0.0;
  double kappa0_estimate = 0.0;
};
void write_kappa_csv(const std::vector<KappaRow>& rows,
                     const std::string& path);
std::vector<KappaRow> read_kappa_csv(const std::string& path);

nlohmann::json report_to_json(const LocalizationReport& report);
LocalizationReport report_from_json(const nlohmann::json& j);
void write_report_json(const LocalizationReport& report,
                       const std::string& path);
LocalizationReport read_report_json(const std::string& path);

}  // namespace fockskin::io
