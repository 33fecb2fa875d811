#pragma once

#include <string>

#include <json.hpp>

#include "spinmotion/experiments.hpp"

namespace spinmotion {

/// Full-precision decimal rendering (17 significant digits).
std::string format_double(double value);

/// CSV with a header row, UTF-8, LF line endings, full double precision.
/// Columns: K, delta, t_i, t_f, tf_omega_over_2pi, fidelity, infidelity, leakage.
std::string scan_csv(const ScanResult& result);

/// Writes via a temporary file in the target directory plus rename, so readers
/// never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

nlohmann::json spec_echo(const ScanSpec& spec);

/// Run report: config echo, per-row results, and the wall-clock conversions
/// t_f[s] = (t_f W/2pi) / (W/2pi [Hz]) for W/2pi = 10 kHz and 1 kHz (plus a
/// user-supplied rate when given).
nlohmann::json scan_report(const ScanResult& result, double user_rabi_hz = 0.0);

}  // namespace spinmotion
