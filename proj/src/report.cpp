#include "spinmotion/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "spinmotion/version.hpp"

namespace spinmotion {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string scan_csv(const ScanResult& result) {
  std::string out = "K,delta,t_i,t_f,tf_omega_over_2pi,fidelity,infidelity,leakage\n";
  for (const ScanRow& row : result.rows) {
    out += std::to_string(row.K);
    for (double v : {row.delta, row.t_i, row.t_f, row.tf_omega_over_2pi, row.fidelity,
                     row.infidelity, row.leakage}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + tmp + "' for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw std::runtime_error("write to '" + tmp + "' failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("rename to '" + path + "' failed");
  }
}

nlohmann::json spec_echo(const ScanSpec& spec) {
  nlohmann::json j;
  j["interaction"] = kind_name(spec.kind);
  j["action"] = spec.action;
  j["K"] = spec.K_list;
  j["omega_a"] = spec.omega_a;
  j["omega_ap"] = spec.omega_ap;
  j["axes"] = {std::string(1, axis_name(spec.axis_a)), std::string(1, axis_name(spec.axis_ap))};
  j["phi"] = spec.phi;
  j["cutoffs"] = spec.cutoffs;
  j["initial_state"] = preset_name(spec.initial_state);
  j["steps_per_period"] = spec.steps_per_period;
  j["leakage_tolerance"] = spec.leakage_tolerance;
  return j;
}

nlohmann::json scan_report(const ScanResult& result, double user_rabi_hz) {
  nlohmann::json report;
  report["version"] = kVersion;
  report["config"] = spec_echo(result.spec);

  nlohmann::json rows = nlohmann::json::array();
  for (const ScanRow& row : result.rows) {
    nlohmann::json r;
    r["K"] = row.K;
    r["delta"] = row.delta;
    r["t_i"] = row.t_i;
    r["t_f"] = row.t_f;
    r["tf_omega_over_2pi"] = row.tf_omega_over_2pi;
    r["fidelity"] = row.fidelity;
    r["infidelity"] = row.infidelity;
    r["leakage"] = row.leakage;
    r["tf_seconds_at_10kHz"] = row.tf_omega_over_2pi / 10e3;
    r["tf_seconds_at_1kHz"] = row.tf_omega_over_2pi / 1e3;
    if (user_rabi_hz > 0) r["tf_seconds_at_user_rate"] = row.tf_omega_over_2pi / user_rabi_hz;
    rows.push_back(std::move(r));
  }
  report["rows"] = std::move(rows);
  if (user_rabi_hz > 0) report["rabi_hz"] = user_rabi_hz;
  return report;
}

}  // namespace spinmotion
