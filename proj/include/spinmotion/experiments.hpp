#pragma once

#include <vector>

#include "spinmotion/drives.hpp"
#include "spinmotion/hilbert.hpp"

namespace spinmotion {

enum class InitialStatePreset {
  DownVacuum,     // |down> (x) vacuum on every mode
  DownSingleJ,    // |down>|1, 0>, the beam-splitter input
};

const char* preset_name(InitialStatePreset preset);
InitialStatePreset preset_from_name(const std::string& name);

/// One fidelity-convergence scan: a fixed interaction and action, swept over
/// the iteration count K.
struct ScanSpec {
  InteractionKind kind = InteractionKind::OneModeSqueeze;
  double action = 0.75;            // rabi * t_f held constant across the sweep
  std::vector<int> K_list;         // strictly increasing
  double omega_a = 1.0;
  double omega_ap = 1.0;
  PauliAxis axis_a = PauliAxis::Y;
  PauliAxis axis_ap = PauliAxis::X;
  double phi = 0.0;
  std::vector<int> cutoffs;        // per-mode Fock cutoffs
  InitialStatePreset initial_state = InitialStatePreset::DownVacuum;
  int steps_per_period = 200;
  double leakage_tolerance = 1e-6;

  void validate() const;
  SpaceDescriptor space() const;
  GateDrive drive_for(const ScheduleSolution& schedule) const;
  StateVector initial() const;
};

/// Cutoffs, initial state, leakage budget and a K list spanning
/// t_f * omega / 2pi in [0.3, 3.0] with at least 12 points.
ScanSpec default_scan_spec(InteractionKind kind, double action);

/// K values whose durations cover the given normalized-duration span.
std::vector<int> iteration_span(InteractionKind kind, double action, double tf_omega_lo,
                                double tf_omega_hi, int points, double omega_a = 1.0,
                                double omega_ap = 1.0);

struct ScanRow {
  int K;
  double delta;
  double t_i;
  double t_f;
  double tf_omega_over_2pi;
  double fidelity;
  double infidelity;
  double leakage;
};

struct ScanResult {
  ScanSpec spec;
  std::vector<ScanRow> rows;  // ordered by K
};

/// For each K: solve the schedule, integrate the full drive, and compare
/// against the effective-Hamiltonian target on the same initial state.
/// Rows run in parallel on up to `threads` workers; a LeakageError carries
/// the offending K.
ScanResult run_scan(const ScanSpec& spec, int threads = 1);

/// Phonon probabilities (spin traced out) of the full-drive final state at
/// one K.
Eigen::VectorXd phonon_histogram(const ScanSpec& spec, int K);

struct SwapTrace {
  std::vector<double> times;
  std::vector<double> p10;  // population of |1,0>
  std::vector<double> p01;  // population of |0,1>
};

/// Time-resolved |10>/|01> populations under the full drive (beam-splitter
/// specs starting from |down>|1,0>).
SwapTrace swap_trace(const ScanSpec& spec, int K, int samples);

}  // namespace spinmotion
