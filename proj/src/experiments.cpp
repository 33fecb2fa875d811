#include "spinmotion/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "spinmotion/propagate.hpp"

namespace spinmotion {

const char* preset_name(InitialStatePreset preset) {
  switch (preset) {
    case InitialStatePreset::DownVacuum: return "down-vacuum";
    case InitialStatePreset::DownSingleJ: return "down-10";
  }
  return "?";
}

InitialStatePreset preset_from_name(const std::string& name) {
  if (name == "down-vacuum") return InitialStatePreset::DownVacuum;
  if (name == "down-10") return InitialStatePreset::DownSingleJ;
  throw std::invalid_argument("unknown initial state preset '" + name + "'");
}

void ScanSpec::validate() const {
  if (!(action > 0)) throw std::invalid_argument("ScanSpec: action must be positive");
  if (K_list.empty()) throw std::invalid_argument("ScanSpec: K list must not be empty");
  for (size_t i = 0; i + 1 < K_list.size(); ++i) {
    if (K_list[i + 1] <= K_list[i]) {
      throw std::invalid_argument("ScanSpec: K list must be strictly increasing");
    }
  }
  if (K_list.front() < 1) throw std::invalid_argument("ScanSpec: K must be >= 1");
  const int modes = catalog_same_mode(kind) ? 1 : 2;
  if (static_cast<int>(cutoffs.size()) != modes) {
    throw std::invalid_argument("ScanSpec: cutoff count must match the interaction's mode count");
  }
  if (initial_state == InitialStatePreset::DownSingleJ && modes != 2) {
    throw std::invalid_argument("ScanSpec: the |down>|1,0> preset needs a two-mode interaction");
  }
  space().validate();
}

SpaceDescriptor ScanSpec::space() const {
  if (cutoffs.size() == 1) return SpaceDescriptor::single_mode(cutoffs[0]);
  return SpaceDescriptor::two_mode(cutoffs[0], cutoffs[1]);
}

GateDrive ScanSpec::drive_for(const ScheduleSolution& schedule) const {
  GateDrive drive;
  drive.omega_a = omega_a;
  drive.omega_ap = omega_ap;
  drive.axis_a = axis_a;
  drive.axis_ap = axis_ap;
  drive.mode_j = 0;
  drive.mode_jp = catalog_same_mode(kind) ? 0 : 1;
  drive.delta = schedule.delta;
  drive.n = catalog_harmonic(kind);
  drive.phi = phi;
  return drive;
}

StateVector ScanSpec::initial() const {
  const SpaceDescriptor sp = space();
  if (initial_state == InitialStatePreset::DownSingleJ) return basis_state(sp, 0, 1, 0);
  return basis_state(sp, 0, 0, 0);
}

std::vector<int> iteration_span(InteractionKind kind, double action, double tf_omega_lo,
                                double tf_omega_hi, int points, double omega_a,
                                double omega_ap) {
  // order 2: tf*W/2pi = sqrt(K action / 4pi) (equal rates);
  // order 3: tf*W/2pi = K^{2/3} (action / 4pi)^{1/3}.
  const int order = magnus_order(kind);
  auto iteration_for = [&](double tf_omega) {
    // Durations are normalized by omega_a, so
    //   order 2: (tf W_a/2pi)^2 = K W_a action / (4 pi W_a'),
    //   order 3: (tf W_a/2pi)^3 = K^2 W_a action / (4 pi W_a').
    const double scale = 4.0 * M_PI * omega_ap / (action * omega_a);
    const double k = order == 2 ? tf_omega * tf_omega * scale
                                : std::pow(tf_omega, 1.5) * std::sqrt(scale);
    return std::max(1, static_cast<int>(std::lround(k)));
  };
  std::vector<int> list;
  for (int i = 0; i < points; ++i) {
    const double target = tf_omega_lo + (tf_omega_hi - tf_omega_lo) * i / (points - 1);
    const int k = iteration_for(target);
    if (list.empty() || k > list.back()) list.push_back(k);
  }
  return list;
}

ScanSpec default_scan_spec(InteractionKind kind, double action) {
  ScanSpec spec;
  spec.kind = kind;
  spec.action = action;
  spec.cutoffs = catalog_same_mode(kind) ? std::vector<int>{40} : std::vector<int>{20, 20};
  spec.initial_state = kind == InteractionKind::BeamSplitter ? InitialStatePreset::DownSingleJ
                                                             : InitialStatePreset::DownVacuum;
  // A strongly squeezed state keeps measurable weight near a cutoff-40 wall;
  // the budget below keeps the run alive while the leakage column records it.
  spec.leakage_tolerance = kind == InteractionKind::OneModeSqueeze ? 1e-2 : 1e-6;
  spec.K_list = iteration_span(kind, action, 0.3, 3.0, 16);
  while (static_cast<int>(spec.K_list.size()) < 12) {
    spec.K_list.push_back(spec.K_list.back() + std::max(1, spec.K_list.back() / 8));
  }
  return spec;
}

namespace {

PropagationConfig scan_config(const ScanSpec& spec, const GateDrive& drive) {
  PropagationConfig cfg;
  cfg.steps_per_period = spec.steps_per_period;
  cfg.period = drive.base_period() / std::max(1, std::abs(drive.n));
  cfg.leakage_tolerance = spec.leakage_tolerance;
  return cfg;
}

ScanRow run_row(const ScanSpec& spec, int K) {
  const SpaceDescriptor sp = spec.space();
  const ScheduleSolution schedule =
      solve_schedule(magnus_order(spec.kind), K, spec.omega_a, spec.omega_ap, spec.action);
  const GateDrive drive = spec.drive_for(schedule);
  const StateVector psi0 = spec.initial();

  EvolveResult evolved;
  try {
    evolved = evolve(gate_drive_terms(drive, sp), psi0, schedule.t_f, scan_config(spec, drive));
  } catch (const LeakageError& err) {
    throw LeakageError(err.leakage, err.time, K);
  }

  const StateVector target =
      make_state(sp, effective_propagator(effective_interaction(drive), schedule.t_f, sp).matrix *
                         psi0.amplitudes);

  ScanRow row;
  row.K = K;
  row.delta = schedule.delta;
  row.t_i = schedule.t_i;
  row.t_f = schedule.t_f;
  row.tf_omega_over_2pi = schedule.t_f * spec.omega_a / (2.0 * M_PI);
  row.fidelity = fidelity(evolved.state, target);
  row.infidelity = 1.0 - row.fidelity;
  row.leakage = evolved.max_leakage;
  return row;
}

}  // namespace

ScanResult run_scan(const ScanSpec& spec, int threads) {
  spec.validate();
  ScanResult result;
  result.spec = spec;
  result.rows.resize(spec.K_list.size());

  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(spec.K_list.size())));
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= spec.K_list.size()) return;
      try {
        result.rows[i] = run_row(spec, spec.K_list[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

Eigen::VectorXd phonon_histogram(const ScanSpec& spec, int K) {
  spec.validate();
  const SpaceDescriptor sp = spec.space();
  const ScheduleSolution schedule =
      solve_schedule(magnus_order(spec.kind), K, spec.omega_a, spec.omega_ap, spec.action);
  const GateDrive drive = spec.drive_for(schedule);
  EvolveResult evolved;
  try {
    evolved = evolve(gate_drive_terms(drive, sp), spec.initial(), schedule.t_f,
                     scan_config(spec, drive));
  } catch (const LeakageError& err) {
    throw LeakageError(err.leakage, err.time, K);
  }
  return trace_over_spin(evolved.state);
}

SwapTrace swap_trace(const ScanSpec& spec, int K, int samples) {
  spec.validate();
  if (spec.kind != InteractionKind::BeamSplitter ||
      spec.initial_state != InitialStatePreset::DownSingleJ) {
    throw std::invalid_argument("swap_trace: needs a beam-splitter spec starting from |down>|1,0>");
  }
  const SpaceDescriptor sp = spec.space();
  const ScheduleSolution schedule =
      solve_schedule(2, K, spec.omega_a, spec.omega_ap, spec.action);
  const GateDrive drive = spec.drive_for(schedule);
  PropagationConfig cfg = scan_config(spec, drive);
  cfg.trajectory_samples = samples;

  EvolveResult evolved;
  try {
    evolved = evolve(gate_drive_terms(drive, sp), spec.initial(), schedule.t_f, cfg);
  } catch (const LeakageError& err) {
    throw LeakageError(err.leakage, err.time, K);
  }

  SwapTrace trace;
  const int n1 = sp.fock_cutoffs[1];
  for (size_t i = 0; i < evolved.trajectory.times.size(); ++i) {
    const Eigen::VectorXd p = trace_over_spin(evolved.trajectory.states[i]);
    trace.times.push_back(evolved.trajectory.times[i]);
    trace.p10.push_back(p(1 * n1 + 0));
    trace.p01.push_back(p(0 * n1 + 1));
  }
  return trace;
}

}  // namespace spinmotion
