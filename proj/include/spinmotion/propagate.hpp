#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "spinmotion/hilbert.hpp"

namespace spinmotion {

/// One additive piece of a time-dependent Hamiltonian: coeff(t) * op.
/// The propagators cache the nonzero pattern of each op, so drives built from
/// ladder operators cost O(dim) per application instead of O(dim^2).
struct HamiltonianTerm {
  Eigen::MatrixXcd op;
  std::function<Complex(double)> coeff;
};

std::vector<HamiltonianTerm> constant_term(const Operator& h);

/// Materializes a term list into a dense matrix at time t (diagnostics/tests).
Eigen::MatrixXcd assemble(const std::vector<HamiltonianTerm>& terms, double t);

struct PropagationConfig {
  int steps_per_period = 200;      // >= 50
  double period = 0;               // oscillation period the step count refers to;
                                   // 0 means the whole duration counts as one period
  double leakage_tolerance = 1e-6; // top-two-Fock-level population that aborts the run
  bool richardson_check = false;   // redo with doubled steps and record the overlap change
  int trajectory_samples = 0;      // > 0: record roughly this many intermediate states
};

struct Trajectory {
  std::vector<double> times;
  std::vector<StateVector> states;
};

struct EvolveResult {
  StateVector state;
  double norm_drift = 0;         // accumulated per-step renormalization
  double max_leakage = 0;        // max over steps of the top-two-level population
  double richardson_delta = -1;  // 1 - |<psi_h|psi_{h/2}>| when richardson_check is on
  Trajectory trajectory;
};

class LeakageError : public std::runtime_error {
 public:
  LeakageError(double leakage, double time, int iteration_hint);
  double leakage;
  double time;
  int iteration_hint;  // scan iteration count K when known, else -1
};

/// Solves i d|psi>/dt = H(t)|psi> (hbar = 1) with fixed-step classical RK4.
/// The state is renormalized each step; the accumulated drift is recorded,
/// not hidden.  Throws LeakageError when the top two Fock levels of any mode
/// exceed cfg.leakage_tolerance.
EvolveResult evolve(const std::vector<HamiltonianTerm>& terms, const StateVector& psi0,
                    double t_f, const PropagationConfig& cfg);
EvolveResult evolve(const std::function<Eigen::MatrixXcd(double)>& hamiltonian,
                    const StateVector& psi0, double t_f, const PropagationConfig& cfg);

/// Column-by-column time propagator (no per-column renormalization).
Operator propagator(const std::vector<HamiltonianTerm>& terms, const SpaceDescriptor& space,
                    double t_f, const PropagationConfig& cfg);
Operator propagator(const std::function<Eigen::MatrixXcd(double)>& hamiltonian,
                    const SpaceDescriptor& space, double t_f, const PropagationConfig& cfg);

/// k-th Magnus term of the propagator exponent (k = 1, 2, 3), evaluated by
/// composite Gauss-Legendre quadrature with points_per_period nodes (>= 64)
/// on each of the `periods` equal subdivisions of [0, t_f].  Returns the
/// exponent contribution, anti-Hermitian for Hermitian input.
Operator magnus_term(int k, const std::function<Eigen::MatrixXcd(double)>& hamiltonian,
                     const SpaceDescriptor& space, double t_f, int periods,
                     int points_per_period = 64);

/// |<target|psi>|^2.
double fidelity(const StateVector& psi, const StateVector& target);

}  // namespace spinmotion
