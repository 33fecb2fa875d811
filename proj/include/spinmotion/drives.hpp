#pragma once

#include <utility>
#include <vector>

#include "spinmotion/hilbert.hpp"
#include "spinmotion/propagate.hpp"

namespace spinmotion {

/// Two simultaneous spin-dependent displacement drives with a shared base
/// detuning:
///   H(t) = W_a s_a a_j e^{-i D t} + W_a' s_a' a_j' e^{-i(n D t + phi)} + h.c.
/// All rates are angular frequencies in the dimensionless unit system where
/// the Rabi rate of interest is 1.
struct GateDrive {
  double omega_a = 1.0;           // Rabi rate of the first displacement
  double omega_ap = 1.0;          // Rabi rate of the second displacement
  PauliAxis axis_a = PauliAxis::Y;
  PauliAxis axis_ap = PauliAxis::X;
  int mode_j = 0;
  int mode_jp = 0;
  double delta = 1.0;             // base detuning, > 0
  int n = -1;                     // harmonic of the second drive
  double phi = 0.0;

  double base_period() const;     // t_i = 2 pi / delta
  void validate() const;          // axis_a != axis_ap, delta > 0, n != 0
};

/// The eight cataloged effective interactions, in catalog order.
enum class InteractionKind {
  OneModeSqueeze,
  TwoModeSqueeze,
  NumberShift,
  BeamSplitter,
  Trisqueeze,
  TwoModeTrisqueeze,
  CubicNumber,
  TwoModeCubic,
};

const char* kind_name(InteractionKind kind);
InteractionKind kind_from_name(const std::string& name);

/// Catalog row selected by the drive harmonic and mode coincidence.  Throws
/// on n = 0 and on |n| > 2 (not cataloged).
InteractionKind classify(int n, bool same_mode);

int catalog_harmonic(InteractionKind kind);   // the n column
bool catalog_same_mode(InteractionKind kind); // the j = j' column
bool is_gaussian(InteractionKind kind);
int magnus_order(InteractionKind kind);       // 2 for |n| = 1 rows, 3 for |n| = 2

/// Completes {a, a'} to a right-handed triple: returns (a'', eps_{a a' a''}).
std::pair<PauliAxis, int> third_axis(PauliAxis a, PauliAxis ap);

/// One catalog row with its analytic Rabi rate:
///   order 2: rabi = 2 W_a W_a' / D,  spin axis a'' with the Levi-Civita sign
///   order 3: rabi = 2 W_a' W_a^2 / D^2,  spin axis a', sign +1
struct EffectiveInteraction {
  InteractionKind kind;
  double rabi;
  PauliAxis spin_axis;
  double phi;
  int sign;
  int mode_j;
  int mode_jp;
};

EffectiveInteraction effective_interaction(const GateDrive& drive);

/// The drive Hamiltonian at time t; Hermitian for every t.
Operator gate_hamiltonian(const GateDrive& drive, const SpaceDescriptor& space, double t);

/// The same Hamiltonian as fixed operators with harmonic coefficients, for
/// the structured propagator path.
std::vector<HamiltonianTerm> gate_drive_terms(const GateDrive& drive,
                                              const SpaceDescriptor& space);

/// The cataloged effective Hamiltonian; always Hermitian.
Operator effective_hamiltonian(const EffectiveInteraction& interaction,
                               const SpaceDescriptor& space);

/// exp(-i t_f H_eff), the analytic target the full drive converges to.
Operator effective_propagator(const EffectiveInteraction& interaction, double t_f,
                              const SpaceDescriptor& space);

/// Detuning and duration solving the fixed-action scheduling law.
struct ScheduleSolution {
  double delta;    // solved detuning
  int iterations;  // K
  double t_i;      // base period 2 pi / delta
  double t_f;      // K * t_i
  double action;   // the held-constant product, rabi * t_f
};

/// order 2: 4 pi W_a W_a' K / D^2 = action;  order 3: 4 pi W_a' W_a^2 K / D^3 = action.
ScheduleSolution solve_schedule(int order, int iterations, double omega_a, double omega_ap,
                                double action);

}  // namespace spinmotion
