#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "spinmotion/hilbert.hpp"

namespace spinmotion {

/// A single spin-dependent displacement drive,
///   H(phi, a, j) = W s_a (a_j^dag e^{i phi} + a_j e^{-i phi}).
struct LinearDrive {
  double phi = 0.0;
  PauliAxis axis = PauliAxis::X;
  int mode = 0;
  double omega = 1.0;
};

Operator linear_hamiltonian(const LinearDrive& drive, const SpaceDescriptor& space);

/// Four-factor commutator sequence
///   e^{-iH dt} e^{-iH' dt} e^{iH dt} e^{iH' dt} = e^{dt^2 [H', H]} + O((dt W)^3);
/// exactly unitary for any dt.
Operator gadget(const Operator& h, const Operator& hp, double dt);

/// gadget of two linear drives with distinct spin axes; on a sigma_a''
/// eigenspace its exponent is the product of the two displacement quadratures.
Operator second_order_gate(const LinearDrive& d, const LinearDrive& dp, double dt,
                           const SpaceDescriptor& space);

/// Nested gadget whose restriction to a sigma_y eigenstate approaches
/// exp(+/- 4i dt^3 W^3 (a^dag + a)^3); the sign flip required on the inner
/// factor is applied by negating its Hamiltonian.
Operator cubic_phase_gate(double dt, double omega, int mode, const SpaceDescriptor& space);

/// Explicit factor sequence for gadget-style constructions: each factor is a
/// linear drive or a nested schedule, applied for `dt` with the Hamiltonian
/// scaled by `sign`.
struct GadgetSchedule;

struct GadgetFactor {
  std::variant<LinearDrive, std::shared_ptr<GadgetSchedule>> source;
  int sign = 1;
  double dt = 0.0;
};

struct GadgetSchedule {
  std::vector<GadgetFactor> factors;

  int depth() const;
  void validate() const;  // positive durations, nesting depth <= 2
};

/// The schedule cubic_phase_gate runs.
GadgetSchedule cubic_phase_schedule(double dt, double omega, int mode);

Operator compile(const GadgetSchedule& schedule, const SpaceDescriptor& space);

}  // namespace spinmotion
