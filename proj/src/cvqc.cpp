#include "spinmotion/cvqc.hpp"

#include <cmath>
#include <stdexcept>

namespace spinmotion {

namespace {
const Complex kI(0.0, 1.0);

Operator exp_factor(const Operator& h, double dt, int sign) {
  return expm(Operator{h.space, (-kI * dt * static_cast<double>(sign)) * h.matrix});
}
}  // namespace

Operator linear_hamiltonian(const LinearDrive& drive, const SpaceDescriptor& space) {
  if (drive.mode < 0 || drive.mode >= space.mode_count()) {
    throw std::invalid_argument("linear_hamiltonian: mode index outside the space");
  }
  const Eigen::MatrixXcd a = annihilate(drive.mode, space).matrix;
  const Eigen::MatrixXcd quad =
      a.adjoint() * std::exp(kI * drive.phi) + a * std::exp(-kI * drive.phi);
  return Operator{space, drive.omega * (pauli(drive.axis, space).matrix * quad)};
}

Operator gadget(const Operator& h, const Operator& hp, double dt) {
  if (!(h.space == hp.space)) {
    throw std::invalid_argument("gadget: operators live on different spaces");
  }
  return Operator{h.space, exp_factor(h, dt, 1).matrix * exp_factor(hp, dt, 1).matrix *
                               exp_factor(h, dt, -1).matrix * exp_factor(hp, dt, -1).matrix};
}

Operator second_order_gate(const LinearDrive& d, const LinearDrive& dp, double dt,
                           const SpaceDescriptor& space) {
  if (d.axis == dp.axis) {
    throw std::invalid_argument("second_order_gate: the two spin axes must differ");
  }
  return gadget(linear_hamiltonian(d, space), linear_hamiltonian(dp, space), dt);
}

Operator cubic_phase_gate(double dt, double omega, int mode, const SpaceDescriptor& space) {
  return compile(cubic_phase_schedule(dt, omega, mode), space);
}

int GadgetSchedule::depth() const {
  int deepest = 1;
  for (const auto& factor : factors) {
    if (const auto* sub = std::get_if<std::shared_ptr<GadgetSchedule>>(&factor.source)) {
      deepest = std::max(deepest, 1 + (*sub)->depth());
    }
  }
  return deepest;
}

void GadgetSchedule::validate() const {
  if (factors.empty()) throw std::invalid_argument("GadgetSchedule: empty factor list");
  if (depth() > 2) throw std::invalid_argument("GadgetSchedule: nesting depth must be <= 2");
  for (const auto& factor : factors) {
    if (!(factor.dt > 0)) throw std::invalid_argument("GadgetSchedule: durations must be positive");
    if (factor.sign != 1 && factor.sign != -1) {
      throw std::invalid_argument("GadgetSchedule: factor sign must be +1 or -1");
    }
    if (const auto* sub = std::get_if<std::shared_ptr<GadgetSchedule>>(&factor.source)) {
      (*sub)->validate();
    }
  }
}

GadgetSchedule cubic_phase_schedule(double dt, double omega, int mode) {
  const LinearDrive x_drive{0.0, PauliAxis::X, mode, omega};
  const LinearDrive y_drive{0.0, PauliAxis::Y, mode, omega};

  auto inner = std::make_shared<GadgetSchedule>();
  inner->factors = {
      {x_drive, 1, dt},
      {y_drive, 1, dt},
      {x_drive, -1, dt},
      {y_drive, -1, dt},
  };

  // The second-order factor enters once forward and once with every
  // Hamiltonian negated and the factor order reversed (a spin-echo sign
  // flip), which is its exact inverse.  Reusing it with the forward order
  // leaves a third-order residual that would mask the cubic target.
  GadgetSchedule schedule;
  schedule.factors = {
      {x_drive, 1, dt},
      {inner, 1, dt},
      {x_drive, -1, dt},
      {inner, -1, dt},
  };
  return schedule;
}

Operator compile(const GadgetSchedule& schedule, const SpaceDescriptor& space) {
  schedule.validate();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(space.dim(), space.dim());
  for (const auto& factor : schedule.factors) {
    if (const auto* drive = std::get_if<LinearDrive>(&factor.source)) {
      u *= exp_factor(linear_hamiltonian(*drive, space), factor.dt, factor.sign).matrix;
    } else {
      const auto& sub = std::get<std::shared_ptr<GadgetSchedule>>(factor.source);
      const Eigen::MatrixXcd inner = compile(*sub, space).matrix;
      if (factor.sign == 1) {
        u *= inner;
      } else {
        u *= inner.adjoint();
      }
    }
  }
  return Operator{space, std::move(u)};
}

}  // namespace spinmotion
