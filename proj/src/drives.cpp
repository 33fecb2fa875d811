#include "spinmotion/drives.hpp"

#include <cmath>
#include <stdexcept>

namespace spinmotion {

namespace {
const Complex kI(0.0, 1.0);
}

double GateDrive::base_period() const { return 2.0 * M_PI / delta; }

void GateDrive::validate() const {
  if (axis_a == axis_ap) {
    throw std::invalid_argument("GateDrive: the two spin axes must differ");
  }
  if (!(delta > 0)) throw std::invalid_argument("GateDrive: delta must be positive");
  if (n == 0) throw std::invalid_argument("GateDrive: harmonic n must be nonzero");
  if (!(omega_a > 0) || !(omega_ap > 0)) {
    throw std::invalid_argument("GateDrive: Rabi rates must be positive");
  }
}

const char* kind_name(InteractionKind kind) {
  switch (kind) {
    case InteractionKind::OneModeSqueeze: return "one-mode-squeeze";
    case InteractionKind::TwoModeSqueeze: return "two-mode-squeeze";
    case InteractionKind::NumberShift: return "number-shift";
    case InteractionKind::BeamSplitter: return "beam-splitter";
    case InteractionKind::Trisqueeze: return "trisqueeze";
    case InteractionKind::TwoModeTrisqueeze: return "two-mode-trisqueeze";
    case InteractionKind::CubicNumber: return "cubic-number";
    case InteractionKind::TwoModeCubic: return "two-mode-cubic";
  }
  return "?";
}

InteractionKind kind_from_name(const std::string& name) {
  for (int k = 0; k < 8; ++k) {
    const auto kind = static_cast<InteractionKind>(k);
    if (name == kind_name(kind)) return kind;
  }
  throw std::invalid_argument("unknown interaction kind '" + name + "'");
}

InteractionKind classify(int n, bool same_mode) {
  switch (n) {
    case -1: return same_mode ? InteractionKind::OneModeSqueeze : InteractionKind::TwoModeSqueeze;
    case 1: return same_mode ? InteractionKind::NumberShift : InteractionKind::BeamSplitter;
    case -2: return same_mode ? InteractionKind::Trisqueeze : InteractionKind::TwoModeTrisqueeze;
    case 2: return same_mode ? InteractionKind::CubicNumber : InteractionKind::TwoModeCubic;
    default:
      throw std::invalid_argument("harmonic n = " + std::to_string(n) +
                                  " is not cataloged (|n| must be 1 or 2)");
  }
}

int catalog_harmonic(InteractionKind kind) {
  switch (kind) {
    case InteractionKind::OneModeSqueeze:
    case InteractionKind::TwoModeSqueeze: return -1;
    case InteractionKind::NumberShift:
    case InteractionKind::BeamSplitter: return 1;
    case InteractionKind::Trisqueeze:
    case InteractionKind::TwoModeTrisqueeze: return -2;
    case InteractionKind::CubicNumber:
    case InteractionKind::TwoModeCubic: return 2;
  }
  return 0;
}

bool catalog_same_mode(InteractionKind kind) {
  switch (kind) {
    case InteractionKind::OneModeSqueeze:
    case InteractionKind::NumberShift:
    case InteractionKind::Trisqueeze:
    case InteractionKind::CubicNumber: return true;
    default: return false;
  }
}

bool is_gaussian(InteractionKind kind) { return magnus_order(kind) == 2; }

int magnus_order(InteractionKind kind) { return std::abs(catalog_harmonic(kind)) == 1 ? 2 : 3; }

std::pair<PauliAxis, int> third_axis(PauliAxis a, PauliAxis ap) {
  if (a == ap) throw std::invalid_argument("third_axis: axes must differ");
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(ap);
  const int ic = 3 - ia - ib;
  // eps_{a a' a''}: +1 for cyclic (x,y,z) order.
  const int eps = (ib - ia + 3) % 3 == 1 ? 1 : -1;
  return {static_cast<PauliAxis>(ic), eps};
}

EffectiveInteraction effective_interaction(const GateDrive& drive) {
  drive.validate();
  const InteractionKind kind = classify(drive.n, drive.mode_j == drive.mode_jp);
  EffectiveInteraction inter;
  inter.kind = kind;
  inter.phi = drive.phi;
  inter.mode_j = drive.mode_j;
  inter.mode_jp = drive.mode_jp;
  if (magnus_order(kind) == 2) {
    const auto [axis, eps] = third_axis(drive.axis_a, drive.axis_ap);
    inter.spin_axis = axis;
    inter.sign = eps;
    inter.rabi = 2.0 * drive.omega_a * drive.omega_ap / drive.delta;
  } else {
    inter.spin_axis = drive.axis_ap;
    inter.sign = 1;
    inter.rabi = 2.0 * drive.omega_ap * drive.omega_a * drive.omega_a / (drive.delta * drive.delta);
  }
  return inter;
}

Operator gate_hamiltonian(const GateDrive& drive, const SpaceDescriptor& space, double t) {
  return Operator{space, assemble(gate_drive_terms(drive, space), t)};
}

std::vector<HamiltonianTerm> gate_drive_terms(const GateDrive& drive,
                                              const SpaceDescriptor& space) {
  drive.validate();
  if (drive.mode_j >= space.mode_count() || drive.mode_jp >= space.mode_count()) {
    throw std::invalid_argument("gate_drive_terms: drive modes do not fit the space");
  }
  const Eigen::MatrixXcd m_a =
      drive.omega_a * (pauli(drive.axis_a, space) * annihilate(drive.mode_j, space)).matrix;
  const Eigen::MatrixXcd m_ap =
      (drive.omega_ap * std::exp(-kI * drive.phi)) *
      (pauli(drive.axis_ap, space) * annihilate(drive.mode_jp, space)).matrix;

  auto harmonic = [](double freq) {
    return [freq](double t) { return std::exp(kI * freq * t); };
  };

  const double d = drive.delta;
  const double nd = drive.n * drive.delta;
  std::vector<HamiltonianTerm> terms;
  terms.push_back({m_a, harmonic(-d)});
  terms.push_back({m_a.adjoint(), harmonic(d)});
  terms.push_back({m_ap, harmonic(-nd)});
  terms.push_back({m_ap.adjoint(), harmonic(nd)});
  return terms;
}

Operator effective_hamiltonian(const EffectiveInteraction& interaction,
                               const SpaceDescriptor& space) {
  const bool same = catalog_same_mode(interaction.kind);
  if (!same && space.mode_count() < 2) {
    throw std::invalid_argument("effective_hamiltonian: two-mode row needs a two-mode space");
  }
  if (interaction.mode_j >= space.mode_count() || interaction.mode_jp >= space.mode_count() ||
      (same != (interaction.mode_j == interaction.mode_jp))) {
    throw std::invalid_argument("effective_hamiltonian: modes inconsistent with the catalog row");
  }

  const Eigen::MatrixXcd s = pauli(interaction.spin_axis, space).matrix;
  const Eigen::MatrixXcd aj = annihilate(interaction.mode_j, space).matrix;
  const Eigen::MatrixXcd ajp = annihilate(interaction.mode_jp, space).matrix;
  const Eigen::MatrixXcd aj_d = aj.adjoint();
  const Eigen::MatrixXcd ajp_d = ajp.adjoint();
  const Complex ephi = std::exp(kI * interaction.phi);
  const Complex emphi = std::exp(-kI * interaction.phi);
  const double r = interaction.rabi;
  const double eps = interaction.sign;
  const Eigen::Index dim = space.dim();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);

  Eigen::MatrixXcd h;
  switch (interaction.kind) {
    case InteractionKind::OneModeSqueeze:
      h = kI * r * eps * s * (aj_d * aj_d * ephi - aj * aj * emphi);
      break;
    case InteractionKind::TwoModeSqueeze:
      h = kI * r * eps * s * (aj_d * ajp_d * ephi - aj * ajp * emphi);
      break;
    case InteractionKind::NumberShift:
      h = kI * r * eps * s * (aj_d * aj * emphi - aj * aj_d * ephi + std::cos(interaction.phi) * id);
      break;
    case InteractionKind::BeamSplitter:
      h = kI * r * eps * s * (aj_d * ajp * emphi - aj * ajp_d * ephi);
      break;
    case InteractionKind::Trisqueeze:
      h = r * s * (aj_d * aj_d * aj_d * ephi + aj * aj * aj * emphi);
      break;
    case InteractionKind::TwoModeTrisqueeze:
      h = r * s * (aj_d * aj_d * ajp_d * ephi + aj * aj * ajp * emphi);
      break;
    case InteractionKind::CubicNumber:
      h = r * s * (aj * aj_d * aj * ephi + aj_d * aj * aj_d * emphi);
      break;
    case InteractionKind::TwoModeCubic:
      h = r * s * (aj * aj * ajp_d * ephi + aj_d * aj_d * ajp * emphi);
      break;
  }
  return Operator{space, std::move(h)};
}

Operator effective_propagator(const EffectiveInteraction& interaction, double t_f,
                              const SpaceDescriptor& space) {
  const Operator h = effective_hamiltonian(interaction, space);
  return expm(Operator{space, (-kI * t_f) * h.matrix});
}

ScheduleSolution solve_schedule(int order, int iterations, double omega_a, double omega_ap,
                                double action) {
  if (order != 2 && order != 3) throw std::invalid_argument("solve_schedule: order must be 2 or 3");
  if (iterations < 1) throw std::invalid_argument("solve_schedule: need at least one iteration");
  if (!(action > 0) || !(omega_a > 0) || !(omega_ap > 0)) {
    throw std::invalid_argument("solve_schedule: rates and action must be positive");
  }
  ScheduleSolution sol;
  sol.iterations = iterations;
  sol.action = action;
  if (order == 2) {
    sol.delta = std::sqrt(4.0 * M_PI * omega_a * omega_ap * iterations / action);
  } else {
    sol.delta = std::cbrt(4.0 * M_PI * omega_ap * omega_a * omega_a * iterations / action);
  }
  sol.t_i = 2.0 * M_PI / sol.delta;
  sol.t_f = iterations * sol.t_i;
  return sol;
}

}  // namespace spinmotion
