#include "spinmotion/laserfree.hpp"

#include <cmath>
#include <stdexcept>

namespace spinmotion {

namespace {
const Complex kI(0.0, 1.0);
}

void RampProfile::validate() const {
  if (duration < 0) throw std::invalid_argument("RampProfile: duration must be >= 0");
  if (shape == Shape::SineSquared && window > 0 && window < 2 * duration) {
    throw std::invalid_argument("RampProfile: window shorter than rise plus fall");
  }
}

void LaserFreeDrive::validate(double min_ratio) const {
  ramp.validate();
  if (!(delta_mu > 0)) throw std::invalid_argument("LaserFreeDrive: delta must be positive");
  if (gradient_rabi.empty() || gradient_rabi.size() > 2 ||
      gradient_rabi.size() != mode_freqs.size()) {
    throw std::invalid_argument("LaserFreeDrive: need per-mode gradient rates and frequencies");
  }
  for (double w : mode_freqs) {
    if (!(w > 0)) throw std::invalid_argument("LaserFreeDrive: mode frequencies must be positive");
  }
  for (double g : gradient_rabi) {
    if (g != 0.0 && delta_mu / std::abs(g) < min_ratio) {
      throw std::invalid_argument(
          "LaserFreeDrive: delta / Omega_g = " + std::to_string(delta_mu / std::abs(g)) +
          " violates the sideband separation (need >= " + std::to_string(min_ratio) + ")");
    }
  }
}

double microwave_envelope(const LaserFreeDrive& drive, double t) {
  const RampProfile& ramp = drive.ramp;
  if (ramp.shape == RampProfile::Shape::None || ramp.duration == 0.0) return drive.omega_mu;
  double shape = 1.0;
  if (t < 0.0) {
    shape = 0.0;
  } else if (t < ramp.duration) {
    const double s = std::sin(0.5 * M_PI * t / ramp.duration);
    shape = s * s;
  } else if (ramp.window > 0 && t > ramp.window - ramp.duration) {
    if (t >= ramp.window) {
      shape = 0.0;
    } else {
      const double s = std::sin(0.5 * M_PI * (ramp.window - t) / ramp.duration);
      shape = s * s;
    }
  }
  return drive.omega_mu * shape;
}

std::vector<HamiltonianTerm> lab_terms(const LaserFreeDrive& drive,
                                       const SpaceDescriptor& space) {
  drive.validate();
  if (static_cast<int>(drive.mode_freqs.size()) != space.mode_count()) {
    throw std::invalid_argument("lab_terms: drive modes do not match the space");
  }
  std::vector<HamiltonianTerm> terms;
  terms.push_back({pauli(PauliAxis::X, space).matrix, [drive](double t) {
                     return Complex(2.0 * microwave_envelope(drive, t) *
                                    std::cos(drive.delta_mu * t));
                   }});
  const Eigen::MatrixXcd sz = pauli(PauliAxis::Z, space).matrix;
  for (int j = 0; j < space.mode_count(); ++j) {
    const Eigen::MatrixXcd za = sz * annihilate(j, space).matrix;
    const double rabi = drive.gradient_rabi[j];
    const double wj = drive.mode_freqs[j];
    const double wg = drive.omega_g;
    terms.push_back({za, [rabi, wj, wg](double t) {
                       return 2.0 * rabi * std::cos(wg * t) * std::exp(-kI * wj * t);
                     }});
    terms.push_back({za.adjoint(), [rabi, wj, wg](double t) {
                       return 2.0 * rabi * std::cos(wg * t) * std::exp(kI * wj * t);
                     }});
  }
  return terms;
}

Operator lab_hamiltonian(const LaserFreeDrive& drive, const SpaceDescriptor& space, double t) {
  return Operator{space, assemble(lab_terms(drive, space), t)};
}

Operator frame_transform(const LaserFreeDrive& drive, const SpaceDescriptor& space, double t) {
  const double angle =
      2.0 * microwave_envelope(drive, t) * std::sin(drive.delta_mu * t) / drive.delta_mu;
  return expm(Operator{space, (-kI * angle) * pauli(PauliAxis::X, space).matrix});
}

std::vector<HamiltonianTerm> interaction_terms(const LaserFreeDrive& drive,
                                               const SpaceDescriptor& space, int m_max) {
  drive.validate();
  if (m_max < 1) throw std::invalid_argument("interaction_terms: m_max must be >= 1");
  if (static_cast<int>(drive.mode_freqs.size()) != space.mode_count()) {
    throw std::invalid_argument("interaction_terms: drive modes do not match the space");
  }

  // Spin weights of the frame-transformed gradient coupling.  The Bessel
  // argument follows the ramped microwave envelope.
  auto z_weight = [drive, m_max](double t) {
    const double z = 4.0 * microwave_envelope(drive, t) / drive.delta_mu;
    double w = std::cyl_bessel_j(0, std::abs(z));
    for (int m = 1; 2 * m <= m_max; ++m) {
      w += 2.0 * std::cyl_bessel_j(2 * m, std::abs(z)) * std::cos(2 * m * drive.delta_mu * t);
    }
    return w;
  };
  auto y_weight = [drive, m_max](double t) {
    const double z = 4.0 * microwave_envelope(drive, t) / drive.delta_mu;
    const double sz = z < 0 ? -1.0 : 1.0;  // J_odd is odd in its argument
    double w = 0.0;
    for (int m = 1; 2 * m - 1 <= m_max; ++m) {
      w += 2.0 * sz * std::cyl_bessel_j(2 * m - 1, std::abs(z)) *
           std::sin((2 * m - 1) * drive.delta_mu * t);
    }
    return w;
  };

  std::vector<HamiltonianTerm> terms;
  const Eigen::MatrixXcd sz = pauli(PauliAxis::Z, space).matrix;
  const Eigen::MatrixXcd sy = pauli(PauliAxis::Y, space).matrix;
  for (int j = 0; j < space.mode_count(); ++j) {
    const double rabi = drive.gradient_rabi[j];
    const double wj = drive.mode_freqs[j];
    const double wg = drive.omega_g;
    auto lower = [rabi, wj, wg](double t) {
      return 2.0 * rabi * std::cos(wg * t) * std::exp(-kI * wj * t);
    };
    auto raise = [rabi, wj, wg](double t) {
      return 2.0 * rabi * std::cos(wg * t) * std::exp(kI * wj * t);
    };
    const Eigen::MatrixXcd za = sz * annihilate(j, space).matrix;
    const Eigen::MatrixXcd ya = sy * annihilate(j, space).matrix;
    terms.push_back({za, [lower, z_weight](double t) { return lower(t) * z_weight(t); }});
    terms.push_back({za.adjoint(), [raise, z_weight](double t) { return raise(t) * z_weight(t); }});
    terms.push_back({ya, [lower, y_weight](double t) { return lower(t) * y_weight(t); }});
    terms.push_back({ya.adjoint(), [raise, y_weight](double t) { return raise(t) * y_weight(t); }});
  }
  return terms;
}

Operator interaction_hamiltonian(const LaserFreeDrive& drive, const SpaceDescriptor& space,
                                 double t, int m_max) {
  return Operator{space, assemble(interaction_terms(drive, space, m_max), t)};
}

int default_m_max(double bessel_argument, double drop_tolerance) {
  const double z = std::abs(bessel_argument);
  for (int m = 1; m < 200; ++m) {
    if (std::abs(std::cyl_bessel_j(m, z)) < drop_tolerance) return m;
  }
  return 200;
}

SidebandError::SidebandError(double delta_, double omega_g_)
    : std::runtime_error("sideband solution is nonphysical: delta = " + std::to_string(delta_) +
                         ", omega_g = " + std::to_string(omega_g_)),
      delta(delta_),
      omega_g(omega_g_) {}

SidebandSolution solve_sidebands(double omega_j, double omega_jp, double Delta, int n) {
  if (!(omega_j > 0) || !(omega_jp > 0)) {
    throw std::invalid_argument("solve_sidebands: mode frequencies must be positive");
  }
  // Adding the two conditions eliminates w_g:
  //   5 delta = w_j + w_j' - (1 + n) D,  w_g = w_j - D - 2 delta.
  SidebandSolution sol;
  sol.delta = (omega_j + omega_jp - (1.0 + n) * Delta) / 5.0;
  sol.omega_g = omega_j - Delta - 2.0 * sol.delta;
  if (!(sol.delta > 0) || !(sol.omega_g > 0)) throw SidebandError(sol.delta, sol.omega_g);
  return sol;
}

double mode_freq_for_delta(double delta, double Delta, int n) {
  return (5.0 * delta + (1.0 + n) * Delta) / 2.0;
}

GateDrive effective_gate_drive(const LaserFreeDrive& drive, const SidebandSolution& solution,
                               double Delta, int n, int mode_j, int mode_jp) {
  if (mode_j >= static_cast<int>(drive.gradient_rabi.size()) ||
      mode_jp >= static_cast<int>(drive.gradient_rabi.size())) {
    throw std::invalid_argument("effective_gate_drive: mode index outside the drive");
  }
  const double z = 4.0 * drive.omega_mu / solution.delta;
  GateDrive gate;
  gate.omega_a = drive.gradient_rabi[mode_j] * std::cyl_bessel_j(2, std::abs(z));
  gate.omega_ap = drive.gradient_rabi[mode_jp] * std::cyl_bessel_j(3, std::abs(z));
  gate.axis_a = PauliAxis::Z;
  gate.axis_ap = PauliAxis::Y;
  gate.mode_j = mode_j;
  gate.mode_jp = mode_jp;
  gate.delta = Delta;
  gate.n = n;
  gate.phi = M_PI / 2.0;
  return gate;
}

double bessel_product_peak(double lo, double hi, int grid) {
  double best_z = lo;
  double best = -1.0;
  for (int i = 1; i <= grid; ++i) {
    const double z = lo + (hi - lo) * i / grid;
    const double p = std::cyl_bessel_j(2, z) * std::cyl_bessel_j(3, z);
    if (p > best) {
      best = p;
      best_z = z;
    }
  }
  return best_z;
}

}  // namespace spinmotion
