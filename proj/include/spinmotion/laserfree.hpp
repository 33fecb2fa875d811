#pragma once

#include <string>
#include <vector>

#include "spinmotion/drives.hpp"
#include "spinmotion/hilbert.hpp"
#include "spinmotion/propagate.hpp"

namespace spinmotion {

/// Envelope applied to the microwave pair; the gradient is always on.
struct RampProfile {
  enum class Shape { None, SineSquared };
  Shape shape = Shape::None;
  double duration = 0.0;  // rise (and fall) time
  double window = 0.0;    // total pulse length; 0 means no ramp-down

  void validate() const;
};

/// A single radiofrequency gradient plus a symmetrically detuned microwave
/// pair:
///   H_r(t) = 2 W_mu(t) s_x cos(delta t)
///          + 2 s_z cos(w_g t) sum_j W_gj (a_j e^{-i w_j t} + a_j^dag e^{i w_j t}).
struct LaserFreeDrive {
  double omega_mu = 0.0;              // microwave Rabi rate
  double delta_mu = 1.0;              // microwave detuning delta
  double omega_g = 1.0;               // gradient frequency
  std::vector<double> gradient_rabi;  // W_{g,j} per mode
  std::vector<double> mode_freqs;     // w_j per mode
  RampProfile ramp;

  double bessel_argument() const { return 4.0 * omega_mu / delta_mu; }
  /// Throws unless delta dominates every gradient rate by min_ratio; the
  /// sideband picture assumes that separation.
  void validate(double min_ratio = 20.0) const;
};

/// Ramped microwave rate at time t.
double microwave_envelope(const LaserFreeDrive& drive, double t);

Operator lab_hamiltonian(const LaserFreeDrive& drive, const SpaceDescriptor& space, double t);
std::vector<HamiltonianTerm> lab_terms(const LaserFreeDrive& drive, const SpaceDescriptor& space);

/// Frame transformation exp(-2i W_mu(t) sin(delta t) s_x / delta); unitary,
/// identity whenever sin(delta t) = 0 or the envelope is off.
Operator frame_transform(const LaserFreeDrive& drive, const SpaceDescriptor& space, double t);

/// Microwave-frame Hamiltonian as a Bessel series truncated at m_max:
/// s_z terms weighted by J_0 and J_{2m} cos(2m delta t), s_y terms by
/// J_{2m-1} sin((2m-1) delta t), all multiplying the gradient coupling.
Operator interaction_hamiltonian(const LaserFreeDrive& drive, const SpaceDescriptor& space,
                                 double t, int m_max);
std::vector<HamiltonianTerm> interaction_terms(const LaserFreeDrive& drive,
                                               const SpaceDescriptor& space, int m_max);

/// Smallest order with |J_m(z)| below the drop tolerance.
int default_m_max(double bessel_argument, double drop_tolerance = 1e-6);

struct SidebandSolution {
  double delta;    // microwave detuning
  double omega_g;  // gradient frequency
};

class SidebandError : public std::runtime_error {
 public:
  SidebandError(double delta, double omega_g);
  double delta;
  double omega_g;
};

/// Solves 2 delta = (w_j - w_g) - D and 3 delta = (w_j' + w_g) - n D for
/// (delta, w_g).  Throws SidebandError carrying the computed values when the
/// solution is nonphysical (delta <= 0 or w_g <= 0).
SidebandSolution solve_sidebands(double omega_j, double omega_jp, double Delta, int n);

/// Mode frequency making the single-mode (w_j = w_j') sideband condition hold
/// for a chosen detuning; the inverse used when scanning delta.
double mode_freq_for_delta(double delta, double Delta, int n);

/// The two-tone drive the sideband-tuned system reduces to:
/// W_a = W_gj J_2(4 W_mu/delta) on sigma_z, W_a' = W_gj' J_3 on sigma_y,
/// phi = pi/2.
GateDrive effective_gate_drive(const LaserFreeDrive& drive, const SidebandSolution& solution,
                               double Delta, int n, int mode_j, int mode_jp);

/// argmax of J_2(z) J_3(z) over (lo, hi], by dense grid search.
double bessel_product_peak(double lo = 0.0, double hi = 5.0, int grid = 200000);

}  // namespace spinmotion
