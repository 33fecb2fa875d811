#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spinmotion {

using Complex = std::complex<double>;

enum class PauliAxis { X, Y, Z };

char axis_name(PauliAxis axis);
PauliAxis axis_from_name(char name);

/// Truncated spin (x) Fock product space shared by all operators and states.
///
/// Basis ordering is fixed so that serialized states are portable:
/// the spin index varies slowest, then mode 0, then mode 1 (row-major over
/// the product), i.e. index = (spin * N0 + n0) * N1 + n1.  The spin basis is
/// ordered (|down>, |up>), so sigma_z = diag(-1, +1).
struct SpaceDescriptor {
  int spin_dim = 2;
  std::vector<int> fock_cutoffs;  // per-mode cutoff N_j, Fock basis |0 .. N_j-1>

  static SpaceDescriptor single_mode(int cutoff);
  static SpaceDescriptor two_mode(int cutoff_j, int cutoff_jp);

  int mode_count() const { return static_cast<int>(fock_cutoffs.size()); }
  Eigen::Index dim() const;
  void validate() const;  // throws std::invalid_argument on a malformed space

  bool operator==(const SpaceDescriptor&) const = default;
};

/// Flat basis index for |spin> |n0> (|n1>).  Mode occupation defaults cover
/// the single-mode case.
Eigen::Index basis_index(const SpaceDescriptor& space, int spin, int n0, int n1 = 0);

/// Dense complex matrix on a declared space; the universal currency for
/// Hamiltonians and propagators.
struct Operator {
  SpaceDescriptor space;
  Eigen::MatrixXcd matrix;
};

/// Normalized complex amplitude vector on a declared space.
struct StateVector {
  SpaceDescriptor space;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

/// Builds a state from raw amplitudes, normalizing them.  Throws on a zero
/// vector or a space/size mismatch.
StateVector make_state(const SpaceDescriptor& space, Eigen::VectorXcd amplitudes);

/// |spin>|n0>(|n1>) product basis state.
StateVector basis_state(const SpaceDescriptor& space, int spin, int n0, int n1 = 0);

// sigma_axis (x) identity on all modes.
Operator pauli(PauliAxis axis, const SpaceDescriptor& space);

// Spin identity (x) lowering operator on the chosen mode: a|n> = sqrt(n)|n-1>.
Operator annihilate(int mode, const SpaceDescriptor& space);
Operator create(int mode, const SpaceDescriptor& space);

Operator identity(const SpaceDescriptor& space);

Operator dagger(const Operator& a);
Operator commutator(const Operator& a, const Operator& b);

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(Complex scale, const Operator& a);
Operator operator*(double scale, const Operator& a);

bool is_hermitian(const Operator& a, double tol = 1e-12);
bool is_unitary(const Operator& a, double tol = 1e-10);

/// Matrix exponential (scaling-and-squaring).  Throws on non-finite input.
Operator expm(const Operator& a);

/// Probabilities over the Fock product basis after tracing out the spin,
/// ordered with mode 0 slowest (matching the basis ordering).  Sums to 1 for
/// a normalized state.
Eigen::VectorXd trace_over_spin(const StateVector& psi);

/// Population in the top two Fock levels of any mode; the truncation-validity
/// diagnostic used by the propagators.
double top_level_population(const StateVector& psi);
double top_level_population(const SpaceDescriptor& space, const Eigen::VectorXcd& amplitudes);

}  // namespace spinmotion
