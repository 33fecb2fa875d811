#include "spinmotion/hilbert.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace spinmotion {

namespace {
const Complex kI(0.0, 1.0);

void require_same_space(const Operator& a, const Operator& b, const char* what) {
  if (!(a.space == b.space)) {
    throw std::invalid_argument(std::string(what) + ": operators live on different spaces");
  }
}
}  // namespace

char axis_name(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X: return 'x';
    case PauliAxis::Y: return 'y';
    case PauliAxis::Z: return 'z';
  }
  return '?';
}

PauliAxis axis_from_name(char name) {
  switch (name) {
    case 'x': case 'X': return PauliAxis::X;
    case 'y': case 'Y': return PauliAxis::Y;
    case 'z': case 'Z': return PauliAxis::Z;
  }
  throw std::invalid_argument(std::string("unknown Pauli axis '") + name + "'");
}

SpaceDescriptor SpaceDescriptor::single_mode(int cutoff) {
  SpaceDescriptor s;
  s.fock_cutoffs = {cutoff};
  s.validate();
  return s;
}

SpaceDescriptor SpaceDescriptor::two_mode(int cutoff_j, int cutoff_jp) {
  SpaceDescriptor s;
  s.fock_cutoffs = {cutoff_j, cutoff_jp};
  s.validate();
  return s;
}

Eigen::Index SpaceDescriptor::dim() const {
  Eigen::Index d = spin_dim;
  for (int n : fock_cutoffs) d *= n;
  return d;
}

void SpaceDescriptor::validate() const {
  if (spin_dim != 2) throw std::invalid_argument("spin_dim must be 2");
  if (fock_cutoffs.empty() || fock_cutoffs.size() > 2) {
    throw std::invalid_argument("mode_count must be 1 or 2");
  }
  for (int n : fock_cutoffs) {
    if (n < 2) throw std::invalid_argument("every Fock cutoff must be >= 2");
  }
}

Eigen::Index basis_index(const SpaceDescriptor& space, int spin, int n0, int n1) {
  const int N0 = space.fock_cutoffs[0];
  const int N1 = space.mode_count() == 2 ? space.fock_cutoffs[1] : 1;
  if (spin < 0 || spin >= space.spin_dim || n0 < 0 || n0 >= N0 || n1 < 0 || n1 >= N1) {
    throw std::out_of_range("basis_index: label outside the truncated space");
  }
  return (static_cast<Eigen::Index>(spin) * N0 + n0) * N1 + n1;
}

StateVector make_state(const SpaceDescriptor& space, Eigen::VectorXcd amplitudes) {
  space.validate();
  if (amplitudes.size() != space.dim()) {
    throw std::invalid_argument("make_state: amplitude count does not match the space dimension");
  }
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("make_state: norm must be positive and finite");
  }
  amplitudes /= n;
  return StateVector{space, std::move(amplitudes)};
}

StateVector basis_state(const SpaceDescriptor& space, int spin, int n0, int n1) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(space.dim());
  v(basis_index(space, spin, n0, n1)) = 1.0;
  return StateVector{space, std::move(v)};
}

namespace {

Eigen::Matrix2cd pauli_matrix(PauliAxis axis) {
  // Basis order (|down>, |up>); the algebra sigma_a sigma_b = i eps_abc sigma_c
  // is unchanged by the relabeling.
  Eigen::Matrix2cd m;
  switch (axis) {
    case PauliAxis::X: m << 0, 1, 1, 0; break;
    case PauliAxis::Y: m << 0, kI, -kI, 0; break;
    case PauliAxis::Z: m << -1, 0, 0, 1; break;
  }
  return m;
}

Eigen::MatrixXcd lowering_matrix(int cutoff) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

Operator pauli(PauliAxis axis, const SpaceDescriptor& space) {
  space.validate();
  Eigen::MatrixXcd m = pauli_matrix(axis);
  for (int cutoff : space.fock_cutoffs) {
    m = kron(m, Eigen::MatrixXcd::Identity(cutoff, cutoff));
  }
  return Operator{space, std::move(m)};
}

Operator annihilate(int mode, const SpaceDescriptor& space) {
  space.validate();
  if (mode < 0 || mode >= space.mode_count()) {
    throw std::invalid_argument("annihilate: mode index outside the space");
  }
  Eigen::MatrixXcd m = Eigen::Matrix2cd::Identity();
  for (int j = 0; j < space.mode_count(); ++j) {
    const int cutoff = space.fock_cutoffs[j];
    m = kron(m, j == mode ? lowering_matrix(cutoff)
                          : Eigen::MatrixXcd::Identity(cutoff, cutoff));
  }
  return Operator{space, std::move(m)};
}

Operator create(int mode, const SpaceDescriptor& space) { return dagger(annihilate(mode, space)); }

Operator identity(const SpaceDescriptor& space) {
  space.validate();
  return Operator{space, Eigen::MatrixXcd::Identity(space.dim(), space.dim())};
}

Operator dagger(const Operator& a) { return Operator{a.space, a.matrix.adjoint()}; }

Operator commutator(const Operator& a, const Operator& b) {
  require_same_space(a, b, "commutator");
  return Operator{a.space, a.matrix * b.matrix - b.matrix * a.matrix};
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_space(a, b, "operator+");
  return Operator{a.space, a.matrix + b.matrix};
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_space(a, b, "operator-");
  return Operator{a.space, a.matrix - b.matrix};
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_space(a, b, "operator*");
  return Operator{a.space, a.matrix * b.matrix};
}

Operator operator*(Complex scale, const Operator& a) { return Operator{a.space, scale * a.matrix}; }
Operator operator*(double scale, const Operator& a) { return Operator{a.space, scale * a.matrix}; }

bool is_hermitian(const Operator& a, double tol) {
  return (a.matrix - a.matrix.adjoint()).cwiseAbs().maxCoeff() < tol;
}

bool is_unitary(const Operator& a, double tol) {
  const Eigen::MatrixXcd g = a.matrix.adjoint() * a.matrix;
  return (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() < tol;
}

Operator expm(const Operator& a) {
  if (!a.matrix.allFinite()) throw std::invalid_argument("expm: non-finite input");
  return Operator{a.space, a.matrix.exp()};
}

Eigen::VectorXd trace_over_spin(const StateVector& psi) {
  const Eigen::Index fock_dim = psi.space.dim() / psi.space.spin_dim;
  Eigen::VectorXd p = Eigen::VectorXd::Zero(fock_dim);
  for (int s = 0; s < psi.space.spin_dim; ++s) {
    p += psi.amplitudes.segment(s * fock_dim, fock_dim).cwiseAbs2();
  }
  return p;
}

double top_level_population(const SpaceDescriptor& space, const Eigen::VectorXcd& amplitudes) {
  const int N0 = space.fock_cutoffs[0];
  const int N1 = space.mode_count() == 2 ? space.fock_cutoffs[1] : 1;
  double worst = 0.0;
  for (int mode = 0; mode < space.mode_count(); ++mode) {
    const int cutoff = space.fock_cutoffs[mode];
    double pop = 0.0;
    for (int s = 0; s < space.spin_dim; ++s) {
      for (int n0 = 0; n0 < N0; ++n0) {
        for (int n1 = 0; n1 < N1; ++n1) {
          const int n = mode == 0 ? n0 : n1;
          if (n >= cutoff - 2) {
            pop += std::norm(amplitudes[(static_cast<Eigen::Index>(s) * N0 + n0) * N1 + n1]);
          }
        }
      }
    }
    worst = std::max(worst, pop);
  }
  return worst;
}

double top_level_population(const StateVector& psi) {
  return top_level_population(psi.space, psi.amplitudes);
}

}  // namespace spinmotion
