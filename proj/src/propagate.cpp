#include "spinmotion/propagate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinmotion/quadrature.hpp"

namespace spinmotion {

namespace {
const Complex kI(0.0, 1.0);

// Nonzero pattern of one term, cached so each application is O(nnz).
struct CompiledTerm {
  struct Entry {
    Eigen::Index row;
    Eigen::Index col;
    Complex value;
  };
  std::vector<Entry> entries;
  std::function<Complex(double)> coeff;
};

std::vector<CompiledTerm> compile(const std::vector<HamiltonianTerm>& terms) {
  std::vector<CompiledTerm> out;
  out.reserve(terms.size());
  for (const auto& term : terms) {
    CompiledTerm ct;
    ct.coeff = term.coeff;
    for (Eigen::Index j = 0; j < term.op.cols(); ++j) {
      for (Eigen::Index i = 0; i < term.op.rows(); ++i) {
        if (term.op(i, j) != 0.0) ct.entries.push_back({i, j, term.op(i, j)});
      }
    }
    out.push_back(std::move(ct));
  }
  return out;
}

// y = -i H(t) x
void apply_rhs(const std::vector<CompiledTerm>& terms, double t, const Eigen::VectorXcd& x,
               Eigen::VectorXcd& y) {
  y.setZero();
  for (const auto& term : terms) {
    const Complex c = term.coeff(t);
    for (const auto& e : term.entries) y(e.row) += c * e.value * x(e.col);
  }
  y *= -kI;
}

struct GenericRhs {
  const std::function<Eigen::MatrixXcd(double)>* h;
  void operator()(double t, const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const {
    y = -kI * ((*h)(t)*x);
  }
};

int step_count(double t_f, const PropagationConfig& cfg) {
  if (cfg.steps_per_period < 50) {
    throw std::invalid_argument("PropagationConfig: steps_per_period must be >= 50");
  }
  if (t_f < 0) throw std::invalid_argument("evolve: negative duration");
  const double period = cfg.period > 0 ? cfg.period : t_f;
  if (period <= 0) return cfg.steps_per_period;
  return std::max(1, static_cast<int>(std::ceil(t_f / period * cfg.steps_per_period)));
}

template <typename Rhs>
EvolveResult integrate(const Rhs& rhs, const StateVector& psi0, double t_f,
                       const PropagationConfig& cfg, bool renormalize, int steps) {
  const Eigen::Index dim = psi0.amplitudes.size();
  Eigen::VectorXcd psi = psi0.amplitudes;
  Eigen::VectorXcd k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

  EvolveResult result;
  const double h = steps > 0 ? t_f / steps : 0.0;

  int sample_stride = 0;
  if (cfg.trajectory_samples > 0) {
    sample_stride = std::max(1, steps / cfg.trajectory_samples);
    result.trajectory.times.push_back(0.0);
    result.trajectory.states.push_back(psi0);
  }

  for (int s = 0; s < steps; ++s) {
    const double t = s * h;
    rhs(t, psi, k1);
    tmp = psi + (0.5 * h) * k1;
    rhs(t + 0.5 * h, tmp, k2);
    tmp = psi + (0.5 * h) * k2;
    rhs(t + 0.5 * h, tmp, k3);
    tmp = psi + h * k3;
    rhs(t + h, tmp, k4);
    psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    if (renormalize) {
      const double norm = psi.norm();
      result.norm_drift += std::abs(norm - 1.0);
      psi /= norm;
    }

    const double leak = top_level_population(psi0.space, psi);
    result.max_leakage = std::max(result.max_leakage, leak);
    if (leak > cfg.leakage_tolerance) {
      throw LeakageError(leak, t + h, -1);
    }

    if (sample_stride > 0 && ((s + 1) % sample_stride == 0 || s + 1 == steps)) {
      result.trajectory.times.push_back(t + h);
      result.trajectory.states.push_back(StateVector{psi0.space, psi});
    }
  }

  result.state = StateVector{psi0.space, std::move(psi)};
  return result;
}

template <typename Rhs>
EvolveResult run_evolve(const Rhs& rhs, const StateVector& psi0, double t_f,
                        const PropagationConfig& cfg) {
  const int steps = step_count(t_f, cfg);
  EvolveResult result = integrate(rhs, psi0, t_f, cfg, /*renormalize=*/true, steps);
  if (cfg.richardson_check) {
    PropagationConfig fine = cfg;
    fine.richardson_check = false;
    fine.trajectory_samples = 0;
    EvolveResult refined = integrate(rhs, psi0, t_f, fine, true, 2 * steps);
    result.richardson_delta =
        1.0 - std::abs(result.state.amplitudes.dot(refined.state.amplitudes));
  }
  return result;
}

template <typename Rhs>
Operator run_propagator(const Rhs& rhs, const SpaceDescriptor& space, double t_f,
                        const PropagationConfig& cfg) {
  const int steps = step_count(t_f, cfg);
  const Eigen::Index dim = space.dim();
  Eigen::MatrixXcd u(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim);
    e(col) = 1.0;
    StateVector psi0{space, std::move(e)};
    u.col(col) = integrate(rhs, psi0, t_f, cfg, /*renormalize=*/false, steps).state.amplitudes;
  }
  return Operator{space, std::move(u)};
}

}  // namespace

LeakageError::LeakageError(double leakage_, double time_, int iteration_hint_)
    : std::runtime_error("truncated Fock space too small: top-level population " +
                         std::to_string(leakage_) + " at t = " + std::to_string(time_) +
                         (iteration_hint_ >= 0 ? " (K = " + std::to_string(iteration_hint_) + ")"
                                               : std::string())),
      leakage(leakage_),
      time(time_),
      iteration_hint(iteration_hint_) {}

std::vector<HamiltonianTerm> constant_term(const Operator& h) {
  return {HamiltonianTerm{h.matrix, [](double) { return Complex(1.0, 0.0); }}};
}

Eigen::MatrixXcd assemble(const std::vector<HamiltonianTerm>& terms, double t) {
  if (terms.empty()) throw std::invalid_argument("assemble: empty term list");
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(terms.front().op.rows(), terms.front().op.cols());
  for (const auto& term : terms) h += term.coeff(t) * term.op;
  return h;
}

EvolveResult evolve(const std::vector<HamiltonianTerm>& terms, const StateVector& psi0,
                    double t_f, const PropagationConfig& cfg) {
  const auto compiled = compile(terms);
  auto rhs = [&compiled](double t, const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
    apply_rhs(compiled, t, x, y);
  };
  return run_evolve(rhs, psi0, t_f, cfg);
}

EvolveResult evolve(const std::function<Eigen::MatrixXcd(double)>& hamiltonian,
                    const StateVector& psi0, double t_f, const PropagationConfig& cfg) {
  return run_evolve(GenericRhs{&hamiltonian}, psi0, t_f, cfg);
}

Operator propagator(const std::vector<HamiltonianTerm>& terms, const SpaceDescriptor& space,
                    double t_f, const PropagationConfig& cfg) {
  const auto compiled = compile(terms);
  auto rhs = [&compiled](double t, const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
    apply_rhs(compiled, t, x, y);
  };
  return run_propagator(rhs, space, t_f, cfg);
}

Operator propagator(const std::function<Eigen::MatrixXcd(double)>& hamiltonian,
                    const SpaceDescriptor& space, double t_f, const PropagationConfig& cfg) {
  return run_propagator(GenericRhs{&hamiltonian}, space, t_f, cfg);
}

namespace {

// Shared state for the panel sweep: prefix integrals of the integrand chains
// needed by the nested Magnus integrals.
struct MagnusSweep {
  Eigen::MatrixXcd w;      // W(s)  = int H
  Eigen::MatrixXcd a;      // A(s)  = int H W
  Eigen::MatrixXcd b;      // B(s)  = int W H
  Eigen::MatrixXcd c;      // C(s)  = int [H, W]
  Eigen::MatrixXcd term1;  // int [H, C]
  Eigen::MatrixXcd p1;     // int H A
  Eigen::MatrixXcd p4;     // int B H
  Eigen::MatrixXcd p5;     // int H (W_T - W) W
  Eigen::MatrixXcd p6;     // int W (W_T - W) H
};

}  // namespace

Operator magnus_term(int k, const std::function<Eigen::MatrixXcd(double)>& hamiltonian,
                     const SpaceDescriptor& space, double t_f, int periods,
                     int points_per_period) {
  if (k < 1 || k > 3) throw std::invalid_argument("magnus_term: k must be 1, 2 or 3");
  if (periods < 1) throw std::invalid_argument("magnus_term: need at least one period");
  if (points_per_period < 64) {
    throw std::invalid_argument("magnus_term: need at least 64 quadrature points per period");
  }

  const int m = 8;  // nodes per panel
  const int panels = periods * ((points_per_period + m - 1) / m);
  const PanelRule rule = make_panel_rule(m);
  const double h = t_f / panels;
  const Eigen::Index dim = space.dim();

  const Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(dim, dim);

  // k = 3 needs W(t_f) up front for the middle-time patterns.
  Eigen::MatrixXcd w_total = zero;
  if (k == 3) {
    for (int p = 0; p < panels; ++p) {
      for (int i = 0; i < m; ++i) {
        const double t = (p + 0.5 * (rule.nodes(i) + 1.0)) * h;
        w_total += (0.5 * h * rule.weights(i)) * hamiltonian(t);
      }
    }
  }

  MagnusSweep s;
  s.w = s.a = s.b = s.c = s.term1 = s.p1 = s.p4 = s.p5 = s.p6 = zero;

  std::vector<Eigen::MatrixXcd> h_at(m, zero), w_at(m, zero);
  std::vector<Eigen::MatrixXcd> hw(m, zero), wh(m, zero), comm(m, zero);

  Eigen::MatrixXcd integral1 = zero;  // int H
  Eigen::MatrixXcd integral2 = zero;  // int [H, W]

  for (int p = 0; p < panels; ++p) {
    const double t0 = p * h;
    for (int i = 0; i < m; ++i) h_at[i] = hamiltonian(t0 + 0.5 * (rule.nodes(i) + 1.0) * h);

    // Prefix values of W at the panel nodes.
    for (int i = 0; i < m; ++i) {
      w_at[i] = s.w;
      for (int j = 0; j < m; ++j) w_at[i] += (0.5 * h * rule.prefix(i, j)) * h_at[j];
    }

    if (k == 1) {
      for (int i = 0; i < m; ++i) integral1 += (0.5 * h * rule.weights(i)) * h_at[i];
    } else if (k == 2) {
      for (int i = 0; i < m; ++i) {
        integral2 += (0.5 * h * rule.weights(i)) * (h_at[i] * w_at[i] - w_at[i] * h_at[i]);
      }
    } else {
      for (int i = 0; i < m; ++i) {
        hw[i] = h_at[i] * w_at[i];
        wh[i] = w_at[i] * h_at[i];
        comm[i] = hw[i] - wh[i];
      }
      for (int i = 0; i < m; ++i) {
        Eigen::MatrixXcd a_i = s.a, b_i = s.b, c_i = s.c;
        for (int j = 0; j < m; ++j) {
          const double f = 0.5 * h * rule.prefix(i, j);
          a_i += f * hw[j];
          b_i += f * wh[j];
          c_i += f * comm[j];
        }
        const double wgt = 0.5 * h * rule.weights(i);
        const Eigen::MatrixXcd rest = w_total - w_at[i];
        s.term1 += wgt * (h_at[i] * c_i - c_i * h_at[i]);
        s.p1 += wgt * (h_at[i] * a_i);
        s.p4 += wgt * (b_i * h_at[i]);
        s.p5 += wgt * (h_at[i] * rest * w_at[i]);
        s.p6 += wgt * (w_at[i] * rest * h_at[i]);
      }
      for (int j = 0; j < m; ++j) {
        const double f = 0.5 * h * rule.weights(j);
        s.a += f * hw[j];
        s.b += f * wh[j];
        s.c += f * comm[j];
      }
    }

    // Advance the panel-start value of W.
    for (int j = 0; j < m; ++j) s.w += (0.5 * h * rule.weights(j)) * h_at[j];
  }

  Eigen::MatrixXcd exponent;
  if (k == 1) {
    exponent = -kI * integral1;
  } else if (k == 2) {
    exponent = -0.5 * integral2;
  } else {
    exponent = (kI / 6.0) * (s.term1 + s.p1 + s.p4 - s.p5 - s.p6);
  }
  return Operator{space, std::move(exponent)};
}

double fidelity(const StateVector& psi, const StateVector& target) {
  if (!(psi.space == target.space)) {
    throw std::invalid_argument("fidelity: states live on different spaces");
  }
  return std::norm(target.amplitudes.dot(psi.amplitudes));
}

}  // namespace spinmotion
