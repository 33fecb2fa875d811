#pragma once

#include <Eigen/Dense>

namespace spinmotion {

/// Gauss-Legendre rule on [-1, 1] extended with prefix integrals: prefix(k, i)
/// is the exact integral of the i-th Lagrange cardinal polynomial over
/// [-1, node(k)], so running integrals of a panel-sampled integrand are linear
/// combinations of its node values.
struct PanelRule {
  Eigen::VectorXd nodes;    // ascending in (-1, 1)
  Eigen::VectorXd weights;  // full-panel weights
  Eigen::MatrixXd prefix;   // prefix(k, i) = int_{-1}^{x_k} l_i(x) dx
};

/// Nodes and weights of the m-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int m, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

PanelRule make_panel_rule(int m);

}  // namespace spinmotion
