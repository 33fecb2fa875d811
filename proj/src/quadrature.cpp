#include "spinmotion/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace spinmotion {

void gauss_legendre(int m, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
  if (m < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  nodes.resize(m);
  weights.resize(m);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    // Chebyshev estimate refined by Newton iteration on P_m.
    double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes(i) = -x;
    nodes(m - 1 - i) = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights(i) = w;
    weights(m - 1 - i) = w;
  }
}

namespace {

// Lagrange cardinal polynomial l_i over the given nodes, evaluated at x.
double cardinal(const Eigen::VectorXd& nodes, int i, double x) {
  double v = 1.0;
  for (int j = 0; j < nodes.size(); ++j) {
    if (j == i) continue;
    v *= (x - nodes(j)) / (nodes(i) - nodes(j));
  }
  return v;
}

}  // namespace

PanelRule make_panel_rule(int m) {
  PanelRule rule;
  gauss_legendre(m, rule.nodes, rule.weights);
  rule.prefix.resize(m, m);

  // The cardinals have degree m-1, so a fine inner Gauss rule integrates the
  // partial intervals exactly.
  Eigen::VectorXd inner_nodes, inner_weights;
  gauss_legendre(std::max(16, m), inner_nodes, inner_weights);

  for (int k = 0; k < m; ++k) {
    const double a = -1.0;
    const double b = rule.nodes(k);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    for (int i = 0; i < m; ++i) {
      double acc = 0.0;
      for (int q = 0; q < inner_nodes.size(); ++q) {
        acc += inner_weights(q) * cardinal(rule.nodes, i, mid + half * inner_nodes(q));
      }
      rule.prefix(k, i) = half * acc;
    }
  }
  return rule;
}

}  // namespace spinmotion
