#pragma once

#include <Eigen/Dense>

#include "sofw/net_model.hpp"

namespace sofw {

/// BPR travel time t(f) = t0 * (1 + b * (f / cap)^p). Integer exponents are
/// evaluated by repeated multiplication, fractional ones via std::pow.
double link_travel_time(const LinkParams& link, double flow);

/// Per-link travel times under `flows`; this is the gradient of the potential.
Eigen::VectorXd travel_times(const Network& net, const Eigen::Ref<const Eigen::VectorXd>& flows);

/// Closed form of sum_e integral_0^{f_e} t_e(z) dz, accumulated in ascending
/// link-id order.
double beckmann_objective(const Network& net, const Eigen::Ref<const Eigen::VectorXd>& flows);

inline Eigen::VectorXd gradient(const Network& net,
                                const Eigen::Ref<const Eigen::VectorXd>& flows) {
  return travel_times(net, flows);
}

/// Derivative of gamma -> Psi(f + gamma d), i.e. <tau(f + gamma d), d>.
double directional_derivative(const Network& net, const Eigen::Ref<const Eigen::VectorXd>& flows,
                              const Eigen::Ref<const Eigen::VectorXd>& direction, double gamma);

/// Exact line search on [0,1] along `direction`: bisection on the directional
/// derivative, at most 64 halvings, stopping once |phi'(gamma)| <=
/// tol * |phi'(0)|. Returns a boundary value when phi' does not change sign.
/// Requires `flows` and `flows + direction` to be componentwise nonnegative.
double line_search(const Network& net, const Eigen::Ref<const Eigen::VectorXd>& flows,
                   const Eigen::Ref<const Eigen::VectorXd>& direction, double tol = 1e-10);

}  // namespace sofw
