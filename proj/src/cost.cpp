#include "sofw/cost.hpp"

#include <cmath>
#include <string>

#include "sofw/error.hpp"

namespace sofw {
namespace {

// x^p for integral p by binary exponentiation; falls back to std::pow.
double power(double x, double p) {
  if (p == std::floor(p) && p >= 0.0 && p <= 64.0) {
    auto n = static_cast<unsigned>(p);
    double result = 1.0;
    double base = x;
    while (n > 0) {
      if (n & 1u) result *= base;
      base *= base;
      n >>= 1u;
    }
    return result;
  }
  return std::pow(x, p);
}

double travel_time_clamped(const LinkParams& link, double flow) {
  const double f = flow < 0.0 ? 0.0 : flow;
  return link.free_flow_time * (1.0 + link.bpr_coefficient * power(f / link.capacity, link.bpr_power));
}

}  // namespace

double link_travel_time(const LinkParams& link, double flow) {
  if (flow < 0.0) fail(Errc::negative_flow, "flow " + std::to_string(flow));
  const double t = travel_time_clamped(link, flow);
  if (!std::isfinite(t)) fail(Errc::non_finite_value, "travel time overflow at flow " + std::to_string(flow));
  return t;
}

Eigen::VectorXd travel_times(const Network& net, const Eigen::Ref<const Eigen::VectorXd>& flows) {
  if (flows.size() != net.n_links()) fail(Errc::precondition, "flow vector length mismatch");
  Eigen::VectorXd tau(net.n_links());
  for (LinkId e = 0; e < net.n_links(); ++e) tau[e] = link_travel_time(net.link(e), flows[e]);
  return tau;
}

double beckmann_objective(const Network& net, const Eigen::Ref<const Eigen::VectorXd>& flows) {
  if (flows.size() != net.n_links()) fail(Errc::precondition, "flow vector length mismatch");
  double total = 0.0;
  for (LinkId e = 0; e < net.n_links(); ++e) {
    const LinkParams& lp = net.link(e);
    const double f = flows[e];
    if (f < 0.0) fail(Errc::negative_flow, "link " + std::to_string(e) + ": flow " + std::to_string(f));
    total += lp.free_flow_time * f + lp.free_flow_time * lp.bpr_coefficient * lp.capacity /
                                         (lp.bpr_power + 1.0) * power(f / lp.capacity, lp.bpr_power + 1.0);
  }
  if (!std::isfinite(total)) fail(Errc::non_finite_value, "objective overflow");
  return total;
}

double directional_derivative(const Network& net, const Eigen::Ref<const Eigen::VectorXd>& flows,
                              const Eigen::Ref<const Eigen::VectorXd>& direction, double gamma) {
  double acc = 0.0;
  for (LinkId e = 0; e < net.n_links(); ++e) {
    const double d = direction[e];
    if (d == 0.0) continue;
    acc += travel_time_clamped(net.link(e), flows[e] + gamma * d) * d;
  }
  if (!std::isfinite(acc)) fail(Errc::non_finite_value, "directional derivative overflow");
  return acc;
}

double line_search(const Network& net, const Eigen::Ref<const Eigen::VectorXd>& flows,
                   const Eigen::Ref<const Eigen::VectorXd>& direction, double tol) {
  if (flows.size() != net.n_links() || direction.size() != net.n_links())
    fail(Errc::precondition, "vector length mismatch");
  for (LinkId e = 0; e < net.n_links(); ++e) {
    if (flows[e] < 0.0 || flows[e] + direction[e] < -1e-9 * std::abs(flows[e]))
      fail(Errc::infeasible_endpoint,
           "link " + std::to_string(e) + ": segment leaves the nonnegative orthant");
  }
  const double d0 = directional_derivative(net, flows, direction, 0.0);
  if (d0 >= 0.0) return 0.0;
  if (directional_derivative(net, flows, direction, 1.0) <= 0.0) return 1.0;
  const double target = tol * std::abs(d0);
  double lo = 0.0, hi = 1.0;
  double mid = 0.5;
  for (int it = 0; it < 64; ++it) {
    mid = 0.5 * (lo + hi);
    const double dm = directional_derivative(net, flows, direction, mid);
    if (std::abs(dm) <= target) return mid;
    (dm < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace sofw
