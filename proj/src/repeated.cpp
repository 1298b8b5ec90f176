#include "predation/repeated.hpp"

#include <cmath>
#include <sstream>

#include "predation/error.hpp"

namespace predation::repeated {

namespace {

void require_ordering(double S_a, double T_a, double s_a) {
  if (S_a > T_a && T_a > s_a) return;
  std::ostringstream msg;
  msg << "expected S_a > T_a > s_a, got S_a=" << S_a << " T_a=" << T_a
      << " s_a=" << s_a;
  throw Error(ErrorCode::OrderingViolation, msg.str());
}

}  // namespace

DiscountFactor::DiscountFactor(double value) : value_(value) {
  if (!(value > 0.0 && value < 1.0)) {
    std::ostringstream msg;
    msg << "discount factor " << value << " outside (0, 1)";
    throw Error(ErrorCode::InvalidDiscount, msg.str());
  }
}

PayoffStream::PayoffStream(std::vector<double> prefix,
                           std::vector<double> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) {
    throw Error(ErrorCode::InvalidStream, "payoff stream cycle is empty");
  }
  for (double x : prefix_) {
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::InvalidStream, "non-finite payoff in prefix");
    }
  }
  for (double x : cycle_) {
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::InvalidStream, "non-finite payoff in cycle");
    }
  }
}

double PayoffStream::at(std::size_t t) const noexcept {
  if (t < prefix_.size()) return prefix_[t];
  return cycle_[(t - prefix_.size()) % cycle_.size()];
}

double pdv(const PayoffStream& stream, DiscountFactor d) {
  const double delta = d.value();

  // The kernels in kernels.hpp reproduce this operation order for the
  // one- and two-phase streams; keep them in step.
  double head = 0.0;
  double weight = 1.0;
  for (double x : stream.prefix()) {
    head += weight * x;
    weight *= delta;
  }
  double cycle_sum = 0.0;
  double cycle_weight = 1.0;
  for (double x : stream.cycle()) {
    cycle_sum += cycle_weight * x;
    cycle_weight *= delta;
  }
  return head + weight * cycle_sum / (1.0 - cycle_weight);
}

double critical_discount(double S_a, double T_a, double s_a) {
  require_ordering(S_a, T_a, s_a);
  return (S_a - T_a) / (S_a - s_a);
}

bool prefers_restraint(double S_a, double T_a, double s_a, DiscountFactor d) {
  require_ordering(S_a, T_a, s_a);
  return d.value() * (S_a - s_a) >= S_a - T_a;
}

bool flight_credible(double H_h, double f_h) {
  if (!(H_h > 0.0) || !(f_h > 0.0)) {
    std::ostringstream msg;
    msg << "harm magnitudes must be positive, got H_h=" << H_h
        << " f_h=" << f_h;
    throw Error(ErrorCode::NonpositiveHarm, msg.str());
  }
  return H_h >= f_h;
}

bool one_shot_deviation_ok(const PayoffStream& candidate,
                           std::span<const PayoffStream> deviations,
                           DiscountFactor d) {
  const double keep = pdv(candidate, d);
  for (const auto& dev : deviations) {
    if (pdv(dev, d) > keep) return false;
  }
  return true;
}

}  // namespace predation::repeated
