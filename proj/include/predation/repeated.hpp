#pragma once

// Discounted payoff streams and the patience thresholds of infinitely
// repeated predation games.

#include <span>
#include <vector>

namespace predation::repeated {

// A discount factor strictly inside (0, 1).
class DiscountFactor {
 public:
  // Throws Error{InvalidDiscount} outside the open unit interval.
  explicit DiscountFactor(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

// Eventually-periodic stream: `prefix` covers periods 0..k-1, then `cycle`
// repeats forever from period k.
class PayoffStream {
 public:
  // Throws Error{InvalidStream} on an empty cycle or non-finite entries.
  PayoffStream(std::vector<double> prefix, std::vector<double> cycle);

  static PayoffStream constant(double x) { return {{}, {x}}; }
  // `first` in period 0, `rest` in every later period.
  static PayoffStream switching(double first, double rest) {
    return {{first}, {rest}};
  }

  std::span<const double> prefix() const noexcept { return prefix_; }
  std::span<const double> cycle() const noexcept { return cycle_; }
  double at(std::size_t t) const noexcept;

  bool operator==(const PayoffStream&) const = default;

 private:
  std::vector<double> prefix_;
  std::vector<double> cycle_;
};

// Closed-form sum of d^t x_t over t >= 0. Period 0 is undiscounted.
double pdv(const PayoffStream& stream, DiscountFactor d);

// (S_a - T_a) / (S_a - s_a): the least discount factor at which a constant
// moderate take T_a weakly beats grabbing S_a once and s_a thereafter.
// Throws Error{OrderingViolation} unless S_a > T_a > s_a.
double critical_discount(double S_a, double T_a, double s_a);

// d (S_a - s_a) >= S_a - T_a. Ties resolve to restraint.
bool prefers_restraint(double S_a, double T_a, double s_a, DiscountFactor d);

// Grim-trigger flight is credible iff the one-period harm is at least the
// per-period loss after fleeing, whatever the humans' discount factor.
// Throws Error{NonpositiveHarm} unless both magnitudes are positive.
bool flight_credible(double H_h, double f_h);

// True iff no deviation stream has a strictly larger PDV than the candidate.
bool one_shot_deviation_ok(const PayoffStream& candidate,
                           std::span<const PayoffStream> deviations,
                           DiscountFactor d);

}  // namespace predation::repeated
