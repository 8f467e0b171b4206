#pragma once

#include <vector>

#include "schubert/rational.hpp"

namespace schubert {

/// Power series in one variable over Q, truncated after x^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : c_(order + 1) {}
  TruncatedSeries(int order, std::vector<Rational> coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Multiplicative inverse; throws std::domain_error if the constant term is 0.
  TruncatedSeries inverse() const;
  /// log of a series with constant term 1.
  TruncatedSeries log() const;
  /// exp of a series with constant term 0.
  TruncatedSeries exp() const;

  /// (1 - e^{-x}) / x = sum (-1)^k x^k / (k+1)!
  static TruncatedSeries one_minus_exp_neg_over_x(int order);

 private:
  std::vector<Rational> c_;
};

}  // namespace schubert
