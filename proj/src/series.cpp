#include "schubert/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  c_.resize(order + 1);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (int i = 0; i <= out.order(); ++i) out[i] = a[i] + b[i];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (int i = 0; i <= out.order(); ++i) out[i] = a[i] - b[i];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (int i = 0; i <= out.order(); ++i)
    for (int j = 0; i + j <= out.order(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
  TruncatedSeries out(order());
  out[0] = 1 / c_[0];
  for (int m = 1; m <= order(); ++m) {
    Rational s = 0;
    for (int i = 1; i <= m; ++i) s += c_[i] * out[m - i];
    out[m] = -s / c_[0];
  }
  return out;
}

// f = 1 + g: (log f)' = f'/f, integrated termwise.
TruncatedSeries TruncatedSeries::log() const {
  if (c_[0] != 1) throw std::domain_error("log needs constant term 1");
  TruncatedSeries deriv(order());
  for (int i = 1; i <= order(); ++i) deriv[i - 1] = c_[i] * i;
  TruncatedSeries q = deriv * inverse();
  TruncatedSeries out(order());
  for (int i = 1; i <= order(); ++i) out[i] = q[i - 1] / i;
  return out;
}

// y = exp(f) satisfies y' = f' y; solve recursively.
TruncatedSeries TruncatedSeries::exp() const {
  if (c_[0] != 0) throw std::domain_error("exp needs constant term 0");
  TruncatedSeries out(order());
  out[0] = 1;
  for (int m = 1; m <= order(); ++m) {
    Rational s = 0;
    for (int i = 1; i <= m; ++i) s += c_[i] * i * out[m - i];
    out[m] = s / m;
  }
  return out;
}

TruncatedSeries TruncatedSeries::one_minus_exp_neg_over_x(int order) {
  TruncatedSeries out(order);
  for (int k = 0; k <= order; ++k) out[k] = Rational(k % 2 == 0 ? 1 : -1) / factorial(k + 1);
  return out;
}

}  // namespace schubert
