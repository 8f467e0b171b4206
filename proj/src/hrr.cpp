#include "schubert/hrr.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace schubert {

EulerPolynomial::EulerPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

EulerPolynomial EulerPolynomial::interpolate(const std::vector<Rational>& values) {
  // Leading forward differences D^j p(0).
  std::vector<Rational> diff = values;
  std::vector<Rational> lead;
  for (std::size_t j = 0; j < values.size(); ++j) {
    lead.push_back(diff[0]);
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  // p(k) = sum_j lead[j] * C(k, j); expand the falling factorials.
  std::vector<Rational> coeffs(values.size());
  std::vector<Rational> falling{1};  // k(k-1)...(k-j+1)
  for (std::size_t j = 0; j < values.size(); ++j) {
    const Rational scale = lead[j] / factorial(static_cast<unsigned>(j));
    for (std::size_t i = 0; i < falling.size(); ++i) coeffs[i] += scale * falling[i];
    std::vector<Rational> next(falling.size() + 1);
    for (std::size_t i = 0; i < falling.size(); ++i) {
      next[i + 1] += falling[i];
      next[i] -= falling[i] * static_cast<long>(j);
    }
    falling = std::move(next);
  }
  return EulerPolynomial(std::move(coeffs));
}

Rational EulerPolynomial::operator()(const Rational& k) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + *it;
  return acc;
}

std::string EulerPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const Rational mag = abs(c);
    if (i == 0) {
      s += schubert::to_string(mag);
      continue;
    }
    if (mag != 1) s += schubert::to_string(mag) + "*";
    s += i == 1 ? "k" : "k^" + std::to_string(i);
  }
  return s;
}

const ChowClass& tangent_todd(const RingPtr& ring) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, ChowClass> cache;
  const auto key = std::make_pair(ring->k(), ring->n());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  ChowClass td = todd_class(tangent_bundle(ring));
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(td)).first->second;
}

Rational euler_characteristic(const RingPtr& ring, const ChernVector& v) {
  if (!ring->same_as(*v.ring()))
    throw std::invalid_argument("bundle on " + v.ring()->name() + " evaluated on " + ring->name());
  return integrate(chern_character(v) * tangent_todd(ring));
}

EulerPolynomial euler_polynomial(const RingPtr& ring, const ChernVector& v) {
  std::vector<Rational> values;
  for (int k = 0; k <= ring->dimension(); ++k)
    values.push_back(euler_characteristic(ring, twist(v, k)));
  return EulerPolynomial::interpolate(values);
}

Rational chi_p3(int c1, int c2, int t) {
  static const RingPtr p3 = GrassmannRing::make(0, 3);
  const ChowClass h = sigma(p3, Partition{1});
  ChernVector v(p3, 2, {Rational(c1) * h, Rational(c2) * (h * h)});
  return euler_characteristic(p3, twist(v, t));
}

bool is_integer_valued(const EulerPolynomial& p) {
  for (int k = 0; k <= std::max(p.degree(), 0); ++k)
    if (!is_integer(p(k))) return false;
  return true;
}

}  // namespace schubert
