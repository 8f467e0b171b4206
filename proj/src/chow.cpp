#include "schubert/chow.hpp"

#include <sstream>
#include <stdexcept>

namespace schubert {

GrassmannRing::GrassmannRing(int k, int n) : k_(k), n_(n), box_{k + 1, n - k} {
  for (int d = 0; d <= box_.area(); ++d) basis_.push_back(enumerate_partitions(box_, d));
}

std::shared_ptr<const GrassmannRing> GrassmannRing::make(int k, int n) {
  if (k < 0 || n <= k)
    throw std::invalid_argument("G(" + std::to_string(k) + "," + std::to_string(n) +
                                ") requires 0 <= k < n");
  return std::shared_ptr<const GrassmannRing>(new GrassmannRing(k, n));
}

const std::vector<Partition>& GrassmannRing::basis(int degree) const {
  static const std::vector<Partition> none;
  if (degree < 0 || degree > dimension()) return none;
  return basis_[degree];
}

std::size_t GrassmannRing::rank() const {
  std::size_t r = 0;
  for (const auto& b : basis_) r += b.size();
  return r;
}

std::string GrassmannRing::name() const {
  return "G(" + std::to_string(k_) + "," + std::to_string(n_) + ")";
}

const std::map<Partition, Rational>& GrassmannRing::product(const Partition& lambda,
                                                           const Partition& mu) const {
  auto key = lambda <= mu ? std::make_pair(lambda, mu) : std::make_pair(mu, lambda);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  std::map<Partition, Rational> result;
  for (const Partition& nu : basis(lambda.weight() + mu.weight())) {
    if (auto c = lr_coefficient(lambda, mu, nu); c != 0) result.emplace(nu, Rational(c));
  }
  std::lock_guard lock(cache_mutex_);
  // std::map nodes are stable, so the returned reference survives later fills.
  return cache_.try_emplace(std::move(key), std::move(result)).first->second;
}

ChowClass::ChowClass(RingPtr ring, const Rational& constant) : ring_(std::move(ring)) {
  if (constant != 0) add_term(Partition{}, constant);
}

Rational ChowClass::coefficient(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void ChowClass::add_term(const Partition& lambda, const Rational& c) {
  if (!ring_->box().fits(lambda))
    throw std::domain_error("partition " + lambda.to_string() + " is not in the box of " +
                            ring_->name());
  if (c == 0) return;
  Rational value = c;
  value.canonicalize();
  auto [it, inserted] = coeffs_.try_emplace(lambda, std::move(value));
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

ChowClass ChowClass::component(int degree) const {
  ChowClass out(ring_);
  for (const auto& [lambda, c] : coeffs_)
    if (lambda.weight() == degree) out.coeffs_.emplace(lambda, c);
  return out;
}

bool ChowClass::is_homogeneous_of(int degree) const {
  for (const auto& [lambda, c] : coeffs_)
    if (lambda.weight() != degree) return false;
  return true;
}

void ChowClass::check_same_ring(const ChowClass& other) const {
  if (!ring_->same_as(*other.ring_))
    throw std::invalid_argument("classes live in different rings: " + ring_->name() + " and " +
                                other.ring_->name());
}

ChowClass& ChowClass::operator+=(const ChowClass& other) {
  check_same_ring(other);
  for (const auto& [lambda, c] : other.coeffs_) add_term(lambda, c);
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other) {
  check_same_ring(other);
  for (const auto& [lambda, c] : other.coeffs_) add_term(lambda, -c);
  return *this;
}

ChowClass& ChowClass::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  Rational scale = s;
  scale.canonicalize();
  for (auto& [lambda, c] : coeffs_) c *= scale;
  return *this;
}

ChowClass ChowClass::operator-() const {
  ChowClass out = *this;
  return out *= Rational(-1);
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  a.check_same_ring(b);
  const GrassmannRing& ring = *a.ring_;
  ChowClass out(a.ring_);
  for (const auto& [lambda, x] : a.coeffs_) {
    for (const auto& [mu, y] : b.coeffs_) {
      if (lambda.weight() + mu.weight() > ring.dimension()) continue;
      const Rational xy = x * y;
      for (const auto& [nu, c] : ring.product(lambda, mu)) {
        auto [it, inserted] = out.coeffs_.try_emplace(nu);
        if (c == 1) it->second += xy;
        else it->second += xy * c;
      }
    }
  }
  std::erase_if(out.coeffs_, [](const auto& term) { return term.second == 0; });
  return out;
}

bool operator==(const ChowClass& a, const ChowClass& b) {
  return a.ring_->same_as(*b.ring_) && a.coeffs_ == b.coeffs_;
}

std::string ChowClass::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest codimension first.
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [lambda, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (lambda.empty()) {
      os << schubert::to_string(mag);
      continue;
    }
    if (mag != 1) os << schubert::to_string(mag) << "*";
    os << "s" << lambda.to_string();
  }
  return os.str();
}

ChowClass sigma(const RingPtr& ring, const Partition& lambda) {
  ChowClass out(ring);
  out.add_term(lambda, 1);
  return out;
}

ChowClass unit(const RingPtr& ring) { return ChowClass(ring, 1); }

ChowClass power(const ChowClass& x, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  ChowClass out = unit(x.ring());
  for (int i = 0; i < exponent; ++i) out = out * x;
  return out;
}

ChowClass omega_class(const RingPtr& ring, int i, int j) {
  if (ring->k() != 1)
    throw std::domain_error("Omega(i,j) is defined on Grassmannians of lines only, not " +
                            ring->name());
  const int n = ring->n();
  if (i < 0 || i >= j || j > n)
    throw std::domain_error("Omega(" + std::to_string(i) + "," + std::to_string(j) +
                            ") needs 0 <= i < j <= " + std::to_string(n));
  return sigma(ring, Partition{n - 1 - i, n - j});
}

Rational integrate(const ChowClass& x) { return x.coefficient(x.ring()->box().full()); }

Integer degree_of_grassmannian(const RingPtr& ring) {
  return Integer(integrate(power(sigma(ring, Partition{1}), ring->dimension())).get_num());
}

}  // namespace schubert
