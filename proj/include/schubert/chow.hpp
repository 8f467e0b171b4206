#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "schubert/partitions.hpp"
#include "schubert/rational.hpp"

namespace schubert {

class ChowClass;

/// Chow ring of the Grassmannian G(k,n) of k-planes in P^n, with the Schubert
/// basis sigma_lambda for lambda in the (k+1) x (n-k) box. Projective space
/// P^n is G(0,n).
///
/// Rings are shared through `std::shared_ptr<const GrassmannRing>`; two rings
/// with the same (k,n) are interchangeable. Products of basis classes are
/// cached behind a mutex, so a ring may be used from several threads.
class GrassmannRing {
 public:
  /// Throws std::invalid_argument unless 0 <= k < n.
  static std::shared_ptr<const GrassmannRing> make(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  const Box& box() const { return box_; }
  int dimension() const { return box_.area(); }

  /// Schubert basis in codimension d (lexicographically descending).
  const std::vector<Partition>& basis(int degree) const;
  std::size_t rank() const;

  /// Structure constants of sigma_lambda * sigma_mu, truncated to the box.
  const std::map<Partition, Rational>& product(const Partition& lambda,
                                               const Partition& mu) const;

  std::string name() const;

  bool same_as(const GrassmannRing& other) const { return k_ == other.k_ && n_ == other.n_; }

 private:
  GrassmannRing(int k, int n);

  int k_;
  int n_;
  Box box_;
  std::vector<std::vector<Partition>> basis_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<Partition, Partition>, std::map<Partition, Rational>> cache_;
};

using RingPtr = std::shared_ptr<const GrassmannRing>;

/// An element of A*(G(k,n)) tensor Q. Classes may be inhomogeneous.
class ChowClass {
 public:
  explicit ChowClass(RingPtr ring) : ring_(std::move(ring)) {}
  ChowClass(RingPtr ring, const Rational& constant);

  const RingPtr& ring() const { return ring_; }
  const std::map<Partition, Rational>& terms() const { return coeffs_; }

  Rational coefficient(const Partition& lambda) const;
  /// Adds c * sigma_lambda. Throws std::domain_error if lambda leaves the box.
  void add_term(const Partition& lambda, const Rational& c);

  /// Component of codimension d.
  ChowClass component(int degree) const;
  bool is_homogeneous_of(int degree) const;
  bool is_zero() const { return coeffs_.empty(); }

  ChowClass& operator+=(const ChowClass& other);
  ChowClass& operator-=(const ChowClass& other);
  ChowClass& operator*=(const Rational& s);
  ChowClass operator-() const;

  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(ChowClass a, const Rational& s) { return a *= s; }
  friend ChowClass operator*(const Rational& s, ChowClass a) { return a *= s; }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);

  friend bool operator==(const ChowClass& a, const ChowClass& b);

  /// e.g. "2*s(2) + s(1,1) - 1/3"
  std::string to_string() const;

 private:
  void check_same_ring(const ChowClass& other) const;

  RingPtr ring_;
  std::map<Partition, Rational> coeffs_;
};

/// Basis class sigma_lambda; throws std::domain_error if lambda is not in the box.
ChowClass sigma(const RingPtr& ring, const Partition& lambda);

ChowClass unit(const RingPtr& ring);

/// Power of a class; x^0 is the unit.
ChowClass power(const ChowClass& x, int exponent);

/// Class of lines in a j-plane meeting an i-plane, on G(1,n):
/// sigma_{(n-1-i, n-j)}, of codimension 2n-1-i-j.
/// Throws std::domain_error unless ring is G(1,n) and 0 <= i < j <= n.
ChowClass omega_class(const RingPtr& ring, int i, int j);

/// Degree of the class: coefficient of the point class.
Rational integrate(const ChowClass& x);

/// Integral of sigma_1^dim.
Integer degree_of_grassmannian(const RingPtr& ring);

}  // namespace schubert
