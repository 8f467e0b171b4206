#pragma once

#include <string>
#include <vector>

#include "schubert/charclass.hpp"
#include "schubert/chow.hpp"
#include "schubert/rational.hpp"

namespace schubert {

/// k -> chi(E(k)) as a polynomial with rational coefficients in the monomial
/// basis, coefficient i multiplying k^i.
class EulerPolynomial {
 public:
  EulerPolynomial() = default;
  explicit EulerPolynomial(std::vector<Rational> coefficients);

  /// Unique polynomial of degree <= values.size()-1 through (i, values[i]),
  /// by Newton forward differences.
  static EulerPolynomial interpolate(const std::vector<Rational>& values);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational operator()(const Rational& k) const;

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// td(T) of the Grassmannian, cached per (k,n).
const ChowClass& tangent_todd(const RingPtr& ring);

/// chi = integral of ch(v) td(T). Exact; integral whenever v is an honest bundle.
Rational euler_characteristic(const RingPtr& ring, const ChernVector& v);

EulerPolynomial euler_polynomial(const RingPtr& ring, const ChernVector& v);

/// chi on P^3 of the rank-two data (c1, c2) twisted by t.
Rational chi_p3(int c1, int c2, int t);

/// Integer values at 0..degree, hence (binomial basis) at every integer.
bool is_integer_valued(const EulerPolynomial& p);

}  // namespace schubert
