#include "schubert/rational.hpp"

namespace schubert {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

bool is_integer(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_den() == 1;
}

Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

// Generalised to negative n through the polynomial n(n-1)...(n-k+1)/k!.
Rational binomial(long n, long k) {
  if (k < 0) return 0;
  Rational num = 1;
  for (long i = 0; i < k; ++i) num *= Rational(n - i);
  return num / factorial(static_cast<unsigned>(k));
}

}  // namespace schubert
