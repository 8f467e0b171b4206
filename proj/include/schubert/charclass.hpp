#pragma once

#include <compare>
#include <string>
#include <vector>

#include "schubert/chow.hpp"
#include "schubert/rational.hpp"

namespace schubert {

/// Rank and total Chern class of a (virtual) bundle on a Grassmannian.
/// `c(d)` is homogeneous of codimension d; c(0) is the unit and c(d) = 0 past
/// the ring dimension.
class ChernVector {
 public:
  /// Trivial bundle of the given rank.
  ChernVector(RingPtr ring, int rank);
  /// `classes[d-1]` is c_d. Missing entries are zero. Throws
  /// std::invalid_argument on a non-homogeneous entry or rank < 1.
  ChernVector(RingPtr ring, int rank, std::vector<ChowClass> classes);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  ChowClass c(int degree) const;
  ChowClass total() const;

  friend bool operator==(const ChernVector& a, const ChernVector& b);

 private:
  RingPtr ring_;
  int rank_;
  std::vector<ChowClass> c_;  // index 0..dimension
};

/// Power sums p_m of the Chern roots, m = 1..dimension, plus the rank.
class PowerSumVector {
 public:
  PowerSumVector(RingPtr ring, int rank, std::vector<ChowClass> sums);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  const ChowClass& p(int m) const { return p_[m - 1]; }

 private:
  RingPtr ring_;
  int rank_;
  std::vector<ChowClass> p_;
};

/// Coordinates of a rank-two bundle on G(1,4):
/// c1 = e*sigma_1 and c2 = a*sigma_2 + b*sigma_{1,1}.
struct RankTwoData {
  int e = 0;
  int a = 0;
  int b = 0;

  bool normalized() const { return e == 0 || e == -1; }
  std::string to_string() const;

  friend auto operator<=>(const RankTwoData&, const RankTwoData&) = default;
};

/// Data of E(t) for integer t: e + 2t, a + te + t^2, b + te + t^2.
RankTwoData twist_data(const RankTwoData& d, int t);

ChernVector rank_two_chern(const RingPtr& ring, const RankTwoData& d);
/// O(t) for rational t.
ChernVector line_bundle(const RingPtr& ring, const Rational& t);

/// Newton's identities, truncated at the ring dimension.
PowerSumVector chern_to_power_sums(const ChernVector& v);
ChernVector power_sums_to_chern(const PowerSumVector& p);

ChowClass chern_character(const ChernVector& v);
/// Inverse of chern_character. Throws std::invalid_argument unless the
/// constant term is a positive integer.
ChernVector chern_from_character(const ChowClass& ch);

/// Coefficients a_m of log(x / (1 - e^{-x})) = sum a_m x^m, m = 0..order.
/// Computed once by exact series arithmetic.
const std::vector<Rational>& todd_log_coefficients();
constexpr int kToddTableOrder = 40;

ChowClass todd_class(const ChernVector& v);

/// Chern vector of v twisted by t times the hyperplane class.
ChernVector twist(const ChernVector& v, const Rational& t);
ChernVector dual(const ChernVector& v);
ChernVector direct_sum(const ChernVector& v, const ChernVector& w);
ChowClass tensor_ch(const ChernVector& v, const ChernVector& w);

/// Universal quotient bundle Q (rank n-k, c_i = sigma_(i)).
ChernVector quotient_bundle(const RingPtr& ring);
/// Dual of the tautological subbundle (rank k+1, c_i = sigma_(1^i)).
ChernVector dual_tautological_bundle(const RingPtr& ring);
ChernVector tautological_bundle(const RingPtr& ring);
/// T = S^dual (x) Q, recovered from ch(S^dual) ch(Q).
ChernVector tangent_bundle(const RingPtr& ring);

/// Degree-3 Schur polynomial c1^3 - 2 c1 c2 of a rank-two bundle.
ChowClass schur_s3(const ChernVector& v);

}  // namespace schubert
