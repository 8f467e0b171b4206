#include "schubert/charclass.hpp"

#include <stdexcept>

#include "schubert/series.hpp"

namespace schubert {

namespace {

void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a->same_as(*b))
    throw std::invalid_argument("bundles live on different Grassmannians: " + a->name() +
                                " and " + b->name());
}

ChowClass hyperplane(const RingPtr& ring) { return sigma(ring, Partition{1}); }

// exp of a class with zero constant term; the series stops at the dimension.
ChowClass exp_nilpotent(const ChowClass& y) {
  const RingPtr& ring = y.ring();
  ChowClass out = unit(ring);
  ChowClass term = unit(ring);
  for (int k = 1; k <= ring->dimension(); ++k) {
    term = term * y;
    term *= ratio(1, k);
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

}  // namespace

ChernVector::ChernVector(RingPtr ring, int rank) : ChernVector(std::move(ring), rank, {}) {}

ChernVector::ChernVector(RingPtr ring, int rank, std::vector<ChowClass> classes)
    : ring_(std::move(ring)), rank_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  const int dim = ring_->dimension();
  c_.reserve(dim + 1);
  c_.push_back(unit(ring_));
  for (int d = 1; d <= dim; ++d) {
    if (d - 1 < static_cast<int>(classes.size())) {
      const ChowClass& x = classes[d - 1];
      if (!x.ring()->same_as(*ring_)) throw std::invalid_argument("Chern class from another ring");
      if (!x.is_homogeneous_of(d))
        throw std::invalid_argument("c_" + std::to_string(d) + " is not homogeneous of degree " +
                                    std::to_string(d));
      c_.push_back(x);
    } else {
      c_.emplace_back(ring_);
    }
  }
  for (std::size_t d = dim + 1; d <= classes.size(); ++d)
    if (!classes[d - 1].is_zero()) throw std::invalid_argument("Chern class beyond the dimension");
}

ChowClass ChernVector::c(int degree) const {
  if (degree >= 0 && degree < static_cast<int>(c_.size())) return c_[degree];
  return ChowClass(ring_);
}

ChowClass ChernVector::total() const {
  ChowClass out(ring_);
  for (const auto& x : c_) out += x;
  return out;
}

bool operator==(const ChernVector& a, const ChernVector& b) {
  return a.ring_->same_as(*b.ring_) && a.rank_ == b.rank_ && a.c_ == b.c_;
}

PowerSumVector::PowerSumVector(RingPtr ring, int rank, std::vector<ChowClass> sums)
    : ring_(std::move(ring)), rank_(rank), p_(std::move(sums)) {
  const int dim = ring_->dimension();
  p_.resize(dim, ChowClass(ring_));
  for (int m = 1; m <= dim; ++m)
    if (!p_[m - 1].is_homogeneous_of(m))
      throw std::invalid_argument("power sum p_" + std::to_string(m) + " is not homogeneous");
}

std::string RankTwoData::to_string() const {
  return "(" + std::to_string(e) + "," + std::to_string(a) + "," + std::to_string(b) + ")";
}

RankTwoData twist_data(const RankTwoData& d, int t) {
  return {d.e + 2 * t, d.a + t * d.e + t * t, d.b + t * d.e + t * t};
}

ChernVector rank_two_chern(const RingPtr& ring, const RankTwoData& d) {
  if (ring->k() != 1 || ring->n() != 4)
    throw std::invalid_argument("(e,a,b) coordinates are defined on G(1,4), not " + ring->name());
  ChowClass c1 = Rational(d.e) * sigma(ring, Partition{1});
  ChowClass c2 = Rational(d.a) * sigma(ring, Partition{2}) + Rational(d.b) * sigma(ring, Partition{1, 1});
  return ChernVector(ring, 2, {c1, c2});
}

ChernVector line_bundle(const RingPtr& ring, const Rational& t) {
  return ChernVector(ring, 1, {t * hyperplane(ring)});
}

// p_m = sum_{i=1}^{m-1} (-1)^{i-1} c_i p_{m-i} + (-1)^{m-1} m c_m
PowerSumVector chern_to_power_sums(const ChernVector& v) {
  const int dim = v.ring()->dimension();
  std::vector<ChowClass> p;
  p.reserve(dim);
  for (int m = 1; m <= dim; ++m) {
    ChowClass pm = Rational(m % 2 == 1 ? m : -m) * v.c(m);
    for (int i = 1; i < m; ++i) {
      ChowClass t = v.c(i) * p[m - i - 1];
      if (i % 2 == 1) pm += t;
      else pm -= t;
    }
    p.push_back(std::move(pm));
  }
  return PowerSumVector(v.ring(), v.rank(), std::move(p));
}

// m c_m = sum_{i=1}^{m} (-1)^{i-1} c_{m-i} p_i
ChernVector power_sums_to_chern(const PowerSumVector& p) {
  const int dim = p.ring()->dimension();
  std::vector<ChowClass> c;
  c.reserve(dim);
  const ChowClass one = unit(p.ring());
  for (int m = 1; m <= dim; ++m) {
    ChowClass cm(p.ring());
    for (int i = 1; i <= m; ++i) {
      ChowClass t = (m - i == 0 ? one : c[m - i - 1]) * p.p(i);
      if (i % 2 == 1) cm += t;
      else cm -= t;
    }
    cm *= ratio(1, m);
    c.push_back(std::move(cm));
  }
  return ChernVector(p.ring(), p.rank(), std::move(c));
}

ChowClass chern_character(const ChernVector& v) {
  const PowerSumVector p = chern_to_power_sums(v);
  ChowClass ch(v.ring(), v.rank());
  for (int m = 1; m <= v.ring()->dimension(); ++m) ch += p.p(m) * (1 / factorial(m));
  return ch;
}

ChernVector chern_from_character(const ChowClass& ch) {
  const RingPtr& ring = ch.ring();
  const Rational r = ch.coefficient(Partition{});
  if (!is_integer(r) || r < 1)
    throw std::invalid_argument("Chern character has non-positive or fractional rank " +
                                to_string(r));
  std::vector<ChowClass> p;
  for (int m = 1; m <= ring->dimension(); ++m) p.push_back(ch.component(m) * factorial(m));
  return power_sums_to_chern(PowerSumVector(ring, static_cast<int>(r.get_num().get_si()), std::move(p)));
}

const std::vector<Rational>& todd_log_coefficients() {
  static const std::vector<Rational> table = [] {
    // x / (1 - e^{-x}) is the reciprocal of (1 - e^{-x}) / x.
    TruncatedSeries todd = TruncatedSeries::one_minus_exp_neg_over_x(kToddTableOrder).inverse();
    TruncatedSeries lg = todd.log();
    std::vector<Rational> out(kToddTableOrder + 1);
    for (int i = 0; i <= kToddTableOrder; ++i) out[i] = lg[i];
    return out;
  }();
  return table;
}

// td = prod_i Q(x_i) = exp(sum_m a_m p_m).
ChowClass todd_class(const ChernVector& v) {
  const int dim = v.ring()->dimension();
  if (dim > kToddTableOrder) throw std::domain_error("ring dimension exceeds the Todd table");
  const auto& a = todd_log_coefficients();
  const PowerSumVector p = chern_to_power_sums(v);
  ChowClass exponent(v.ring());
  for (int m = 1; m <= dim; ++m) exponent += p.p(m) * a[m];
  return exp_nilpotent(exponent);
}

// Roots x_i move to x_i + t h, so p'_m = sum_j C(m,j) p_j (t h)^{m-j} with p_0 = rank.
// c(E(t)) = sum_i c_i(E) (1 + t*h)^{r-i}, with generalized binomials for virtual E.
ChernVector twist(const ChernVector& v, const Rational& t) {
  const RingPtr& ring = v.ring();
  const int dim = ring->dimension();
  const ChowClass th = t * hyperplane(ring);
  std::vector<ChowClass> th_pow{unit(ring)};
  for (int i = 1; i <= dim; ++i) th_pow.push_back(th_pow.back() * th);
  std::vector<ChowClass> q;
  q.reserve(dim);
  for (int m = 1; m <= dim; ++m) {
    ChowClass qm(ring);
    for (int i = 0; i <= m; ++i) {
      const ChowClass ci = v.c(i);
      if (ci.is_zero()) continue;
      const Rational coeff = binomial(v.rank() - i, m - i);
      if (coeff == 0) continue;
      qm += (ci * th_pow[m - i]) * coeff;
    }
    q.push_back(std::move(qm));
  }
  return ChernVector(ring, v.rank(), std::move(q));
}

ChernVector dual(const ChernVector& v) {
  std::vector<ChowClass> c;
  for (int d = 1; d <= v.ring()->dimension(); ++d) c.push_back(d % 2 ? -v.c(d) : v.c(d));
  return ChernVector(v.ring(), v.rank(), std::move(c));
}

ChernVector direct_sum(const ChernVector& v, const ChernVector& w) {
  check_same_ring(v.ring(), w.ring());
  const ChowClass total = v.total() * w.total();
  std::vector<ChowClass> c;
  for (int d = 1; d <= v.ring()->dimension(); ++d) c.push_back(total.component(d));
  return ChernVector(v.ring(), v.rank() + w.rank(), std::move(c));
}

ChowClass tensor_ch(const ChernVector& v, const ChernVector& w) {
  check_same_ring(v.ring(), w.ring());
  return chern_character(v) * chern_character(w);
}

ChernVector quotient_bundle(const RingPtr& ring) {
  std::vector<ChowClass> c;
  for (int i = 1; i <= ring->n() - ring->k(); ++i) c.push_back(sigma(ring, Partition{i}));
  return ChernVector(ring, ring->n() - ring->k(), std::move(c));
}

ChernVector dual_tautological_bundle(const RingPtr& ring) {
  std::vector<ChowClass> c;
  for (int i = 1; i <= ring->k() + 1; ++i)
    c.push_back(sigma(ring, Partition(std::vector<int>(i, 1))));
  return ChernVector(ring, ring->k() + 1, std::move(c));
}

ChernVector tautological_bundle(const RingPtr& ring) { return dual(dual_tautological_bundle(ring)); }

ChernVector tangent_bundle(const RingPtr& ring) {
  return chern_from_character(tensor_ch(dual_tautological_bundle(ring), quotient_bundle(ring)));
}

ChowClass schur_s3(const ChernVector& v) {
  if (v.rank() != 2) throw std::invalid_argument("schur_s3 is defined here for rank two");
  const ChowClass c1 = v.c(1);
  return c1 * c1 * c1 - Rational(2) * (c1 * v.c(2));
}

}  // namespace schubert
