#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace schubert {

/// A weakly decreasing sequence of non-negative integers, stored without
/// trailing zeros. Indexes the Schubert classes of a Grassmannian.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws std::invalid_argument if `parts` is not weakly decreasing or has
  /// a negative entry.
  explicit Partition(std::vector<int> parts);

  /// Part i (0-based); zero past the last nonzero part.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const;
  const std::vector<int>& parts() const { return parts_; }

  /// Young diagram containment.
  bool contains(const Partition& inner) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// A rows x cols rectangle. For G(k,n) the box is (k+1) x (n-k).
struct Box {
  int rows = 0;
  int cols = 0;

  bool fits(const Partition& p) const;
  int area() const { return rows * cols; }
  Partition full() const;
  friend bool operator==(const Box&, const Box&) = default;
};

/// All partitions of `degree` fitting in `box`, lexicographically descending.
std::vector<Partition> enumerate_partitions(const Box& box, int degree);

Partition conjugate(const Partition& p);

/// Rotated complement in the box: mu_i = cols - p_{rows+1-i}.
/// Throws std::domain_error when p does not fit.
Partition complement(const Partition& p, const Box& box);

/// outer/inner is a horizontal strip (at most one box per column).
bool is_horizontal_strip(const Partition& outer, const Partition& inner);
/// outer/inner is a vertical strip (at most one box per row).
bool is_vertical_strip(const Partition& outer, const Partition& inner);

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}, counted as the number
/// of semistandard skew tableaux of shape nu/lambda and content mu whose
/// reverse reading word is a lattice word.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                             const Partition& nu);

}  // namespace schubert
