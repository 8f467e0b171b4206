#include "schubert/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace schubert {

namespace {

std::vector<int> normalized(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : parts_(normalized(std::vector<int>(parts))) {}

Partition::Partition(std::vector<int> parts) : parts_(normalized(std::move(parts))) {}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

bool Box::fits(const Partition& p) const {
  return static_cast<int>(p.length()) <= rows && (p.empty() || p[0] <= cols);
}

Partition Box::full() const { return Partition(std::vector<int>(rows, cols)); }

std::vector<Partition> enumerate_partitions(const Box& box, int degree) {
  std::vector<Partition> out;
  if (degree < 0 || degree > box.area()) return out;
  std::vector<int> cur;
  // Largest first part first, so the output is lexicographically descending.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == box.rows) return;
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(degree, box.cols);
  return out;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> c(p[0], 0);
  for (int row : p.parts())
    for (int j = 0; j < row; ++j) ++c[j];
  return Partition(std::move(c));
}

Partition complement(const Partition& p, const Box& box) {
  if (!box.fits(p)) throw std::domain_error("partition " + p.to_string() + " does not fit in the box");
  std::vector<int> c(box.rows);
  for (int i = 0; i < box.rows; ++i) c[i] = box.cols - p[box.rows - 1 - i];
  return Partition(std::move(c));
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  // Interlacing: outer_{i+1} <= inner_i.
  for (std::size_t i = 0; i + 1 < outer.length(); ++i)
    if (outer[i + 1] > inner[i]) return false;
  return true;
}

bool is_vertical_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  for (std::size_t i = 0; i < outer.length(); ++i)
    if (outer[i] - inner[i] > 1) return false;
  return true;
}

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.weight() != lambda.weight() + mu.weight()) return 0;
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  if (mu.empty()) return 1;

  const std::size_t rows = nu.length();
  const std::size_t letters = mu.length();
  // Cells are filled in reverse reading order: rows top to bottom, each row
  // right to left. `filled[r][c]` holds the entry of cell (r, c) of the skew
  // shape, letters 1..letters.
  std::vector<std::vector<int>> filled(rows);
  for (std::size_t r = 0; r < rows; ++r) filled[r].assign(nu[r], 0);
  std::vector<int> used(letters + 1, 0);

  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < rows; ++r)
    for (int c = nu[r] - 1; c >= lambda[r]; --c) cells.emplace_back(static_cast<int>(r), c);

  std::uint64_t count = 0;
  std::function<void(std::size_t)> place = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[idx];
    // Row weakly increasing: entry <= the (already placed) entry to its right.
    int hi = static_cast<int>(letters);
    if (c + 1 < nu[r]) hi = std::min(hi, filled[r][c + 1]);
    // Column strictly increasing: entry > the entry above, if that cell is skew.
    int lo = 1;
    if (r > 0 && c >= lambda[r - 1]) lo = filled[r - 1][c] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= mu[v - 1]) continue;
      // Lattice condition on the reading word prefix.
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;
      filled[r][c] = v;
      ++used[v];
      place(idx + 1);
      --used[v];
      filled[r][c] = 0;
    }
  };
  place(0);
  return count;
}

}  // namespace schubert
