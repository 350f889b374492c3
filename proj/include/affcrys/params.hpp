#pragma once

#include <cstddef>
#include <vector>

#include "affcrys/errors.hpp"

namespace affcrys {

/**
 * @brief Rank and orientation data for the affine type A_{n-1}^{(1)} setup.
 *
 * All index arithmetic on Dynkin labels is modulo n.  The neighbour shifts
 * record, for each label i, how far the exponent-lowering factors of the
 * generator monomial A_{i,k} sit from k:
 *
 *   A_{i,k} = Y_{i,k} * Y_{i,k+K} * Y_{i-1,k+prev_shift[i]}^{-1} * Y_{i+1,k+next_shift[i]}^{-1}.
 *
 * The default orientation uses prev_shift[i] = 1 and next_shift[i] = 0 for
 * every i, with K = 1.  A custom orientation may be supplied for n >= 3 as a
 * matrix (c_{ij}) satisfying c_{i,i+1} + c_{i+1,i} = K on every cyclic edge,
 * in which case prev_shift[i] = c_{i-1,i} and next_shift[i] = c_{i+1,i}.
 * For n = 2 the two Dynkin neighbours of a node coincide, so a matrix entry
 * c_{01} cannot distinguish the two connecting edges; explicit matrices are
 * therefore rejected at n = 2 and only the default orientation is available.
 */
struct CrystalParams {
  int n = 0;
  long long K = 1;
  std::vector<long long> prev_shift;
  std::vector<long long> next_shift;

  [[nodiscard]] bool is_default_orientation() const {
    for (long long v : prev_shift)
      if (v != 1) return false;
    for (long long v : next_shift)
      if (v != 0) return false;
    return K == 1;
  }

  /// Entry a_{ji} of the affine Cartan matrix (pairing of alpha_i with h_j).
  [[nodiscard]] long long cartan(int j, int i) const {
    if (j == i) return 2;
    if (n == 2) return -2;  // double bond between the two affine nodes
    int d = ((j - i) % n + n) % n;
    if (d == 1 || d == n - 1) return -1;
    return 0;
  }

  friend bool operator==(const CrystalParams&, const CrystalParams&) = default;
};

/// Default orientation for rank parameter n (Dynkin labels 0..n-1).
[[nodiscard]] inline CrystalParams make_params(int n) {
  if (n < 2) throw InvalidParams("rank parameter n must be at least 2");
  CrystalParams p;
  p.n = n;
  p.K = 1;
  p.prev_shift.assign(static_cast<std::size_t>(n), 1);
  p.next_shift.assign(static_cast<std::size_t>(n), 0);
  return p;
}

/**
 * @brief Orientation given by an n x n integer matrix c.
 *
 * Requires n >= 3; the matrix must satisfy c_{i,i+1} + c_{i+1,i} = K for
 * every i (indices mod n).  Entries away from the cyclic edges are ignored.
 */
[[nodiscard]] inline CrystalParams make_params(int n, const std::vector<std::vector<long long>>& c,
                                               long long K = 1) {
  if (n < 2) throw InvalidParams("rank parameter n must be at least 2");
  if (n == 2)
    throw InvalidParams(
        "n = 2 orientation matrices are ambiguous (the two edges between the nodes share one "
        "matrix entry); use the default orientation");
  if (c.size() != static_cast<std::size_t>(n)) throw InvalidParams("orientation matrix must be n x n");
  for (const auto& row : c)
    if (row.size() != static_cast<std::size_t>(n))
      throw InvalidParams("orientation matrix must be n x n");
  CrystalParams p;
  p.n = n;
  p.K = K;
  p.prev_shift.resize(static_cast<std::size_t>(n));
  p.next_shift.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int succ = (i + 1) % n;
    if (detail::chk_add(c[static_cast<std::size_t>(i)][static_cast<std::size_t>(succ)],
                        c[static_cast<std::size_t>(succ)][static_cast<std::size_t>(i)]) != K)
      throw InvalidParams("orientation matrix must satisfy c_{i,i+1} + c_{i+1,i} = K on every edge");
  }
  for (int i = 0; i < n; ++i) {
    int prev = (i + n - 1) % n;
    int succ = (i + 1) % n;
    p.prev_shift[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(prev)][static_cast<std::size_t>(i)];
    p.next_shift[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(succ)][static_cast<std::size_t>(i)];
  }
  return p;
}

}  // namespace affcrys
