#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hadsec/config.hpp"
#include "hadsec/exponent.hpp"

namespace hadsec {

/// Exponent vectors of the monomials of a polynomial (coefficients dropped).
/// Non-empty, pairwise distinct, equal length, non-negative.
class Support {
 public:
  explicit Support(std::vector<std::vector<std::int64_t>> points);

  [[nodiscard]] const std::vector<std::vector<std::int64_t>>& points() const noexcept { return points_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] std::size_t ambient() const noexcept { return points_.front().size(); }

  /// One vector per non-blank line, comma or whitespace separated; '#' starts a comment.
  static Support read(std::istream& in);

 private:
  std::vector<std::vector<std::int64_t>> points_;
};

enum class SupportShape {
  monomial,                 // a single point
  binomial,                 // two points: the Newton polytope is a segment with no interior support
  collinear_with_interior,  // more points on one segment; such a polynomial factors
  not_collinear,
};

/// Shape of the Newton polytope of a support. Only meaningful for a concise,
/// irreducible polynomial, which the caller must guarantee.
SupportShape is_binomial_segment(const Support& support);
std::string to_string(SupportShape s);

/// The tropicalization of the affine cone over a toric variety is the row span of A.
struct TropicalLinearSpace {
  std::vector<std::vector<mpq_class>> basis;  // reduced row echelon form
  std::size_t dimension = 0;                  // rank A
  std::size_t projective_dimension = 0;       // rank A - 1, after quotienting by the all-ones line
};

TropicalLinearSpace trop_toric(const ExponentMatrix& a);

/// Trop(X * Y) = Trop X + Trop Y for toric X, Y, checked three ways.
struct TropicalSumReport {
  std::size_t rank_a = 0;
  std::size_t rank_b = 0;
  std::size_t rank_stacked = 0;    // rank over Q of stack(A, B)
  std::size_t rank_union = 0;      // dimension of the span of both tropical bases
  std::size_t jacobian_rank = 0;   // rank mod p of the Jacobian of phi_A(s) * phi_B(t)
  [[nodiscard]] bool consistent() const { return rank_stacked == rank_union && rank_union == jacobian_rank; }
  /// Projective dimension of the Hadamard product.
  [[nodiscard]] std::size_t sum_dimension() const { return rank_stacked - 1; }
};

TropicalSumReport trop_hadamard_sum(const ExponentMatrix& a, const ExponentMatrix& b, const RunConfig& config = {});

/// True iff rank A < N + 1, so the toric ideal holds a binomial and the
/// generic Hadamard rank of X is infinite.
bool infinite_generic_hrank_toric(const ExponentMatrix& a);

}  // namespace hadsec
