#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace hadsec {

/// Incrementally maintained echelon basis of a subspace of Q^n.
class RationalRowSpace {
 public:
  explicit RationalRowSpace(std::size_t ambient) : ambient_(ambient) {}

  /// Adds `v` if it is independent of the current basis; returns whether it was added.
  bool add(std::span<const mpq_class> v);
  bool add_integers(std::span<const std::int64_t> v);

  [[nodiscard]] bool contains(std::span<const mpq_class> v) const;
  [[nodiscard]] bool contains_integers(std::span<const std::int64_t> v) const;

  [[nodiscard]] std::size_t dimension() const noexcept { return basis_.size(); }
  [[nodiscard]] std::size_t ambient() const noexcept { return ambient_; }

  /// Basis in reduced row echelon form, rows ordered by pivot column.
  [[nodiscard]] std::vector<std::vector<mpq_class>> reduced_basis() const;

 private:
  std::vector<mpq_class> reduce(std::span<const mpq_class> v) const;

  std::size_t ambient_;
  std::vector<std::vector<mpq_class>> basis_;  // each with a unit pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace hadsec
