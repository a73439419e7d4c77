#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "hadsec/field.hpp"

namespace hadsec {

/// Torus points stored column-wise: column i is the point y_i.
template <class Field>
using ParameterMatrix = FieldMatrix<Field>;

/// Torus points as the columns of a (n+1) x count matrix over F_p.
///
/// Coordinates are uniform in {1, ..., p-1}; the stream depends only on
/// (seed, dim, count, p), so a trial with seed s + t is reproducible on its own.
inline ModMatrix random_torus_points(const PrimeField& field, std::size_t dim, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coord(1, field.modulus() - 1);
  ModMatrix y(dim, count);
  for (std::size_t c = 0; c < count; ++c)
    for (std::size_t l = 0; l < dim; ++l) y(l, c) = coord(rng);
  return y;
}

}  // namespace hadsec
