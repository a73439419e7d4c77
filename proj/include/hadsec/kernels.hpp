#pragma once

// OpenMP kernels for the rank computations. Each has a serial counterpart in
// reference.hpp that the test suite checks it against.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hadsec/exponent.hpp"
#include "hadsec/field.hpp"

namespace hadsec {

/// Below this many element updates an elimination step stays serial.
inline constexpr std::size_t kParallelWorkThreshold = std::size_t{1} << 14;

/// Row rank by Gaussian elimination. Takes the matrix by value and destroys it.
template <class Field>
std::size_t rank(const Field& field, FieldMatrix<Field> m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && field.is_zero(m(pivot, c))) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(r, pivot);

    auto* prow = m.row_data(r);
    const auto inv = field.inv(prow[c]);
    for (std::size_t k = c; k < cols; ++k) prow[k] = field.mul(prow[k], inv);

    const std::size_t below = rows - r - 1;
    const bool go_parallel = below * (cols - c) >= kParallelWorkThreshold;
#pragma omp parallel for schedule(static) if (go_parallel)
    for (std::size_t i = r + 1; i < rows; ++i) {
      auto* row = m.row_data(i);
      if (field.is_zero(row[c])) continue;
      const auto f = row[c];
      for (std::size_t k = c; k < cols; ++k) row[k] = field.sub(row[k], field.mul(f, prow[k]));
    }
    ++r;
  }
  return r;
}

/// Column h of the result is eta[:, h] (x) A[:, h]; row index is i * A.rows() + l.
template <class Field>
FieldMatrix<Field> khatri_rao(const Field& field, const FieldMatrix<Field>& eta, const ExponentMatrix& a) {
  if (eta.cols() != a.cols()) throw FieldError("khatri_rao: column counts differ");
  const std::size_t er = eta.rows();
  const std::size_t ar = a.rows();
  const std::size_t cols = a.cols();

  // Exponents reduced into the field once, shared by every block.
  FieldMatrix<Field> a_field(ar, cols);
  for (std::size_t l = 0; l < ar; ++l)
    for (std::size_t h = 0; h < cols; ++h) a_field(l, h) = field.from_int(a(l, h));

  FieldMatrix<Field> out(er * ar, cols, field.zero());
  const bool go_parallel = er * ar * cols >= kParallelWorkThreshold;
#pragma omp parallel for collapse(2) schedule(static) if (go_parallel)
  for (std::size_t i = 0; i < er; ++i)
    for (std::size_t l = 0; l < ar; ++l) {
      const auto* e = eta.row_data(i);
      const auto* al = a_field.row_data(l);
      auto* dst = out.row_data(i * ar + l);
      for (std::size_t h = 0; h < cols; ++h) dst[h] = field.mul(e[h], al[h]);
    }
  return out;
}

/// phi_A(y): entry h is prod_l y_l^{A[l,h]}. Negative exponents need invertible y.
template <class Field>
std::vector<typename Field::Element> eval_monomial(const Field& field, const ExponentMatrix& a,
                                                   const std::vector<typename Field::Element>& y) {
  if (y.size() != a.rows()) throw FieldError("eval_monomial: point has wrong length");
  for (const auto& v : y)
    if (field.is_zero(v)) throw FieldError("eval_monomial: torus point has a zero coordinate");
  std::vector<typename Field::Element> out(a.cols(), field.one());
  for (std::size_t h = 0; h < a.cols(); ++h) {
    auto acc = field.one();
    for (std::size_t l = 0; l < a.rows(); ++l) {
      const std::int64_t e = a(l, h);
      if (e == 0) continue;
      acc = field.mul(acc, e == 1 ? y[l] : field.pow(y[l], e));
    }
    out[h] = acc;
  }
  return out;
}

/// Column `c` of a point matrix, as a vector.
template <class Field>
std::vector<typename Field::Element> point(const FieldMatrix<Field>& y, std::size_t c) {
  std::vector<typename Field::Element> out(y.rows());
  for (std::size_t l = 0; l < y.rows(); ++l) out[l] = y(l, c);
  return out;
}

/// phi_A evaluated at every column of `y`, one output row per point.
template <class Field>
FieldMatrix<Field> monomial_table(const Field& field, const ExponentMatrix& a, const FieldMatrix<Field>& y) {
  FieldMatrix<Field> out(y.cols(), a.cols());
  const bool go_parallel = y.cols() * a.cols() * a.rows() >= kParallelWorkThreshold;
  // Exceptions may not escape a parallel region, so zero coordinates are rejected up front.
  for (const auto& v : y.data())
    if (field.is_zero(v)) throw FieldError("monomial_table: torus point has a zero coordinate");
#pragma omp parallel for schedule(static) if (go_parallel)
  for (std::size_t i = 0; i < y.cols(); ++i) {
    const auto values = eval_monomial(field, a, point<Field>(y, i));
    std::copy(values.begin(), values.end(), out.row_data(i));
  }
  return out;
}

/// Secant eta at points y_1..y_R (the columns of `y`): row j >= 2 is
/// phi(y_1 * y_j), row 1 is phi(y_1) plus the sum of the other rows.
template <class Field>
FieldMatrix<Field> eta_secant(const Field& field, const ExponentMatrix& a, const FieldMatrix<Field>& y) {
  if (y.cols() == 0) throw FieldError("eta_secant: need at least one point");
  if (y.rows() != a.rows()) throw FieldError("eta_secant: point length differs from exponent rows");
  const std::size_t big_r = y.cols();
  const std::size_t cols = a.cols();
  const auto table = monomial_table(field, a, y);
  FieldMatrix<Field> eta(big_r, cols);
  const auto* base = table.row_data(0);
  std::copy(base, base + cols, eta.row_data(0));
  for (std::size_t j = 1; j < big_r; ++j) {
    const auto* tj = table.row_data(j);
    auto* dst = eta.row_data(j);
    auto* head = eta.row_data(0);
    for (std::size_t h = 0; h < cols; ++h) {
      dst[h] = field.mul(base[h], tj[h]);
      head[h] = field.add(head[h], dst[h]);
    }
  }
  return eta;
}

/// Hadamard eta at (y_0 | y_{k,j}), in factored form.
///
/// With Q_k = 1 + sum_j phi(y_{k,j}), the lattice sum collapses to
/// row 0 = phi(y_0) * prod_k Q_k and row (k,j) = phi(y_0) * phi(y_{k,j}) * prod_{h != k} Q_h.
/// Prefix and suffix products avoid dividing by Q_k, which may vanish mod p.
template <class Field>
FieldMatrix<Field> eta_hadamard(const Field& field, const ExponentMatrix& a, const HadamardSpec& spec,
                                const FieldMatrix<Field>& y) {
  const auto big_r = static_cast<std::size_t>(spec.R());
  if (y.cols() != big_r) throw FieldError("eta_hadamard: expected " + std::to_string(big_r) + " points");
  if (y.rows() != a.rows()) throw FieldError("eta_hadamard: point length differs from exponent rows");
  const std::size_t cols = a.cols();
  const std::size_t m = spec.m();
  const auto table = monomial_table(field, a, y);

  std::vector<std::vector<typename Field::Element>> q(m, std::vector<typename Field::Element>(cols, field.one()));
  for (std::size_t k = 1; k <= m; ++k)
    for (int j = 1; j < spec.r()[k - 1]; ++j) {
      const auto* t = table.row_data(spec.point_index(k, static_cast<std::size_t>(j)));
      for (std::size_t h = 0; h < cols; ++h) q[k - 1][h] = field.add(q[k - 1][h], t[h]);
    }

  // prefix[k] = phi(y_0) * Q_1 * ... * Q_k, suffix[k] = Q_{k+1} * ... * Q_m (1-based k).
  std::vector<std::vector<typename Field::Element>> prefix(m + 1), suffix(m + 1);
  prefix[0].assign(table.row_data(0), table.row_data(0) + cols);
  for (std::size_t k = 1; k <= m; ++k) {
    prefix[k].resize(cols);
    for (std::size_t h = 0; h < cols; ++h) prefix[k][h] = field.mul(prefix[k - 1][h], q[k - 1][h]);
  }
  suffix[m].assign(cols, field.one());
  for (std::size_t k = m; k-- > 0;) {
    suffix[k].resize(cols);
    for (std::size_t h = 0; h < cols; ++h) suffix[k][h] = field.mul(suffix[k + 1][h], q[k][h]);
  }

  FieldMatrix<Field> eta(big_r, cols);
  std::copy(prefix[m].begin(), prefix[m].end(), eta.row_data(0));
  for (std::size_t k = 1; k <= m; ++k)
    for (int j = 1; j < spec.r()[k - 1]; ++j) {
      const std::size_t row = spec.point_index(k, static_cast<std::size_t>(j));
      const auto* t = table.row_data(row);
      auto* dst = eta.row_data(row);
      for (std::size_t h = 0; h < cols; ++h)
        dst[h] = field.mul(field.mul(prefix[k - 1][h], suffix[k][h]), t[h]);
    }
  return eta;
}

}  // namespace hadsec
