#pragma once

// Serial, deliberately literal implementations kept for testing the kernels.
// Nothing in the library calls these.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hadsec/exponent.hpp"
#include "hadsec/field.hpp"

namespace hadsec::reference {

/// Upper bound on the lattice sum in eta_hadamard.
inline constexpr std::size_t kMaxLatticeTerms = 1'000'000;

/// Division-free elimination: row_i <- pivot * row_i - row_i[c] * row_r.
template <class Field>
std::size_t rank(const Field& field, FieldMatrix<Field> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && field.is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(r, pivot);
    const auto p = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const auto f = m(i, c);
      if (field.is_zero(f)) continue;
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = field.sub(field.mul(p, m(i, k)), field.mul(f, m(r, k)));
    }
    ++r;
  }
  return r;
}

template <class Field>
FieldMatrix<Field> khatri_rao(const Field& field, const FieldMatrix<Field>& eta, const ExponentMatrix& a) {
  if (eta.cols() != a.cols()) throw FieldError("khatri_rao: column counts differ");
  FieldMatrix<Field> out(eta.rows() * a.rows(), a.cols(), field.zero());
  for (std::size_t h = 0; h < a.cols(); ++h) {
    std::size_t row = 0;
    for (std::size_t i = 0; i < eta.rows(); ++i)
      for (std::size_t l = 0; l < a.rows(); ++l) out(row++, h) = field.mul(eta(i, h), field.from_int(a(l, h)));
  }
  return out;
}

/// Repeated multiplication, no fast exponentiation.
template <class Field>
std::vector<typename Field::Element> eval_monomial(const Field& field, const ExponentMatrix& a,
                                                   const std::vector<typename Field::Element>& y) {
  if (y.size() != a.rows()) throw FieldError("eval_monomial: point has wrong length");
  std::vector<typename Field::Element> out(a.cols());
  for (std::size_t h = 0; h < a.cols(); ++h) {
    auto acc = field.one();
    for (std::size_t l = 0; l < a.rows(); ++l) {
      const std::int64_t e = a(l, h);
      const auto base = e >= 0 ? y[l] : field.inv(y[l]);
      for (std::int64_t t = 0; t < (e >= 0 ? e : -e); ++t) acc = field.mul(acc, base);
    }
    out[h] = acc;
  }
  return out;
}

template <class Field>
std::vector<typename Field::Element> hadamard(const Field& field, const std::vector<typename Field::Element>& u,
                                              const std::vector<typename Field::Element>& v) {
  std::vector<typename Field::Element> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = field.mul(u[i], v[i]);
  return out;
}

template <class Field>
std::vector<typename Field::Element> column(const FieldMatrix<Field>& y, std::size_t c) {
  std::vector<typename Field::Element> out(y.rows());
  for (std::size_t l = 0; l < y.rows(); ++l) out[l] = y(l, c);
  return out;
}

/// Evaluates phi at the coordinatewise products y_1 * y_j directly.
template <class Field>
FieldMatrix<Field> eta_secant(const Field& field, const ExponentMatrix& a, const FieldMatrix<Field>& y) {
  const std::size_t big_r = y.cols();
  FieldMatrix<Field> eta(big_r, a.cols(), field.zero());
  const auto y1 = column<Field>(y, 0);
  const auto first = reference::eval_monomial(field, a, y1);
  for (std::size_t h = 0; h < a.cols(); ++h) eta(0, h) = first[h];
  for (std::size_t j = 1; j < big_r; ++j) {
    const auto v = reference::eval_monomial(field, a, reference::hadamard(field, y1, column<Field>(y, j)));
    for (std::size_t h = 0; h < a.cols(); ++h) {
      eta(j, h) = v[h];
      eta(0, h) = field.add(eta(0, h), v[h]);
    }
  }
  return eta;
}

/// Literal lattice sum over j in [r'_1] x ... x [r'_m] (each index from 0),
/// row-major with j_m fastest, y_{k,0} = 1.
template <class Field>
FieldMatrix<Field> eta_hadamard(const Field& field, const ExponentMatrix& a, const HadamardSpec& spec,
                                const FieldMatrix<Field>& y) {
  const std::size_t terms = spec.lattice_terms();
  if (terms > kMaxLatticeTerms) throw FieldError("eta_hadamard: lattice sum exceeds 10^6 terms");
  if (y.cols() != static_cast<std::size_t>(spec.R())) throw FieldError("eta_hadamard: wrong number of points");
  const std::size_t m = spec.m();
  const auto& r = spec.r();
  const auto y0 = column<Field>(y, 0);

  FieldMatrix<Field> eta(y.cols(), a.cols(), field.zero());
  std::vector<int> j(m, 0);
  for (std::size_t t = 0; t < terms; ++t) {
    auto pt = y0;
    for (std::size_t k = 0; k < m; ++k)
      if (j[k] > 0) pt = reference::hadamard(field, pt, column<Field>(y, spec.point_index(k + 1, static_cast<std::size_t>(j[k]))));
    const auto v = reference::eval_monomial(field, a, pt);
    for (std::size_t h = 0; h < a.cols(); ++h) eta(0, h) = field.add(eta(0, h), v[h]);
    for (std::size_t k = 0; k < m; ++k) {
      if (j[k] == 0) continue;
      const std::size_t row = spec.point_index(k + 1, static_cast<std::size_t>(j[k]));
      for (std::size_t h = 0; h < a.cols(); ++h) eta(row, h) = field.add(eta(row, h), v[h]);
    }
    for (std::size_t k = m; k-- > 0;) {
      if (++j[k] < r[k]) break;
      j[k] = 0;
    }
  }
  return eta;
}

}  // namespace hadsec::reference
