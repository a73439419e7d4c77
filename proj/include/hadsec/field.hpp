#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hadsec {

/// 128-bit unsigned for modular products (a GCC/Clang extension).
__extension__ using u128 = unsigned __int128;

/// 2^61 - 1, the default modulus for randomized rank evaluation.
inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic Miller-Rabin for the whole 64-bit range.
bool is_probable_prime(std::uint64_t n);

/// Largest prime strictly below `bound`; throws if none exists above 2.
std::uint64_t previous_prime(std::uint64_t bound);

/// Arithmetic in Z/pZ with canonical residues in [0, p).
///
/// The modulus must be an odd prime below 2^62 so that sums of two residues
/// never overflow and products fit in 128 bits.
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  [[nodiscard]] std::uint64_t modulus() const noexcept { return p_; }

  [[nodiscard]] Element zero() const noexcept { return 0; }
  [[nodiscard]] Element one() const noexcept { return 1; }
  [[nodiscard]] bool is_zero(Element a) const noexcept { return a == 0; }

  [[nodiscard]] Element add(Element a, Element b) const noexcept {
    const Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] Element sub(Element a, Element b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  [[nodiscard]] Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>((static_cast<u128>(a) * b) % p_);
  }
  /// Fermat inverse; throws on zero.
  [[nodiscard]] Element inv(Element a) const;
  /// a^e for any integer e; negative exponents require a != 0.
  [[nodiscard]] Element pow(Element a, std::int64_t e) const;
  [[nodiscard]] Element from_int(std::int64_t v) const noexcept;

 private:
  std::uint64_t p_;
};

/// Exact arithmetic over Q backed by GMP.
class RationalField {
 public:
  using Element = mpq_class;

  [[nodiscard]] Element zero() const { return Element(0); }
  [[nodiscard]] Element one() const { return Element(1); }
  [[nodiscard]] bool is_zero(const Element& a) const { return sgn(a) == 0; }
  [[nodiscard]] Element add(const Element& a, const Element& b) const { return a + b; }
  [[nodiscard]] Element sub(const Element& a, const Element& b) const { return a - b; }
  [[nodiscard]] Element neg(const Element& a) const { return -a; }
  [[nodiscard]] Element mul(const Element& a, const Element& b) const { return a * b; }
  [[nodiscard]] Element inv(const Element& a) const;
  [[nodiscard]] Element pow(const Element& a, std::int64_t e) const;
  [[nodiscard]] Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
};

/// Dense row-major matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  T* row_data(std::size_t r) { return data_.data() + r * cols_; }
  const T* row_data(std::size_t r) const { return data_.data() + r * cols_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Row-stacks `other` below this matrix.
  void append_rows(const DenseMatrix& other) {
    if (rows_ == 0 && cols_ == 0) cols_ = other.cols_;
    if (other.cols_ != cols_) throw FieldError("append_rows: column count mismatch");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
  }

  [[nodiscard]] DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  [[nodiscard]] const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class Field>
using FieldMatrix = DenseMatrix<typename Field::Element>;

using ModMatrix = FieldMatrix<PrimeField>;
using RatMatrix = FieldMatrix<RationalField>;

}  // namespace hadsec
