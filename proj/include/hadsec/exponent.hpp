#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hadsec {

class ExponentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Column-count guard for every builder.
struct SizeLimits {
  std::size_t max_columns = 10'000'000;
};

/// Integer exponent matrix of a monomial map: one row per torus parameter,
/// one column per ambient coordinate.
///
/// The class itself only enforces rectangularity. Toric-specific invariants
/// (homogeneity, distinct columns) are checked by `validate_toric`, because
/// normalized and stacked matrices legitimately violate homogeneity.
class ExponentMatrix {
 public:
  using Label = std::vector<int>;

  ExponentMatrix() = default;
  ExponentMatrix(std::size_t rows, std::size_t cols);
  ExponentMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries);
  ExponentMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static ExponentMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return rows_ == 0; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const std::int64_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::vector<std::int64_t> column(std::size_t c) const;

  /// Optional exponent multi-index per column, carried through by builders.
  [[nodiscard]] const std::vector<Label>& column_labels() const noexcept { return labels_; }
  void set_column_labels(std::vector<Label> labels);

  [[nodiscard]] std::vector<std::int64_t> column_sums() const;

  /// Equality ignores labels.
  friend bool operator==(const ExponentMatrix& a, const ExponentMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
  std::vector<Label> labels_;
};

/// The multi-index r = (r_1, ..., r_m) of a Hadamard product of secants.
class HadamardSpec {
 public:
  explicit HadamardSpec(std::vector<int> r);

  [[nodiscard]] const std::vector<int>& r() const noexcept { return r_; }
  [[nodiscard]] std::size_t m() const noexcept { return r_.size(); }
  [[nodiscard]] std::vector<int> r_prime() const;
  /// R = sum (r_k - 1) + 1.
  [[nodiscard]] int R() const noexcept { return R_; }
  /// Number of lattice terms prod r_k, saturating at SIZE_MAX.
  [[nodiscard]] std::size_t lattice_terms() const noexcept;
  /// Zero-based column index of y_{k,j} (k, j one-based) in the (y_0 | y_{k,j}) layout.
  [[nodiscard]] std::size_t point_index(std::size_t k, std::size_t j) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const HadamardSpec&, const HadamardSpec&) = default;

 private:
  std::vector<int> r_;
  int R_ = 1;
};

bool is_homogeneous(const ExponentMatrix& a);
bool has_distinct_columns(const ExponentMatrix& a);
/// Throws unless the matrix defines a non-degenerate projective toric variety.
void validate_toric(const ExponentMatrix& a);

/// Monomial embedding of P^{n_1} x ... x P^{n_k} by multidegree d.
/// Columns run in descending lexicographic order of the concatenated
/// exponent vectors, so the first column is (d_1,0,..,0 | d_2,0,..,0 | ...).
ExponentMatrix build_segre_veronese(std::span<const int> d, std::span<const int> n, SizeLimits limits = {});

/// The full-rank Segre matrix: a row of ones, then one row per (k, j),
/// j = 1..r'_k, with entry 1 where the column multi-index has i_k = j.
ExponentMatrix build_segre_bbar(std::span<const int> r_prime, SizeLimits limits = {});

/// Integer matrix with the same rational row span as `a`, first row all ones,
/// first column e_1, and linearly independent rows.
ExponentMatrix normalize(const ExponentMatrix& a);

bool is_normalized(const ExponentMatrix& a);

ExponentMatrix kron(const ExponentMatrix& a, const ExponentMatrix& b, SizeLimits limits = {});

/// Row concatenation; an empty operand is the identity.
ExponentMatrix stack(const ExponentMatrix& a, const ExponentMatrix& b);

/// Exact rank over Q.
std::size_t rational_rank(const ExponentMatrix& a);

/// True iff the row span of `sub` lies in the row span of `super` (over Q).
bool rowspan_contains(const ExponentMatrix& super, const ExponentMatrix& sub);
bool same_rowspan(const ExponentMatrix& a, const ExponentMatrix& b);

/// One row per line, comma-separated integers. Blank lines and '#' comments are skipped.
ExponentMatrix read_csv(std::istream& in);
ExponentMatrix read_csv_file(const std::string& path);
void write_csv(std::ostream& out, const ExponentMatrix& a);

std::uint64_t binomial(int n, int k);

}  // namespace hadsec
