#include "hadsec/exponent.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "hadsec/field.hpp"
#include "hadsec/rowspace.hpp"

namespace hadsec {

ExponentMatrix::ExponentMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

ExponentMatrix::ExponentMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw ExponentError("ExponentMatrix: entry count does not match shape");
}

ExponentMatrix::ExponentMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> tmp;
  for (const auto& r : rows) tmp.emplace_back(r);
  *this = from_rows(tmp);
}

ExponentMatrix ExponentMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  std::vector<std::int64_t> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw ExponentError("ExponentMatrix: ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return ExponentMatrix(rows.size(), cols, std::move(data));
}

std::vector<std::int64_t> ExponentMatrix::column(std::size_t c) const {
  std::vector<std::int64_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void ExponentMatrix::set_column_labels(std::vector<Label> labels) {
  if (!labels.empty() && labels.size() != cols_) throw ExponentError("column label count mismatch");
  labels_ = std::move(labels);
}

std::vector<std::int64_t> ExponentMatrix::column_sums() const {
  std::vector<std::int64_t> sums(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) sums[c] += (*this)(r, c);
  return sums;
}

// ---------------------------------------------------------------------------

HadamardSpec::HadamardSpec(std::vector<int> r) : r_(std::move(r)) {
  if (r_.empty()) throw ExponentError("Hadamard spec must have at least one factor");
  R_ = 1;
  for (int rk : r_) {
    if (rk < 1) throw ExponentError("Hadamard spec entries must be >= 1");
    R_ += rk - 1;
  }
}

std::vector<int> HadamardSpec::r_prime() const {
  std::vector<int> out(r_.size());
  std::transform(r_.begin(), r_.end(), out.begin(), [](int x) { return x - 1; });
  return out;
}

std::size_t HadamardSpec::lattice_terms() const noexcept {
  std::size_t total = 1;
  for (int rk : r_) {
    const auto f = static_cast<std::size_t>(rk);
    if (total > std::numeric_limits<std::size_t>::max() / f) return std::numeric_limits<std::size_t>::max();
    total *= f;
  }
  return total;
}

std::size_t HadamardSpec::point_index(std::size_t k, std::size_t j) const {
  if (k < 1 || k > r_.size() || j < 1 || j > static_cast<std::size_t>(r_[k - 1] - 1)) {
    throw ExponentError("point_index out of range");
  }
  std::size_t idx = 0;
  for (std::size_t h = 0; h + 1 < k; ++h) idx += static_cast<std::size_t>(r_[h] - 1);
  return idx + j;
}

std::string HadamardSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(r_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

bool is_homogeneous(const ExponentMatrix& a) {
  const auto sums = a.column_sums();
  return std::adjacent_find(sums.begin(), sums.end(), std::not_equal_to<>()) == sums.end();
}

bool has_distinct_columns(const ExponentMatrix& a) {
  std::set<std::vector<std::int64_t>> seen;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!seen.insert(a.column(c)).second) return false;
  }
  return true;
}

void validate_toric(const ExponentMatrix& a) {
  if (a.rows() < 1 || a.cols() < 2) throw ExponentError("exponent matrix needs >= 1 row and >= 2 columns");
  if (!has_distinct_columns(a)) throw ExponentError("exponent matrix has repeated columns (degenerate)");
  if (!is_homogeneous(a)) {
    // Non-homogeneous input is still projective when 1 lies in the row span.
    RationalRowSpace span(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) span.add_integers(a.row(r));
    std::vector<std::int64_t> ones(a.cols(), 1);
    if (!span.contains_integers(ones)) throw ExponentError("not projectively homogeneous");
  }
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  u128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > std::numeric_limits<std::uint64_t>::max()) throw ExponentError("binomial overflow");
  }
  return static_cast<std::uint64_t>(result);
}

namespace {

// Compositions of `total` into `parts` non-negative parts, descending lex.
void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

std::size_t checked_product(const std::vector<std::size_t>& factors, const SizeLimits& limits, const char* what) {
  std::size_t total = 1;
  for (std::size_t f : factors) {
    if (f != 0 && total > limits.max_columns / f) {
      throw ExponentError(std::string(what) + ": column count exceeds cap of " + std::to_string(limits.max_columns));
    }
    total *= f;
  }
  if (total > limits.max_columns) {
    throw ExponentError(std::string(what) + ": column count exceeds cap of " + std::to_string(limits.max_columns));
  }
  return total;
}

}  // namespace

ExponentMatrix build_segre_veronese(std::span<const int> d, std::span<const int> n, SizeLimits limits) {
  if (d.empty() || n.empty()) throw ExponentError("segre_veronese: empty degree or dimension vector");
  if (d.size() != n.size()) throw ExponentError("segre_veronese: degree and dimension vectors differ in length");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 1 || n[i] < 1) throw ExponentError("segre_veronese: all d_i and n_i must be >= 1");
  }
  const std::size_t k = d.size();

  std::vector<std::size_t> counts(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t c = binomial(n[i] + d[i], d[i]);
    if (c > limits.max_columns) throw ExponentError("segre_veronese: column count exceeds cap");
    counts[i] = static_cast<std::size_t>(c);
  }
  const std::size_t cols = checked_product(counts, limits, "segre_veronese");

  std::vector<std::vector<std::vector<int>>> factor_exps(k);
  std::size_t rows = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<int> cur;
    compositions(d[i], n[i] + 1, cur, factor_exps[i]);
    rows += static_cast<std::size_t>(n[i] + 1);
  }

  ExponentMatrix a(rows, cols);
  std::vector<ExponentMatrix::Label> labels(cols);
  std::vector<std::size_t> idx(k, 0);  // row-major odometer, factor 0 slowest
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t row = 0;
    auto& label = labels[c];
    for (std::size_t i = 0; i < k; ++i) {
      for (int e : factor_exps[i][idx[i]]) {
        a(row++, c) = e;
        label.push_back(e);
      }
    }
    for (std::size_t i = k; i-- > 0;) {
      if (++idx[i] < counts[i]) break;
      idx[i] = 0;
    }
  }
  a.set_column_labels(std::move(labels));
  return a;
}

ExponentMatrix build_segre_bbar(std::span<const int> r_prime, SizeLimits limits) {
  if (r_prime.empty()) throw ExponentError("segre_bbar: empty r'");
  std::vector<std::size_t> sizes;
  std::size_t rows = 1;
  for (int rk : r_prime) {
    if (rk < 1) throw ExponentError("segre_bbar: r' entries must be >= 1");
    sizes.push_back(static_cast<std::size_t>(rk) + 1);
    rows += static_cast<std::size_t>(rk);
  }
  const std::size_t cols = checked_product(sizes, limits, "segre_bbar");
  const std::size_t m = r_prime.size();

  ExponentMatrix a(rows, cols);
  std::vector<ExponentMatrix::Label> labels(cols);
  std::vector<std::size_t> idx(m, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    a(0, c) = 1;
    std::size_t row_offset = 1;
    for (std::size_t k = 0; k < m; ++k) {
      if (idx[k] >= 1) a(row_offset + idx[k] - 1, c) = 1;
      row_offset += static_cast<std::size_t>(r_prime[k]);
      labels[c].push_back(static_cast<int>(idx[k]));
    }
    for (std::size_t k = m; k-- > 0;) {
      if (++idx[k] < sizes[k]) break;
      idx[k] = 0;
    }
  }
  a.set_column_labels(std::move(labels));
  return a;
}

bool is_normalized(const ExponentMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return false;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (a(0, c) != 1) return false;
  for (std::size_t r = 1; r < a.rows(); ++r)
    if (a(r, 0) != 0) return false;
  return rational_rank(a) == a.rows();
}

ExponentMatrix normalize(const ExponentMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw ExponentError("normalize: empty matrix");
  if (is_normalized(a)) return a;

  const std::size_t cols = a.cols();
  RationalRowSpace original(cols);
  for (std::size_t r = 0; r < a.rows(); ++r) original.add_integers(a.row(r));
  const std::vector<std::int64_t> ones(cols, 1);
  if (!original.contains_integers(ones)) throw ExponentError("not projectively homogeneous");

  RationalRowSpace built(cols);
  built.add_integers(ones);
  std::vector<std::vector<std::int64_t>> out_rows{ones};

  // Rows already vanishing at the first coordinate are taken as they are;
  // the rest are shifted by a multiple of the all-ones row.
  for (int pass = 0; pass < 2 && built.dimension() < original.dimension(); ++pass) {
    for (std::size_t r = 0; r < a.rows() && built.dimension() < original.dimension(); ++r) {
      const auto row = a.row(r);
      const bool starts_at_zero = row[0] == 0;
      if ((pass == 0) != starts_at_zero) continue;
      std::vector<std::int64_t> candidate(row.begin(), row.end());
      if (!starts_at_zero) {
        const std::int64_t shift = row[0];
        for (auto& x : candidate) x -= shift;
        const auto lead = std::find_if(candidate.begin(), candidate.end(), [](std::int64_t x) { return x != 0; });
        if (lead != candidate.end() && *lead < 0) {
          for (auto& x : candidate) x = -x;
        }
      }
      if (built.add_integers(candidate)) out_rows.push_back(std::move(candidate));
    }
  }

  ExponentMatrix result = ExponentMatrix::from_rows(out_rows);
  result.set_column_labels(a.column_labels());
  return result;
}

ExponentMatrix kron(const ExponentMatrix& a, const ExponentMatrix& b, SizeLimits limits) {
  const std::size_t cols = checked_product({a.cols(), b.cols()}, limits, "kron");
  const std::size_t rows = a.rows() * b.rows();
  ExponentMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::int64_t aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ExponentMatrix stack(const ExponentMatrix& a, const ExponentMatrix& b) {
  if (b.empty()) return a;
  if (a.empty()) return b;
  if (a.cols() != b.cols()) throw ExponentError("stack: column counts differ");
  std::vector<std::int64_t> data;
  data.reserve((a.rows() + b.rows()) * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) data.insert(data.end(), a.row(r).begin(), a.row(r).end());
  for (std::size_t r = 0; r < b.rows(); ++r) data.insert(data.end(), b.row(r).begin(), b.row(r).end());
  ExponentMatrix out(a.rows() + b.rows(), a.cols(), std::move(data));
  out.set_column_labels(a.column_labels());
  return out;
}

std::size_t rational_rank(const ExponentMatrix& a) {
  RationalRowSpace span(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) span.add_integers(a.row(r));
  return span.dimension();
}

bool rowspan_contains(const ExponentMatrix& super, const ExponentMatrix& sub) {
  if (sub.empty()) return true;
  if (super.cols() != sub.cols()) throw ExponentError("rowspan_contains: column counts differ");
  RationalRowSpace span(super.cols());
  for (std::size_t r = 0; r < super.rows(); ++r) span.add_integers(super.row(r));
  for (std::size_t r = 0; r < sub.rows(); ++r)
    if (!span.contains_integers(sub.row(r))) return false;
  return true;
}

bool same_rowspan(const ExponentMatrix& a, const ExponentMatrix& b) {
  return rowspan_contains(a, b) && rowspan_contains(b, a);
}

ExponentMatrix read_csv(std::istream& in) {
  std::vector<std::vector<std::int64_t>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::int64_t> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      std::size_t used = 0;
      try {
        row.push_back(std::stoll(cell, &used));
      } catch (const std::exception&) {
        throw ExponentError("csv line " + std::to_string(line_no) + ": not an integer: '" + cell + "'");
      }
      if (cell.find_first_not_of(" \t\r", used) != std::string::npos) {
        throw ExponentError("csv line " + std::to_string(line_no) + ": trailing characters in '" + cell + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ExponentError("csv line " + std::to_string(line_no) + ": ragged row");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ExponentError("csv: no rows");
  return ExponentMatrix::from_rows(rows);
}

ExponentMatrix read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ExponentError("cannot open matrix file '" + path + "'");
  return read_csv(in);
}

void write_csv(std::ostream& out, const ExponentMatrix& a) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) out << ',';
      out << a(r, c);
    }
    out << '\n';
  }
}

}  // namespace hadsec
