#include "hadsec/rowspace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hadsec {

std::vector<mpq_class> RationalRowSpace::reduce(std::span<const mpq_class> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("RationalRowSpace: vector length mismatch");
  std::vector<mpq_class> w(v.begin(), v.end());
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const std::size_t p = pivots_[b];
    if (sgn(w[p]) == 0) continue;
    const mpq_class f = w[p];
    const auto& row = basis_[b];
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (sgn(row[c]) != 0) w[c] -= f * row[c];
    }
  }
  return w;
}

bool RationalRowSpace::add(std::span<const mpq_class> v) {
  auto w = reduce(v);
  const auto it = std::find_if(w.begin(), w.end(), [](const mpq_class& x) { return sgn(x) != 0; });
  if (it == w.end()) return false;
  const auto p = static_cast<std::size_t>(it - w.begin());
  const mpq_class lead = w[p];
  for (auto& x : w) x /= lead;
  // Keep the basis fully reduced so reduced_basis() is a true RREF.
  for (auto& row : basis_) {
    if (sgn(row[p]) == 0) continue;
    const mpq_class f = row[p];
    for (std::size_t c = 0; c < ambient_; ++c) row[c] -= f * w[c];
  }
  basis_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

bool RationalRowSpace::add_integers(std::span<const std::int64_t> v) {
  std::vector<mpq_class> q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = static_cast<long>(v[i]);
  return add(q);
}

bool RationalRowSpace::contains(std::span<const mpq_class> v) const {
  const auto w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

bool RationalRowSpace::contains_integers(std::span<const std::int64_t> v) const {
  std::vector<mpq_class> q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = static_cast<long>(v[i]);
  return contains(q);
}

std::vector<std::vector<mpq_class>> RationalRowSpace::reduced_basis() const {
  std::vector<std::size_t> order(basis_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<std::vector<mpq_class>> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(basis_[i]);
  return out;
}

}  // namespace hadsec
