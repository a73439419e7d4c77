#include "hadsec/tropical.hpp"

#include <istream>
#include <set>
#include <sstream>

#include "hadsec/kernels.hpp"
#include "hadsec/random.hpp"
#include "hadsec/rowspace.hpp"

namespace hadsec {

Support::Support(std::vector<std::vector<std::int64_t>> points) : points_(std::move(points)) {
  if (points_.empty()) throw ExponentError("support must be non-empty");
  const std::size_t len = points_.front().size();
  if (len == 0) throw ExponentError("support vectors must be non-empty");
  std::set<std::vector<std::int64_t>> seen;
  for (const auto& p : points_) {
    if (p.size() != len) throw ExponentError("support vectors have different lengths");
    for (auto v : p)
      if (v < 0) throw ExponentError("support exponents must be non-negative");
    if (!seen.insert(p).second) throw ExponentError("support vectors must be distinct");
  }
}

Support Support::read(std::istream& in) {
  std::vector<std::vector<std::int64_t>> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& ch : line)
      if (ch == ',') ch = ' ';
    std::istringstream ss(line);
    std::vector<std::int64_t> v;
    std::int64_t x = 0;
    while (ss >> x) v.push_back(x);
    if (!ss.eof()) throw ExponentError("support line is not a list of integers: '" + line + "'");
    if (!v.empty()) pts.push_back(std::move(v));
  }
  return Support(std::move(pts));
}

SupportShape is_binomial_segment(const Support& support) {
  if (support.size() == 1) return SupportShape::monomial;
  if (support.size() == 2) return SupportShape::binomial;
  // Collinear iff all differences from the first point span a line.
  const auto& base = support.points().front();
  RationalRowSpace diffs(support.ambient());
  for (std::size_t i = 1; i < support.size(); ++i) {
    std::vector<std::int64_t> d(base.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = support.points()[i][k] - base[k];
    diffs.add_integers(d);
    if (diffs.dimension() > 1) return SupportShape::not_collinear;
  }
  return SupportShape::collinear_with_interior;
}

std::string to_string(SupportShape s) {
  switch (s) {
    case SupportShape::monomial:
      return "monomial";
    case SupportShape::binomial:
      return "binomial";
    case SupportShape::collinear_with_interior:
      return "collinear-with-interior";
    case SupportShape::not_collinear:
      return "not-collinear";
  }
  return "not-collinear";
}

TropicalLinearSpace trop_toric(const ExponentMatrix& a) {
  RationalRowSpace span(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) span.add_integers(a.row(r));
  TropicalLinearSpace out;
  out.basis = span.reduced_basis();
  out.dimension = span.dimension();
  out.projective_dimension = out.dimension == 0 ? 0 : out.dimension - 1;
  return out;
}

TropicalSumReport trop_hadamard_sum(const ExponentMatrix& a, const ExponentMatrix& b, const RunConfig& config) {
  if (a.cols() != b.cols()) throw ExponentError("trop_hadamard_sum: column counts differ");
  TropicalSumReport rep;
  const auto ta = trop_toric(a);
  const auto tb = trop_toric(b);
  rep.rank_a = ta.dimension;
  rep.rank_b = tb.dimension;
  const ExponentMatrix st = stack(a, b);
  rep.rank_stacked = rational_rank(st);

  RationalRowSpace uni(a.cols());
  for (const auto& v : ta.basis) uni.add(v);
  for (const auto& v : tb.basis) uni.add(v);
  rep.rank_union = uni.dimension();

  // phi_A(s) * phi_B(t) is the monomial map of stack(A, B) at (s, t); its
  // row-scaled Jacobian is v (.) stack(A, B) with v the image point.
  config.validate();
  const PrimeField field(config.prime);
  const auto y = random_torus_points(field, st.rows(), 1, config.seed);
  const auto v = eval_monomial(field, st, point<PrimeField>(y, 0));
  ModMatrix eta(1, st.cols());
  std::copy(v.begin(), v.end(), eta.row_data(0));
  rep.jacobian_rank = rank(field, khatri_rao(field, eta, st));
  return rep;
}

bool infinite_generic_hrank_toric(const ExponentMatrix& a) { return rational_rank(a) < a.cols(); }

}  // namespace hadsec
