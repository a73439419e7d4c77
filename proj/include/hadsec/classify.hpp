#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hadsec/descriptor.hpp"

namespace hadsec {

class FormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// V_{d,n} is r-defective iff (2,n,r) with 2 <= r <= n, or one of
/// (3,4,7), (4,2,5), (4,3,9), (4,4,14). Degree 1 is never defective.
bool ah_defective(int d, int n, int r);

/// Binary Segre-Veronese SV_{d,1} is s-defective iff, with d sorted
/// descending, (d,s) is ((2t,2),2t+1), ((2t,1,1),2t+1), ((2,2,2),7) or ((1,1,1,1),3).
bool binary_sv_defective(std::vector<int> d, int s);

/// d1, d2 >= 3 and all further degrees >= 2, after sorting descending.
bool high_degree_sv(std::vector<int> d);

enum class VerdictSource { alexander_hirschowitz, binary_sv, high_degree_sv, none };

struct DefectivityVerdict {
  std::string family;
  int s = 1;
  bool is_defective = false;
  /// `none` means no encoded classification covers this variety; is_defective is then false by default only.
  VerdictSource source = VerdictSource::none;
};

DefectivityVerdict classify_secant(const VarietyDescriptor& x, int s);

std::string to_string(VerdictSource s);

/// Every r = (r_1 >= ... >= r_m >= 2), m >= 2, with sum (r_k - 1) + 1 = R.
/// Ordered by number of parts (most first), then descending lexicographically.
std::vector<std::vector<int>> enumerate_check_rvectors(int R);

/// Number of integer partitions of n.
std::size_t partition_count(int n);

enum class HrankFamily { veronese, binary_sv, high_degree_sv };

/// Closed form for the generic r-th Hadamard rank of a family never
/// Hadamard-defective: ceil((N - dimX) / ((r-1)(dimX+1))). Throws
/// FormulaError when the parameters are outside the family's hypotheses.
///
/// For veronese, d and n hold a single entry; for binary_sv, n is all ones.
std::size_t generic_hrank_formula(HrankFamily family, std::span<const int> d, std::span<const int> n, int r);

/// Thresholds on R for SV_{d,n}: below `nondefective_below` (inclusive) Hadamard
/// products are not defective, from `fills_above` (inclusive) they fill.
/// With P = prod C(n_i+d_i, d_i) and S = sum n_i these are floor(P/S - S) and ceil(P/S + S).
struct SvBound {
  long long nondefective_below = 0;
  long long fills_above = 0;
  /// ceil((P - S) / ((r-1)(S+1))), an upper bound on the generic r-th Hadamard rank.
  long long hrank_upper = 0;
};
SvBound sv_generic_bound(std::span<const int> d, std::span<const int> n, int r);

}  // namespace hadsec
