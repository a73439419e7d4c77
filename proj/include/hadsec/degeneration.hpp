#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hadsec/exponent.hpp"
#include "hadsec/field.hpp"

namespace hadsec {

class DegenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Size guard for exact rational verification.
struct DegenerationLimits {
  std::size_t max_jacobian_rows = 64;  // R (n+1)
  std::size_t max_ambient_dim = 128;   // N
};

/// The one-parameter family around base points Y = (1 | y_2 | ... | y_R).
///
/// Y_nu scales the first coordinate of every point by nu; lambda is
/// diag(1, 1/nu, ..., 1/nu) of size R and L = lambda (x) I_{n+1} (both kept
/// as diagonals); r_diag is the entrywise inverse of row 0 of eta_hadamard(Y_nu).
struct DegenerationFamily {
  mpq_class nu;
  RatMatrix y_nu;
  std::vector<mpq_class> lambda;
  std::vector<mpq_class> l_diag;
  std::vector<mpq_class> r_diag;
  RatMatrix eta_b;  // eta_hadamard(Abar, spec, Y_nu)
};

DegenerationFamily build_family(const ExponentMatrix& abar, const HadamardSpec& spec, const RatMatrix& y,
                                const mpq_class& nu, DegenerationLimits limits = {});

/// lambda * eta_b * diag(r_diag).
RatMatrix scaled_eta(const DegenerationFamily& family);

/// [1 ; phi(y_2) ; ... ; phi(y_R)].
RatMatrix eta_bar(const ExponentMatrix& abar, const RatMatrix& y);

struct DegenerationStep {
  mpq_class nu;
  mpq_class max_error;      // max entrywise |M(nu) - eta_bar|
  double ratio = 0.0;       // error(previous nu) / error(nu); 0 for the first step
  bool ratio_ok = true;
  bool row0_is_one = false;
  bool khatri_rao_identity = false;  // L K_B R == M (.) Abar, exactly
  std::size_t rank_kb = 0;           // rank K_B(Y_nu)
};

struct DegenerationReport {
  std::string spec;
  std::vector<DegenerationStep> steps;
  double fitted_c = 0.0;  // max over steps of error / nu
  bool ratio_ok = false;
  bool row0_ok = false;
  bool khatri_rao_ok = false;
  /// rank(stack(eta_bar, eta_secant)) == rank(eta_secant) == R.
  bool rowspan_ok = false;
  std::size_t rank_eta_bar = 0;
  std::size_t rank_eta_secant = 0;
  std::size_t rank_stacked = 0;
  /// rank(eta_bar (.) Abar) and rank(eta_secant (.) Abar); equal when the row spans agree.
  std::size_t rank_kbar = 0;
  std::size_t rank_ksecant = 0;
  bool semicontinuity_ok = false;  // rank K_B(Y_nu) >= rank_kbar for every nu
  /// rank_kbar - 1: the certified lower bound on dim sigma_r(X).
  std::size_t implied_lower_bound = 0;

  [[nodiscard]] bool passed() const {
    return ratio_ok && row0_ok && khatri_rao_ok && rowspan_ok && semicontinuity_ok && rank_kbar == rank_ksecant;
  }
};

/// Checks the limit of lambda * eta_B(Y_nu) * R(Y_nu) along `nus` (positive, strictly decreasing).
/// Consecutive error ratios must lie in [q/2, 2q] where q is the ratio of consecutive nu.
DegenerationReport limit_check(const ExponentMatrix& abar, const HadamardSpec& spec, const RatMatrix& y,
                               const std::vector<mpq_class>& nus, DegenerationLimits limits = {});

/// Base points with y_1 = 1 and the other coordinates 1/u, u uniform in [2, 17].
RatMatrix sample_base_points(std::size_t dim, std::size_t count, std::uint64_t seed);

std::vector<mpq_class> default_nus();

}  // namespace hadsec
