#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hadsec/config.hpp"
#include "hadsec/descriptor.hpp"
#include "hadsec/exponent.hpp"
#include "hadsec/secant.hpp"

namespace hadsec {

struct HadamardDimensionReport {
  std::string descriptor;
  HadamardSpec spec{{1}};
  std::size_t ambient_dim = 0;
  std::size_t variety_dim = 0;
  std::size_t computed_dim = 0;
  /// min(sum_k dim sigma_{r_k} - (m-1) dimX, N), with computed factor dimensions.
  std::size_t expected_dim_hadamard = 0;
  /// min(N, R dimX + R - 1).
  std::size_t expected_dim_R = 0;
  /// Computed dim sigma_R(X).
  std::size_t lower_bound_dim_R = 0;
  std::vector<std::size_t> factor_dims;
  bool hadamard_defect = false;
  bool fills_ambient = false;
  /// lower_bound_dim_R <= computed_dim <= expected_dim_hadamard <= expected_dim_R.
  bool chain_holds = false;
  /// Unclipped sum_k dim sigma_{r_k} - (m-1) dimX; reported, not interpreted.
  long long parameter_count = 0;
  bool exceeds_ambient = false;
  std::string status;
  TrialInfo info;
};

/// rank(eta_hadamard(A, spec, Y) (.) A) at R random points drawn from `seed`.
std::size_t hadamard_rank_at(const PrimeField& field, const ExponentMatrix& a, const HadamardSpec& spec,
                             std::uint64_t seed);

HadamardDimensionReport hadamard_dimension(const VarietyDescriptor& x, const HadamardSpec& spec,
                                           const RunConfig& config);

/// ceil((N - dimX) / ((r-1)(dimX+1))); zero when N == dimX.
std::size_t expected_generic_hrank(std::size_t ambient_dim, std::size_t variety_dim, int r);

struct HrankTraceEntry {
  int m = 0;
  std::size_t computed_dim = 0;
  std::size_t expected_dim_hadamard = 0;
  bool fills_ambient = false;
};

struct GenericHrankReport {
  std::string descriptor;
  int r = 2;
  std::size_t ambient_dim = 0;
  std::size_t variety_dim = 0;
  std::optional<int> found_m;
  std::size_t expected_m = 0;
  int max_m = 0;
  /// "filled", "not filled (probabilistic)" or "infinite (toric idempotent)".
  std::string status;
  std::vector<HrankTraceEntry> trace;
  TrialInfo info;
};

/// Smallest m with sigma_r(X)^{*m} = P^N, searching m = 1 .. expected_m + margin.
GenericHrankReport generic_hrank(const VarietyDescriptor& x, int r, const RunConfig& config, int margin = 3);

}  // namespace hadsec
