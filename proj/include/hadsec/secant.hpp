#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hadsec/config.hpp"
#include "hadsec/descriptor.hpp"
#include "hadsec/exponent.hpp"
#include "hadsec/field.hpp"

namespace hadsec {

inline constexpr const char* kStatusCertified = "certified";
inline constexpr const char* kStatusDefective = "defective (probabilistic)";

/// Shared trial metadata for every randomized report.
struct TrialInfo {
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::size_t trials_run = 0;
  std::vector<std::uint64_t> primes_used;
};

struct SecantDimensionReport {
  std::string descriptor;
  int R = 1;
  std::size_t ambient_dim = 0;
  std::size_t variety_dim = 0;
  /// Certified lower bound on dim sigma_R(X).
  std::size_t computed_dim = 0;
  std::size_t expected_dim = 0;
  bool defect_flag = false;
  std::string status;
  TrialInfo info;
};

/// min(N, R*dimX + R - 1).
std::size_t expected_secant_dim(std::size_t ambient_dim, std::size_t variety_dim, int R);

/// rank(eta_secant(A, Y) (.) A) at R random points drawn from `seed`.
std::size_t secant_rank_at(const PrimeField& field, const ExponentMatrix& a, int R, std::uint64_t seed);

SecantDimensionReport secant_dimension(const VarietyDescriptor& x, int R, const RunConfig& config);

}  // namespace hadsec
