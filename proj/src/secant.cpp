#include "hadsec/secant.hpp"

#include <algorithm>
#include <stdexcept>

#include "hadsec/kernels.hpp"
#include "hadsec/random.hpp"

namespace hadsec {

std::size_t expected_secant_dim(std::size_t ambient_dim, std::size_t variety_dim, int R) {
  if (R < 1) throw std::invalid_argument("secant index must be >= 1");
  const auto r = static_cast<std::size_t>(R);
  return std::min(ambient_dim, r * variety_dim + r - 1);
}

std::size_t secant_rank_at(const PrimeField& field, const ExponentMatrix& a, int R, std::uint64_t seed) {
  if (R < 1) throw std::invalid_argument("secant index must be >= 1");
  const auto y = random_torus_points(field, a.rows(), static_cast<std::size_t>(R), seed);
  return rank(field, khatri_rao(field, eta_secant(field, a, y), a));
}

SecantDimensionReport secant_dimension(const VarietyDescriptor& x, int R, const RunConfig& config) {
  SecantDimensionReport rep;
  rep.descriptor = x.to_string();
  rep.R = R;
  rep.ambient_dim = x.ambient_dim();
  rep.variety_dim = x.dim();
  rep.expected_dim = expected_secant_dim(rep.ambient_dim, rep.variety_dim, R);

  const ExponentMatrix& a = x.matrix();
  const auto search = max_rank_search(config, rep.expected_dim + 1, [&](const PrimeField& f, std::uint64_t seed) {
    return secant_rank_at(f, a, R, seed);
  });
  rep.computed_dim = search.rank - 1;
  rep.defect_flag = rep.computed_dim < rep.expected_dim;
  rep.status = rep.defect_flag ? kStatusDefective : kStatusCertified;
  rep.info = {config.prime, config.seed, config.trials, search.trials_run, search.primes_used};
  return rep;
}

}  // namespace hadsec
