#include "hadsec/hadamard.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hadsec/kernels.hpp"
#include "hadsec/random.hpp"

namespace hadsec {

namespace {

// Secant dimensions keyed by secant index, shared across the m-loop of the rank search.
using SecantCache = std::map<int, std::size_t>;

std::size_t cached_secant_dim(const VarietyDescriptor& x, int r, const RunConfig& config, SecantCache& cache) {
  if (r == 1) return x.dim();
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, secant_dimension(x, r, config).computed_dim).first;
  return it->second;
}

HadamardDimensionReport hadamard_dimension_cached(const VarietyDescriptor& x, const HadamardSpec& spec,
                                                  const RunConfig& config, SecantCache& cache) {
  HadamardDimensionReport rep;
  rep.descriptor = x.to_string();
  rep.spec = spec;
  rep.ambient_dim = x.ambient_dim();
  rep.variety_dim = x.dim();
  const auto n_amb = static_cast<long long>(rep.ambient_dim);
  const auto dim_x = static_cast<long long>(rep.variety_dim);

  long long sum = 0;
  for (int rk : spec.r()) {
    rep.factor_dims.push_back(cached_secant_dim(x, rk, config, cache));
    sum += static_cast<long long>(rep.factor_dims.back());
  }
  rep.parameter_count = sum - static_cast<long long>(spec.m() - 1) * dim_x;
  rep.exceeds_ambient = rep.parameter_count > n_amb;
  rep.expected_dim_hadamard = static_cast<std::size_t>(std::clamp(rep.parameter_count, 0LL, n_amb));
  rep.expected_dim_R = expected_secant_dim(rep.ambient_dim, rep.variety_dim, spec.R());
  rep.lower_bound_dim_R = cached_secant_dim(x, spec.R(), config, cache);

  const ExponentMatrix& a = x.matrix();
  const auto search =
      max_rank_search(config, rep.expected_dim_hadamard + 1,
                      [&](const PrimeField& f, std::uint64_t seed) { return hadamard_rank_at(f, a, spec, seed); });
  rep.computed_dim = search.rank - 1;
  rep.hadamard_defect = rep.computed_dim < rep.expected_dim_hadamard;
  rep.fills_ambient = rep.computed_dim == rep.ambient_dim;
  rep.chain_holds = rep.lower_bound_dim_R <= rep.computed_dim && rep.computed_dim <= rep.expected_dim_hadamard &&
                    rep.expected_dim_hadamard <= rep.expected_dim_R;
  rep.status = rep.hadamard_defect ? kStatusDefective : kStatusCertified;
  rep.info = {config.prime, config.seed, config.trials, search.trials_run, search.primes_used};
  return rep;
}

}  // namespace

std::size_t hadamard_rank_at(const PrimeField& field, const ExponentMatrix& a, const HadamardSpec& spec,
                             std::uint64_t seed) {
  const auto y = random_torus_points(field, a.rows(), static_cast<std::size_t>(spec.R()), seed);
  return rank(field, khatri_rao(field, eta_hadamard(field, a, spec, y), a));
}

HadamardDimensionReport hadamard_dimension(const VarietyDescriptor& x, const HadamardSpec& spec,
                                           const RunConfig& config) {
  SecantCache cache;
  return hadamard_dimension_cached(x, spec, config, cache);
}

std::size_t expected_generic_hrank(std::size_t ambient_dim, std::size_t variety_dim, int r) {
  if (r < 2) throw std::invalid_argument("expected generic Hadamard rank needs r >= 2");
  if (ambient_dim < variety_dim) throw std::invalid_argument("ambient dimension below variety dimension");
  const std::size_t num = ambient_dim - variety_dim;
  const std::size_t den = static_cast<std::size_t>(r - 1) * (variety_dim + 1);
  return (num + den - 1) / den;
}

GenericHrankReport generic_hrank(const VarietyDescriptor& x, int r, const RunConfig& config, int margin) {
  if (r < 1) throw std::invalid_argument("secant index must be >= 1");
  if (margin < 0) throw std::invalid_argument("margin must be non-negative");
  GenericHrankReport rep;
  rep.descriptor = x.to_string();
  rep.r = r;
  rep.ambient_dim = x.ambient_dim();
  rep.variety_dim = x.dim();
  rep.info = {config.prime, config.seed, config.trials, 0, {config.prime}};

  // Toric varieties are Hadamard idempotent, so powers of X itself never grow.
  if (r == 1) {
    rep.status = "infinite (toric idempotent)";
    return rep;
  }

  rep.expected_m = expected_generic_hrank(rep.ambient_dim, rep.variety_dim, r);
  rep.max_m = static_cast<int>(std::max<std::size_t>(rep.expected_m, 1)) + margin;
  SecantCache cache;
  for (int m = 1; m <= rep.max_m; ++m) {
    const HadamardSpec spec(std::vector<int>(static_cast<std::size_t>(m), r));
    const auto h = hadamard_dimension_cached(x, spec, config, cache);
    rep.trace.push_back({m, h.computed_dim, h.expected_dim_hadamard, h.fills_ambient});
    rep.info.trials_run += h.info.trials_run;
    for (auto p : h.info.primes_used)
      if (std::find(rep.info.primes_used.begin(), rep.info.primes_used.end(), p) == rep.info.primes_used.end())
        rep.info.primes_used.push_back(p);
    if (h.fills_ambient) {
      rep.found_m = m;
      rep.status = "filled";
      return rep;
    }
  }
  rep.status = "not filled (probabilistic)";
  return rep;
}

}  // namespace hadsec
