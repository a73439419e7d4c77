#include "hadsec/config.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

namespace hadsec {

void RunConfig::validate() const {
  if (prime <= (1ULL << 16)) throw FieldError("prime must exceed 2^16, got " + std::to_string(prime));
  if (!is_probable_prime(prime)) throw FieldError(std::to_string(prime) + " is not prime");
  if (prime >= (1ULL << 62)) throw FieldError("prime must be below 2^62");
  if (trials < 1) throw FieldError("trials must be >= 1");
  if (max_retries < 0 || alternate_primes < 0) throw FieldError("retry counts must be non-negative");
}

namespace {

// One round of trials; the max is order-independent so the OpenMP
// schedule cannot change the answer.
std::size_t run_round(const PrimeField& field, std::uint64_t first_seed, int trials, const TrialFn& trial) {
  std::size_t best = 0;
  std::exception_ptr failure;
#pragma omp parallel for reduction(max : best) schedule(dynamic)
  for (int t = 0; t < trials; ++t) {
    try {
      const std::size_t r = trial(field, first_seed + static_cast<std::uint64_t>(t));
      if (r > best) best = r;
    } catch (...) {
#pragma omp critical(hadsec_trial_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return best;
}

}  // namespace

RankSearch max_rank_search(const RunConfig& config, std::size_t target, const TrialFn& trial) {
  config.validate();
  RankSearch out;
  const auto trials = static_cast<std::uint64_t>(config.trials);

  PrimeField field(config.prime);
  out.primes_used.push_back(config.prime);
  for (int round = 0; round <= config.max_retries; ++round) {
    const std::uint64_t first = config.seed + static_cast<std::uint64_t>(round) * trials;
    out.rank = std::max(out.rank, run_round(field, first, config.trials, trial));
    out.trials_run += trials;
    if (out.rank >= target) {
      out.reached_target = true;
      return out;
    }
  }

  std::uint64_t p = config.prime;
  for (int alt = 0; alt < config.alternate_primes; ++alt) {
    p = previous_prime(p);
    PrimeField alt_field(p);
    out.primes_used.push_back(p);
    out.rank = std::max(out.rank, run_round(alt_field, config.seed, config.trials, trial));
    out.trials_run += trials;
    if (out.rank >= target) {
      out.reached_target = true;
      return out;
    }
  }
  return out;
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json:
      return "json";
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::text:
      return "text";
  }
  return "json";
}

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown output format '" + text + "'");
}

}  // namespace hadsec
