#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hadsec/field.hpp"

namespace hadsec {

enum class OutputFormat { json, csv, text };

/// Reproducibility knobs shared by every randomized computation.
struct RunConfig {
  std::uint64_t prime = kDefaultPrime;
  int trials = 3;
  std::uint64_t seed = 0;
  /// Extra rounds of fresh seeds after the first, before alternate primes.
  int max_retries = 5;
  int alternate_primes = 2;
  OutputFormat format = OutputFormat::json;

  /// Throws FieldError on a composite or too-small prime, or trials < 1.
  void validate() const;
};

struct RankSearch {
  std::size_t rank = 0;
  std::size_t trials_run = 0;
  std::vector<std::uint64_t> primes_used;
  bool reached_target = false;
};

/// One randomized rank evaluation: field and per-trial seed in, rank out.
/// Called concurrently from several threads.
using TrialFn = std::function<std::size_t(const PrimeField&, std::uint64_t seed)>;

/// Max-rank search with reseeding.
///
/// Round t (t = 0..max_retries) runs `trials` evaluations with seeds
/// seed + t*trials + i on the configured prime; afterwards each alternate
/// prime (descending from the configured one) gets one more round. The
/// search stops after the first round whose max reaches `target`. Results
/// depend only on the config, never on thread scheduling.
RankSearch max_rank_search(const RunConfig& config, std::size_t target, const TrialFn& trial);

std::string to_string(OutputFormat f);
OutputFormat parse_format(const std::string& text);

}  // namespace hadsec
