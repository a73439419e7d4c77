#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hadsec/config.hpp"
#include "hadsec/descriptor.hpp"

namespace hadsec {

/// One verified row. CSV columns, in this order: descriptor,r,m,dim,expected,status.
struct TableRow {
  std::string descriptor;
  std::vector<int> r;
  std::size_t dim = 0;
  std::size_t expected = 0;
  bool pass = false;
};

struct Table {
  std::string name;
  std::vector<TableRow> rows;
  [[nodiscard]] bool all_pass() const;
  [[nodiscard]] std::size_t failures() const;
};

/// A group of r-vectors checked against one variety.
struct TableCase {
  VarietyDescriptor variety;
  std::vector<std::vector<int>> rvectors;
  /// When set, a row passes only if it fills the ambient space.
  bool require_fill = false;
};

/// Computes every row (in parallel across rows) and keeps the input order.
/// A row passes when the computed dimension equals the Hadamard upper bound
/// (and equals N when the case requires a fill).
Table run_table(const std::string& name, const std::vector<TableCase>& cases, const RunConfig& config);

/// (d,n) in {(3,4),(4,2),(4,3),(4,4)}, all r-vectors with R the AH exception: 135 rows, all filling.
std::vector<TableCase> veronese_check_cases();
/// d = (2,2,2) with R = 7 (10 rows, all filling P^26), and d = (1,1,1,1) with r = (2,2).
std::vector<TableCase> binary_check_cases();
/// V_{2,n}, n = 2..6, r = (r1 >= r2 >= 2), R <= 12. Extended: n = 2..15, r1 <= n+1.
std::vector<TableCase> experiment_cases(bool extended = false);

Table veronese_table(const RunConfig& config);
Table binary_table(const RunConfig& config);
Table experiments_table(const RunConfig& config, bool extended = false);

void write_table_csv(std::ostream& out, const Table& table);

}  // namespace hadsec
