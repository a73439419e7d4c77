#include "hadsec/tables.hpp"

#include <algorithm>
#include <exception>
#include <ostream>

#include "hadsec/classify.hpp"
#include "hadsec/hadamard.hpp"

namespace hadsec {

bool Table::all_pass() const { return failures() == 0; }

std::size_t Table::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const TableRow& r) { return !r.pass; }));
}

Table run_table(const std::string& name, const std::vector<TableCase>& cases, const RunConfig& config) {
  config.validate();
  struct Job {
    const TableCase* c;
    const std::vector<int>* r;
  };
  std::vector<Job> jobs;
  for (const auto& c : cases)
    for (const auto& r : c.rvectors) jobs.push_back({&c, &r});

  Table table{name, std::vector<TableRow>(jobs.size())};
  std::exception_ptr failure;
  const auto count = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      const Job& job = jobs[static_cast<std::size_t>(i)];
      const auto rep = hadamard_dimension(job.c->variety, HadamardSpec(*job.r), config);
      TableRow& row = table.rows[static_cast<std::size_t>(i)];
      row.descriptor = rep.descriptor;
      row.r = *job.r;
      row.dim = rep.computed_dim;
      row.expected = rep.expected_dim_hadamard;
      row.pass = rep.computed_dim == rep.expected_dim_hadamard && (!job.c->require_fill || rep.fills_ambient);
    } catch (...) {
#pragma omp critical(hadsec_table_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

std::vector<TableCase> veronese_check_cases() {
  struct Exception {
    int d, n, R;
  };
  const Exception exceptions[] = {{3, 4, 7}, {4, 2, 5}, {4, 3, 9}, {4, 4, 14}};
  std::vector<TableCase> out;
  for (const auto& e : exceptions)
    out.push_back({VarietyDescriptor::veronese(e.d, e.n), enumerate_check_rvectors(e.R), true});
  return out;
}

std::vector<TableCase> binary_check_cases() {
  return {
      {VarietyDescriptor::segre_veronese({2, 2, 2}, {1, 1, 1}), enumerate_check_rvectors(7), true},
      {VarietyDescriptor::segre_veronese({1, 1, 1, 1}, {1, 1, 1, 1}), enumerate_check_rvectors(3), false},
  };
}

std::vector<TableCase> experiment_cases(bool extended) {
  std::vector<TableCase> out;
  const int max_n = extended ? 15 : 6;
  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::vector<int>> rs;
    for (int r1 = 2;; ++r1) {
      if (extended ? r1 > n + 1 : r1 + 1 > 12) break;
      for (int r2 = 2; r2 <= r1; ++r2) {
        if (!extended && r1 + r2 - 1 > 12) break;
        rs.push_back({r1, r2});
      }
    }
    out.push_back({VarietyDescriptor::veronese(2, n), std::move(rs), false});
  }
  return out;
}

Table veronese_table(const RunConfig& config) { return run_table("veronese", veronese_check_cases(), config); }
Table binary_table(const RunConfig& config) { return run_table("binary", binary_check_cases(), config); }
Table experiments_table(const RunConfig& config, bool extended) {
  return run_table(extended ? "experiments-extended" : "experiments", experiment_cases(extended), config);
}

void write_table_csv(std::ostream& out, const Table& table) {
  out << "descriptor,r,m,dim,expected,status\n";
  for (const auto& row : table.rows) {
    out << '"' << row.descriptor << "\",\"";
    for (std::size_t i = 0; i < row.r.size(); ++i) out << (i ? "," : "") << row.r[i];
    out << "\"," << row.r.size() << ',' << row.dim << ',' << row.expected << ',' << (row.pass ? "pass" : "fail")
        << '\n';
  }
}

}  // namespace hadsec
