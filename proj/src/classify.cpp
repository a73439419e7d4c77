#include "hadsec/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hadsec/exponent.hpp"

namespace hadsec {

namespace {

std::vector<int> sorted_desc(std::vector<int> d) {
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

long long sv_columns(std::span<const int> d, std::span<const int> n) {
  long long p = 1;
  for (std::size_t i = 0; i < d.size(); ++i) p *= static_cast<long long>(binomial(n[i] + d[i], d[i]));
  return p;
}

// Partitions of `rest` into parts <= `max_part`, each emitted as (part + 1).
void partitions(int rest, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(rest, max_part); part >= 1; --part) {
    cur.push_back(part + 1);
    partitions(rest - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool ah_defective(int d, int n, int r) {
  if (d == 2) return r >= 2 && r <= n;
  return (d == 3 && n == 4 && r == 7) || (d == 4 && n == 2 && r == 5) || (d == 4 && n == 3 && r == 9) ||
         (d == 4 && n == 4 && r == 14);
}

bool binary_sv_defective(std::vector<int> d, int s) {
  d = sorted_desc(std::move(d));
  const auto even_top = [&](std::size_t size) {
    return d.size() == size && d[0] >= 2 && d[0] % 2 == 0 && s == d[0] + 1;
  };
  if (even_top(2) && d[1] == 2) return true;
  if (even_top(3) && d[1] == 1 && d[2] == 1) return true;
  if (d == std::vector<int>{2, 2, 2}) return s == 7;
  if (d == std::vector<int>{1, 1, 1, 1}) return s == 3;
  return false;
}

bool high_degree_sv(std::vector<int> d) {
  if (d.size() < 2) return false;
  d = sorted_desc(std::move(d));
  if (d[0] < 3 || d[1] < 3) return false;
  return std::all_of(d.begin() + 2, d.end(), [](int x) { return x >= 2; });
}

std::string to_string(VerdictSource s) {
  switch (s) {
    case VerdictSource::alexander_hirschowitz:
      return "AH";
    case VerdictSource::binary_sv:
      return "binary-SV";
    case VerdictSource::high_degree_sv:
      return "high-degree-SV";
    case VerdictSource::none:
      return "none";
  }
  return "none";
}

DefectivityVerdict classify_secant(const VarietyDescriptor& x, int s) {
  DefectivityVerdict v;
  v.family = x.to_string();
  v.s = s;
  const auto& d = x.degrees();
  const auto& n = x.dims();
  switch (x.kind()) {
    case VarietyKind::veronese:
    case VarietyKind::rnc:
      v.source = VerdictSource::alexander_hirschowitz;
      v.is_defective = ah_defective(d[0], n[0], s);
      break;
    case VarietyKind::segre:
    case VarietyKind::segre_veronese:
      if (d.size() == 1) {
        v.source = VerdictSource::alexander_hirschowitz;
        v.is_defective = ah_defective(d[0], n[0], s);
      } else if (std::all_of(n.begin(), n.end(), [](int k) { return k == 1; })) {
        v.source = VerdictSource::binary_sv;
        v.is_defective = binary_sv_defective(d, s);
      } else if (high_degree_sv(d)) {
        v.source = VerdictSource::high_degree_sv;
        v.is_defective = false;
      }
      break;
    case VarietyKind::custom:
      break;
  }
  return v;
}

std::vector<std::vector<int>> enumerate_check_rvectors(int R) {
  if (R < 2) throw std::invalid_argument("enumerate_check_rvectors needs R >= 2");
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  partitions(R - 1, R - 1, cur, all);
  std::erase_if(all, [](const std::vector<int>& v) { return v.size() < 2; });
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
  });
  return all;
}

std::size_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::size_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int total = part; total <= n; ++total) p[static_cast<std::size_t>(total)] += p[static_cast<std::size_t>(total - part)];
  return p[static_cast<std::size_t>(n)];
}

std::size_t generic_hrank_formula(HrankFamily family, std::span<const int> d, std::span<const int> n, int r) {
  if (r < 2) throw FormulaError("generic Hadamard rank formula needs r >= 2");
  if (d.empty() || d.size() != n.size()) throw FormulaError("degree and dimension vectors must match");
  const std::vector<int> dv(d.begin(), d.end());
  switch (family) {
    case HrankFamily::veronese:
      if (d.size() != 1 || d[0] < 3) throw FormulaError("closed form not guaranteed: Veronese case needs d >= 3");
      break;
    case HrankFamily::binary_sv: {
      if (std::any_of(n.begin(), n.end(), [](int k) { return k != 1; }))
        throw FormulaError("binary case needs every n_i = 1");
      const auto s = sorted_desc(dv);
      const bool even = s[0] >= 2 && s[0] % 2 == 0;
      if ((s.size() == 2 && even && s[1] == 2) || (s.size() == 3 && even && s[1] == 1 && s[2] == 1))
        throw FormulaError("closed form not guaranteed: d is of type (2,2t) or (1,1,2t)");
      break;
    }
    case HrankFamily::high_degree_sv:
      if (!high_degree_sv(dv)) throw FormulaError("closed form not guaranteed: needs d1,d2 >= 3 and the rest >= 2");
      break;
  }
  const long long cols = sv_columns(d, n);
  const long long dim_x = std::accumulate(n.begin(), n.end(), 0LL);
  const long long num = (cols - 1) - dim_x;
  if (num <= 0) return 0;
  return static_cast<std::size_t>(ceil_div(num, static_cast<long long>(r - 1) * (dim_x + 1)));
}

SvBound sv_generic_bound(std::span<const int> d, std::span<const int> n, int r) {
  if (d.empty() || d.size() != n.size()) throw FormulaError("degree and dimension vectors must match");
  if (r < 2) throw FormulaError("Hadamard rank bound needs r >= 2");
  const long long p = sv_columns(d, n);
  const long long s = std::accumulate(n.begin(), n.end(), 0LL);
  SvBound b;
  b.nondefective_below = floor_div(p - s * s, s);
  b.fills_above = ceil_div(p + s * s, s);
  b.hrank_upper = ceil_div(p - s, static_cast<long long>(r - 1) * (s + 1));
  return b;
}

}  // namespace hadsec
