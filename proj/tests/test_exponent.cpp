#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "hadsec/exponent.hpp"
#include "oracles.hpp"

using namespace hadsec;

namespace {

const ExponentMatrix kB12{
    {1, 1, 1, 0, 0, 0},
    {0, 0, 0, 1, 1, 1},
    {1, 0, 0, 1, 0, 0},
    {0, 1, 0, 0, 1, 0},
    {0, 0, 1, 0, 0, 1},
};

const ExponentMatrix kBbar12{
    {1, 1, 1, 1, 1, 1},
    {0, 0, 0, 1, 1, 1},
    {0, 1, 0, 0, 1, 0},
    {0, 0, 1, 0, 0, 1},
};

ExponentMatrix rnc(int d) {
  const int dv[] = {d};
  const int nv[] = {1};
  return build_segre_veronese(dv, nv);
}

}  // namespace

TEST_SUITE("exponent") {
  TEST_CASE("segre-veronese builder matches the printed matrices") {
    const int d11[] = {1, 1};
    const int n12[] = {1, 2};
    CHECK(build_segre_veronese(d11, n12) == kB12);

    const int d2[] = {2};
    const int n1[] = {1};
    CHECK(build_segre_veronese(d2, n1) == ExponentMatrix{{2, 1, 0}, {0, 1, 2}});

    const ExponentMatrix a = rnc(8);
    REQUIRE(a.rows() == 2);
    REQUIRE(a.cols() == 9);
    for (std::size_t h = 0; h < 9; ++h) {
      CHECK(a(0, h) == 8 - static_cast<std::int64_t>(h));
      CHECK(a(1, h) == static_cast<std::int64_t>(h));
    }
  }

  TEST_CASE("builder columns agree with brute-force enumeration") {
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> cases = {
        {{3}, {2}}, {{2, 1}, {1, 2}}, {{1, 1, 1}, {1, 1, 1}}, {{2, 2}, {2, 1}}};
    for (const auto& [d, n] : cases) {
      const auto a = build_segre_veronese(d, n);
      std::set<std::vector<std::int64_t>> got, want;
      for (std::size_t c = 0; c < a.cols(); ++c) got.insert(a.column(c));
      for (const auto& c : oracle::sv_columns(d, n)) want.insert(c);
      CHECK(got == want);
      CHECK(got.size() == a.cols());
    }
  }

  TEST_CASE("builder invariants") {
    for (int d = 1; d <= 4; ++d)
      for (int n = 1; n <= 4; ++n) {
        const int dv[] = {d, 2};
        const int nv[] = {n, 1};
        const auto a = build_segre_veronese(dv, nv);
        CHECK(is_homogeneous(a));
        CHECK(has_distinct_columns(a));
        CHECK(a.cols() == binomial(n + d, d) * binomial(3, 2));
        CHECK(a.column_labels().size() == a.cols());
      }
  }

  TEST_CASE("builder errors") {
    const std::vector<int> empty;
    const int one[] = {1};
    CHECK_THROWS_AS(build_segre_veronese(empty, empty), ExponentError);
    const int zero[] = {0};
    CHECK_THROWS_AS(build_segre_veronese(zero, one), ExponentError);
    const int d[] = {10};
    const int n[] = {10};
    CHECK_THROWS_AS(build_segre_veronese(d, n, SizeLimits{1000}), ExponentError);
    const int two[] = {1, 1};
    CHECK_THROWS_AS(build_segre_veronese(two, one), ExponentError);
  }

  TEST_CASE("bbar builder") {
    const int r12[] = {1, 2};
    CHECK(build_segre_bbar(r12) == kBbar12);
    const int r1[] = {1};
    CHECK(build_segre_bbar(r1) == ExponentMatrix{{1, 1}, {0, 1}});
    const int r3[] = {3};
    CHECK(build_segre_bbar(r3) == ExponentMatrix{{1, 1, 1, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    const int bad[] = {0};
    CHECK_THROWS_AS(build_segre_bbar(bad), ExponentError);
  }

  TEST_CASE("bbar and the Segre matrix share a row span") {
    const std::vector<std::vector<int>> cases = {{1, 2}, {2, 2}, {1, 1, 1}, {3}};
    for (const auto& rp : cases) {
      const std::vector<int> ones(rp.size(), 1);
      const auto seg = build_segre_veronese(ones, rp);
      CHECK(same_rowspan(normalize(seg), build_segre_bbar(rp)));
    }
  }

  TEST_CASE("normalize") {
    CHECK(normalize(rnc(8)) == ExponentMatrix{{1, 1, 1, 1, 1, 1, 1, 1, 1}, {0, 1, 2, 3, 4, 5, 6, 7, 8}});
    CHECK(normalize(kB12) == kBbar12);
    CHECK(normalize(kBbar12) == kBbar12);
    CHECK(is_normalized(kBbar12));
    CHECK_FALSE(is_normalized(kB12));

    const int d[] = {3};
    const int n[] = {2};
    const auto a = build_segre_veronese(d, n);
    const auto abar = normalize(a);
    CHECK(is_normalized(abar));
    CHECK(rational_rank(abar) == rational_rank(a));
    CHECK(same_rowspan(a, abar));
    CHECK(normalize(abar) == abar);

    CHECK_THROWS_WITH_AS(normalize(ExponentMatrix{{1, 2, 3}}), "not projectively homogeneous", ExponentError);
  }

  TEST_CASE("kron") {
    const auto a = rnc(8);
    CHECK(kron(a, ExponentMatrix{{1}}) == a);
    CHECK(kron(ExponentMatrix{{1}}, a) == a);
    const auto k = kron(a, kBbar12);
    CHECK(k.rows() == 8);
    CHECK(k.cols() == 54);
    CHECK(k(4, 6 * 8 + 5) == a(1, 8) * kBbar12(0, 5));
    CHECK(k(1, 5) == a(0, 0) * kBbar12(1, 5));
    CHECK_THROWS_AS(kron(a, a, SizeLimits{50}), ExponentError);
  }

  TEST_CASE("stack") {
    const auto a = rnc(4);
    CHECK(stack(a, ExponentMatrix{}) == a);
    CHECK(stack(ExponentMatrix{}, a) == a);
    CHECK(stack(a, a).rows() == 4);
    CHECK(rational_rank(stack(a, a)) == rational_rank(a));
    CHECK(rational_rank(stack(a, ExponentMatrix{{1, 1, 1, 1, 1}})) == 2);
    CHECK_THROWS_AS(stack(a, kB12), ExponentError);
  }

  TEST_CASE("validate_toric") {
    CHECK_NOTHROW(validate_toric(rnc(3)));
    CHECK_THROWS_AS(validate_toric(ExponentMatrix{{1, 1}, {0, 0}}), ExponentError);
    CHECK_THROWS_AS(validate_toric(ExponentMatrix{{1}}), ExponentError);
    CHECK_THROWS_AS(validate_toric(ExponentMatrix{{1, 2, 4}}), ExponentError);
  }

  TEST_CASE("hadamard spec") {
    const HadamardSpec s({2, 3, 1});
    CHECK(s.m() == 3);
    CHECK(s.R() == 4);
    CHECK(s.r_prime() == std::vector<int>{1, 2, 0});
    CHECK(s.lattice_terms() == 6);
    CHECK(s.point_index(1, 1) == 1);
    CHECK(s.point_index(2, 1) == 2);
    CHECK(s.point_index(2, 2) == 3);
    CHECK_THROWS_AS((void)s.point_index(3, 1), ExponentError);
    CHECK(HadamardSpec({1, 1, 1}).R() == 1);
    CHECK(HadamardSpec({3, 2, 2}).R() == HadamardSpec({2, 3, 2}).R());
    CHECK_THROWS_AS(HadamardSpec({}), ExponentError);
    CHECK_THROWS_AS(HadamardSpec({0}), ExponentError);
    CHECK(s.to_string() == "2,3,1");
  }

  TEST_CASE("csv round trip") {
    std::stringstream ss;
    write_csv(ss, kB12);
    CHECK(read_csv(ss) == kB12);
    std::istringstream commented("# header\n\n1,2\n3,-4\n");
    CHECK(read_csv(commented) == ExponentMatrix{{1, 2}, {3, -4}});
    std::istringstream ragged("1,2\n3\n");
    CHECK_THROWS_AS(read_csv(ragged), ExponentError);
    std::istringstream junk("1,x\n");
    CHECK_THROWS_AS(read_csv(junk), ExponentError);
    CHECK_THROWS_AS(read_csv_file("/nonexistent/file.csv"), ExponentError);
  }

  TEST_CASE("binomial coefficients") {
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(3, 5) == 0);
  }
}
