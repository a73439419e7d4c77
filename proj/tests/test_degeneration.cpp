#include <doctest.h>

#include "hadsec/degeneration.hpp"
#include "hadsec/descriptor.hpp"
#include "hadsec/kernels.hpp"

using namespace hadsec;

namespace {

const RationalField kQ{};

ExponentMatrix rnc_bar(int d) { return normalize(VarietyDescriptor::rnc(d).matrix()); }

}  // namespace

TEST_SUITE("degeneration") {
  TEST_CASE("base point sampler") {
    const auto y = sample_base_points(3, 4, 1);
    CHECK(y.rows() == 3);
    CHECK(y.cols() == 4);
    for (std::size_t l = 0; l < 3; ++l) CHECK(y(l, 0) == 1);
    for (std::size_t c = 1; c < 4; ++c)
      for (std::size_t l = 0; l < 3; ++l) {
        CHECK(y(l, c) > 0);
        CHECK(y(l, c) <= mpq_class(1, 2));
        CHECK(y(l, c).get_num() == 1);
      }
    CHECK(sample_base_points(3, 4, 1) == y);
  }

  TEST_CASE("family at nu = 1 is the identity scaling") {
    const auto a = rnc_bar(8);
    const HadamardSpec spec({2, 3});
    const auto y = sample_base_points(2, 4, 3);
    const auto f = build_family(a, spec, y, mpq_class(1));
    CHECK(f.y_nu == y);
    for (const auto& lam : f.lambda) CHECK(lam == 1);
    CHECK(f.l_diag.size() == 8);
    CHECK(f.eta_b == eta_hadamard(kQ, a, spec, y));
  }

  TEST_CASE("family scaling") {
    const auto a = rnc_bar(8);
    const HadamardSpec spec({2, 3});
    const auto y = sample_base_points(2, 4, 3);
    const mpq_class nu(1, 10);
    const auto f = build_family(a, spec, y, nu);
    REQUIRE(f.lambda.size() == 4);
    CHECK(f.lambda[0] == 1);
    for (std::size_t j = 1; j < 4; ++j) CHECK(f.lambda[j] == 10);
    for (std::size_t c = 0; c < 4; ++c) {
      CHECK(f.y_nu(0, c) == y(0, c) * nu);
      CHECK(f.y_nu(1, c) == y(1, c));
    }
    const auto m = scaled_eta(f);
    for (std::size_t h = 0; h < m.cols(); ++h) CHECK(m(0, h) == 1);
  }

  TEST_CASE("single factor family matches the secant eta") {
    const auto a = rnc_bar(6);
    const auto y = sample_base_points(2, 3, 9);
    const auto f = build_family(a, HadamardSpec({3}), y, mpq_class(1, 7));
    CHECK(f.eta_b == eta_secant(kQ, a, f.y_nu));
  }

  TEST_CASE("limit rows") {
    const auto a = rnc_bar(4);
    const auto y = sample_base_points(2, 3, 5);
    const auto bar = eta_bar(a, y);
    for (std::size_t h = 0; h < a.cols(); ++h) {
      CHECK(bar(0, h) == 1);
      CHECK(bar(1, h) == eval_monomial(kQ, a, point<RationalField>(y, 1))[h]);
    }
  }

  TEST_CASE("limit check on a rational normal curve") {
    const auto a = rnc_bar(8);
    const HadamardSpec spec({2, 3});
    const auto y = sample_base_points(2, 4, 0);
    const auto rep = limit_check(a, spec, y, default_nus());
    CHECK(rep.passed());
    CHECK(rep.rank_kbar == 8);
    CHECK(rep.rank_ksecant == 8);
    CHECK(rep.implied_lower_bound == 7);
    REQUIRE(rep.steps.size() == 3);
    for (std::size_t s = 1; s < 3; ++s) {
      CHECK(rep.steps[s].ratio >= 5.0);
      CHECK(rep.steps[s].ratio <= 20.0);
      CHECK(rep.steps[s].max_error < rep.steps[s - 1].max_error);
    }
    CHECK(rep.fitted_c > 0.0);
  }

  TEST_CASE("limit check on a Veronese surface") {
    const auto a = normalize(VarietyDescriptor::veronese(3, 2).matrix());
    const HadamardSpec spec({2, 2});
    const auto y = sample_base_points(3, 3, 2);
    const auto rep = limit_check(a, spec, y, default_nus());
    CHECK(rep.passed());
    CHECK(rep.implied_lower_bound == 8);
  }

  TEST_CASE("input guards") {
    const auto a = rnc_bar(4);
    const HadamardSpec spec({2, 2});
    const auto y = sample_base_points(2, 3, 1);
    CHECK_THROWS_AS(build_family(VarietyDescriptor::rnc(4).matrix(), spec, y, mpq_class(1, 2)), DegenerationError);
    CHECK_THROWS_AS(build_family(a, spec, y, mpq_class(0)), DegenerationError);
    CHECK_THROWS_AS(build_family(a, HadamardSpec({3, 2}), y, mpq_class(1, 2)), DegenerationError);

    auto shifted = y;
    shifted(1, 0) = 2;
    CHECK_THROWS_AS(build_family(a, spec, shifted, mpq_class(1, 2)), DegenerationError);
    auto zero = y;
    zero(1, 2) = 0;
    CHECK_THROWS_AS(build_family(a, spec, zero, mpq_class(1, 2)), DegenerationError);

    CHECK_THROWS_AS(build_family(a, spec, y, mpq_class(1, 2), DegenerationLimits{4, 128}), DegenerationError);
    CHECK_THROWS_AS(build_family(a, spec, y, mpq_class(1, 2), DegenerationLimits{64, 3}), DegenerationError);

    CHECK_THROWS_AS(limit_check(a, spec, y, {}), DegenerationError);
    CHECK_THROWS_AS(limit_check(a, spec, y, {mpq_class(1, 100), mpq_class(1, 10)}), DegenerationError);
    CHECK_THROWS_AS(limit_check(a, spec, y, {mpq_class(-1, 10)}), DegenerationError);
  }
}
