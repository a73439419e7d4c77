#include "hadsec/degeneration.hpp"

#include <random>

#include "hadsec/kernels.hpp"

namespace hadsec {

namespace {

const RationalField kQ{};

void check_inputs(const ExponentMatrix& abar, const HadamardSpec& spec, const RatMatrix& y,
                  const DegenerationLimits& limits) {
  if (!is_normalized(abar)) throw DegenerationError("exponent matrix must be normalized (first row 1, first column e_1)");
  const auto big_r = static_cast<std::size_t>(spec.R());
  if (big_r * abar.rows() > limits.max_jacobian_rows)
    throw DegenerationError("R(n+1) = " + std::to_string(big_r * abar.rows()) + " exceeds the exact-arithmetic guard");
  if (abar.cols() - 1 > limits.max_ambient_dim)
    throw DegenerationError("N = " + std::to_string(abar.cols() - 1) + " exceeds the exact-arithmetic guard");
  if (y.rows() != abar.rows() || y.cols() != big_r)
    throw DegenerationError("base points must form a " + std::to_string(abar.rows()) + " x " +
                            std::to_string(big_r) + " matrix");
  for (std::size_t l = 0; l < y.rows(); ++l)
    if (y(l, 0) != 1) throw DegenerationError("the first base point must be the all-ones point");
  for (const auto& v : y.data())
    if (sgn(v) == 0) throw DegenerationError("base points must have nonzero coordinates");
}

mpq_class abs_q(const mpq_class& x) { return sgn(x) < 0 ? mpq_class(-x) : x; }

}  // namespace

DegenerationFamily build_family(const ExponentMatrix& abar, const HadamardSpec& spec, const RatMatrix& y,
                                const mpq_class& nu, DegenerationLimits limits) {
  check_inputs(abar, spec, y, limits);
  if (sgn(nu) == 0) throw DegenerationError("nu must be nonzero");

  DegenerationFamily f;
  f.nu = nu;
  f.y_nu = y;
  for (std::size_t c = 0; c < y.cols(); ++c) f.y_nu(0, c) *= nu;

  const auto big_r = static_cast<std::size_t>(spec.R());
  const mpq_class inv_nu = 1 / nu;
  f.lambda.assign(big_r, inv_nu);
  f.lambda[0] = 1;
  for (const auto& lam : f.lambda) f.l_diag.insert(f.l_diag.end(), abar.rows(), lam);

  f.eta_b = eta_hadamard(kQ, abar, spec, f.y_nu);
  f.r_diag.resize(abar.cols());
  for (std::size_t h = 0; h < abar.cols(); ++h) {
    if (sgn(f.eta_b(0, h)) == 0) throw DegenerationError("row 0 of eta vanishes at column " + std::to_string(h));
    f.r_diag[h] = 1 / f.eta_b(0, h);
  }
  return f;
}

RatMatrix scaled_eta(const DegenerationFamily& f) {
  RatMatrix m = f.eta_b;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t h = 0; h < m.cols(); ++h) m(i, h) *= f.lambda[i] * f.r_diag[h];
  return m;
}

RatMatrix eta_bar(const ExponentMatrix& abar, const RatMatrix& y) {
  RatMatrix out(y.cols(), abar.cols());
  for (std::size_t h = 0; h < abar.cols(); ++h) out(0, h) = 1;
  for (std::size_t j = 1; j < y.cols(); ++j) {
    const auto v = eval_monomial(kQ, abar, point<RationalField>(y, j));
    for (std::size_t h = 0; h < abar.cols(); ++h) out(j, h) = v[h];
  }
  return out;
}

DegenerationReport limit_check(const ExponentMatrix& abar, const HadamardSpec& spec, const RatMatrix& y,
                               const std::vector<mpq_class>& nus, DegenerationLimits limits) {
  check_inputs(abar, spec, y, limits);
  if (nus.empty()) throw DegenerationError("need at least one nu");
  for (std::size_t i = 0; i < nus.size(); ++i) {
    if (sgn(nus[i]) <= 0) throw DegenerationError("nu values must be positive");
    if (i > 0 && nus[i] >= nus[i - 1]) throw DegenerationError("nu values must be strictly decreasing");
  }

  DegenerationReport rep;
  rep.spec = spec.to_string();
  const auto big_r = static_cast<std::size_t>(spec.R());

  const RatMatrix bar = eta_bar(abar, y);
  const RatMatrix sec = eta_secant(kQ, abar, y);
  RatMatrix stacked = bar;
  stacked.append_rows(sec);
  rep.rank_eta_bar = rank(kQ, bar);
  rep.rank_eta_secant = rank(kQ, sec);
  rep.rank_stacked = rank(kQ, stacked);
  rep.rowspan_ok = rep.rank_stacked == rep.rank_eta_secant && rep.rank_eta_secant == big_r &&
                   rep.rank_eta_bar == big_r;
  rep.rank_kbar = rank(kQ, khatri_rao(kQ, bar, abar));
  rep.rank_ksecant = rank(kQ, khatri_rao(kQ, sec, abar));
  rep.implied_lower_bound = rep.rank_kbar == 0 ? 0 : rep.rank_kbar - 1;

  rep.ratio_ok = rep.row0_ok = rep.khatri_rao_ok = rep.semicontinuity_ok = true;
  for (std::size_t s = 0; s < nus.size(); ++s) {
    const auto fam = build_family(abar, spec, y, nus[s], limits);
    const RatMatrix m = scaled_eta(fam);

    DegenerationStep step;
    step.nu = nus[s];
    step.row0_is_one = true;
    for (std::size_t h = 0; h < m.cols(); ++h) step.row0_is_one = step.row0_is_one && m(0, h) == 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t h = 0; h < m.cols(); ++h) {
        const mpq_class e = abs_q(m(i, h) - bar(i, h));
        if (e > step.max_error) step.max_error = e;
      }

    const RatMatrix kb = khatri_rao(kQ, fam.eta_b, abar);
    step.rank_kb = rank(kQ, kb);
    RatMatrix lkr = kb;
    for (std::size_t i = 0; i < lkr.rows(); ++i)
      for (std::size_t h = 0; h < lkr.cols(); ++h) lkr(i, h) *= fam.l_diag[i] * fam.r_diag[h];
    step.khatri_rao_identity = lkr == khatri_rao(kQ, m, abar);

    if (s > 0) {
      const auto& prev = rep.steps.back();
      const mpq_class q = nus[s - 1] / nus[s];
      if (sgn(step.max_error) == 0) {
        step.ratio_ok = sgn(prev.max_error) == 0;
      } else {
        const mpq_class ratio = prev.max_error / step.max_error;
        step.ratio = ratio.get_d();
        step.ratio_ok = ratio >= q / 2 && ratio <= q * 2;
      }
    }
    const double c = mpq_class(step.max_error / step.nu).get_d();
    if (c > rep.fitted_c) rep.fitted_c = c;

    rep.ratio_ok = rep.ratio_ok && step.ratio_ok;
    rep.row0_ok = rep.row0_ok && step.row0_is_one;
    rep.khatri_rao_ok = rep.khatri_rao_ok && step.khatri_rao_identity;
    rep.semicontinuity_ok = rep.semicontinuity_ok && step.rank_kb >= rep.rank_kbar;
    rep.steps.push_back(std::move(step));
  }
  return rep;
}

RatMatrix sample_base_points(std::size_t dim, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> denom(2, 17);
  RatMatrix y(dim, count, mpq_class(1));
  for (std::size_t c = 1; c < count; ++c)
    for (std::size_t l = 0; l < dim; ++l) y(l, c) = mpq_class(1, static_cast<unsigned long>(denom(rng)));
  return y;
}

std::vector<mpq_class> default_nus() { return {mpq_class(1, 10), mpq_class(1, 100), mpq_class(1, 1000)}; }

}  // namespace hadsec
