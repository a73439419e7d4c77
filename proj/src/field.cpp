#include "hadsec/field.hpp"

#include <array>

namespace hadsec {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1U) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return result;
}

}  // namespace

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // This witness set is deterministic for every n < 2^64.
  constexpr std::array<std::uint64_t, 7> witnesses{2, 325, 9375, 28178, 450775, 9780504, 1795265022};
  for (std::uint64_t a : witnesses) {
    a %= n;
    if (a == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t previous_prime(std::uint64_t bound) {
  if (bound <= 3) throw FieldError("previous_prime: no odd prime below " + std::to_string(bound));
  std::uint64_t candidate = bound - 1;
  if ((candidate & 1U) == 0) --candidate;
  for (; candidate >= 3; candidate -= 2) {
    if (is_probable_prime(candidate)) return candidate;
  }
  throw FieldError("previous_prime: exhausted search");
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= (1ULL << 62)) {
    throw FieldError("modulus must be an odd prime in [3, 2^62), got " + std::to_string(p));
  }
  if (!is_probable_prime(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw FieldError("inverse of zero in F_p");
  return powmod(a, p_ - 2, p_);
}

PrimeField::Element PrimeField::pow(Element a, std::int64_t e) const {
  if (e >= 0) return powmod(a, static_cast<std::uint64_t>(e), p_);
  const Element base = inv(a);
  // -e overflows only for INT64_MIN, which never appears as an exponent here.
  return powmod(base, static_cast<std::uint64_t>(-e), p_);
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Element>(r);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw FieldError("inverse of zero in Q");
  return Element(1) / a;
}

RationalField::Element RationalField::pow(const Element& a, std::int64_t e) const {
  Element base = e >= 0 ? a : inv(a);
  auto n = static_cast<std::uint64_t>(e >= 0 ? e : -e);
  Element result(1);
  while (n != 0) {
    if (n & 1U) result *= base;
    base *= base;
    n >>= 1U;
  }
  return result;
}

}  // namespace hadsec
