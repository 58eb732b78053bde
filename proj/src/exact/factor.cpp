#include "exact/factor.hpp"

#include <algorithm>
#include <map>

#include "common/error.hpp"

namespace skewspec::exact {

namespace {

constexpr unsigned long kTrialLimit = 1'000'000;
constexpr unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(const Integer& n, unsigned long base) {
  Integer d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  Integer x;
  const Integer a = base;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Integer rho_factor(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    const std::size_t block = 128;
    std::size_t r = 1;
    auto step = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = step(y);
      std::size_t k = 0;
      do {
        ys = y;
        for (std::size_t i = 0; i < std::min(block, r - k); ++i) {
          y = step(y);
          q = (q * abs(x - y)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += block;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const Integer f = rho_factor(n);
  split(f, out);
  split(n / f, out);
}

}  // namespace

bool PrimeFactorization::square_free() const noexcept {
  return std::all_of(factors.begin(), factors.end(),
                     [](const auto& f) { return f.second == 1; });
}

Integer PrimeFactorization::product() const {
  Integer v = 1;
  for (const auto& [p, e] : factors) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long w : kWitnesses) {
    if (n == w) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), w)) return false;
  }
  for (unsigned long w : kWitnesses) {
    if (!strong_probable_prime(n, w)) return false;
  }
  static const Integer kProvenBound("3317044064679887385961981");
  if (n < kProvenBound) return true;
  return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
}

PrimeFactorization factorize(const Integer& v) {
  if (v < 1) {
    throw Error(ErrorKind::Argument, "factorize expects a positive integer, got " + v.get_str());
  }
  std::map<Integer, unsigned> found;
  Integer rest = v;
  for (unsigned long d = 2; d <= kTrialLimit; d += (d == 2 ? 1 : 2)) {
    if (Integer(d) * d > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++found[Integer(d)];
    }
  }
  split(rest, found);
  PrimeFactorization out{v, {}};
  out.factors.assign(found.begin(), found.end());
  return out;
}

}  // namespace skewspec::exact
