#include "eulersum/exact.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace eulersum {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

namespace {

struct BernoulliTable {
  std::mutex mutex;
  std::deque<Rational> values{Rational(1)};
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

}  // namespace

const Rational& bernoulli(long m) {
  if (m < 0) throw std::domain_error("bernoulli: negative index");
  auto& table = bernoulli_table();
  std::lock_guard lock(table.mutex);
  // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
  while (static_cast<long>(table.values.size()) <= m) {
    const long next = static_cast<long>(table.values.size());
    if (next > 1 && next % 2 == 1) {
      table.values.emplace_back(0);
      continue;
    }
    Rational acc(0);
    for (long k = 0; k < next; ++k) {
      if (table.values[static_cast<std::size_t>(k)].is_zero()) continue;
      acc += Rational(binomial(next + 1, k)) * table.values[static_cast<std::size_t>(k)];
    }
    table.values.push_back(-acc / Rational(next + 1));
  }
  return table.values[static_cast<std::size_t>(m)];
}

Rational harmonic_exact(long p, long m) {
  Rational acc(0);
  for (long k = 1; k <= m; ++k) acc += pow(Rational(1, k), p);
  return acc;
}

Rational zeta_nonpositive(long s) {
  if (s > 0) throw std::domain_error("zeta_nonpositive: argument must be <= 0");
  const long m = -s;
  const Rational b = bernoulli(m + 1) / Rational(m + 1);
  return (m % 2 == 0) ? b : -b;
}

Rational even_zeta_pi_coefficient(long two_j) {
  if (two_j < 2 || two_j % 2 != 0) throw std::domain_error("even_zeta_pi_coefficient: need a positive even index");
  // zeta(2j) = (-1)^(j+1) B_{2j} (2 pi)^(2j) / (2 (2j)!)
  const long j = two_j / 2;
  Rational r = bernoulli(two_j) * Rational(BigInt(1) << static_cast<mp_bitcnt_t>(two_j)) /
               Rational(BigInt(2) * factorial(two_j));
  return (j % 2 == 1) ? r : -r;
}

}  // namespace eulersum
