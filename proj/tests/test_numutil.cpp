#include <random>
#include <stdexcept>
#include <vector>

#include "abelian/errors.hpp"
#include "abelian/numutil.hpp"
#include "doctest.h"

using namespace abelian;

namespace {

BigInt big(const char* s) { return BigInt(s); }

std::map<BigInt, unsigned> fac(std::initializer_list<std::pair<const char*, unsigned>> init) {
  std::map<BigInt, unsigned> out;
  for (const auto& [p, k] : init) out[BigInt(p)] = k;
  return out;
}

std::vector<bool> sieve(unsigned n) {
  std::vector<bool> prime(n + 1, true);
  prime[0] = prime[1] = false;
  for (unsigned i = 2; i * i <= n; ++i)
    if (prime[i])
      for (unsigned j = i * i; j <= n; j += i) prime[j] = false;
  return prime;
}

}  // namespace

TEST_CASE("factorize small and structured inputs") {
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(64).factors == fac({{"2", 6}}));
  CHECK(factorize(big("100000000000000000000")).factors == fac({{"2", 20}, {"5", 20}}));
  CHECK(factorize(600851475143).factors == fac({{"71", 1}, {"839", 1}, {"1471", 1}, {"6857", 1}}));
  CHECK(factorize(561).factors == fac({{"3", 1}, {"11", 1}, {"17", 1}}));
}

TEST_CASE("factorize needs the rho stage") {
  CHECK(factorize(big("18446744073709551617")).factors == fac({{"274177", 1}, {"67280421310721", 1}}));
  CHECK(factorize(big("147573952589676412927")).factors ==
        fac({{"193707721", 1}, {"761838257287", 1}}));
  CHECK(factorize(big("998244359987710471")).factors == fac({{"998244353", 1}, {"1000000007", 1}}));
  CHECK(factorize(big("85103658979331425527586514463")).factors ==
        fac({{"3", 40}, {"7", 1}, {"1000000009", 1}}));
  CHECK(factorize(big("3825123056546413051")).factors ==
        fac({{"149491", 1}, {"747451", 1}, {"34233211", 1}}));
}

TEST_CASE("factorize large primes") {
  CHECK(factorize(big("2305843009213693951")).factors == fac({{"2305843009213693951", 1}}));
  CHECK(factorize(big("18446744073709551557")).factors == fac({{"18446744073709551557", 1}}));
}

TEST_CASE("factorize rejects n < 1 and reports an exhausted budget") {
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(factorize(-12), std::invalid_argument);
  FactorOptions tight;
  tight.rho_iterations = 1;
  tight.rho_attempts = 1;
  CHECK_THROWS_AS(factorize(big("998244359987710471"), tight), FactorizationFailure);
}

TEST_CASE("factorize round-trips random products of primes") {
  std::mt19937_64 rng(7);
  const auto prime = sieve(5000);
  std::vector<unsigned long> primes;
  for (unsigned i = 2; i <= 5000; ++i)
    if (prime[i]) primes.push_back(i);
  primes.push_back(1000003);
  primes.push_back(999999937);
  primes.push_back(4294967311UL);
  for (int trial = 0; trial < 300; ++trial) {
    std::map<BigInt, unsigned> expect;
    BigInt n = 1;
    const int count = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int i = 0; i < count; ++i) {
      const unsigned long p = primes[std::uniform_int_distribution<std::size_t>(0, primes.size() - 1)(rng)];
      const unsigned k = std::uniform_int_distribution<unsigned>(1, 4)(rng);
      expect[BigInt(p)] += k;
      n *= power(BigInt(p), k);
    }
    const Factorization f = factorize(n);
    CHECK(f.factors == expect);
    CHECK(f.product() == n);
    for (const auto& [p, k] : f.factors) CHECK(is_probable_prime(p));
  }
}

TEST_CASE("factorize agrees with naive trial division below 20000") {
  for (long n = 1; n <= 20000; ++n) {
    std::map<BigInt, unsigned> expect;
    long m = n;
    for (long p = 2; p * p <= m; ++p)
      while (m % p == 0) {
        ++expect[BigInt(p)];
        m /= p;
      }
    if (m > 1) ++expect[BigInt(m)];
    REQUIRE(factorize(n).factors == expect);
  }
}

TEST_CASE("total multiplicity") {
  CHECK(factorize(big("100000000000000000000")).total_multiplicity() == 40);
  CHECK(factorize(1).total_multiplicity() == 0);
}

TEST_CASE("primality matches a sieve and rejects strong pseudoprimes") {
  const auto prime = sieve(200000);
  for (unsigned n = 0; n <= 200000; ++n) REQUIRE(is_probable_prime(n) == prime[n]);
  // strong pseudoprimes to several small bases
  for (const char* s : {"3215031751", "2152302898747", "3474749660383", "341550071728321",
                        "3825123056546413051", "318665857834031151167461"})
    CHECK_FALSE(is_probable_prime(big(s)));
  CHECK(is_probable_prime(big("170141183460469231731687303715884105727")));  // 2^127 - 1
  CHECK_FALSE(is_probable_prime(big("340282366920938463463374607431768211457")));
}

TEST_CASE("nu") {
  CHECK(nu(2, 8) == 3);
  CHECK(nu(3, 8) == 0);
  CHECK(nu(2, 12) == 2);
  CHECK(nu(5, big("100000000000000000000")) == 20);
  CHECK_THROWS_AS(nu(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(nu(1, 8), std::invalid_argument);
}

TEST_CASE("nu(p, m p) = nu(p, m) + 1") {
  std::mt19937_64 rng(11);
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 97UL, 1000003UL}) {
    for (int i = 0; i < 200; ++i) {
      const BigInt m = std::uniform_int_distribution<unsigned long>(1, 1UL << 40)(rng);
      CHECK(nu(p, BigInt(m * p)) == nu(p, m) + 1);
    }
  }
}

TEST_CASE("nu_capped reads zero as the cap") {
  CHECK(nu_capped(2, 0, 5) == 5);
  CHECK(nu_capped(2, 48, 3) == 3);
  CHECK(nu_capped(2, 48, 7) == 4);
  CHECK(nu_capped(3, 48, 2) == 1);
}

TEST_CASE("phi_prime_power") {
  CHECK(phi_prime_power(2, 1) == 1);
  CHECK(phi_prime_power(2, 3) == 4);
  CHECK(phi_prime_power(5, 2) == 20);
  CHECK_THROWS(phi_prime_power(2, 0));
}

TEST_CASE("phi_prime_power equals a coprimality count up to 10^6") {
  auto gcd = [](unsigned long a, unsigned long b) {
    while (b) {
      a %= b;
      std::swap(a, b);
    }
    return a;
  };
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 101UL, 997UL}) {
    unsigned long q = p;
    for (unsigned k = 1; q <= 1'000'000; ++k, q *= p) {
      unsigned long count = 0;
      for (unsigned long a = 1; a <= q; ++a) count += gcd(a, q) == 1;
      CHECK(phi_prime_power(p, k) == count);
    }
  }
}

TEST_CASE("crt") {
  const std::vector<BigInt> r{2, 3, 2}, m{3, 5, 7};
  CHECK(crt(r, m) == 23);
  const std::vector<BigInt> r1{0, 5}, m1{1, 8};
  CHECK(crt(r1, m1) == 5);
  const std::vector<BigInt> none;
  CHECK(crt(none, none) == 0);

  std::mt19937_64 rng(3);
  const std::vector<BigInt> mods{16, 27, 25, 49, 11};
  for (int i = 0; i < 500; ++i) {
    const BigInt v = std::uniform_int_distribution<unsigned long>(0, 16UL * 27 * 25 * 49 * 11 - 1)(rng);
    std::vector<BigInt> res;
    for (const auto& q : mods) res.push_back(BigInt(v % q));
    CHECK(crt(res, mods) == v);
  }
}
