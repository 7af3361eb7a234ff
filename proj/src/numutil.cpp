#include "abelian/numutil.hpp"

#include <array>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelian/errors.hpp"

namespace abelian {

namespace {

constexpr std::uint32_t kTrialBound = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

constexpr std::array<unsigned long, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool witness_passes(const BigInt& n, const BigInt& n_minus_1, const BigInt& d, unsigned s,
                    const BigInt& a) {
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

BigInt pollard_brent(const BigInt& n, std::mt19937_64& rng, std::uint64_t budget) {
  gmp_randclass draw(gmp_randinit_default);
  draw.seed(static_cast<unsigned long>(rng()));
  const BigInt y0 = draw.get_z_range(n - 1) + 1;
  const BigInt c = draw.get_z_range(n - 1) + 1;

  auto step = [&](BigInt& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };

  constexpr std::uint64_t kBatch = 128;
  BigInt y = y0, x, ys, q = 1, g = 1, diff;
  std::uint64_t r = 1, spent = 0;
  while (g == 1 && spent < budget) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) step(y);
    spent += r;
    for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      const std::uint64_t lim = std::min(kBatch, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        step(y);
        diff = x - y;
        q = q * abs(diff);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      spent += lim;
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
    }
    r *= 2;
  }
  if (g == n) {
    // the batched product overshot; replay one step at a time
    do {
      step(ys);
      diff = x - ys;
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == 1 || g == n) return 0;
  return g;
}

void split_composite(const BigInt& n, std::map<BigInt, unsigned>& out, std::mt19937_64& rng,
                     const FactorOptions& options) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  for (unsigned attempt = 0; attempt < options.rho_attempts; ++attempt) {
    const BigInt d = pollard_brent(n, rng, options.rho_iterations);
    if (d != 0) {
      split_composite(d, out, rng, options);
      split_composite(BigInt(n / d), out, rng, options);
      return;
    }
  }
  throw FactorizationFailure("could not split composite cofactor " + n.get_str());
}

}  // namespace

BigInt Factorization::product() const {
  BigInt out = 1;
  for (const auto& [p, k] : factors) out *= power(p, k);
  return out;
}

unsigned Factorization::total_multiplicity() const {
  unsigned total = 0;
  for (const auto& [p, k] : factors) total += k;
  return total;
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned long b : kBases) {
    if (n == b) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
  }
  const BigInt n_minus_1 = n - 1;
  BigInt d = n_minus_1;
  const unsigned s = static_cast<unsigned>(mpz_scan1(d.get_mpz_t(), 0));
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  for (unsigned long b : kBases) {
    if (!witness_passes(n, n_minus_1, d, s, BigInt(b))) return false;
  }
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return true;

  gmp_randclass draw(gmp_randinit_default);
  draw.seed(0xa5a5a5a5UL);
  for (int round = 0; round < 40; ++round) {
    const BigInt a = draw.get_z_range(n - 3) + 2;
    if (!witness_passes(n, n_minus_1, d, s, a)) return false;
  }
  return true;
}

Factorization factorize(const BigInt& n, const FactorOptions& options) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1, got " + n.get_str());
  Factorization result;
  auto& out = result.factors;
  BigInt rest = n;

  for (std::uint32_t p : small_primes()) {
    if (rest == 1) break;
    if (mpz_fits_ulong_p(rest.get_mpz_t())) {
      unsigned long m = rest.get_ui();
      if (std::uint64_t{p} * p > m) break;
      if (m % p == 0) {
        unsigned k = 0;
        while (m % p == 0) {
          m /= p;
          ++k;
        }
        out[BigInt(static_cast<unsigned long>(p))] += k;
        rest = m;
      }
      continue;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      const BigInt prime(static_cast<unsigned long>(p));
      out[prime] += static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t()));
    }
  }
  if (rest == 1) return result;

  // Past the trial bound every remaining factor exceeds 10^6.
  const BigInt bound_sq = BigInt(kTrialBound) * kTrialBound;
  if (rest < bound_sq) {
    ++out[rest];
    return result;
  }
  std::mt19937_64 rng(options.seed);
  split_composite(rest, out, rng, options);
  return result;
}

unsigned nu(const BigInt& p, const BigInt& m) {
  if (p < 2) throw std::invalid_argument("nu: p must be >= 2");
  if (m < 1) throw std::invalid_argument("nu: m must be >= 1");
  if (p == 2) return static_cast<unsigned>(mpz_scan1(m.get_mpz_t(), 0));
  BigInt rest;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

unsigned nu_capped(const BigInt& p, const BigInt& m, unsigned cap) {
  if (sgn(m) == 0) return cap;
  if (p == 2) {
    const auto k = mpz_scan1(m.get_mpz_t(), 0);
    return k < cap ? static_cast<unsigned>(k) : cap;
  }
  const unsigned k = nu(p, abs(m));
  return k < cap ? k : cap;
}

BigInt phi_prime_power(const BigInt& p, unsigned k) {
  if (k == 0) throw std::invalid_argument("phi_prime_power: k must be >= 1");
  const BigInt lower = power(p, k - 1);
  return lower * p - lower;
}

BigInt crt(std::span<const BigInt> residues, std::span<const BigInt> moduli) {
  if (residues.size() != moduli.size()) throw std::invalid_argument("crt: size mismatch");
  BigInt total = 1;
  for (const auto& m : moduli) total *= m;
  BigInt x = 0, partial, inv;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] == 1) continue;
    partial = total / moduli[i];
    if (mpz_invert(inv.get_mpz_t(), partial.get_mpz_t(), moduli[i].get_mpz_t()) == 0)
      throw std::invalid_argument("crt: moduli are not pairwise coprime");
    x += residues[i] * partial * inv;
  }
  mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), total.get_mpz_t());
  return x;
}

}  // namespace abelian
