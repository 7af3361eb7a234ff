#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "abelian/bigint.hpp"

namespace abelian {

/// Prime factorization as an ordered map prime -> multiplicity.
struct Factorization {
  std::map<BigInt, unsigned> factors;

  BigInt product() const;
  /// Number of prime factors counted with multiplicity.
  unsigned total_multiplicity() const;

  bool operator==(const Factorization& other) const { return factors == other.factors; }
};

/// Effort budget for the Pollard-Brent stage.
struct FactorOptions {
  std::uint64_t rho_iterations = std::uint64_t{1} << 22;  // per attempt
  unsigned rho_attempts = 32;
  std::uint64_t seed = 0x5eed5eed12345678ULL;
};

/// Complete factorization of n >= 1. Trial division by primes below 10^6,
/// then Pollard rho with Brent cycle detection on any composite cofactor.
/// Throws FactorizationFailure when a cofactor survives the budget and
/// std::invalid_argument for n < 1.
Factorization factorize(const BigInt& n, const FactorOptions& options = {});

/// Deterministic below 2^64 (first twelve prime bases), otherwise the same
/// bases plus 40 random Miller-Rabin rounds.
bool is_probable_prime(const BigInt& n);

/// Largest k with p^k | m. Requires p >= 2 and m >= 1.
unsigned nu(const BigInt& p, const BigInt& m);

/// min(nu(p, m), cap), with m == 0 mapped to cap.
unsigned nu_capped(const BigInt& p, const BigInt& m, unsigned cap);

/// p^k - p^(k-1), the number of units modulo p^k. Requires k >= 1.
BigInt phi_prime_power(const BigInt& p, unsigned k);

/// Solution of x = residues[i] mod moduli[i] in [0, prod moduli) for pairwise
/// coprime moduli.
BigInt crt(std::span<const BigInt> residues, std::span<const BigInt> moduli);

}  // namespace abelian
