#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "abelian/bigint.hpp"
#include "abelian/numutil.hpp"

namespace abelian {

/// Isomorphism-class fingerprint of a finite abelian group: for each prime,
/// the elementary-divisor exponents of its primary component, sorted
/// descending, with no zero entries. Two groups are isomorphic iff their keys
/// are equal.
struct CanonicalGroupKey {
  std::map<BigInt, std::vector<unsigned>> primary_parts;

  bool is_trivial() const { return primary_parts.empty(); }
  BigInt order() const;
  BigInt exponent() const;
  /// Invariant factors m_1 | m_2 | ... | m_k, trivial ones omitted.
  std::vector<BigInt> invariant_factors() const;

  bool operator==(const CanonicalGroupKey& other) const {
    return primary_parts == other.primary_parts;
  }
  bool operator<(const CanonicalGroupKey& other) const {
    return primary_parts < other.primary_parts;
  }
};

struct CanonicalGroupKeyHash {
  std::size_t operator()(const CanonicalGroupKey& key) const noexcept;
};

/// Builds a key from raw per-prime exponent lists: zeros dropped, each list
/// sorted descending, primes with nothing left removed.
CanonicalGroupKey normalize_key(std::map<BigInt, std::vector<unsigned>> parts);

/// Key of C_{n_1} + ... + C_{n_k}. Orders must be >= 1.
CanonicalGroupKey key_of_cyclic_sum(std::span<const BigInt> orders,
                                    const FactorOptions& options = {});

/// A tuple of residues, one per cyclic factor of the group that made it.
class GroupElement {
 public:
  GroupElement() = default;

  const std::vector<BigInt>& coords() const noexcept { return coords_; }
  std::size_t arity() const noexcept { return coords_.size(); }

  bool operator==(const GroupElement& other) const { return coords_ == other.coords_; }

 private:
  friend class AbelianGroup;
  explicit GroupElement(std::vector<BigInt> coords) : coords_(std::move(coords)) {}

  std::vector<BigInt> coords_;
};

/// The positions of a presentation whose modulus is divisible by `prime`,
/// with the exponent of `prime` in each of those moduli.
struct PrimeComponent {
  BigInt prime;
  std::vector<std::size_t> positions;
  std::vector<unsigned> exponents;
  std::vector<BigInt> prime_powers;  // prime^exponents[i]
  std::vector<std::size_t> invariant_slot;  // target factor in the invariant chain
};

/// Finite abelian group C_{d_1} + ... + C_{d_n} for arbitrary moduli d_i >= 1.
/// The supplied presentation is kept so element coordinates line up with it;
/// the canonical key and invariant factors are derived through elementary
/// divisors. Immutable after construction.
class AbelianGroup {
 public:
  /// Throws NonPositiveModulus for any modulus <= 0.
  explicit AbelianGroup(std::vector<BigInt> moduli, const FactorOptions& options = {});

  const std::vector<BigInt>& moduli() const noexcept { return moduli_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  const CanonicalGroupKey& canonical() const noexcept { return canonical_; }
  const std::vector<BigInt>& invariant_factors() const noexcept { return invariant_factors_; }
  const BigInt& order() const noexcept { return order_; }
  BigInt exponent() const;

  /// One entry per prime dividing |G|, ascending by prime.
  const std::vector<PrimeComponent>& primary_components() const noexcept { return components_; }
  const PrimeComponent* component(const BigInt& prime) const;

  /// Reduces each coordinate into [0, d_i). Throws DimensionMismatch on arity.
  GroupElement element(std::vector<BigInt> coords) const;
  GroupElement identity() const;
  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement multiply(const GroupElement& x, const BigInt& k) const;

  /// Throws DimensionMismatch unless x has one coordinate per modulus.
  void check_arity(const GroupElement& x) const;

 private:
  std::vector<BigInt> moduli_;
  CanonicalGroupKey canonical_;
  std::vector<BigInt> invariant_factors_;
  BigInt order_;
  std::vector<PrimeComponent> components_;
};

AbelianGroup make_group(std::vector<BigInt> moduli);

/// lcm over i of d_i / gcd(d_i, x_i).
BigInt element_order(const AbelianGroup& g, const GroupElement& x);

/// One column of the valuation table: f is the valuation of the element's
/// coordinate in C_{p^e}, clamped to e when that coordinate is zero.
struct ValuationPair {
  unsigned f = 0;
  unsigned e = 0;
  bool operator==(const ValuationPair&) const = default;
};

/// The p-primary slice of an element, position-aligned with the component.
struct PPrimaryPart {
  BigInt prime;
  std::vector<ValuationPair> pairs;
};

PPrimaryPart valuations_at(const PrimeComponent& component, const GroupElement& x);

/// Per-prime exponent lists with the element's valuations at the same
/// positions. Empty for the trivial group.
std::map<BigInt, PPrimaryPart> sylow_decompose(const AbelianGroup& g, const GroupElement& x);

/// Coordinates of x in the invariant-factor presentation
/// C_{m_1} + ... + C_{m_k} of g, through the CRT splitting of every factor.
std::vector<BigInt> to_invariant_coordinates(const AbelianGroup& g, const GroupElement& x);

}  // namespace abelian
