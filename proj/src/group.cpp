#include "abelian/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "abelian/errors.hpp"

namespace abelian {

BigInt CanonicalGroupKey::order() const {
  BigInt out = 1;
  for (const auto& [p, exps] : primary_parts)
    for (unsigned e : exps) out *= power(p, e);
  return out;
}

BigInt CanonicalGroupKey::exponent() const {
  BigInt out = 1;
  for (const auto& [p, exps] : primary_parts)
    if (!exps.empty()) out *= power(p, exps.front());
  return out;
}

std::vector<BigInt> CanonicalGroupKey::invariant_factors() const {
  std::size_t k = 0;
  for (const auto& [p, exps] : primary_parts) k = std::max(k, exps.size());
  // slot j (from the top) collects the j-th largest exponent of every prime
  std::vector<BigInt> out(k, BigInt(1));
  for (const auto& [p, exps] : primary_parts)
    for (std::size_t j = 0; j < exps.size(); ++j) out[k - 1 - j] *= power(p, exps[j]);
  return out;
}

std::size_t CanonicalGroupKeyHash::operator()(const CanonicalGroupKey& key) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t v) { h = (h ^ v) * 0x100000001b3ULL; };
  for (const auto& [p, exps] : key.primary_parts) {
    mix(BigIntHash{}(p));
    for (unsigned e : exps) mix(e);
    mix(0xffu);
  }
  return h;
}

CanonicalGroupKey normalize_key(std::map<BigInt, std::vector<unsigned>> parts) {
  CanonicalGroupKey key;
  for (auto& [p, exps] : parts) {
    std::erase(exps, 0u);
    if (exps.empty()) continue;
    std::sort(exps.begin(), exps.end(), std::greater<>());
    key.primary_parts.emplace(p, std::move(exps));
  }
  return key;
}

CanonicalGroupKey key_of_cyclic_sum(std::span<const BigInt> orders, const FactorOptions& options) {
  std::map<BigInt, std::vector<unsigned>> parts;
  for (const auto& n : orders) {
    if (n < 1) throw NonPositiveModulus("cyclic order must be >= 1, got " + n.get_str());
    for (const auto& [p, k] : factorize(n, options).factors) parts[p].push_back(k);
  }
  return normalize_key(std::move(parts));
}

AbelianGroup::AbelianGroup(std::vector<BigInt> moduli, const FactorOptions& options)
    : moduli_(std::move(moduli)), order_(1) {
  std::map<BigInt, PrimeComponent> by_prime;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const BigInt& d = moduli_[i];
    if (d < 1) throw NonPositiveModulus("modulus must be >= 1, got " + d.get_str());
    order_ *= d;
    for (const auto& [p, k] : factorize(d, options).factors) {
      auto& comp = by_prime[p];
      comp.prime = p;
      comp.positions.push_back(i);
      comp.exponents.push_back(k);
      comp.prime_powers.push_back(power(p, k));
    }
  }

  std::map<BigInt, std::vector<unsigned>> parts;
  for (auto& [p, comp] : by_prime) parts[p] = comp.exponents;
  canonical_ = normalize_key(std::move(parts));
  invariant_factors_ = canonical_.invariant_factors();

  const std::size_t k = invariant_factors_.size();
  for (auto& [p, comp] : by_prime) {
    std::vector<std::size_t> idx(comp.positions.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return comp.exponents[a] > comp.exponents[b]; });
    comp.invariant_slot.assign(idx.size(), 0);
    for (std::size_t j = 0; j < idx.size(); ++j) comp.invariant_slot[idx[j]] = k - 1 - j;
    components_.push_back(std::move(comp));
  }
}

BigInt AbelianGroup::exponent() const { return canonical_.exponent(); }

const PrimeComponent* AbelianGroup::component(const BigInt& prime) const {
  auto it = std::lower_bound(components_.begin(), components_.end(), prime,
                             [](const PrimeComponent& c, const BigInt& p) { return c.prime < p; });
  if (it == components_.end() || it->prime != prime) return nullptr;
  return &*it;
}

void AbelianGroup::check_arity(const GroupElement& x) const {
  if (x.arity() != moduli_.size())
    throw DimensionMismatch("element has " + std::to_string(x.arity()) + " coordinates, group has " +
                            std::to_string(moduli_.size()) + " cyclic factors");
}

GroupElement AbelianGroup::element(std::vector<BigInt> coords) const {
  if (coords.size() != moduli_.size())
    throw DimensionMismatch("element has " + std::to_string(coords.size()) + " coordinates, group has " +
                            std::to_string(moduli_.size()) + " cyclic factors");
  for (std::size_t i = 0; i < coords.size(); ++i)
    mpz_fdiv_r(coords[i].get_mpz_t(), coords[i].get_mpz_t(), moduli_[i].get_mpz_t());
  return GroupElement(std::move(coords));
}

GroupElement AbelianGroup::identity() const {
  return GroupElement(std::vector<BigInt>(moduli_.size(), BigInt(0)));
}

GroupElement AbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
  check_arity(x);
  check_arity(y);
  std::vector<BigInt> out(moduli_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.coords()[i] + y.coords()[i];
  return element(std::move(out));
}

GroupElement AbelianGroup::multiply(const GroupElement& x, const BigInt& k) const {
  check_arity(x);
  std::vector<BigInt> out(moduli_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.coords()[i] * k;
  return element(std::move(out));
}

AbelianGroup make_group(std::vector<BigInt> moduli) { return AbelianGroup(std::move(moduli)); }

BigInt element_order(const AbelianGroup& g, const GroupElement& x) {
  g.check_arity(x);
  BigInt out = 1, gcd, part;
  for (std::size_t i = 0; i < x.arity(); ++i) {
    const BigInt& d = g.moduli()[i];
    mpz_gcd(gcd.get_mpz_t(), d.get_mpz_t(), x.coords()[i].get_mpz_t());
    mpz_divexact(part.get_mpz_t(), d.get_mpz_t(), gcd.get_mpz_t());
    if (part != 1) mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), part.get_mpz_t());
  }
  return out;
}

PPrimaryPart valuations_at(const PrimeComponent& component, const GroupElement& x) {
  PPrimaryPart part;
  part.prime = component.prime;
  part.pairs.reserve(component.positions.size());
  for (std::size_t j = 0; j < component.positions.size(); ++j) {
    const unsigned e = component.exponents[j];
    // x mod p^e has valuation min(nu_p(x), e), reading 0 as valuation e
    part.pairs.push_back({nu_capped(component.prime, x.coords()[component.positions[j]], e), e});
  }
  return part;
}

std::map<BigInt, PPrimaryPart> sylow_decompose(const AbelianGroup& g, const GroupElement& x) {
  g.check_arity(x);
  std::map<BigInt, PPrimaryPart> out;
  for (const auto& comp : g.primary_components()) out.emplace(comp.prime, valuations_at(comp, x));
  return out;
}

std::vector<BigInt> to_invariant_coordinates(const AbelianGroup& g, const GroupElement& x) {
  g.check_arity(x);
  const std::size_t k = g.invariant_factors().size();
  std::vector<std::vector<BigInt>> residues(k), moduli(k);
  BigInt r;
  for (const auto& comp : g.primary_components()) {
    for (std::size_t j = 0; j < comp.positions.size(); ++j) {
      mpz_fdiv_r(r.get_mpz_t(), x.coords()[comp.positions[j]].get_mpz_t(), comp.prime_powers[j].get_mpz_t());
      residues[comp.invariant_slot[j]].push_back(r);
      moduli[comp.invariant_slot[j]].push_back(comp.prime_powers[j]);
    }
  }
  std::vector<BigInt> out(k);
  for (std::size_t s = 0; s < k; ++s) out[s] = crt(residues[s], moduli[s]);
  return out;
}

}  // namespace abelian
