#include "abelian/fast_quotient.hpp"

#include <algorithm>
#include <string>

#include "abelian/errors.hpp"

namespace abelian {

namespace {

void validate(std::span<const ValuationPair> pairs) {
  for (const auto& [f, e] : pairs) {
    if (e == 0) throw InvalidValuation("component exponent must be >= 1");
    if (f > e)
      throw InvalidValuation("valuation " + std::to_string(f) + " exceeds exponent " + std::to_string(e));
  }
}

}  // namespace

std::vector<unsigned> sweep_survivors(std::span<const ValuationPair> pairs) {
  validate(pairs);
  std::vector<ValuationPair> cols(pairs.begin(), pairs.end());
  std::stable_sort(cols.begin(), cols.end(),
                   [](const ValuationPair& a, const ValuationPair& b) { return a.f < b.f; });

  std::vector<unsigned> survivors;
  survivors.reserve(cols.size());
  unsigned long carry = 0;
  for (const auto& col : cols) {
    const unsigned long f = col.f + carry;
    if (col.e > f) carry += col.e - f;
    survivors.push_back(static_cast<unsigned>(std::min<unsigned long>(f, col.e)));
  }
  return survivors;
}

std::vector<unsigned> p_group_quotient(std::span<const ValuationPair> pairs) {
  auto out = sweep_survivors(pairs);
  std::erase(out, 0u);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

PPrimaryPart normalize_element_valuations(const AbelianGroup& g, const GroupElement& x, const BigInt& p) {
  g.check_arity(x);
  if (const PrimeComponent* comp = g.component(p)) return valuations_at(*comp, x);
  return PPrimaryPart{p, {}};
}

CanonicalGroupKey quotient(const AbelianGroup& g, const GroupElement& x) {
  g.check_arity(x);
  CanonicalGroupKey key;
  for (const auto& comp : g.primary_components()) {
    auto exps = p_group_quotient(valuations_at(comp, x).pairs);
    if (!exps.empty()) key.primary_parts.emplace(comp.prime, std::move(exps));
  }
  return key;
}

}  // namespace abelian
