#pragma once

// Shared helpers for the test binaries. Everything here is deliberately
// naive: group lists come from divisor recursion, element orders from
// repeated addition, and the alternative zero-coordinate rule removes
// components outright.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "abelian/fast_quotient.hpp"
#include "abelian/group.hpp"
#include "abelian/orbits.hpp"

namespace testsupport {

using abelian::AbelianGroup;
using abelian::BigInt;
using abelian::GroupElement;

inline std::vector<BigInt> big(const std::vector<long>& v) {
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

inline AbelianGroup group(const std::vector<long>& moduli) { return AbelianGroup(big(moduli)); }

inline GroupElement elem(const AbelianGroup& g, const std::vector<long>& coords) { return g.element(big(coords)); }

namespace detail {

inline void chains(long remaining, long last, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (remaining == 1) {
    out.push_back(cur);
    return;
  }
  // next factor is a multiple of the previous one and divides what is left
  for (long m = last; m <= remaining; m += last) {
    if (m == 1 || remaining % m != 0) continue;
    // every later factor is a multiple of m, so m must divide remaining / m
    // unless this is the last factor
    const long rest = remaining / m;
    if (rest != 1 && rest % m != 0) continue;
    cur.push_back(m);
    chains(rest, m, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Every abelian group of order n, once each, as an invariant-factor chain
/// m_1 | m_2 | ... (ascending). Order 1 gives the single chain {1}.
inline std::vector<std::vector<long>> groups_of_order(long n) {
  if (n == 1) return {{1}};
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  detail::chains(n, 1, cur, out);
  return out;
}

inline std::vector<std::vector<long>> groups_up_to(long max_order) {
  std::vector<std::vector<long>> out;
  for (long n = 1; n <= max_order; ++n)
    for (auto& c : groups_of_order(n)) out.push_back(std::move(c));
  return out;
}

/// Every element, last coordinate fastest.
inline std::vector<GroupElement> elements(const AbelianGroup& g) {
  std::vector<GroupElement> out;
  const auto& d = g.moduli();
  std::vector<long> cur(d.size(), 0);
  for (;;) {
    out.push_back(elem(g, cur));
    std::size_t i = d.size();
    while (i > 0) {
      --i;
      if (++cur[i] < d[i].get_si()) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (d.empty()) return out;
  }
}

inline long brute_order(const AbelianGroup& g, const GroupElement& x) {
  GroupElement acc = x;
  long k = 1;
  while (!(acc == g.identity())) {
    acc = g.add(acc, x);
    ++k;
  }
  return k;
}

/// Zero-coordinate rule from the original description: drop a component
/// whose coordinate is zero, run the sweep on the rest, then put C_{p^e}
/// back in.
inline std::vector<unsigned> quotient_removing_zeros(std::span<const abelian::ValuationPair> pairs) {
  std::vector<abelian::ValuationPair> kept;
  std::vector<unsigned> reattached;
  for (const auto& pr : pairs) {
    if (pr.f == pr.e)
      reattached.push_back(pr.e);
    else
      kept.push_back(pr);
  }
  auto out = abelian::p_group_quotient(kept);
  out.insert(out.end(), reattached.begin(), reattached.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Random presentation (cyclic orders in arbitrary order, some units) of
/// a group of order at most `max_order`.
inline std::vector<long> random_presentation(std::mt19937_64& rng, long max_order, unsigned max_rank) {
  std::uniform_int_distribution<unsigned> rank_dist(1, max_rank);
  const unsigned rank = rank_dist(rng);
  std::vector<long> out;
  long order = 1;
  for (unsigned i = 0; i < rank; ++i) {
    const long room = max_order / order;
    if (room < 1) break;
    std::uniform_int_distribution<long> d_dist(1, std::max<long>(1, std::min<long>(room, 100000)));
    const long d = d_dist(rng);
    out.push_back(d);
    order *= d;
  }
  if (out.empty()) out.push_back(1);
  return out;
}

inline std::vector<long> random_coords(std::mt19937_64& rng, const std::vector<long>& moduli) {
  std::vector<long> out;
  for (long d : moduli) out.push_back(std::uniform_int_distribution<long>(0, d - 1)(rng));
  return out;
}

inline long divisor_count(long n) {
  long c = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) ++c;
  return c;
}

/// For every prime power q = p^k dividing |G|, the number of cosets of <x>
/// killed by q, by enumerating the subgroup and all its cosets.
inline std::map<long, long> quotient_census(const AbelianGroup& g, const GroupElement& x) {
  const auto all = elements(g);
  std::vector<GroupElement> sub{g.identity()};
  for (GroupElement y = x; !(y == g.identity()); y = g.add(y, x)) sub.push_back(y);
  auto in_sub = [&](const GroupElement& y) { return std::find(sub.begin(), sub.end(), y) != sub.end(); };

  const long order = g.order().get_si();
  const long qorder = order / static_cast<long>(sub.size());
  std::map<long, long> out;
  for (long q = 2; q <= qorder; ++q) {
    long p = 2;
    while (q % p) ++p;
    long r = q;
    while (r % p == 0) r /= p;
    if (r != 1 || qorder % q) continue;
    long killed = 0;
    for (const auto& y : all) killed += in_sub(g.multiply(y, q));
    out[q] = killed / static_cast<long>(sub.size());
  }
  return out;
}

/// The same census computed from a key: a p-group with exponents l_i has
/// p^(sum min(l_i, k)) elements killed by p^k. k runs over every p^k
/// dividing the p-part of the order, matching quotient_census.
inline std::map<long, long> key_census(const abelian::CanonicalGroupKey& key) {
  std::map<long, long> out;
  for (const auto& [pb, exps] : key.primary_parts) {
    const long p = pb.get_si();
    long q = 1;
    unsigned total = 0;
    for (unsigned e : exps) total += e;
    for (unsigned k = 1; k <= total; ++k) {
      q *= p;
      long s = 0;
      for (unsigned e : exps) s += std::min(e, k);
      long v = 1;
      for (long i = 0; i < s; ++i) v *= p;
      out[q] = v;
    }
  }
  return out;
}

/// Orbit index of every element (in elements() order), located by looking
/// the element's reduced form up in each orbit's form lists. An element
/// found in no orbit or in several gets SIZE_MAX.
inline std::vector<std::size_t> orbit_membership(const AbelianGroup& g,
                                                 const std::vector<abelian::OrbitSummary>& orbits) {
  auto contains = [](const abelian::OrbitSummary& orbit, const abelian::ReducedForm& form) {
    if (orbit.reduced_forms.size() != form.exponents.size()) return false;
    for (const auto& [p, b] : form.exponents) {
      const auto it = orbit.reduced_forms.find(p);
      if (it == orbit.reduced_forms.end()) return false;
      if (std::find(it->second.begin(), it->second.end(), b) == it->second.end()) return false;
    }
    return true;
  };
  std::vector<std::size_t> out;
  for (const auto& x : elements(g)) {
    const auto form = abelian::reduced_form(g, x);
    std::size_t found = SIZE_MAX, hits = 0;
    for (std::size_t i = 0; i < orbits.size(); ++i)
      if (contains(orbits[i], form)) {
        found = i;
        ++hits;
      }
    out.push_back(hits == 1 ? found : SIZE_MAX);
  }
  return out;
}

/// Upper bound used by the oracle cap in the ground-truth sweeps.
inline bool oracle_feasible(const std::vector<long>& chain, double limit = 1e7) {
  double order = 1;
  for (long d : chain) order *= static_cast<double>(d);
  return std::pow(order, static_cast<double>(chain.size())) <= limit;
}

}  // namespace testsupport
