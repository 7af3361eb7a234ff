#pragma once

#include <span>
#include <vector>

#include "abelian/group.hpp"

namespace abelian {

/// Runs the valuation sweep on one p-primary slice and returns the surviving
/// value of every column in sweep order, zeros included.
///
/// Columns are stably sorted ascending by f. A running carry stands in for
/// the suffix additions: at column i the carry is added to f_i, then
/// max(0, e_i - f_i) is added to the carry, and min(f_i, e_i) survives.
/// Throws InvalidValuation if some e_i == 0 or f_i > e_i.
std::vector<unsigned> sweep_survivors(std::span<const ValuationPair> pairs);

/// Exponents of H / <x> for the p-group H described by `pairs`, sorted
/// descending with zeros dropped.
std::vector<unsigned> p_group_quotient(std::span<const ValuationPair> pairs);

/// f_i = nu_p of the p-part of each coordinate (e_i for zero p-parts),
/// position-aligned with g's p-component. Unit multipliers are discarded.
/// Empty when p does not divide |g|.
PPrimaryPart normalize_element_valuations(const AbelianGroup& g, const GroupElement& x,
                                          const BigInt& p);

/// Isomorphism class of g / <x>, assembled prime by prime.
CanonicalGroupKey quotient(const AbelianGroup& g, const GroupElement& x);

}  // namespace abelian
