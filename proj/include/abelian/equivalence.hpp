#pragma once

#include <string_view>

#include "abelian/group.hpp"

namespace abelian {

enum class QuotientMethod { fast, snf };

std::string_view to_string(QuotientMethod method);

/// g / <x> through the chosen route; both routes agree on every input.
CanonicalGroupKey quotient_key(const AbelianGroup& g, const GroupElement& x,
                               QuotientMethod method = QuotientMethod::fast);

/// True iff some automorphism of g maps x to y, decided by comparing
/// g / <x> with g / <y>. Elements of different order are rejected before any
/// quotient is computed. Throws DimensionMismatch on arity.
bool are_automorphic(const AbelianGroup& g, const GroupElement& x, const GroupElement& y,
                     QuotientMethod method = QuotientMethod::fast);

}  // namespace abelian
