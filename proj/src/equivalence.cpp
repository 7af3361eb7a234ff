#include "abelian/equivalence.hpp"

#include "abelian/fast_quotient.hpp"
#include "abelian/snf.hpp"

namespace abelian {

std::string_view to_string(QuotientMethod method) {
  return method == QuotientMethod::fast ? "fast" : "snf";
}

CanonicalGroupKey quotient_key(const AbelianGroup& g, const GroupElement& x, QuotientMethod method) {
  return method == QuotientMethod::fast ? quotient(g, x) : quotient_by_snf(g, x);
}

bool are_automorphic(const AbelianGroup& g, const GroupElement& x, const GroupElement& y,
                     QuotientMethod method) {
  g.check_arity(x);
  g.check_arity(y);
  if (element_order(g, x) != element_order(g, y)) return false;
  return quotient_key(g, x, method) == quotient_key(g, y, method);
}

}  // namespace abelian
