#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>

namespace abelian {

/// Arbitrary-precision integer used for every order, modulus and coordinate.
/// Group exponents of interest reach 10^20 and beyond, so 64-bit types are
/// not enough.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

inline BigInt power(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

struct BigIntHash {
  std::size_t operator()(const BigInt& v) const noexcept {
    // low limb mixed with sign and size is plenty for small-prime keys
    const auto* z = v.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(z->_mp_size);
    if (z->_mp_size != 0) h ^= static_cast<std::size_t>(z->_mp_d[0]) * 0x9e3779b97f4a7c15ULL;
    return h;
  }
};

}  // namespace abelian
