#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "abelian/group.hpp"

namespace abelian {

/// Per prime, the exponents (b_1, ..., b_n) of the element (p^b_1, ..., p^b_n)
/// of the p-primary part, aligned with the group's p-component. b_i == e_i
/// stands for a zero coordinate.
struct ReducedForm {
  std::map<BigInt, std::vector<unsigned>> exponents;

  bool operator==(const ReducedForm& other) const { return exponents == other.exponents; }
};

/// One automorphism orbit. `reduced_forms` lists, for each prime, every
/// reduced form of the orbit's p-primary projection; picking one form per
/// prime gives a representative, and every such combination lies in the
/// orbit.
struct OrbitSummary {
  CanonicalGroupKey quotient_key;
  std::map<BigInt, std::vector<std::vector<unsigned>>> reduced_forms;
  BigInt size;

  /// First form of every prime.
  ReducedForm representative() const;
  /// Number of reduced forms covered: product over primes of the list sizes.
  BigInt form_count() const;
};

struct OrbitOptions {
  /// Maximum reduced forms per prime, and maximum combined orbits.
  std::uint64_t cap = 10'000'000;
};

struct OrbitStats {
  std::uint64_t forms_visited = 0;  // sum over primes of prod (e_i + 1)
  BigInt forms_covered = 0;         // sum over orbits of form_count()
};

ReducedForm reduced_form(const AbelianGroup& g, const GroupElement& x);

/// The element (p^b_i per prime, CRT-combined per coordinate) named by a
/// reduced form. Throws std::invalid_argument if the form does not fit g.
GroupElement to_element(const AbelianGroup& g, const ReducedForm& form);

/// Orbits of C_{p^e_1} + ... + C_{p^e_n}, in order of first appearance along
/// the lexicographic odometer over (b_1, ..., b_n). Reduced forms are spread
/// over OpenMP threads; the result is identical to p_group_orbits_serial.
/// Throws CapacityExceeded when prod (e_i + 1) exceeds the cap.
std::vector<OrbitSummary> p_group_orbits(const BigInt& p, std::span<const unsigned> exponents,
                                         const OrbitOptions& options = {});

/// Single-threaded reference for p_group_orbits.
std::vector<OrbitSummary> p_group_orbits_serial(const BigInt& p, std::span<const unsigned> exponents,
                                                const OrbitOptions& options = {});

/// All orbits of g: the product of the per-prime orbit lists, with sizes
/// multiplied and quotient keys merged. Last prime varies fastest.
std::vector<OrbitSummary> enumerate_orbits(const AbelianGroup& g, const OrbitOptions& options = {},
                                           OrbitStats* stats = nullptr);

std::vector<OrbitSummary> enumerate_orbits_serial(const AbelianGroup& g, const OrbitOptions& options = {},
                                                  OrbitStats* stats = nullptr);

}  // namespace abelian
