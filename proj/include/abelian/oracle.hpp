#pragma once

#include <cstdint>
#include <vector>

#include "abelian/group.hpp"

/// Brute-force ground truth for small groups: every automorphism, every
/// orbit, and quotients identified by counting cosets. Nothing here goes
/// through Smith normal form or the valuation sweep.
namespace abelian::oracle {

struct OracleOptions {
  /// Limit on |G| and on the number of candidate generator-image tuples.
  std::uint64_t cap = 10'000'000;
};

/// An endomorphism given by the image of each cyclic generator; generator i
/// must go to an element whose order divides d_i.
struct EndomorphismTable {
  std::vector<GroupElement> images;

  bool operator==(const EndomorphismTable& other) const { return images == other.images; }
};

/// Every element of g, last coordinate varying fastest.
std::vector<GroupElement> all_elements(const AbelianGroup& g, const OracleOptions& options = {});

/// Position of x in all_elements(g).
std::uint64_t element_index(const AbelianGroup& g, const GroupElement& x);

/// Number of generator-image tuples that define homomorphisms g -> g.
BigInt homomorphism_count(const AbelianGroup& g);

/// Aut(g) by exhaustive search over homomorphisms with a bijectivity filter,
/// in lexicographic order of the image tuples. The tuple space is sharded
/// over OpenMP threads; output matches the serial version exactly.
/// Throws CapacityExceeded when |G| or homomorphism_count(g) exceeds the cap.
std::vector<EndomorphismTable> enumerate_automorphisms(const AbelianGroup& g,
                                                       const OracleOptions& options = {});

std::vector<EndomorphismTable> enumerate_automorphisms_serial(const AbelianGroup& g,
                                                              const OracleOptions& options = {});

GroupElement apply(const AbelianGroup& g, const EndomorphismTable& phi, const GroupElement& x);

/// outer after inner.
EndomorphismTable compose(const AbelianGroup& g, const EndomorphismTable& outer,
                          const EndomorphismTable& inner);

/// p^((m-1) n^2) * prod_{j<n} (p^n - p^j), the order of Aut((C_{p^m})^n).
BigInt aut_order_homocyclic(const BigInt& p, unsigned m, unsigned n);

/// Orbits of the natural Aut(g) action, each sorted by element index and
/// listed by smallest member.
std::vector<std::vector<GroupElement>> brute_orbits(const AbelianGroup& g,
                                                    const OracleOptions& options = {});

/// Same partition as brute_orbits, as one orbit label per element index.
std::vector<std::uint32_t> brute_orbit_labels(const AbelianGroup& g, const OracleOptions& options = {});

/// True iff some enumerated automorphism maps x to y.
bool brute_are_automorphic(const AbelianGroup& g, const GroupElement& x, const GroupElement& y,
                           const OracleOptions& options = {});

/// g / <x> identified from torsion counts: for each prime p and k >= 1, the
/// number of cosets killed by p^k. Throws CapacityExceeded if |G| > cap.
CanonicalGroupKey brute_quotient_key(const AbelianGroup& g, const GroupElement& x,
                                     const OracleOptions& options = {});

}  // namespace abelian::oracle
