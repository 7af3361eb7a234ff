#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "abelian/group.hpp"
#include "abelian/orbits.hpp"

#include "json.hpp"

namespace abelian::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kNotEquivalent = 1,
  kParseError = 2,
  kArityMismatch = 3,
  kFactorizationFailure = 4,
  kCapacityExceeded = 5,
};

/// Cyclic orders, either comma separated ("2,4,8,8") or in product form
/// ("C2 x C8 x C8"). "C1" and "1" both denote the trivial group.
std::vector<BigInt> parse_group_spec(std::string_view text);

/// Comma-separated residues; negative values are allowed and get reduced.
std::vector<BigInt> parse_element_spec(std::string_view text);

std::string format_group_spec(const AbelianGroup& g);
std::string format_element_spec(const GroupElement& x);

/// "C2 x C8 x C8"; the trivial group prints as "C1".
std::string render_cyclic_chain(const CanonicalGroupKey& key);
/// "2^1 x 2^3 x 2^3", primes ascending, exponents ascending; "1" if trivial.
std::string render_primary(const CanonicalGroupKey& key);
/// "2:(0,1),(0,2) 3:(1)"; "-" when there is nothing to show.
std::string render_reduced_forms(const OrbitSummary& orbit);

nlohmann::ordered_json key_to_json(const CanonicalGroupKey& key);
nlohmann::ordered_json group_to_json(const AbelianGroup& g);

/// One line of an orbit listing; `detail` fills the last column.
struct OrbitRow {
  BigInt size;
  CanonicalGroupKey quotient;
  std::string detail;
};

void write_orbit_rows(std::ostream& out, const AbelianGroup& g, std::span<const OrbitRow> rows,
                      std::string_view detail_header);
void write_orbit_table(std::ostream& out, const AbelianGroup& g, std::span<const OrbitSummary> orbits);
nlohmann::ordered_json orbits_to_json(const AbelianGroup& g, std::span<const OrbitSummary> orbits);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace abelian::cli
