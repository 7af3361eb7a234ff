#include "abelian/orbits.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "abelian/errors.hpp"
#include "abelian/fast_quotient.hpp"

namespace abelian {

namespace {

struct ExponentsHash {
  std::size_t operator()(const std::vector<unsigned>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (unsigned e : v) h = (h ^ e) * 0x100000001b3ULL;
    return h ^ v.size();
  }
};

// Reduced forms of one p-group, addressed by their odometer index.
struct FormSpace {
  BigInt prime;
  std::vector<unsigned> exponents;
  std::vector<std::vector<BigInt>> counts;  // counts[i][b]: residues of C_{p^e_i} with valuation b
  std::uint64_t total = 1;
};

FormSpace make_space(const BigInt& p, std::span<const unsigned> exponents, std::uint64_t cap) {
  FormSpace s;
  s.prime = p;
  s.exponents.assign(exponents.begin(), exponents.end());
  for (unsigned e : s.exponents) {
    if (e == 0) throw InvalidValuation("p-group exponents must be >= 1");
    if (s.total > cap / (e + 1))
      throw CapacityExceeded("more than " + std::to_string(cap) + " reduced forms for prime " + p.get_str());
    s.total *= e + 1;
    std::vector<BigInt> row(e + 1);
    for (unsigned b = 0; b < e; ++b) row[b] = phi_prime_power(p, e - b);
    row[e] = 1;
    s.counts.push_back(std::move(row));
  }
  if (s.total > cap)
    throw CapacityExceeded("more than " + std::to_string(cap) + " reduced forms for prime " + p.get_str());
  return s;
}

struct PartialOrbit {
  std::vector<unsigned> key;
  std::vector<std::vector<unsigned>> forms;
  BigInt size = 0;
};

// Orbits seen in one contiguous index range, in order of first appearance.
struct Block {
  std::vector<PartialOrbit> orbits;
  std::unordered_map<std::vector<unsigned>, std::size_t, ExponentsHash> index;

  PartialOrbit& slot(std::vector<unsigned>&& key) {
    auto [it, fresh] = index.try_emplace(key, orbits.size());
    if (fresh) orbits.push_back(PartialOrbit{std::move(key), {}, 0});
    return orbits[it->second];
  }
};

void visit_range(const FormSpace& s, std::uint64_t lo, std::uint64_t hi, Block& out) {
  const std::size_t n = s.exponents.size();
  std::vector<unsigned> b(n, 0);
  std::uint64_t rest = lo;
  for (std::size_t i = n; i-- > 0;) {
    b[i] = static_cast<unsigned>(rest % (s.exponents[i] + 1));
    rest /= s.exponents[i] + 1;
  }

  std::vector<ValuationPair> pairs(n);
  BigInt count;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    for (std::size_t i = 0; i < n; ++i) pairs[i] = {b[i], s.exponents[i]};
    PartialOrbit& orbit = out.slot(p_group_quotient(pairs));
    count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= s.counts[i][b[i]];
    orbit.size += count;
    orbit.forms.push_back(b);

    for (std::size_t i = n; i-- > 0;) {
      if (++b[i] <= s.exponents[i]) break;
      b[i] = 0;
    }
  }
}

// Blocks cover consecutive index ranges, so folding them in order keeps both
// the orbit order and the per-orbit form order of a single sweep.
std::vector<OrbitSummary> merge_blocks(const BigInt& p, std::vector<Block>& blocks) {
  Block all;
  for (auto& block : blocks) {
    for (auto& part : block.orbits) {
      PartialOrbit& orbit = all.slot(std::move(part.key));
      orbit.size += part.size;
      orbit.forms.insert(orbit.forms.end(), std::make_move_iterator(part.forms.begin()),
                         std::make_move_iterator(part.forms.end()));
    }
  }
  std::vector<OrbitSummary> out;
  out.reserve(all.orbits.size());
  for (auto& part : all.orbits) {
    OrbitSummary summary;
    if (!part.key.empty()) summary.quotient_key.primary_parts.emplace(p, part.key);
    summary.reduced_forms.emplace(p, std::move(part.forms));
    summary.size = std::move(part.size);
    out.push_back(std::move(summary));
  }
  return out;
}

using PrimeOrbitsFn = std::vector<OrbitSummary> (*)(const BigInt&, std::span<const unsigned>,
                                                    const OrbitOptions&);

std::vector<OrbitSummary> combine(const AbelianGroup& g, const OrbitOptions& options, OrbitStats* stats,
                                  PrimeOrbitsFn per_prime) {
  std::vector<std::vector<OrbitSummary>> lists;
  std::uint64_t visited = 0;
  std::uint64_t combined = 1;
  for (const auto& comp : g.primary_components()) {
    lists.push_back(per_prime(comp.prime, comp.exponents, options));
    std::uint64_t forms = 1;
    for (unsigned e : comp.exponents) forms *= e + 1;
    visited += forms;
    if (combined > options.cap / lists.back().size())
      throw CapacityExceeded("more than " + std::to_string(options.cap) + " orbits");
    combined *= lists.back().size();
  }

  std::vector<OrbitSummary> out;
  out.reserve(combined);
  std::vector<std::size_t> pick(lists.size(), 0);
  for (std::uint64_t n = 0; n < combined; ++n) {
    OrbitSummary orbit;
    orbit.size = 1;
    for (std::size_t k = 0; k < lists.size(); ++k) {
      const OrbitSummary& part = lists[k][pick[k]];
      orbit.quotient_key.primary_parts.insert(part.quotient_key.primary_parts.begin(),
                                              part.quotient_key.primary_parts.end());
      orbit.reduced_forms.insert(part.reduced_forms.begin(), part.reduced_forms.end());
      orbit.size *= part.size;
    }
    out.push_back(std::move(orbit));
    for (std::size_t k = lists.size(); k-- > 0;) {
      if (++pick[k] < lists[k].size()) break;
      pick[k] = 0;
    }
  }

  if (stats) {
    stats->forms_visited = visited;
    stats->forms_covered = 0;
    for (const auto& orbit : out) stats->forms_covered += orbit.form_count();
  }
  return out;
}

}  // namespace

ReducedForm OrbitSummary::representative() const {
  ReducedForm form;
  for (const auto& [p, forms] : reduced_forms)
    if (!forms.empty()) form.exponents.emplace(p, forms.front());
  return form;
}

BigInt OrbitSummary::form_count() const {
  BigInt n = 1;
  for (const auto& [p, forms] : reduced_forms) n *= static_cast<unsigned long>(forms.size());
  return n;
}

ReducedForm reduced_form(const AbelianGroup& g, const GroupElement& x) {
  g.check_arity(x);
  ReducedForm form;
  for (const auto& comp : g.primary_components()) {
    std::vector<unsigned> b;
    b.reserve(comp.positions.size());
    for (const auto& pair : valuations_at(comp, x).pairs) b.push_back(pair.f);
    form.exponents.emplace(comp.prime, std::move(b));
  }
  return form;
}

GroupElement to_element(const AbelianGroup& g, const ReducedForm& form) {
  if (form.exponents.size() != g.primary_components().size())
    throw std::invalid_argument("reduced form does not match the group's primes");
  std::vector<std::vector<BigInt>> residues(g.rank()), moduli(g.rank());
  for (const auto& comp : g.primary_components()) {
    auto it = form.exponents.find(comp.prime);
    if (it == form.exponents.end() || it->second.size() != comp.positions.size())
      throw std::invalid_argument("reduced form does not match component of prime " + comp.prime.get_str());
    for (std::size_t j = 0; j < comp.positions.size(); ++j) {
      const unsigned b = it->second[j];
      if (b > comp.exponents[j]) throw std::invalid_argument("reduced form exponent out of range");
      const std::size_t pos = comp.positions[j];
      residues[pos].push_back(b == comp.exponents[j] ? BigInt(0) : power(comp.prime, b));
      moduli[pos].push_back(comp.prime_powers[j]);
    }
  }
  std::vector<BigInt> coords(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) coords[i] = crt(residues[i], moduli[i]);
  return g.element(std::move(coords));
}

std::vector<OrbitSummary> p_group_orbits_serial(const BigInt& p, std::span<const unsigned> exponents,
                                                const OrbitOptions& options) {
  const FormSpace space = make_space(p, exponents, options.cap);
  std::vector<Block> blocks(1);
  visit_range(space, 0, space.total, blocks[0]);
  return merge_blocks(p, blocks);
}

std::vector<OrbitSummary> p_group_orbits(const BigInt& p, std::span<const unsigned> exponents,
                                         const OrbitOptions& options) {
  const FormSpace space = make_space(p, exponents, options.cap);
  std::uint64_t threads = 1;
#ifdef _OPENMP
  threads = static_cast<std::uint64_t>(omp_get_max_threads());
#endif
  const std::uint64_t nblocks = std::max<std::uint64_t>(1, std::min(threads * 4, space.total / 256));
  std::vector<Block> blocks(nblocks);
  const std::uint64_t step = space.total / nblocks, extra = space.total % nblocks;

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(nblocks); ++k) {
    const auto uk = static_cast<std::uint64_t>(k);
    const std::uint64_t lo = uk * step + std::min(uk, extra);
    const std::uint64_t hi = lo + step + (uk < extra ? 1 : 0);
    visit_range(space, lo, hi, blocks[uk]);
  }
  return merge_blocks(p, blocks);
}

std::vector<OrbitSummary> enumerate_orbits(const AbelianGroup& g, const OrbitOptions& options,
                                           OrbitStats* stats) {
  return combine(g, options, stats, &p_group_orbits);
}

std::vector<OrbitSummary> enumerate_orbits_serial(const AbelianGroup& g, const OrbitOptions& options,
                                                  OrbitStats* stats) {
  return combine(g, options, stats, &p_group_orbits_serial);
}

}  // namespace abelian
