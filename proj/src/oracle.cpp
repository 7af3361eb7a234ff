#include "abelian/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "abelian/errors.hpp"

namespace abelian::oracle {

namespace {

using Coords = std::vector<std::uint64_t>;

// Mixed-radix view of a small group with native arithmetic.
struct Dense {
  std::vector<std::uint64_t> mod;
  std::uint64_t order = 1;

  Dense(const AbelianGroup& g, std::uint64_t cap) {
    if (g.order() > cap) throw CapacityExceeded("group order " + g.order().get_str() + " exceeds oracle cap");
    for (const auto& d : g.moduli()) {
      mod.push_back(d.get_ui());
      order *= mod.back();
    }
  }

  std::size_t rank() const { return mod.size(); }

  std::uint64_t encode(const Coords& c) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < mod.size(); ++i) idx = idx * mod[i] + c[i];
    return idx;
  }

  void decode(std::uint64_t idx, Coords& c) const {
    for (std::size_t i = mod.size(); i-- > 0;) {
      c[i] = idx % mod[i];
      idx /= mod[i];
    }
  }

  void add_into(Coords& y, const Coords& z) const {
    for (std::size_t j = 0; j < mod.size(); ++j) {
      y[j] += z[j];
      if (y[j] >= mod[j]) y[j] -= mod[j];
    }
  }

  Coords coords_of(const GroupElement& x) const {
    Coords c(mod.size());
    for (std::size_t i = 0; i < mod.size(); ++i) c[i] = x.coords()[i].get_ui();
    return c;
  }

  // sum_i x_i * images[i]
  Coords apply(const std::vector<const Coords*>& images, const Coords& x) const {
    Coords y(mod.size(), 0);
    for (std::size_t i = 0; i < mod.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < mod.size(); ++j) y[j] = (y[j] + x[i] % mod[j] * (*images[i])[j]) % mod[j];
    }
    return y;
  }
};

// Elements whose order divides d_i, one list per generator i.
std::vector<std::vector<Coords>> image_candidates(const Dense& g) {
  std::vector<std::vector<Coords>> out(g.rank());
  Coords c(g.rank());
  for (std::uint64_t idx = 0; idx < g.order; ++idx) {
    g.decode(idx, c);
    for (std::size_t i = 0; i < g.rank(); ++i) {
      bool killed = true;
      for (std::size_t j = 0; j < g.rank() && killed; ++j) killed = (g.mod[i] % g.mod[j] * c[j]) % g.mod[j] == 0;
      if (killed) out[i].push_back(c);
    }
  }
  return out;
}

// Walks every x in odometer order while tracking phi(x) incrementally.
bool is_bijective(const Dense& g, const std::vector<const Coords*>& images, std::vector<std::uint8_t>& seen) {
  std::fill(seen.begin(), seen.end(), 0);
  const std::size_t r = g.rank();
  Coords x(r, 0), y(r, 0);
  for (std::uint64_t step = 0; step < g.order; ++step) {
    const std::uint64_t idx = g.encode(y);
    if (seen[idx]) return false;
    seen[idx] = 1;
    for (std::size_t i = r; i-- > 0;) {
      g.add_into(y, *images[i]);
      if (++x[i] < g.mod[i]) break;
      x[i] = 0;
    }
  }
  return true;
}

struct Search {
  Dense dense;
  std::vector<std::vector<Coords>> candidates;
  std::uint64_t total = 1;

  Search(const AbelianGroup& g, std::uint64_t cap) : dense(g, cap), candidates(image_candidates(dense)) {
    for (const auto& c : candidates) {
      if (total > cap / c.size())
        throw CapacityExceeded("homomorphism search space exceeds oracle cap " + std::to_string(cap));
      total *= c.size();
    }
  }

  // Bijective tuples among indices [lo, hi), as candidate picks.
  std::vector<std::vector<std::uint32_t>> scan(std::uint64_t lo, std::uint64_t hi) const {
    const std::size_t r = dense.rank();
    std::vector<std::vector<std::uint32_t>> found;
    std::vector<std::uint8_t> seen(dense.order);
    std::vector<std::uint32_t> pick(r, 0);
    std::uint64_t rest = lo;
    for (std::size_t i = r; i-- > 0;) {
      pick[i] = static_cast<std::uint32_t>(rest % candidates[i].size());
      rest /= candidates[i].size();
    }
    std::vector<const Coords*> images(r);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      for (std::size_t i = 0; i < r; ++i) images[i] = &candidates[i][pick[i]];
      if (is_bijective(dense, images, seen)) found.push_back(pick);
      for (std::size_t i = r; i-- > 0;) {
        if (++pick[i] < candidates[i].size()) break;
        pick[i] = 0;
      }
    }
    return found;
  }

  EndomorphismTable table(const AbelianGroup& g, const std::vector<std::uint32_t>& pick) const {
    EndomorphismTable t;
    for (std::size_t i = 0; i < pick.size(); ++i) {
      const Coords& c = candidates[i][pick[i]];
      t.images.push_back(g.element(std::vector<BigInt>(c.begin(), c.end())));
    }
    return t;
  }
};

std::vector<std::vector<const Coords*>> dense_images(const Search& s,
                                                     const std::vector<std::vector<std::uint32_t>>& picks) {
  std::vector<std::vector<const Coords*>> out;
  out.reserve(picks.size());
  for (const auto& pick : picks) {
    std::vector<const Coords*> images(pick.size());
    for (std::size_t i = 0; i < pick.size(); ++i) images[i] = &s.candidates[i][pick[i]];
    out.push_back(std::move(images));
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> automorphism_picks(const Search& s, bool parallel) {
  std::uint64_t threads = 1;
#ifdef _OPENMP
  if (parallel) threads = static_cast<std::uint64_t>(omp_get_max_threads());
#endif
  const std::uint64_t nblocks =
      parallel ? std::max<std::uint64_t>(1, std::min(threads * 8, s.total / 64)) : 1;
  std::vector<std::vector<std::vector<std::uint32_t>>> blocks(nblocks);
  const std::uint64_t step = s.total / nblocks, extra = s.total % nblocks;

#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(nblocks); ++k) {
    const auto uk = static_cast<std::uint64_t>(k);
    const std::uint64_t lo = uk * step + std::min(uk, extra);
    const std::uint64_t hi = lo + step + (uk < extra ? 1 : 0);
    blocks[uk] = s.scan(lo, hi);
  }

  std::vector<std::vector<std::uint32_t>> out;
  for (auto& block : blocks)
    out.insert(out.end(), std::make_move_iterator(block.begin()), std::make_move_iterator(block.end()));
  return out;
}

std::vector<EndomorphismTable> to_tables(const AbelianGroup& g, const Search& s,
                                         const std::vector<std::vector<std::uint32_t>>& picks) {
  std::vector<EndomorphismTable> out;
  out.reserve(picks.size());
  for (const auto& pick : picks) out.push_back(s.table(g, pick));
  return out;
}

std::vector<std::uint64_t> small_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::vector<GroupElement> all_elements(const AbelianGroup& g, const OracleOptions& options) {
  const Dense dense(g, options.cap);
  std::vector<GroupElement> out;
  out.reserve(dense.order);
  Coords c(dense.rank());
  for (std::uint64_t idx = 0; idx < dense.order; ++idx) {
    dense.decode(idx, c);
    out.push_back(g.element(std::vector<BigInt>(c.begin(), c.end())));
  }
  return out;
}

std::uint64_t element_index(const AbelianGroup& g, const GroupElement& x) {
  g.check_arity(x);
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < g.rank(); ++i) idx = idx * g.moduli()[i].get_ui() + x.coords()[i].get_ui();
  return idx;
}

BigInt homomorphism_count(const AbelianGroup& g) {
  BigInt n = 1, gcd;
  for (const auto& di : g.moduli()) {
    for (const auto& dj : g.moduli()) {
      mpz_gcd(gcd.get_mpz_t(), di.get_mpz_t(), dj.get_mpz_t());
      n *= gcd;
    }
  }
  return n;
}

std::vector<EndomorphismTable> enumerate_automorphisms(const AbelianGroup& g, const OracleOptions& options) {
  const Search s(g, options.cap);
  return to_tables(g, s, automorphism_picks(s, true));
}

std::vector<EndomorphismTable> enumerate_automorphisms_serial(const AbelianGroup& g,
                                                              const OracleOptions& options) {
  const Search s(g, options.cap);
  return to_tables(g, s, automorphism_picks(s, false));
}

GroupElement apply(const AbelianGroup& g, const EndomorphismTable& phi, const GroupElement& x) {
  g.check_arity(x);
  if (phi.images.size() != g.rank()) throw DimensionMismatch("endomorphism table has wrong arity");
  std::vector<BigInt> y(g.rank(), BigInt(0));
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j) y[j] += x.coords()[i] * phi.images[i].coords()[j];
  return g.element(std::move(y));
}

EndomorphismTable compose(const AbelianGroup& g, const EndomorphismTable& outer, const EndomorphismTable& inner) {
  EndomorphismTable out;
  for (const auto& image : inner.images) out.images.push_back(apply(g, outer, image));
  return out;
}

BigInt aut_order_homocyclic(const BigInt& p, unsigned m, unsigned n) {
  BigInt out = power(p, static_cast<unsigned long>(m - 1) * n * n);
  const BigInt pn = power(p, n);
  for (unsigned j = 0; j < n; ++j) out *= pn - power(p, j);
  return out;
}

std::vector<std::uint32_t> brute_orbit_labels(const AbelianGroup& g, const OracleOptions& options) {
  const Search s(g, options.cap);
  const auto picks = automorphism_picks(s, true);
  const auto autos = dense_images(s, picks);
  const Dense& dense = s.dense;

  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> labels(dense.order, kUnset);
  std::uint32_t next = 0;
  Coords x(dense.rank());
  for (std::uint64_t idx = 0; idx < dense.order; ++idx) {
    if (labels[idx] != kUnset) continue;
    dense.decode(idx, x);
    for (const auto& images : autos) labels[dense.encode(dense.apply(images, x))] = next;
    ++next;
  }
  return labels;
}

std::vector<std::vector<GroupElement>> brute_orbits(const AbelianGroup& g, const OracleOptions& options) {
  const auto labels = brute_orbit_labels(g, options);
  const auto elements = all_elements(g, options);
  std::vector<std::vector<GroupElement>> out;
  for (std::size_t idx = 0; idx < labels.size(); ++idx) {
    if (labels[idx] >= out.size()) out.resize(labels[idx] + 1);
    out[labels[idx]].push_back(elements[idx]);
  }
  return out;
}

bool brute_are_automorphic(const AbelianGroup& g, const GroupElement& x, const GroupElement& y,
                           const OracleOptions& options) {
  g.check_arity(x);
  g.check_arity(y);
  const Search s(g, options.cap);
  const auto picks = automorphism_picks(s, true);
  const Coords xc = s.dense.coords_of(x), yc = s.dense.coords_of(y);
  for (const auto& images : dense_images(s, picks))
    if (s.dense.apply(images, xc) == yc) return true;
  return false;
}

CanonicalGroupKey brute_quotient_key(const AbelianGroup& g, const GroupElement& x, const OracleOptions& options) {
  g.check_arity(x);
  const Dense dense(g, options.cap);
  const std::size_t r = dense.rank();

  std::vector<std::uint8_t> in_sub(dense.order, 0);
  std::uint64_t sub_order = 0;
  const Coords xc = dense.coords_of(x);
  Coords m(r, 0);
  do {
    in_sub[dense.encode(m)] = 1;
    ++sub_order;
    dense.add_into(m, xc);
  } while (dense.encode(m) != 0);

  const std::uint64_t q_order = dense.order / sub_order;
  std::map<BigInt, std::vector<unsigned>> parts;
  Coords c(r), pc(r);
  for (std::uint64_t p : small_prime_factors(q_order)) {
    std::uint64_t p_part = 1;
    for (std::uint64_t rest = q_order; rest % p == 0; rest /= p) p_part *= p;

    // ranks[k-1]: number of cyclic factors of order >= p^k
    std::vector<unsigned> ranks;
    std::uint64_t prev = 1, multiplier = 1;
    while (prev < p_part) {
      multiplier *= p;
      std::uint64_t killed = 0;
      for (std::uint64_t idx = 0; idx < dense.order; ++idx) {
        dense.decode(idx, c);
        for (std::size_t j = 0; j < r; ++j) pc[j] = (multiplier % dense.mod[j]) * c[j] % dense.mod[j];
        killed += in_sub[dense.encode(pc)];
      }
      const std::uint64_t torsion = killed / sub_order;
      unsigned step = 0;
      for (std::uint64_t ratio = torsion / prev; ratio > 1; ratio /= p) ++step;
      ranks.push_back(step);
      prev = torsion;
    }
    std::vector<unsigned>& exps = parts[BigInt(static_cast<unsigned long>(p))];
    for (std::size_t k = ranks.size(); k-- > 0;) {
      const unsigned above = k + 1 < ranks.size() ? ranks[k + 1] : 0;
      for (unsigned n = above; n < ranks[k]; ++n) exps.push_back(static_cast<unsigned>(k + 1));
    }
  }
  return normalize_key(std::move(parts));
}

}  // namespace abelian::oracle
