#include <omp.h>

#include <algorithm>
#include <map>
#include <vector>

#include "abelian/equivalence.hpp"
#include "abelian/errors.hpp"
#include "abelian/orbits.hpp"
#include "doctest.h"
#include "support/support.hpp"

using namespace abelian;
using testsupport::big;
using testsupport::elem;
using testsupport::group;

namespace {

using Forms = std::map<BigInt, std::vector<unsigned>>;

std::vector<BigInt> sizes(const std::vector<OrbitSummary>& orbits) {
  std::vector<BigInt> out;
  for (const auto& o : orbits) out.push_back(o.size);
  return out;
}

bool contains(const OrbitSummary& orbit, const ReducedForm& form) {
  for (const auto& [p, b] : form.exponents) {
    const auto it = orbit.reduced_forms.find(p);
    if (it == orbit.reduced_forms.end()) return false;
    if (std::find(it->second.begin(), it->second.end(), b) == it->second.end()) return false;
  }
  return orbit.reduced_forms.size() == form.exponents.size();
}

bool same_orbits(const std::vector<OrbitSummary>& a, const std::vector<OrbitSummary>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].quotient_key == b[i].quotient_key) || a[i].size != b[i].size ||
        a[i].reduced_forms != b[i].reduced_forms)
      return false;
  return true;
}

}  // namespace

TEST_CASE("reduced_form examples") {
  const AbelianGroup g = group({4, 8});
  CHECK(reduced_form(g, elem(g, {3, 6})).exponents == Forms{{2, {0, 1}}});
  CHECK(reduced_form(g, g.identity()).exponents == Forms{{2, {2, 3}}});
  const AbelianGroup h = group({2, 4, 8, 8});
  CHECK(reduced_form(h, elem(h, {2, 1, 2, 4})).exponents == Forms{{2, {1, 0, 1, 2}}});
  const AbelianGroup c = group({12, 1});
  CHECK(reduced_form(c, elem(c, {10, 0})).exponents == Forms{{2, {1}}, {3, {0}}});
  CHECK(reduced_form(group({1}), group({1}).identity()).exponents.empty());
}

TEST_CASE("to_element inverts reduced_form up to automorphism") {
  for (const auto& moduli : std::vector<std::vector<long>>{{4, 8}, {12, 18}, {6, 4, 10}, {2, 4, 8, 8}, {1, 9}}) {
    const AbelianGroup g = group(moduli);
    for (const auto& x : testsupport::elements(g)) {
      const ReducedForm form = reduced_form(g, x);
      const GroupElement y = to_element(g, form);
      CHECK(reduced_form(g, y) == form);
      CHECK(are_automorphic(g, x, y));
    }
  }
  const AbelianGroup g = group({4, 8});
  CHECK_THROWS_AS(to_element(g, ReducedForm{Forms{{2, {0}}}}), std::invalid_argument);
  CHECK_THROWS_AS(to_element(g, ReducedForm{Forms{{2, {3, 0}}}}), std::invalid_argument);
  CHECK_THROWS_AS(to_element(g, ReducedForm{Forms{{3, {0, 0}}}}), std::invalid_argument);
}

TEST_CASE("p_group_orbits examples") {
  const std::vector<unsigned> c4{2};
  const auto o4 = p_group_orbits(2, c4);
  REQUIRE(o4.size() == 3);
  CHECK(sizes(o4) == big({2, 1, 1}));
  CHECK(o4[0].quotient_key.is_trivial());
  CHECK(o4[0].reduced_forms.at(2) == std::vector<std::vector<unsigned>>{{0}});
  CHECK(o4[1].quotient_key.primary_parts == Forms{{2, {1}}});
  CHECK(o4[2].quotient_key.primary_parts == Forms{{2, {2}}});

  const std::vector<unsigned> c2c4{1, 2};
  const auto o = p_group_orbits(2, c2c4);
  CHECK(sizes(o) == big({4, 2, 1, 1}));
  CHECK(o[0].reduced_forms.at(2) == std::vector<std::vector<unsigned>>{{0, 0}, {1, 0}});

  const std::vector<unsigned> cp{1};
  for (long p : {2L, 3L, 5L, 7L, 101L}) CHECK(sizes(p_group_orbits(p, cp)) == big({p - 1, 1}));
}

TEST_CASE("enumerate_orbits examples") {
  const auto c6 = enumerate_orbits(group({6}));
  REQUIRE(c6.size() == 4);
  auto s = sizes(c6);
  std::sort(s.begin(), s.end());
  CHECK(s == big({1, 1, 2, 2}));

  const auto t = enumerate_orbits(group({1}));
  REQUIRE(t.size() == 1);
  CHECK(t[0].size == 1);
  CHECK(t[0].quotient_key.is_trivial());
  CHECK(t[0].reduced_forms.empty());

  CHECK(sizes(enumerate_orbits(group({2, 4}))) == big({4, 2, 1, 1}));
}

TEST_CASE("cyclic groups have one orbit per divisor, n <= 1000") {
  for (long n = 1; n <= 1000; ++n) REQUIRE(enumerate_orbits(group({n})).size() == testsupport::divisor_count(n));
}

TEST_CASE("orbit sizes sum to |G|, every group of order <= 10^4") {
  for (long n = 1; n <= 10'000; ++n)
    for (const auto& chain : testsupport::groups_of_order(n)) {
      BigInt total = 0;
      for (const auto& o : enumerate_orbits(group(chain))) total += o.size;
      REQUIRE(total == n);
    }
}

TEST_CASE("orbits partition the elements with the stated sizes, and match equivalence, |G| <= 128") {
  for (const auto& chain : testsupport::groups_up_to(128)) {
    const AbelianGroup g = group(chain);
    const auto orbits = enumerate_orbits(g);
    const auto where = testsupport::orbit_membership(g, orbits);
    for (auto i : where) REQUIRE(i != SIZE_MAX);
    std::vector<long> count(orbits.size(), 0);
    for (auto i : where) ++count[i];
    for (std::size_t i = 0; i < orbits.size(); ++i) REQUIRE(orbits[i].size == count[i]);

    const auto all = testsupport::elements(g);
    for (std::size_t i = 0; i < all.size(); ++i) {
      REQUIRE(quotient_key(g, all[i]) == orbits[where[i]].quotient_key);
      for (std::size_t j = 0; j < all.size(); ++j)
        REQUIRE((where[i] == where[j]) == are_automorphic(g, all[i], all[j]));
    }
  }
}

TEST_CASE("representatives land in their own orbit") {
  for (const auto& moduli : std::vector<std::vector<long>>{{12, 18}, {2, 4, 8, 8}, {720720}, {6, 10, 15}}) {
    const AbelianGroup g = group(moduli);
    for (const auto& o : enumerate_orbits(g)) {
      const GroupElement x = to_element(g, o.representative());
      CHECK(quotient_key(g, x) == o.quotient_key);
      CHECK(contains(o, o.representative()));
    }
  }
}

TEST_CASE("orbit count is multiplicative over coprime orders") {
  const std::vector<std::vector<long>> twos{{1}, {2}, {4}, {2, 2}, {2, 4}, {8}, {2, 2, 2}, {4, 4}, {2, 8}};
  const std::vector<std::vector<long>> odds{{1}, {3}, {9}, {3, 3}, {5}, {25}, {5, 5}, {3, 9}, {27}, {15}};
  for (const auto& a : twos)
    for (const auto& b : odds) {
      auto joint = a;
      joint.insert(joint.end(), b.begin(), b.end());
      CHECK(enumerate_orbits(group(joint)).size() ==
            enumerate_orbits(group(a)).size() * enumerate_orbits(group(b)).size());
    }
}

TEST_CASE("reduced forms covered equal the product of divisor counts") {
  for (const auto& moduli : std::vector<std::vector<long>>{
           {1}, {12}, {12, 18}, {2, 4, 8, 8}, {720720, 720720}, {6, 10, 15, 7}, {64, 64, 64}, {1, 30, 1}}) {
    OrbitStats stats;
    const AbelianGroup g = group(moduli);
    const auto orbits = enumerate_orbits(g, {}, &stats);
    BigInt tau = 1;
    for (long d : moduli) tau *= testsupport::divisor_count(d);
    CHECK(stats.forms_covered == tau);
    BigInt covered = 0;
    for (const auto& o : orbits) covered += o.form_count();
    CHECK(covered == tau);

    std::uint64_t visited = 0;
    for (const auto& comp : g.primary_components()) {
      std::uint64_t v = 1;
      for (unsigned e : comp.exponents) v *= e + 1;
      visited += v;
    }
    CHECK(stats.forms_visited == visited);
  }
}

TEST_CASE("parallel enumeration matches the serial reference") {
  omp_set_num_threads(4);
  const std::vector<std::vector<unsigned>> shapes{{1},          {2, 1},       {3, 3, 3, 3},    {7, 7, 7, 7},
                                                  {1, 2, 3, 4, 5, 6}, {9, 9, 9},    {2, 2, 2, 2, 2, 2, 2, 2}};
  for (long p : {2L, 3L, 5L})
    for (const auto& e : shapes) CHECK(same_orbits(p_group_orbits(p, e), p_group_orbits_serial(p, e)));

  for (const auto& moduli : std::vector<std::vector<long>>{
           {720720, 720720, 720720}, {128, 128, 128, 128}, {2, 4, 8, 16, 32, 64}, {1}, {6, 4}}) {
    const AbelianGroup g = group(moduli);
    OrbitStats a, b;
    CHECK(same_orbits(enumerate_orbits(g, {}, &a), enumerate_orbits_serial(g, {}, &b)));
    CHECK(a.forms_visited == b.forms_visited);
    CHECK(a.forms_covered == b.forms_covered);
  }
}

TEST_CASE("enumeration cap") {
  const AbelianGroup g = group({1024, 1024, 1024});
  CHECK_THROWS_AS(enumerate_orbits(g, {100}), CapacityExceeded);
  CHECK_THROWS_AS(enumerate_orbits_serial(g, {100}), CapacityExceeded);
  CHECK_NOTHROW(enumerate_orbits(g, {1331}));
  const std::vector<unsigned> e{10, 10};
  CHECK_THROWS_AS(p_group_orbits(2, e, {120}), CapacityExceeded);
  // three primes with two orbits each: 8 combined orbits, 4 forms per prime
  CHECK_THROWS_AS(enumerate_orbits(group({30, 30}), {7}), CapacityExceeded);
  CHECK(enumerate_orbits(group({30, 30}), {8}).size() == 8);
}
