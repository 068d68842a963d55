#include <doctest.h>

#include "weyl/cones.hpp"
#include "weyl/prng.hpp"
#include "weyl/rational.hpp"

using namespace weyl;

namespace {

ConeIdeal ideal(int n, int l,
                std::vector<std::pair<int, std::vector<int>>> gens) {
  return ConeIdeal{n, l, std::move(gens)};
}

long epsilon_sum_at(const Semilattice& lat, int copy,
                    const std::vector<int>& point) {
  long sum = 0;
  for (std::size_t i = 0; i < lat.pieces.size(); ++i)
    if (lat.pieces[i].contains_point(copy, point)) sum += lat.epsilon[i];
  return sum;
}

bool point_in_complement(const ConeIdeal& id, int copy,
                         const std::vector<int>& point) {
  for (const auto& [gc, expo] : id.generators) {
    if (gc != copy) continue;
    bool divides = true;
    for (int v = 0; v < id.n; ++v)
      if (expo[v] > point[v]) {
        divides = false;
        break;
      }
    if (divides) return false;
  }
  return true;
}

void check_multiset_identity(const ConeIdeal& id, int box) {
  ConeDecomposition dec = decompose(id);
  Semilattice lat = epsilon_coefficients(dec.cones);
  std::vector<int> point(id.n, 0);
  auto rec = [&](auto&& self, int slot) -> void {
    if (slot == id.n) {
      for (int copy = 0; copy < id.l; ++copy)
        CHECK(epsilon_sum_at(lat, copy, point) ==
              (point_in_complement(id, copy, point) ? 1 : 0));
      return;
    }
    for (int v = 0; v < box; ++v) {
      point[slot] = v;
      self(self, slot + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

TEST_CASE("single coordinate hyperplane complement") {
  // I = (y) in Z_+^2: T is the 1-cone {X2 = 0}
  ConeIdeal id = ideal(2, 1, {{0, {0, 1}}});
  ConeDecomposition dec = decompose(id);
  CHECK(dec.m == 1);
  REQUIRE(dec.cones.size() == 1);
  CHECK(dec.cones[0].fixed == std::vector<std::pair<int, int>>{{1, 0}});
  CHECK(dec.t_count[1] == 1);
  CHECK(dec.k_degree[1] == 0);
  Semilattice lat = epsilon_coefficients(dec.cones);
  for (long z = 0; z <= 10; ++z)
    CHECK(hilbert_from_cones(lat, 2, z) == z + 1);
}

TEST_CASE("two points left by (x^2, y)") {
  ConeIdeal id = ideal(2, 1, {{0, {2, 0}}, {0, {0, 1}}});
  ConeDecomposition dec = decompose(id);
  CHECK(dec.m == 0);
  CHECK(dec.t_count[0] == 2);
  CHECK(dec.k_degree[0] == 1);
  Semilattice lat = epsilon_coefficients(dec.cones);
  for (long z = 1; z <= 10; ++z) CHECK(hilbert_from_cones(lat, 2, z) == 2);
  CHECK(hilbert_from_cones(lat, 2, 0) == 1);
}

TEST_CASE("origin-only complement per copy") {
  ConeIdeal id = ideal(2, 2,
                       {{0, {1, 0}},
                        {0, {0, 1}},
                        {1, {1, 0}},
                        {1, {0, 1}}});
  ConeDecomposition dec = decompose(id);
  CHECK(dec.m == 0);
  CHECK(dec.t_count[0] == 2);  // one 0-cone per copy
  Semilattice lat = epsilon_coefficients(dec.cones);
  for (long z = 0; z <= 5; ++z) CHECK(hilbert_from_cones(lat, 2, z) == 2);
}

TEST_CASE("free complement is a single full cone") {
  ConeIdeal id = ideal(3, 1, {});
  ConeDecomposition dec = decompose(id);
  CHECK(dec.m == 3);
  REQUIRE(dec.cones.size() == 1);
  CHECK(dec.cones[0].fixed.empty());
  Semilattice lat = epsilon_coefficients(dec.cones);
  for (long z = 0; z <= 8; ++z)
    CHECK(hilbert_from_cones(lat, 3, z) == binomial(z + 3, 3).get_si());
}

TEST_CASE("empty complement") {
  ConeIdeal id = ideal(2, 1, {{0, {0, 0}}});
  ConeDecomposition dec = decompose(id);
  CHECK(dec.cones.empty());
  Semilattice lat = epsilon_coefficients(dec.cones);
  for (long z = 0; z <= 5; ++z) CHECK(hilbert_from_cones(lat, 2, z) == 0);
}

TEST_CASE("epsilon coefficients") {
  // two coordinate lines meeting at the origin: epsilon of the point is -1
  ConeIdeal id = ideal(2, 1, {{0, {1, 1}}});
  ConeDecomposition dec = decompose(id);
  REQUIRE(dec.cones.size() == 2);
  Semilattice lat = epsilon_coefficients(dec.cones);
  REQUIRE(lat.pieces.size() == 3);
  long minus = 0, plus = 0;
  for (std::size_t i = 0; i < lat.pieces.size(); ++i)
    (lat.epsilon[i] < 0 ? minus : plus) += lat.epsilon[i];
  CHECK(plus == 2);
  CHECK(minus == -1);
  for (long z = 0; z <= 10; ++z)
    CHECK(hilbert_from_cones(lat, 2, z) == 2 * z + 1);

  // disjoint cones keep epsilon 1
  ConeIdeal id2 = ideal(1, 2, {{0, {2}}, {1, {3}}});
  ConeDecomposition dec2 = decompose(id2);
  Semilattice lat2 = epsilon_coefficients(dec2.cones);
  for (long e : lat2.epsilon) CHECK(e == 1);
}

TEST_CASE("pointwise multiset identity on boxes") {
  check_multiset_identity(ideal(2, 1, {{0, {1, 1}}}), 8);
  check_multiset_identity(ideal(2, 1, {{0, {2, 0}}, {0, {0, 3}}}), 8);
  check_multiset_identity(ideal(3, 1, {{0, {1, 1, 0}}, {0, {0, 0, 2}}}), 6);
  check_multiset_identity(
      ideal(2, 2, {{0, {1, 2}}, {1, {2, 1}}, {1, {0, 3}}}), 8);
}

TEST_CASE("hilbert identity against direct counts") {
  SplitMix64 rng(61);
  for (int rep = 0; rep < 10; ++rep) {
    int n = 1 + static_cast<int>(rng.range(0, 2));
    int l = 1 + static_cast<int>(rng.range(0, 1));
    int count = static_cast<int>(rng.range(0, 5));
    std::vector<std::pair<int, std::vector<int>>> gens;
    for (int i = 0; i < count; ++i) {
      std::vector<int> e(n, 0);
      long deg = rng.range(1, 5);
      for (int v = 0; v < n && deg > 0; ++v) {
        long take = rng.range(0, deg);
        e[v] = static_cast<int>(take);
        deg -= take;
      }
      e[n - 1] += static_cast<int>(deg);
      gens.emplace_back(static_cast<int>(rng.range(0, l - 1)), std::move(e));
    }
    ConeIdeal id = ideal(n, l, std::move(gens));
    ConeDecomposition dec = decompose(id);
    Semilattice lat = epsilon_coefficients(dec.cones);
    for (long z = 0; z <= 12; ++z)
      CHECK(hilbert_from_cones(lat, n, z) == complement_count(id, z));
  }
}

TEST_CASE("predecessors of added cones are covered with the degree bound") {
  SplitMix64 rng(67);
  for (int rep = 0; rep < 8; ++rep) {
    int n = 2 + static_cast<int>(rng.range(0, 1));
    int count = 1 + static_cast<int>(rng.range(0, 4));
    std::vector<std::pair<int, std::vector<int>>> gens;
    for (int i = 0; i < count; ++i) {
      std::vector<int> e(n, 0);
      long deg = rng.range(1, 4);
      for (int v = 0; v < n && deg > 0; ++v) {
        long take = rng.range(0, deg);
        e[v] = static_cast<int>(take);
        deg -= take;
      }
      e[n - 1] += static_cast<int>(deg);
      gens.emplace_back(0, std::move(e));
    }
    ConeIdeal id = ideal(n, 1, std::move(gens));
    ConeDecomposition dec = decompose(id);
    for (std::size_t i = 0; i < dec.cones.size(); ++i) {
      const Cone& p = dec.cones[i];
      for (std::size_t f = 0; f < p.fixed.size(); ++f) {
        if (p.fixed[f].second == 0) continue;
        Cone pred = p;
        pred.fixed[f].second -= 1;
        // some earlier cone contains the predecessor and obeys |Q| >= i_p-1
        bool found = false;
        for (std::size_t j = 0; j < i && !found; ++j)
          if (dec.cones[j].contains(pred)) {
            CHECK(dec.cones[j].degree() >= p.fixed[f].second - 1);
            found = true;
          }
        CHECK(found);
      }
    }
    // stage degree chain from the construction
    for (int s = dec.m; s >= 1; --s) {
      if (dec.t_count[s - 1] == 0) continue;
      long kmax = 0;
      for (int a = s; a <= dec.m; ++a) kmax = std::max(kmax, dec.k_degree[a]);
      CHECK(dec.k_degree[s - 1] <=
            (kmax + 1) * (n - s + 1) + dec.t_count[s - 1]);
    }
    // minimal generating set degrees against the cone-degree bound
    long kmax = 0;
    for (int a = 0; a <= dec.m; ++a) kmax = std::max(kmax, dec.k_degree[a]);
    for (const auto& [copy, expo] : id.generators) {
      bool minimal = true;
      for (const auto& [oc, oe] : id.generators) {
        if (oc != copy || oe == expo) continue;
        bool divides = true;
        for (int v = 0; v < n; ++v)
          if (oe[v] > expo[v]) {
            divides = false;
            break;
          }
        if (divides) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      long d = 0;
      for (int e : expo) d += e;
      CHECK(d <= (kmax + 1) * n);
    }
  }
}
