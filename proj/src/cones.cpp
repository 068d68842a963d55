#include "weyl/cones.hpp"

#include <algorithm>

#include "weyl/rational.hpp"

namespace weyl {

bool Cone::contains(const Cone& inner) const {
  if (copy != inner.copy) return false;
  // fixed(outer) must be a subset of fixed(inner) as (coordinate, value)
  for (const auto& fc : fixed) {
    auto it = std::lower_bound(
        inner.fixed.begin(), inner.fixed.end(), fc.first,
        [](const std::pair<int, int>& p, int c) { return p.first < c; });
    if (it == inner.fixed.end() || it->first != fc.first ||
        it->second != fc.second)
      return false;
  }
  return true;
}

bool Cone::contains_point(int copy_idx, const std::vector<int>& point) const {
  if (copy_idx != copy) return false;
  for (const auto& [c, v] : fixed)
    if (point[c] != v) return false;
  return true;
}

bool cone_in_complement(const ConeIdeal& ideal, const Cone& cone) {
  // the cone meets the ideal iff some generator in the same copy fits under
  // the pinned coordinates (free coordinates can always be raised)
  for (const auto& [copy, expo] : ideal.generators) {
    if (copy != cone.copy) continue;
    bool fits = true;
    for (const auto& [c, v] : cone.fixed)
      if (expo[c] > v) {
        fits = false;
        break;
      }
    if (fits) return false;
  }
  return true;
}

namespace {

bool covered(const Cone& cone, const std::vector<Cone>& added) {
  // a cone lies in a finite union of cones iff it lies in one of them
  for (const auto& q : added)
    if (q.contains(cone)) return true;
  return false;
}

// all value assignments of total degree deg over k coordinates with each
// value <= cap, in ascending lexicographic order
std::vector<std::vector<int>> capped_compositions(int k, long deg, int cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> vals(k, 0);
  auto rec = [&](auto&& self, int slot, long rest) -> void {
    if (slot == k) {
      if (rest == 0) out.push_back(vals);
      return;
    }
    for (long v = 0; v <= std::min<long>(cap, rest); ++v) {
      vals[slot] = static_cast<int>(v);
      self(self, slot + 1, rest - v);
    }
    vals[slot] = 0;
  };
  rec(rec, 0, deg);
  return out;
}

}  // namespace

ConeDecomposition decompose(const ConeIdeal& ideal) {
  ConeDecomposition out;
  out.ideal = ideal;
  const int n = ideal.n;

  // m = largest s such that some zero-value s-cone avoids the ideal
  int m = -1;
  std::vector<int> coords(n);
  for (int s = n; s >= 0 && m < 0; --s) {
    // choose n - s coordinates to pin at zero
    std::vector<int> pick(n - s);
    for (int i = 0; i < n - s; ++i) pick[i] = i;
    for (;;) {
      for (int copy = 0; copy < ideal.l; ++copy) {
        Cone c;
        c.copy = copy;
        for (int idx : pick) c.fixed.emplace_back(idx, 0);
        if (cone_in_complement(ideal, c)) {
          m = s;
          break;
        }
      }
      if (m >= 0) break;
      // next combination
      int i = n - s - 1;
      while (i >= 0 && pick[i] == i + s) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < n - s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  if (m < 0) {  // the ideal fills everything
    out.m = 0;
    out.t_count.assign(1, 0);
    out.k_degree.assign(1, 0);
    return out;
  }

  out.m = m;
  out.t_count.assign(m + 1, 0);
  out.k_degree.assign(m + 1, 0);
  long max_added_degree = 0;

  for (int s = m; s >= 0; --s) {
    const int nfixed = n - s;
    for (;;) {
      // least s-cone in T, not covered, all pinned values <= K + 1 where K
      // is the largest degree added so far (a fresh predecessor bound)
      std::optional<Cone> best;
      const int value_cap = static_cast<int>(max_added_degree) + 1;
      const long degree_cap = static_cast<long>(value_cap) * nfixed;
      for (long deg = 0; deg <= degree_cap && !best; ++deg) {
        for (int copy = 0; copy < ideal.l && !best; ++copy) {
          // iterate coordinate subsets in lexicographic order
          std::vector<int> pick(nfixed);
          for (int i = 0; i < nfixed; ++i) pick[i] = i;
          for (;;) {
            for (const auto& vals :
                 capped_compositions(nfixed, deg, value_cap)) {
              Cone c;
              c.copy = copy;
              for (int i = 0; i < nfixed; ++i)
                c.fixed.emplace_back(pick[i], vals[i]);
              if (cone_in_complement(ideal, c) && !covered(c, out.cones)) {
                best = c;
                break;
              }
            }
            if (best) break;
            int i = nfixed - 1;
            while (i >= 0 && pick[i] == i + s) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < nfixed; ++j) pick[j] = pick[j - 1] + 1;
          }
        }
      }
      if (!best) break;
      out.cones.push_back(*best);
      out.stage.push_back(s);
      ++out.t_count[s];
      out.k_degree[s] = std::max(out.k_degree[s], best->degree());
      max_added_degree = std::max(max_added_degree, best->degree());
    }
  }
  return out;
}

Semilattice epsilon_coefficients(const std::vector<Cone>& cones) {
  Semilattice out;
  // close under pairwise intersection
  std::vector<Cone> pieces = cones;
  auto intersect = [](const Cone& a, const Cone& b) -> std::optional<Cone> {
    if (a.copy != b.copy) return std::nullopt;
    std::map<int, int> fixed(a.fixed.begin(), a.fixed.end());
    for (const auto& [c, v] : b.fixed) {
      auto [it, inserted] = fixed.emplace(c, v);
      if (!inserted && it->second != v) return std::nullopt;
    }
    Cone r;
    r.copy = a.copy;
    r.fixed.assign(fixed.begin(), fixed.end());
    return r;
  };
  std::sort(pieces.begin(), pieces.end());
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto meet = intersect(pieces[i], pieces[j]);
      if (!meet) continue;
      if (std::find(pieces.begin(), pieces.end(), *meet) == pieces.end())
        pieces.push_back(*meet);
    }

  // order by decreasing dimension (= increasing number of constraints),
  // deterministic ties
  std::sort(pieces.begin(), pieces.end(), [](const Cone& a, const Cone& b) {
    if (a.fixed.size() != b.fixed.size())
      return a.fixed.size() < b.fixed.size();
    return a < b;
  });

  out.pieces = pieces;
  out.epsilon.assign(pieces.size(), 0);
  out.piece_copy.resize(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i)
    out.piece_copy[i] = pieces[i].copy;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    long sum = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (pieces[j] != pieces[i] && pieces[j].contains(pieces[i]))
        sum += out.epsilon[j];
    out.epsilon[i] = 1 - sum;
  }
  return out;
}

long hilbert_from_cones(const Semilattice& lattice, int n, long z) {
  Integer acc = 0;
  for (std::size_t i = 0; i < lattice.pieces.size(); ++i) {
    const Cone& p = lattice.pieces[i];
    int s = p.dim(n);
    acc += Integer(lattice.epsilon[i]) * binomial(z - p.degree() + s, s);
  }
  return acc.get_si();
}

long complement_count(const ConeIdeal& ideal, long z) {
  long count = 0;
  std::vector<int> point(ideal.n, 0);
  auto visit = [&]() {
    for (int copy = 0; copy < ideal.l; ++copy) {
      bool in_ideal = false;
      for (const auto& [gc, expo] : ideal.generators) {
        if (gc != copy) continue;
        bool divides = true;
        for (int v = 0; v < ideal.n; ++v)
          if (expo[v] > point[v]) {
            divides = false;
            break;
          }
        if (divides) {
          in_ideal = true;
          break;
        }
      }
      if (!in_ideal) ++count;
    }
  };
  // enumerate points of total degree exactly deg, the last slot absorbing
  // the remainder
  auto rec = [&](auto&& self, int slot, long rest) -> void {
    if (slot == ideal.n - 1) {
      point[slot] = static_cast<int>(rest);
      visit();
      point[slot] = 0;
      return;
    }
    for (long e = 0; e <= rest; ++e) {
      point[slot] = static_cast<int>(e);
      self(self, slot + 1, rest - e);
    }
    point[slot] = 0;
  };
  for (long deg = 0; deg <= z; ++deg) rec(rec, 0, deg);
  return count;
}

}  // namespace weyl
