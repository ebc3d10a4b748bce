#include "qmat/grassmann.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmat {

namespace {

// all RREF matrices of rank k in F_q^n, one per subspace
void enumerate_dim(int n, int k, const Field& F, std::vector<Subspace>& out) {
  if (k == 0) {
    out.push_back(zero_space(n));
    return;
  }
  std::vector<int> piv(k);
  for (int i = 0; i < k; i++) piv[i] = i;
  while (true) {
    std::vector<char> is_piv(n, 0);
    for (int p : piv) is_piv[p] = 1;
    // free slots: (row, col) with col > piv[row] and col not a pivot
    std::vector<std::pair<int, int>> slot;
    for (int i = 0; i < k; i++)
      for (int j = piv[i] + 1; j < n; j++)
        if (!is_piv[j]) slot.push_back({i, j});
    std::vector<int> val(slot.size(), 0);
    while (true) {
      Subspace s;
      s.n = n;
      s.rows.assign(k, Vector{});
      for (int i = 0; i < k; i++) s.rows[i].set(piv[i], 1);
      for (size_t t = 0; t < slot.size(); t++) s.rows[slot[t].first].set(slot[t].second, val[t]);
      out.push_back(s);
      size_t d = 0;
      while (d < val.size() && ++val[d] == F.q) val[d++] = 0;
      if (d == val.size()) break;
    }
    // next pivot combination
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) i--;
    if (i < 0) break;
    piv[i]++;
    for (int j = i + 1; j < k; j++) piv[j] = piv[j - 1] + 1;
  }
}

}  // namespace

int GrassmannianIndex::id_of(const Subspace& s) const {
  if (s.n != n) throw std::invalid_argument("subspace from a different ambient space");
  int k = s.dim();
  auto lo = spaces.begin() + dim_first[k], hi = spaces.begin() + dim_first[k + 1];
  auto it = std::lower_bound(lo, hi, s, subspace_less);
  if (it == hi || !(*it == s)) return -1;
  return (int)(it - spaces.begin());
}

int GrassmannianIndex::id_of_span(const std::vector<Vector>& gens) const {
  return id_of(rref_of(gens, n, F));
}

GrassmannianIndex enumerate_subspaces(int n, int q, long budget) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("ambient dimension outside [0,15]");
  mpz_class total = 0;
  for (int k = 0; k <= n; k++) total += gaussian_binomial(n, k, q);
  if (total > budget)
    throw std::runtime_error("subspace count " + total.get_str() +
                             " exceeds budget " + std::to_string(budget));

  GrassmannianIndex G;
  G.n = n;
  G.q = q;
  G.F = make_field(q);
  G.dim_first.assign(n + 2, 0);
  for (int k = 0; k <= n; k++) {
    size_t before = G.spaces.size();
    enumerate_dim(n, k, G.F, G.spaces);
    std::sort(G.spaces.begin() + before, G.spaces.end(), subspace_less);
    G.dim_first[k + 1] = (int)G.spaces.size();
    if (gaussian_binomial(n, k, q) != (long)(G.spaces.size() - before))
      throw std::logic_error("enumeration disagrees with the Gaussian binomial");
  }
  int N = G.size();

  // containment, hyperplanes, covers: enumerate the local Grassmannian of
  // each space and map spans back to global ids
  G.subs.assign(N, {});
  G.hyperplanes.assign(N, {});
  G.covers.assign(N, {});
  for (int id = 0; id < N; id++) {
    const Subspace& S = G.spaces[id];
    int d = S.dim();
    std::vector<Subspace> locals;
    for (int j = 0; j <= d; j++) enumerate_dim(d, j, G.F, locals);
    for (const Subspace& L : locals) {
      std::vector<Vector> gens;
      for (const Vector& lr : L.rows) {
        Vector v{};
        for (int i = 0; i < d; i++)
          if (lr.get(i) != 0) v = vec_add(v, vec_scale(lr.get(i), S.rows[i], G.F, n), G.F, n);
        gens.push_back(v);
      }
      int sid = G.id_of_span(gens);
      if (sid < 0) throw std::logic_error("local subspace missing from the index");
      G.subs[id].push_back(sid);
      if (L.dim() == d - 1) {
        G.hyperplanes[id].push_back(sid);
        G.covers[sid].push_back(id);
      }
    }
    std::sort(G.subs[id].begin(), G.subs[id].end());
    std::sort(G.hyperplanes[id].begin(), G.hyperplanes[id].end());
  }
  for (int id = 0; id < N; id++) std::sort(G.covers[id].begin(), G.covers[id].end());

  G.perp.assign(N, -1);
  for (int id = 0; id < N; id++) {
    G.perp[id] = G.id_of(orthogonal_complement(G.spaces[id], G.F));
    if (G.perp[id] < 0) throw std::logic_error("complement missing from the index");
  }
  return G;
}

int compare_chains_revlex(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("chains of unequal length");
  for (int i = (int)a.size() - 1; i >= 0; i--)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace qmat
