#include "qmat/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmat {

namespace {

// dense bit rows for below-or-equal tests between node indices
struct BitRel {
  int m = 0;
  size_t words = 0;
  std::vector<uint64_t> bits;
  void init(int m_) {
    m = m_;
    words = (m + 63) / 64;
    bits.assign((size_t)m * words, 0);
  }
  void set(int i, int j) { bits[(size_t)i * words + j / 64] |= uint64_t(1) << (j % 64); }
  bool get(int i, int j) const {
    return (bits[(size_t)i * words + j / 64] >> (j % 64)) & 1;
  }
};

BitRel below_or_equal(const CycleLattice& L) {
  BitRel R;
  R.init(L.size());
  for (int i = 0; i < L.size(); i++) {
    R.set(i, i);
    for (int j : L.strictly_below[i]) R.set(i, j);
  }
  return R;
}

// smallest node above both; the builder's uniqueness check makes this the join
int first_upper(const CycleLattice& L, const BitRel& R, int i, int j) {
  for (int t = std::max(i, j); t < L.size(); t++)
    if (R.get(t, i) && R.get(t, j)) return t;
  throw std::logic_error("no upper bound found");
}

}  // namespace

CycleLattice build_cycle_lattice(const QMatroid& M, int pair_verify_cap) {
  const GrassmannianIndex& G = *M.G;
  CycleLattice L;
  for (const auto& level : cycles_by_nullity(M))
    for (int id : level) {
      L.node_key.push_back(id);
      L.nullity.push_back(M.eta(id));
    }
  {
    std::vector<size_t> ord(L.node_key.size());
    for (size_t i = 0; i < ord.size(); i++) ord[i] = i;
    std::sort(ord.begin(), ord.end(),
              [&](size_t a, size_t b) { return L.node_key[a] < L.node_key[b]; });
    std::vector<int> nk, nu;
    for (size_t i : ord) { nk.push_back(L.node_key[i]); nu.push_back(L.nullity[i]); }
    L.node_key = nk;
    L.nullity = nu;
  }
  int m = L.size();

  L.strictly_below.assign(m, {});
  for (int i = 0; i < m; i++) {
    const auto& S = G.subs[L.node_key[i]];
    for (int j = 0; j < i; j++)
      if (std::binary_search(S.begin(), S.end(), L.node_key[j]))
        L.strictly_below[i].push_back(j);
  }
  if (L.node_key[0] != G.zero_id()) throw std::logic_error("lattice bottom is not the zero space");
  if ((int)L.strictly_below[m - 1].size() != m - 1)
    throw std::logic_error("top cycle does not contain every cycle");

  for (int i = 0; i < m; i++) {
    if (L.nullity[i] == 1) L.atoms.push_back(i);
    // atoms are exactly the nodes covering only the bottom
    bool only_bottom = L.strictly_below[i] == std::vector<int>{0};
    if (only_bottom != (L.nullity[i] == 1))
      throw std::logic_error("atoms are not exactly the circuits");
    // every node above the bottom holds a circuit
    if (i > 0 && L.nullity[i] != 1) {
      bool has_atom = false;
      for (int j : L.strictly_below[i])
        if (L.nullity[j] == 1) { has_atom = true; break; }
      if (!has_atom) throw std::logic_error("node without a circuit below");
    }
  }

  // join closure: unique minimal upper bound per pair; full check when small,
  // atom pairs always
  BitRel R = below_or_equal(L);
  auto verify_pair = [&](int i, int j) {
    if (R.get(i, j) || R.get(j, i)) return;  // comparable: join is the larger
    int t0 = first_upper(L, R, i, j);
    for (int u = t0 + 1; u < m; u++)
      if (R.get(u, i) && R.get(u, j) && !R.get(u, t0))
        throw std::logic_error("two minimal upper bounds: not a lattice");
    std::vector<Vector> gens = G.at(L.node_key[i]).rows;
    const auto& rj = G.at(L.node_key[j]).rows;
    gens.insert(gens.end(), rj.begin(), rj.end());
    if (G.id_of_span(gens) != L.node_key[t0]) L.span_join_mismatches++;
    L.join_pairs_checked++;
  };
  if (m <= pair_verify_cap) {
    for (int i = 0; i < m; i++)
      for (int j = i + 1; j < m; j++) verify_pair(i, j);
  } else {
    for (size_t a = 0; a < L.atoms.size(); a++)
      for (size_t b = a + 1; b < L.atoms.size(); b++) verify_pair(L.atoms[a], L.atoms[b]);
  }
  return L;
}

std::vector<mpz_class> mobius_all(const CycleLattice& L) {
  std::vector<mpz_class> mu(L.size());
  for (int x = 0; x < L.size(); x++) {
    mpz_class s = 0;
    for (int y : L.strictly_below[x]) s += mu[y];
    if (x == 0) mu[x] = 1; else mu[x] = -s;
  }
  return mu;
}

mpz_class mobius_bottom_up(const CycleLattice& L) {
  return mobius_all(L)[L.top()];
}

mpz_class mobius_top_down(const CycleLattice& L) {
  int m = L.size();
  std::vector<std::vector<int>> above(m);
  for (int i = 0; i < m; i++)
    for (int j : L.strictly_below[i]) above[j].push_back(i);
  std::vector<mpz_class> mu(m);
  for (int x = m - 1; x >= 0; x--) {
    mpz_class s = 0;
    for (int y : above[x]) s += mu[y];
    if (x == m - 1) mu[x] = 1; else mu[x] = -s;
  }
  return mu[0];
}

Crosscut rota_crosscut(const CycleLattice& L) {
  int m = L.size();
  size_t s = L.atoms.size();
  std::vector<char> is_atom(m, 0);
  for (int a : L.atoms) is_atom[a] = 1;
  // h[W][i] = number of i-subsets of atoms whose join is exactly W
  std::vector<std::vector<mpz_class>> h(m, std::vector<mpz_class>(s + 1, 0));
  for (int w = 0; w < m; w++) {
    long a = is_atom[w] ? 1 : 0;
    for (int v : L.strictly_below[w]) a += is_atom[v];
    for (long i = 0; i <= a; i++) h[w][i] = binom(a, i);
    for (int v : L.strictly_below[w])
      for (size_t i = 0; i <= s; i++) h[w][i] -= h[v][i];
  }
  Crosscut C;
  C.lambda = h[L.top()];
  C.alternating = 0;
  for (size_t i = 0; i <= s; i++)
    C.alternating += (i % 2 == 0) ? C.lambda[i] : -C.lambda[i];
  return C;
}

Crosscut rota_crosscut_enum(const CycleLattice& L, long budget) {
  size_t s = L.atoms.size();
  if (s >= 63 || (1L << s) > budget)
    throw std::runtime_error("2^" + std::to_string(s) + " circuit subsets exceed the budget");
  BitRel R = below_or_equal(L);
  Crosscut C;
  C.lambda.assign(s + 1, 0);
  for (long mask = 0; mask < (1L << s); mask++) {
    int join = 0, pop = 0;
    for (size_t a = 0; a < s; a++)
      if ((mask >> a) & 1) {
        pop++;
        join = (join == 0) ? L.atoms[a] : first_upper(L, R, join, L.atoms[a]);
      }
    if (join == L.top()) C.lambda[pop]++;
  }
  C.alternating = 0;
  for (size_t i = 0; i <= s; i++)
    C.alternating += (i % 2 == 0) ? C.lambda[i] : -C.lambda[i];
  return C;
}

mpz_class mu_bar(const QMatroid& M) {
  if (has_coloop(M)) return 0;
  return abs(mobius_bottom_up(build_cycle_lattice(M)));
}

}  // namespace qmat
