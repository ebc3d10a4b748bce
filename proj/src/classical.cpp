#include "qmat/classical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qmat {

namespace {

int popcount(int mask) { return __builtin_popcount((unsigned)mask); }

mpz_class sign_pow(long e) {
  return (((e % 2) + 2) % 2 == 0) ? mpz_class(1) : mpz_class(-1);
}

void check_ground(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("ground set size out of budget");
}

}  // namespace

ClassicalMatroid uniform_matroid(int k, int n) {
  check_ground(n);
  if (k < 0 || k > n) throw std::invalid_argument("uniform matroid needs 0 <= k <= n");
  ClassicalMatroid M;
  M.n = n;
  M.rank.resize(1 << n);
  for (int m = 0; m < (1 << n); m++) M.rank[m] = std::min(popcount(m), k);
  M.r = k;
  M.name = "U(" + std::to_string(k) + "," + std::to_string(n) + ")";
  return M;
}

ClassicalMatroid matroid_from_rank_table(int n, std::vector<int> table, std::string name) {
  check_ground(n);
  if ((int)table.size() != (1 << n)) throw std::invalid_argument("rank table size must be 2^n");
  ClassicalMatroid M;
  M.n = n;
  M.rank = std::move(table);
  M.r = M.rank[(1 << n) - 1];
  M.name = name.empty() ? "table(n=" + std::to_string(n) + ")" : std::move(name);
  return M;
}

ClassicalMatroid matroid_from_matrix(const Field& F, const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows[0].empty()) throw std::invalid_argument("matrix must be nonempty");
  int h = (int)rows.size(), n = (int)rows[0].size();
  check_ground(n);
  if (n > 12) throw std::invalid_argument("matrix ground set out of budget");
  for (const auto& row : rows)
    if ((int)row.size() != n) throw std::invalid_argument("ragged matrix");

  ClassicalMatroid M;
  M.n = n;
  M.rank.resize(1 << n);
  std::vector<std::vector<int>> work;
  for (int m = 0; m < (1 << n); m++) {
    work.assign(h, {});
    for (int i = 0; i < h; i++)
      for (int j = 0; j < n; j++)
        if (m >> j & 1) work[i].push_back(rows[i][j]);
    int w = (int)work[0].size(), rk = 0;
    for (int col = 0; col < w && rk < h; col++) {
      int piv = -1;
      for (int i = rk; i < h; i++)
        if (work[i][col] != 0) { piv = i; break; }
      if (piv < 0) continue;
      std::swap(work[rk], work[piv]);
      int inv = F.inv(work[rk][col]);
      for (int j = col; j < w; j++) work[rk][j] = F.mul(work[rk][j], inv);
      for (int i = 0; i < h; i++) {
        if (i == rk || work[i][col] == 0) continue;
        int c = work[i][col];
        for (int j = col; j < w; j++) work[i][j] = F.sub(work[i][j], F.mul(c, work[rk][j]));
      }
      rk++;
    }
    M.rank[m] = rk;
  }
  M.r = M.rank[(1 << n) - 1];
  M.name = "matrix(q=" + std::to_string(F.q) + "," + std::to_string(h) + "x" +
           std::to_string(n) + ")";
  return M;
}

ClassicalMatroid graphic_matroid(int vertices, const std::vector<std::pair<int, int>>& edges) {
  int n = (int)edges.size();
  check_ground(n);
  if (n > 14) throw std::invalid_argument("edge count out of budget");
  for (auto [u, v] : edges)
    if (u < 0 || v < 0 || u >= vertices || v >= vertices)
      throw std::invalid_argument("edge endpoint out of range");

  ClassicalMatroid M;
  M.n = n;
  M.rank.resize(1 << n);
  std::vector<int> parent(vertices);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int m = 0; m < (1 << n); m++) {
    std::iota(parent.begin(), parent.end(), 0);
    int merges = 0;
    for (int e = 0; e < n; e++) {
      if (!(m >> e & 1)) continue;
      int a = find(edges[e].first), b = find(edges[e].second);
      if (a != b) { parent[a] = b; merges++; }
    }
    M.rank[m] = merges;
  }
  M.r = M.rank[(1 << n) - 1];
  M.name = "graphic(v=" + std::to_string(vertices) + ",e=" + std::to_string(n) + ")";
  return M;
}

std::optional<std::string> axiom_violation(const ClassicalMatroid& M) {
  int full = (1 << M.n) - 1;
  for (int m = 0; m <= full; m++)
    if (M.rank[m] < 0 || M.rank[m] > popcount(m))
      return "R1 fails on mask " + std::to_string(m);
  for (int m = 0; m <= full; m++)
    for (int e = 0; e < M.n; e++) {
      if (m >> e & 1) continue;
      if (M.rank[m | 1 << e] < M.rank[m]) return "R2 fails on mask " + std::to_string(m);
    }
  // local submodularity, equivalent to (R3) on all pairs
  for (int m = 0; m <= full; m++)
    for (int e = 0; e < M.n; e++) {
      if (m >> e & 1) continue;
      for (int f = e + 1; f < M.n; f++) {
        if (m >> f & 1) continue;
        if (M.rank[m | 1 << e] + M.rank[m | 1 << f] <
            M.rank[m | 1 << e | 1 << f] + M.rank[m])
          return "R3 fails on mask " + std::to_string(m) + " with elements " +
                 std::to_string(e) + "," + std::to_string(f);
      }
    }
  if (M.n <= 8) {
    for (int a = 0; a <= full; a++)
      for (int b = 0; b <= full; b++)
        if (M.rank[a | b] + M.rank[a & b] > M.rank[a] + M.rank[b])
          return "R3 fails on masks " + std::to_string(a) + "," + std::to_string(b);
  }
  return std::nullopt;
}

std::vector<int> independent_sets(const ClassicalMatroid& M) {
  std::vector<int> out;
  for (int m = 0; m < (1 << M.n); m++)
    if (M.eta(m) == 0) out.push_back(m);
  return out;
}

std::vector<int> matroid_bases(const ClassicalMatroid& M) {
  std::vector<int> out;
  for (int m = 0; m < (1 << M.n); m++)
    if (M.eta(m) == 0 && M.rank[m] == M.r) out.push_back(m);
  return out;
}

std::vector<int> matroid_circuits(const ClassicalMatroid& M) {
  std::vector<int> out;
  for (int m = 1; m < (1 << M.n); m++) {
    if (M.eta(m) != 1) continue;
    bool minimal = true;
    for (int e = 0; e < M.n && minimal; e++)
      if ((m >> e & 1) && M.eta(m ^ 1 << e) != 0) minimal = false;
    if (minimal) out.push_back(m);
  }
  return out;
}

std::vector<int> matroid_flats(const ClassicalMatroid& M) {
  std::vector<int> out;
  for (int m = 0; m < (1 << M.n); m++) {
    bool flat = true;
    for (int e = 0; e < M.n && flat; e++)
      if (!(m >> e & 1) && M.rank[m | 1 << e] == M.rank[m]) flat = false;
    if (flat) out.push_back(m);
  }
  return out;
}

std::vector<int> matroid_loops(const ClassicalMatroid& M) {
  std::vector<int> out;
  for (int e = 0; e < M.n; e++)
    if (M.rank[1 << e] == 0) out.push_back(e);
  return out;
}

std::vector<int> matroid_coloops(const ClassicalMatroid& M) {
  int full = (1 << M.n) - 1;
  std::vector<int> out;
  for (int e = 0; e < M.n; e++)
    if (M.rank[full ^ 1 << e] == M.r - 1) out.push_back(e);
  return out;
}

ClassicalMatroid dual(const ClassicalMatroid& M) {
  ClassicalMatroid D;
  D.n = M.n;
  int full = (1 << M.n) - 1;
  D.rank.resize(1 << M.n);
  for (int m = 0; m <= full; m++) D.rank[m] = popcount(m) - M.r + M.rank[full ^ m];
  D.r = D.rank[full];
  D.name = "dual(" + M.name + ")";
  return D;
}

std::vector<std::vector<int>> cycles_by_nullity(const ClassicalMatroid& M) {
  std::vector<std::vector<int>> out(M.eta((1 << M.n) - 1) + 1);
  for (int m = 0; m < (1 << M.n); m++) {
    bool minimal = true;
    for (int e = 0; e < M.n && minimal; e++)
      if ((m >> e & 1) && M.eta(m ^ 1 << e) == M.eta(m)) minimal = false;
    if (minimal) out[M.eta(m)].push_back(m);
  }
  return out;
}

std::vector<int> cycles_as_circuit_unions(const ClassicalMatroid& M) {
  std::vector<char> seen(1 << M.n, 0);
  seen[0] = 1;
  std::vector<int> out = {0};
  for (int c : matroid_circuits(M)) {
    size_t sz = out.size();
    for (size_t i = 0; i < sz; i++) {
      int u = out[i] | c;
      if (!seen[u]) { seen[u] = 1; out.push_back(u); }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_coloop(const ClassicalMatroid& M) {
  bool direct = !matroid_coloops(M).empty();
  int span = 0;
  for (int c : matroid_circuits(M)) span |= c;
  bool by_span = span != (1 << M.n) - 1;
  auto cyc = cycles_by_nullity(M);
  bool by_top = cyc.back().empty() || cyc.back().back() != (1 << M.n) - 1;
  if (direct != by_span || direct != by_top)
    throw std::logic_error("coloop criteria disagree on " + M.name);
  return direct;
}

CycleLattice build_classical_cycle_lattice(const ClassicalMatroid& M) {
  CycleLattice L;
  auto grades = cycles_by_nullity(M);
  for (size_t g = 0; g < grades.size(); g++)
    for (int m : grades[g]) {
      L.node_key.push_back(m);
      L.nullity.push_back((int)g);
    }
  // a submask is numerically smaller, so mask order makes containment ascend
  std::vector<size_t> order(L.node_key.size());
  std::iota(order.begin(), order.end(), size_t(0));
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return L.node_key[a] < L.node_key[b]; });
  std::vector<int> key(L.size()), nul(L.size());
  for (int i = 0; i < L.size(); i++) {
    key[i] = L.node_key[order[i]];
    nul[i] = L.nullity[order[i]];
  }
  L.node_key = std::move(key);
  L.nullity = std::move(nul);

  {
    auto unions = cycles_as_circuit_unions(M);
    if (unions != L.node_key)
      throw std::logic_error("cycles are not the unions of circuits on " + M.name);
  }

  L.strictly_below.resize(L.size());
  for (int i = 0; i < L.size(); i++)
    for (int j = 0; j < i; j++)
      if ((L.node_key[j] & L.node_key[i]) == L.node_key[j] && L.node_key[j] != L.node_key[i])
        L.strictly_below[i].push_back(j);
  for (int i = 1; i < L.size(); i++)
    if (L.strictly_below[i].empty() || L.strictly_below[i][0] != 0)
      throw std::logic_error("cycle lattice lost its bottom on " + M.name);
  for (int i = 0; i < L.size(); i++)
    if (L.nullity[i] == 1) L.atoms.push_back(i);

  // join = union, which must itself be a cycle
  for (int i = 0; i < L.size(); i++)
    for (int j = i + 1; j < L.size(); j++) {
      int u = L.node_key[i] | L.node_key[j];
      if (!std::binary_search(L.node_key.begin(), L.node_key.end(), u))
        throw std::logic_error("union of cycles escapes the lattice on " + M.name);
      L.join_pairs_checked++;
    }
  return L;
}

mpz_class classical_mu_bar(const ClassicalMatroid& M) {
  if (has_coloop(M)) return 0;
  CycleLattice L = build_classical_cycle_lattice(M);
  return abs(mobius_bottom_up(L));
}

FaceCensus face_census(const ClassicalMatroid& M) {
  FaceCensus C;
  C.f.assign(M.n + 1, 0);
  C.d.assign(M.n + 1, 0);
  for (int m = 0; m < (1 << M.n); m++) {
    if (M.eta(m) == 0) C.f[popcount(m)]++;
    else C.d[popcount(m)]++;
  }
  for (int k = 0; k <= M.n; k++) {
    if (k % 2 == 0) { C.chi_f -= C.f[k]; C.chi_d += C.d[k]; }
    else { C.chi_f += C.f[k]; C.chi_d -= C.d[k]; }
  }
  if (M.n >= 2 && C.chi_f != C.chi_d)
    throw std::logic_error("face census routes disagree on " + M.name);
  return C;
}

namespace {

// chains[k][m] = number of chains of nonempty subsets of length k ending at m
std::vector<std::vector<mpz_class>> subset_chain_dp(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("subset chain DP out of budget");
  int full = (1 << n) - 1;
  std::vector<std::vector<mpz_class>> t(n + 1, std::vector<mpz_class>(full + 1, 0));
  for (int m = 1; m <= full; m++) t[1][m] = 1;
  for (int k = 2; k <= n; k++)
    for (int m = 1; m <= full; m++) {
      mpz_class acc = 0;
      for (int s = (m - 1) & m; s; s = (s - 1) & m) acc += t[k - 1][s];
      t[k][m] = acc;
    }
  return t;
}

}  // namespace

ChainProof chain_proof_check(const ClassicalMatroid& M) {
  ChainProof P;
  P.f.assign(M.n + 1, 0);
  P.d.assign(M.n + 1, 0);
  P.s.assign(M.n + 1, 0);
  P.f[0] = P.s[0] = 1;
  if (M.n >= 1) {
    auto t = subset_chain_dp(M.n);
    for (int k = 1; k <= M.n; k++)
      for (int m = 1; m < (1 << M.n); m++) {
        P.s[k] += t[k][m];
        if (M.eta(m) == 0) P.f[k] += t[k][m];
        else P.d[k] += t[k][m];
      }
    mpz_class s_alt = 0;
    for (int k = 0; k <= M.n; k++) s_alt += (k % 2 == 0) ? P.s[k] : -P.s[k];
    if (s_alt != 0) throw std::logic_error("subset chains fail to cancel on " + M.name);
  }
  for (int k = 0; k <= M.n; k++) P.chi_chain += (k % 2 == 0) ? -P.f[k] : P.f[k];
  P.matches_face = P.chi_chain == face_census(M).chi_f;
  return P;
}

Lemma36 lemma36_sums(int n) {
  if (n < 1) throw std::invalid_argument("lemma36_sums needs n >= 1");
  auto t = subset_chain_dp(n);
  Lemma36 L;
  int full = (1 << n) - 1;
  L.without_top = 1;  // the empty chain
  for (int k = 1; k <= n; k++) {
    mpz_class sign = (k % 2 == 0) ? 1 : -1;
    L.with_top += sign * t[k][full];
    for (int m = 1; m < full; m++) L.without_top += sign * t[k][m];
  }
  // prepending the empty set shifts every length by one
  L.with_empty_not_top = -L.without_top;
  L.with_both = -L.with_top;
  L.all_chains = L.with_top + L.without_top + L.with_empty_not_top + L.with_both;
  mpz_class even = sign_pow(n);
  L.ok = L.with_top == even && L.without_top == -even && L.with_empty_not_top == even &&
         L.with_both == -even && L.all_chains == 0;
  return L;
}

Theorem32 theorem32_check(const ClassicalMatroid& M) {
  Theorem32 T;
  T.r = M.r;
  T.chi = face_census(M).chi_f;
  CycleLattice L = build_classical_cycle_lattice(M);
  T.mu = mobius_bottom_up(L);
  T.mu_bar = has_coloop(M) ? mpz_class(0) : abs(T.mu);
  T.holds = T.chi == sign_pow(M.r - 1) * T.mu_bar;
  if (!has_coloop(M) && M.eta((1 << M.n) - 1) >= 2) {
    T.crosscut = rota_crosscut(L).alternating;
    if (T.crosscut != T.mu)
      throw std::logic_error("cross-cut disagrees with recursion on " + M.name);
    T.crosscut_checked = true;
  }
  return T;
}

}  // namespace qmat
