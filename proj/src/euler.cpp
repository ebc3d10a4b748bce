#include "qmat/euler.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qmat {

namespace {

// t[k][id] = chains V_1 < ... < V_k = id of nonzero subspaces, k = 1..n
std::vector<std::vector<mpz_class>> chain_dp(const GrassmannianIndex& G) {
  int N = G.size(), n = G.n;
  std::vector<std::vector<mpz_class>> t(n + 1, std::vector<mpz_class>(N, 0));
  for (int id = 1; id < N; id++) t[1][id] = 1;
  for (int k = 2; k <= n; k++)
    for (int id = 1; id < N; id++) {
      mpz_class acc = 0;
      for (int w : G.subs[id])
        if (w != 0 && w != id) acc += t[k - 1][w];
      t[k][id] = acc;
    }
  return t;
}

mpz_class sign_pow(long e) { return (((e % 2) + 2) % 2 == 0) ? 1 : -1; }

}  // namespace

ChainCensus chain_census(const QMatroid& M) {
  const GrassmannianIndex& G = *M.G;
  int n = G.n;
  auto t = chain_dp(G);
  ChainCensus C;
  C.f.assign(n + 1, 0);
  C.d.assign(n + 1, 0);
  C.s.assign(n + 1, 0);
  C.f[0] = 1;
  C.s[0] = 1;
  for (int k = 1; k <= n; k++)
    for (int id = 1; id < G.size(); id++) {
      if (M.eta(id) == 0) C.f[k] += t[k][id];
      else C.d[k] += t[k][id];
    }
  for (int k = 1; k <= n; k++) C.s[k] = C.f[k] + C.d[k];
  C.chi_f = 0;
  C.chi_d = 0;
  for (int k = 0; k <= n; k++) {
    C.chi_f += sign_pow(k - 1) * C.f[k];
    C.chi_d += sign_pow(k) * C.d[k];
  }
  return C;
}

Lemma41 lemma41_sums(int n, int q, long budget) {
  if (n < 1) throw std::invalid_argument("the chain identity needs n >= 1");
  GrassmannianIndex G = enumerate_subspaces(n, q, budget);
  auto t = chain_dp(G);
  int E = G.full_id();
  // s[k] = all nonzero chains of length k, s[0] = 1 (empty chain)
  std::vector<mpz_class> s(n + 1, 0), top(n + 1, 0);
  s[0] = 1;
  for (int k = 1; k <= n; k++) {
    for (int id = 1; id < G.size(); id++) s[k] += t[k][id];
    top[k] = t[k][E];
  }
  Lemma41 L;
  L.q_power = mpz_pow_int(q, (unsigned long)(n * (n - 1) / 2));
  L.with_top = 0;
  L.without_top = 0;
  L.with_zero_not_top = 0;
  L.with_both = 0;
  for (int k = 0; k <= n; k++) {
    L.with_top += sign_pow(k) * top[k];
    L.without_top += sign_pow(k) * (s[k] - top[k]);
  }
  // a chain with the zero space as a member is zero plus a nonzero chain
  for (int k = 1; k <= n + 1; k++) {
    if (k - 1 <= n) {
      L.with_zero_not_top += sign_pow(k) * (s[k - 1] - top[k - 1]);
      L.with_both += sign_pow(k) * top[k - 1];
    }
  }
  L.all_chains = L.with_top + L.without_top + L.with_zero_not_top + L.with_both;
  mpz_class signn = sign_pow(n), signn1 = sign_pow(n - 1);
  L.ok = L.with_top == signn * L.q_power && L.without_top == signn1 * L.q_power &&
         L.with_zero_not_top == signn * L.q_power && L.with_both == signn1 * L.q_power &&
         L.all_chains == 0;
  return L;
}

LambdaTable lambda_table(const QMatroid& M) {
  const GrassmannianIndex& G = *M.G;
  std::vector<int> circ = circuits(M);
  std::vector<char> is_circ(G.size(), 0);
  for (int c : circ) is_circ[c] = 1;
  int s = (int)circ.size(), n = G.n, N = G.size();

  // g[id][i] = number of i-subsets of circuits whose span is exactly id
  std::vector<std::vector<mpz_class>> g(N);
  LambdaTable T;
  T.s = s;
  T.n = n;
  T.lambda.assign(s + 1, std::vector<mpz_class>(n + 1, 0));
  for (int id = 0; id < N; id++) {
    long c = 0;
    for (int w : G.subs[id]) c += is_circ[w];
    g[id].assign(s + 1, 0);
    for (long i = 0; i <= c; i++) g[id][i] = binom(c, i);
    for (int w : G.subs[id])
      if (w != id && !g[w].empty())
        for (int i = 0; i <= s; i++) g[id][i] -= g[w][i];
    int l = n - G.dim_of(id);
    for (int i = 0; i <= s; i++) T.lambda[i][l] += g[id][i];
  }
  return T;
}

LambdaTable lambda_table_enum(const QMatroid& M, long budget) {
  const GrassmannianIndex& G = *M.G;
  std::vector<int> circ = circuits(M);
  int s = (int)circ.size(), n = G.n;
  if (s >= 63 || (1L << s) > budget)
    throw std::runtime_error("2^" + std::to_string(s) + " circuit subsets exceed the budget");
  LambdaTable T;
  T.s = s;
  T.n = n;
  T.lambda.assign(s + 1, std::vector<mpz_class>(n + 1, 0));
  for (long mask = 0; mask < (1L << s); mask++) {
    std::vector<Vector> gens;
    int pop = 0;
    for (int a = 0; a < s; a++)
      if ((mask >> a) & 1) {
        pop++;
        const auto& rows = G.at(circ[a]).rows;
        gens.insert(gens.end(), rows.begin(), rows.end());
      }
    Subspace span = rref_of(gens, n, G.F);
    T.lambda[pop][n - span.dim()]++;
  }
  return T;
}

EulerFormula euler_formula(const QMatroid& M) {
  int n = M.n(), q = M.q(), r = M.r;
  EulerFormula E;
  E.lambda = lambda_table(M);
  E.mu_bar_value = mu_bar(M);
  int s = E.lambda.s;

  // sign check behind the collapsed form: on a coloop-free matroid the
  // lattice Mobius number carries sign (-1)^{nullity}
  if (!has_coloop(M)) {
    mpz_class mu = mobius_bottom_up(build_cycle_lattice(M));
    if (mu != sign_pow(n - r) * E.mu_bar_value)
      throw std::logic_error("Mobius sign deviates from (-1)^nullity on " + M.name);
  }

  mpz_class Q = mpz_pow_int(q, (unsigned long)(n * (n - 1) / 2));
  E.chi = sign_pow(r - 1) * Q * E.mu_bar_value;
  E.chi_collapsed = 0;
  for (int l = 0; l <= n - 1; l++) {
    for (int i = 1; i <= s; i++) {
      if (E.lambda.lambda[i][l] == 0) continue;
      mpz_class inner = 0;
      for (int j = 0; j <= l; j++)
        inner += sign_pow(n + i + j - 1) *
                 mpz_pow_int(q, (unsigned long)((n - j) * (n - j - 1) / 2)) *
                 gaussian_binomial(l, j, q);
      if (l >= 1) E.chi += E.lambda.lambda[i][l] * inner;
      E.chi_collapsed += E.lambda.lambda[i][l] * inner;
    }
  }
  if (E.chi != E.chi_collapsed)
    throw std::logic_error("formula and collapsed form disagree on " + M.name);
  return E;
}

bool check_gpr_uniform_formula(int k, int n, int q, long budget) {
  QMatroid M = uniform_qmatroid(k, n, q, budget);
  ChainCensus C = chain_census(M);
  mpz_class expect = mpz_pow_int(q, (unsigned long)(k * (k + 1) / 2)) *
                     gaussian_binomial(n - 1, k, q);
  if (abs(C.chi_f) != expect) return false;
  if (C.chi_f != 0 && C.chi_f != sign_pow(k - 1) * expect) return false;
  return true;
}

ShellingReport verify_q_shelling(const QMatroid& M) {
  const GrassmannianIndex& G = *M.G;
  std::vector<int> B = bases(M);  // already ascending = canonical order
  ShellingReport R;
  std::vector<char> covered(G.size(), 0);
  for (size_t j = 0; j < B.size(); j++) {
    if (j > 0) {
      std::vector<int> S;
      for (int h : G.hyperplanes[B[j]])
        if (covered[h]) S.push_back(h);
      if (S.empty()) {
        R.ok = false;
        R.violation_facet = (int)j;
        R.message = "no previously covered hyperplane";
        return R;
      }
      for (int x : G.subs[B[j]]) {
        if (!covered[x] || x == B[j]) continue;
        bool under = false;
        for (int h : S)
          if (std::binary_search(G.subs[h].begin(), G.subs[h].end(), x)) { under = true; break; }
        if (!under) {
          R.ok = false;
          R.violation_facet = (int)j;
          R.message = "covered face " + std::to_string(x) + " escapes the hyperplane set";
          return R;
        }
      }
    }
    for (int x : G.subs[B[j]]) covered[x] = 1;
  }
  return R;
}

RestrictionReport restriction_fixed_chains(const QMatroid& M) {
  const GrassmannianIndex& G = *M.G;
  int r = M.r;
  RestrictionReport R;
  R.homology_degree = r - 1;

  // facets: independent flags with dimensions 1..r
  std::vector<std::vector<int>> facets;
  std::vector<int> cur;
  auto extend = [&](auto&& self, int last) -> void {
    if ((int)cur.size() == r) {
      facets.push_back(cur);
      return;
    }
    int d = (int)cur.size() + 1;
    for (int id = G.dim_first[d]; id < G.dim_first[d + 1]; id++) {
      if (M.eta(id) != 0) continue;
      if (last >= 0 && !std::binary_search(G.subs[id].begin(), G.subs[id].end(), last)) continue;
      cur.push_back(id);
      self(self, id);
      cur.pop_back();
    }
  };
  extend(extend, -1);
  std::sort(facets.begin(), facets.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return compare_chains_revlex(a, b) < 0;
            });

  // per facet and position, whether the omit-one face already occurred: the
  // facet with the k-th member replaced by something smaller exists earlier
  std::vector<uint32_t> covered_minus((int)facets.size(), 0);
  for (int k = 0; k < r; k++) {
    std::map<std::vector<int>, int> leader;
    for (size_t fi = 0; fi < facets.size(); fi++) {
      std::vector<int> key = facets[fi];
      key.erase(key.begin() + k);
      if (!leader.emplace(std::move(key), (int)fi).second)
        covered_minus[fi] |= uint32_t(1) << k;
    }
  }
  uint32_t full = (r >= 32) ? ~uint32_t(0) : (uint32_t(1) << r) - 1;
  for (size_t fi = 0; fi < facets.size(); fi++)
    if (covered_minus[fi] == full) {
      // for r = 0 this keeps the single empty facet, whose restriction is itself
      R.count++;
      R.fixed_chains.push_back(facets[fi]);
    }

  // shelling test: every intersection with an earlier facet must lie inside
  // some covered omit-one face, and at least one such face must exist
  for (size_t j = 1; j < facets.size() && R.shelling_ok; j++) {
    for (size_t i = 0; i < j; i++) {
      uint32_t agree = 0;
      for (int k = 0; k < r; k++)
        if (facets[i][k] == facets[j][k]) agree |= uint32_t(1) << k;
      if ((covered_minus[j] & ~agree) == 0) {
        R.shelling_ok = false;
        R.shelling_message = "facet " + std::to_string(j) +
                             " meets its predecessors outside every covered omit-one face";
        break;
      }
    }
  }

  // independent criterion: an earlier basis over the codim-1 member, and no
  // interval minimum anywhere below the top; equivalently, no member may
  // contain the minimum nonzero vector of the next one
  if (r == 0) {
    R.count_by_criterion = 1;
    R.count_by_min_vector = 1;
  } else {
    std::vector<int> B = bases(M);
    for (const auto& A : facets) {
      bool earlier_basis = false;
      for (int b : B) {
        if (b >= A[r - 1]) break;
        if (r == 1 || std::binary_search(G.subs[b].begin(), G.subs[b].end(), A[r - 2])) {
          earlier_basis = true;
          break;
        }
      }
      if (!earlier_basis) continue;
      bool all_nonmin = true;
      for (int k = 0; k + 1 < r && all_nonmin; k++) {
        int below = (k == 0) ? G.zero_id() : A[k - 1];
        // the candidates F with below < F < A[k+1] of dimension k+1 appear in
        // ascending id order inside subs[A[k+1]]
        for (int f : G.subs[A[k + 1]]) {
          if (G.dim_of(f) != k + 1) continue;
          if (!std::binary_search(G.subs[f].begin(), G.subs[f].end(), below)) continue;
          if (f == A[k]) all_nonmin = false;  // A[k] is the interval minimum
          break;
        }
      }
      if (all_nonmin) R.count_by_criterion++;
      bool no_min_vector = true;
      for (int k = 0; k + 1 < r && no_min_vector; k++)
        if (contains(G.at(A[k]), min_nonzero_vector(G.at(A[k + 1])), G.F)) no_min_vector = false;
      if (earlier_basis && no_min_vector) R.count_by_min_vector++;
    }
  }
  if (R.count != R.count_by_criterion || R.count != R.count_by_min_vector)
    throw std::logic_error("restriction criteria disagree on " + M.name);
  return R;
}

std::pair<int, long> homology_rank(const QMatroid& M) {
  RestrictionReport R = restriction_fixed_chains(M);
  mpz_class mag = abs(chain_census(M).chi_f);
  if (mag != R.count)
    throw std::runtime_error("fixed chain count " + std::to_string(R.count) +
                             " does not realize |chi| = " + mag.get_str() + " on " + M.name);
  return {R.homology_degree, R.count};
}

ChiZero chi_zero_characterization(const QMatroid& M) {
  ChiZero Z;
  Z.chi_is_zero = chain_census(M).chi_f == 0;
  Z.is_free = M.r == M.n();
  return Z;
}

}  // namespace qmat
