#include "qmat/codes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qmat {

namespace {

void check_budget(const RankMetricCode& C) {
  if (C.k > 4 || C.m > 4 || C.n > 4)
    throw std::invalid_argument("code budget: k <= 4, m <= 4, n <= 4");
}

std::vector<int> codeword_of(const RankMetricCode& C, const std::vector<int>& u) {
  std::vector<int> c(C.n, 0);
  for (int i = 0; i < C.k; i++)
    for (int j = 0; j < C.n; j++)
      c[j] = C.Fqm.add(c[j], C.Fqm.mul(u[i], C.gen[i][j]));
  return c;
}

void append_expansion(const RankMetricCode& C, const std::vector<int>& x,
                      std::vector<Vector>& rows) {
  for (int i = 0; i < C.m; i++) {
    Vector r;
    for (int j = 0; j < C.n; j++) r.set(j, C.emb.phi[x[j]][i]);
    rows.push_back(r);
  }
}

// all (q^m)^k coefficient tuples, counting up little-endian
bool next_tuple(std::vector<int>& u, int base) {
  for (size_t i = 0; i < u.size(); i++) {
    if (++u[i] < base) return true;
    u[i] = 0;
  }
  return false;
}

// M_C under the requested reading; M = dual of this
QMatroid primal_matroid(const RankMetricCode& C, const std::string& reading) {
  if (reading == "generator") {
    QMatroid M = from_representation(C.q, C.m, C.n, C.gen);
    M.name = C.name;
    return M;
  }
  if (reading != "parity-check") throw std::invalid_argument("unknown reading " + reading);
  std::vector<std::vector<int>> H;
  if (C.gen.empty()) {
    H.assign(C.n, std::vector<int>(C.n, 0));
    for (int i = 0; i < C.n; i++) H[i][i] = 1;
  } else {
    H = nullspace_basis(C.gen, C.Fqm);
  }
  QMatroid M = from_representation(C.q, C.m, C.n, H);
  M.name = C.name + " parity";
  return M;
}

struct SubcodeSupport {
  int dim;      // dimension of the subcode over F_{q^m}
  int supp_id;  // id of its support in the small Grassmannian
};

std::vector<SubcodeSupport> all_subcode_supports(const RankMetricCode& C,
                                                 const GrassmannianIndex& G) {
  std::vector<SubcodeSupport> out;
  out.push_back({0, G.zero_id()});
  if (C.k == 0) return out;
  GrassmannianIndex big = enumerate_subspaces(C.k, C.Fqm.q);
  for (int id = 1; id < big.size(); id++) {
    const Subspace& S = big.at(id);
    std::vector<std::vector<int>> gens;
    for (const Vector& row : S.rows)
      gens.push_back(codeword_of(C, vec_coords(row, C.k)));
    int sid = G.id_of(support_of_subcode(C, gens));
    if (sid < 0) throw std::logic_error("support escapes the ground Grassmannian");
    out.push_back({S.dim(), sid});
  }
  return out;
}

}  // namespace

RankMetricCode make_code(int q, int m, int n,
                         const std::vector<std::vector<int>>& gen, std::string name) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("length outside [1,15]");
  RankMetricCode C;
  C.q = q;
  C.m = m;
  C.n = n;
  C.k = (int)gen.size();
  C.Fq = make_field(q);
  long qm = 1;
  for (int i = 0; i < m; i++) {
    qm *= q;
    if (qm > 16) throw std::invalid_argument("q^m exceeds the field cap 16");
  }
  C.Fqm = make_field((int)qm);
  C.emb = make_embedding(C.Fq, C.Fqm);
  for (const auto& row : gen) {
    if ((int)row.size() != n) throw std::invalid_argument("generator row length != n");
    for (int v : row)
      if (v < 0 || v >= (int)qm)
        throw std::invalid_argument("generator entry outside F_{q^m}");
  }
  C.gen = gen;
  if (matrix_rank(gen, C.Fqm) != C.k)
    throw std::invalid_argument("generator is not full row rank");
  C.name = name.empty() ? "code(q=" + std::to_string(q) + ",m=" + std::to_string(m) +
                              ",n=" + std::to_string(n) + ",k=" + std::to_string(C.k) + ")"
                        : std::move(name);
  return C;
}

Subspace support_of_vector(const RankMetricCode& C, const std::vector<int>& x) {
  if ((int)x.size() != C.n) throw std::invalid_argument("codeword length != n");
  for (int v : x)
    if (v < 0 || v >= C.Fqm.q) throw std::invalid_argument("coordinate outside F_{q^m}");
  std::vector<Vector> rows;
  append_expansion(C, x, rows);
  return rref_of(rows, C.n, C.Fq);
}

Subspace support_of_subcode(const RankMetricCode& C,
                            const std::vector<std::vector<int>>& gens) {
  std::vector<Vector> rows;
  for (const auto& x : gens) {
    if ((int)x.size() != C.n) throw std::invalid_argument("codeword length != n");
    append_expansion(C, x, rows);
  }
  Subspace by_gens = rref_of(rows, C.n, C.Fq);

  // independent recomputation over every member when the subcode is small
  std::vector<std::vector<int>> basis;
  for (const auto& x : gens) {  // greedy F_{q^m}-basis of the span
    basis.push_back(x);
    if (matrix_rank(basis, C.Fqm) < (int)basis.size()) basis.pop_back();
  }
  long members = 1;
  for (size_t i = 0; i < basis.size() && members <= 4096; i++) members *= C.Fqm.q;
  if (members <= 4096) {
    std::vector<Vector> all_rows;
    std::vector<int> u(basis.size(), 0);
    do {
      std::vector<int> x(C.n, 0);
      for (size_t i = 0; i < basis.size(); i++)
        for (int j = 0; j < C.n; j++)
          x[j] = C.Fqm.add(x[j], C.Fqm.mul(u[i], basis[i][j]));
      append_expansion(C, x, all_rows);
    } while (next_tuple(u, C.Fqm.q));
    if (rref_of(all_rows, C.n, C.Fq) != by_gens)
      throw std::logic_error("subcode support depends on the generating set");
  }
  return by_gens;
}

QMatroid code_matroid(const RankMetricCode& C, const std::string& reading) {
  QMatroid M = dual(primal_matroid(C, reading));
  M.name = C.name + "^* (" + reading + ")";
  return M;
}

Lemma62Report verify_lemma62(const RankMetricCode& C) {
  check_budget(C);
  auto attempt = [&C](const std::string& reading) {
    Lemma62Report R;
    R.reading = reading;
    QMatroid MC = primal_matroid(C, reading);
    QMatroid M = dual(MC);
    auto grades = cycles_by_nullity(M);

    std::vector<int> cycle_ids;
    std::vector<std::pair<int, int>> cycle_nullity;  // (id, nullity)
    for (size_t s = 0; s < grades.size(); s++)
      for (int id : grades[s]) {
        cycle_ids.push_back(id);
        cycle_nullity.push_back({id, (int)s});
      }
    std::sort(cycle_ids.begin(), cycle_ids.end());
    R.cycle_count = (long)cycle_ids.size();

    std::vector<SubcodeSupport> subs = all_subcode_supports(C, *M.G);
    R.subcodes = (long)subs.size();
    std::set<int> supp_ids;
    for (const SubcodeSupport& s : subs) {
      supp_ids.insert(s.supp_id);
      // the support of a dim-r subcode is a cycle of nullity >= r
      if (M.eta(s.supp_id) < s.dim) return R;
    }
    R.supports_match =
        std::vector<int>(supp_ids.begin(), supp_ids.end()) == cycle_ids;

    // the full subcode D_U supported on a cycle U has dim D_U = eta_M(U),
    // supp(D_U) = U, and eta_M(U) = rho_{M_C}(E) - rho_{M_C}(U^perp)
    R.nullity_match = true;
    for (auto [id, s] : cycle_nullity) {
      const Subspace& U = M.G->at(id);
      std::vector<Vector> member_rows;
      long count = 0;
      std::vector<int> u(C.k, 0);
      if (C.k == 0) {
        count = 1;
        std::vector<int> zero(C.n, 0);
        append_expansion(C, zero, member_rows);
      } else {
        do {
          std::vector<int> x = codeword_of(C, u);
          std::vector<Vector> rows;
          append_expansion(C, x, rows);
          bool inside = true;
          for (const Vector& r : rows)
            if (!contains(U, r, C.Fq)) { inside = false; break; }
          if (!inside) continue;
          count++;
          member_rows.insert(member_rows.end(), rows.begin(), rows.end());
        } while (next_tuple(u, C.Fqm.q));
      }
      int dim_DU = 0;
      for (long c = 1; c < count; c *= C.Fqm.q) dim_DU++;
      long back = 1;
      for (int i = 0; i < dim_DU; i++) back *= C.Fqm.q;
      bool ok = back == count && dim_DU == s && dim_DU == M.eta(id) &&
                rref_of(member_rows, C.n, C.Fq) == U &&
                s == MC.r - MC.rank[M.G->perp[id]];
      if (!ok) { R.nullity_match = false; break; }
    }
    R.ok = R.supports_match && R.nullity_match;
    return R;
  };
  Lemma62Report R = attempt("generator");
  if (R.ok) return R;
  Lemma62Report P = attempt("parity-check");
  return P.ok ? P : R;
}

WeightsReport generalized_rank_weights(const RankMetricCode& C) {
  check_budget(C);
  WeightsReport W;
  Lemma62Report L = verify_lemma62(C);
  if (!L.ok)
    throw std::runtime_error("support lattice identity fails under both readings on " + C.name);
  W.reading = L.reading;
  if (C.k == 0) { W.agree = true; return W; }

  QMatroid M = code_matroid(C, L.reading);
  auto grades = cycles_by_nullity(M);
  if ((int)grades.size() <= C.k)
    throw std::runtime_error("cycle nullities do not reach dim C on " + C.name);
  for (int r = 1; r <= C.k; r++) {
    if (grades[r].empty())
      throw std::runtime_error("no cycle of nullity " + std::to_string(r));
    int best = C.n + 1;
    for (int id : grades[r]) best = std::min(best, M.G->dim_of(id));
    W.by_cycles.push_back(best);
  }

  std::vector<int> best(C.k + 1, C.n + 1);
  for (const SubcodeSupport& s : all_subcode_supports(C, *M.G))
    best[s.dim] = std::min(best[s.dim], M.G->dim_of(s.supp_id));
  W.by_subcodes.assign(best.begin() + 1, best.end());

  W.agree = W.by_subcodes == W.by_cycles;
  if (!W.agree)
    throw std::runtime_error("generalized rank weight routes disagree on " + C.name);
  for (int r = 1; r < C.k; r++)
    if (W.by_subcodes[r] < W.by_subcodes[r - 1])
      throw std::runtime_error("generalized rank weights are not monotone on " + C.name);
  return W;
}

}  // namespace qmat
