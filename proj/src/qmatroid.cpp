#include "qmat/qmatroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmat {

namespace {

// largest common id of two sorted subs lists = id of the set intersection
int meet_id(const GrassmannianIndex& G, int a, int b) {
  const auto &A = G.subs[a], &B = G.subs[b];
  int best = 0;
  size_t i = 0, j = 0;
  while (i < A.size() && j < B.size()) {
    if (A[i] == B[j]) { best = A[i]; i++; j++; }
    else if (A[i] < B[j]) i++;
    else j++;
  }
  return best;
}

int join_id(const GrassmannianIndex& G, int a, int b) {
  std::vector<Vector> gens = G.at(a).rows;
  gens.insert(gens.end(), G.at(b).rows.begin(), G.at(b).rows.end());
  return G.id_of_span(gens);
}

}  // namespace

QMatroid uniform_qmatroid(int k, int n, int q, long budget) {
  if (k < 0 || k > n) throw std::invalid_argument("uniform rank outside [0,n]");
  QMatroid M;
  M.G = std::make_shared<GrassmannianIndex>(enumerate_subspaces(n, q, budget));
  M.rank.resize(M.G->size());
  for (int id = 0; id < M.G->size(); id++) M.rank[id] = std::min(k, M.G->dim_of(id));
  M.r = k;
  M.name = "U(" + std::to_string(k) + "," + std::to_string(n) + ";q=" + std::to_string(q) + ")";
  return M;
}

QMatroid from_rank_table(int n, int q, const std::vector<int>& table, long budget) {
  QMatroid M;
  M.G = std::make_shared<GrassmannianIndex>(enumerate_subspaces(n, q, budget));
  if ((int)table.size() != M.G->size())
    throw std::invalid_argument("rank table has " + std::to_string(table.size()) +
                                " entries, expected " + std::to_string(M.G->size()));
  M.rank = table;
  M.r = table.back();
  M.name = "table(n=" + std::to_string(n) + ",q=" + std::to_string(q) + ")";
  return M;
}

QMatroid from_representation(int q, int m, int n,
                             const std::vector<std::vector<int>>& mat, long budget) {
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  Field Fs = make_field(q);
  long qm = 1;
  for (int i = 0; i < m; i++) {
    qm *= q;
    if (qm > 16) throw std::invalid_argument("q^m exceeds the field cap 16");
  }
  Field Fb = make_field((int)qm);
  Embedding emb = make_embedding(Fs, Fb);

  int k = (int)mat.size();
  for (const auto& row : mat) {
    if ((int)row.size() != n) throw std::invalid_argument("representation row length != n");
    for (int v : row)
      if (v < 0 || v >= (int)qm) throw std::invalid_argument("matrix entry outside F_{q^m}");
  }

  QMatroid M;
  M.G = std::make_shared<GrassmannianIndex>(enumerate_subspaces(n, q, budget));
  M.m = m;
  M.rep = mat;
  M.rank.resize(M.G->size());
  for (int id = 0; id < M.G->size(); id++) {
    const Subspace& U = M.G->at(id);
    // k x dim(U) product mat * U^T over the big field
    std::vector<std::vector<int>> prod(k, std::vector<int>(U.dim(), 0));
    for (int i = 0; i < k; i++)
      for (int j = 0; j < U.dim(); j++) {
        int s = 0;
        for (int t = 0; t < n; t++)
          s = Fb.add(s, Fb.mul(mat[i][t], emb.iota[U.rows[j].get(t)]));
        prod[i][j] = s;
      }
    M.rank[id] = matrix_rank(prod, Fb);
  }
  M.r = M.rank.back();
  M.name = "rep(q=" + std::to_string(q) + ",m=" + std::to_string(m) +
           ",n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
  return M;
}

std::optional<std::string> axiom_violation(const QMatroid& M) {
  const GrassmannianIndex& G = *M.G;
  for (int id = 0; id < G.size(); id++) {
    if (M.rank[id] < 0 || M.rank[id] > G.dim_of(id))
      return "P1 fails at id " + std::to_string(id);
    for (int c : G.covers[id])
      if (M.rank[c] < M.rank[id]) return "P2 fails at cover " + std::to_string(c);
  }
  for (int a = 0; a < G.size(); a++)
    for (int b = a + 1; b < G.size(); b++) {
      int s = join_id(G, a, b), i = meet_id(G, a, b);
      if (M.rank[s] + M.rank[i] > M.rank[a] + M.rank[b])
        return "P3 fails on pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
  return std::nullopt;
}

std::vector<int> independents(const QMatroid& M) {
  std::vector<int> out;
  for (int id = 0; id < M.G->size(); id++)
    if (M.eta(id) == 0) out.push_back(id);
  return out;
}

std::vector<int> bases(const QMatroid& M) {
  std::vector<int> out;
  for (int id = 0; id < M.G->size(); id++)
    if (M.eta(id) == 0 && M.G->dim_of(id) == M.r) out.push_back(id);
  return out;
}

std::vector<std::vector<int>> cycles_by_nullity(const QMatroid& M) {
  const GrassmannianIndex& G = *M.G;
  std::vector<std::vector<int>> out(M.eta(G.full_id()) + 1);
  out[0].push_back(G.zero_id());
  for (int id = 0; id < G.size(); id++) {
    int e = M.eta(id);
    if (e == 0) continue;
    bool minimal = true;
    for (int h : G.hyperplanes[id])
      if (M.eta(h) == e) { minimal = false; break; }
    if (minimal) out[e].push_back(id);
  }
  return out;
}

std::vector<int> circuits(const QMatroid& M) {
  auto cyc = cycles_by_nullity(M);
  return cyc.size() > 1 ? cyc[1] : std::vector<int>{};
}

std::vector<int> flats(const QMatroid& M) {
  std::vector<int> out;
  for (int id = 0; id < M.G->size(); id++) {
    bool flat = true;
    for (int c : M.G->covers[id])
      if (M.rank[c] == M.rank[id]) { flat = false; break; }
    if (flat) out.push_back(id);
  }
  return out;
}

std::vector<int> loops(const QMatroid& M) {
  std::vector<int> out;
  for (int id = M.G->dim_first[1]; id < M.G->dim_first[2]; id++)
    if (M.rank[id] == 0) out.push_back(id);
  return out;
}

QMatroid dual(const QMatroid& M) {
  QMatroid D;
  D.G = M.G;
  D.rank.resize(M.G->size());
  for (int id = 0; id < M.G->size(); id++)
    D.rank[id] = M.G->dim_of(id) - M.r + M.rank[M.G->perp[id]];
  D.r = D.rank.back();
  D.name = "dual(" + M.name + ")";
  return D;
}

std::vector<int> coloops(const QMatroid& M) {
  std::vector<int> out;
  if (M.n() == 0) return out;
  for (int id = M.G->dim_first[1]; id < M.G->dim_first[2]; id++)
    if (1 - M.r + M.rank[M.G->perp[id]] == 0) out.push_back(id);
  return out;
}

QMatroid restrict(const QMatroid& M, int id) {
  const GrassmannianIndex& G = *M.G;
  const Subspace& X = G.at(id);
  int d = X.dim();
  QMatroid R;
  R.G = std::make_shared<GrassmannianIndex>(enumerate_subspaces(d, M.q()));
  R.rank.resize(R.G->size());
  for (int lid = 0; lid < R.G->size(); lid++) {
    std::vector<Vector> gens;
    for (const Vector& lr : R.G->at(lid).rows) {
      Vector v{};
      for (int i = 0; i < d; i++)
        if (lr.get(i) != 0) v = vec_add(v, vec_scale(lr.get(i), X.rows[i], G.F, G.n), G.F, G.n);
      gens.push_back(v);
    }
    R.rank[lid] = M.rank[G.id_of_span(gens)];
  }
  R.r = R.rank.back();
  R.name = M.name + "|id" + std::to_string(id);
  return R;
}

int top_cycle(const QMatroid& M) {
  auto cyc = cycles_by_nullity(M);
  const auto& tops = cyc.back();
  if (tops.size() != 1) throw std::logic_error("top cycle is not unique");
  return tops[0];
}

bool has_coloop(const QMatroid& M) {
  bool by_coloops = !coloops(M).empty();
  std::vector<Vector> gens;
  for (int c : circuits(M)) {
    const auto& rows = M.G->at(c).rows;
    gens.insert(gens.end(), rows.begin(), rows.end());
  }
  bool by_span = M.G->id_of_span(gens) != M.G->full_id();
  bool by_top = top_cycle(M) != M.G->full_id();
  if (by_coloops != by_span || by_span != by_top)
    throw std::logic_error("coloop criteria disagree on " + M.name);
  return by_coloops;
}

Subspace basis_intersection(const QMatroid& M) {
  const GrassmannianIndex& G = *M.G;
  std::vector<int> common = G.subs[bases(M).front()];
  for (int b : bases(M)) {
    std::vector<int> next;
    std::set_intersection(common.begin(), common.end(),
                          G.subs[b].begin(), G.subs[b].end(), std::back_inserter(next));
    common = next;
  }
  return G.at(common.back());
}

}  // namespace qmat
