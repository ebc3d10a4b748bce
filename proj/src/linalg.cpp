#include "qmat/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmat {

Vector vec_from(const std::vector<int>& coords) {
  if (coords.size() > kMaxN) throw std::invalid_argument("vector longer than 15");
  Vector v;
  for (size_t i = 0; i < coords.size(); i++) v.set((int)i, coords[i]);
  return v;
}

std::vector<int> vec_coords(Vector v, int n) {
  std::vector<int> c(n);
  for (int i = 0; i < n; i++) c[i] = v.get(i);
  return c;
}

Vector vec_add(Vector a, Vector b, const Field& F, int n) {
  Vector r;
  for (int i = 0; i < n; i++) r.set(i, F.add(a.get(i), b.get(i)));
  return r;
}

Vector vec_scale(int c, Vector a, const Field& F, int n) {
  Vector r;
  for (int i = 0; i < n; i++) r.set(i, F.mul(c, a.get(i)));
  return r;
}

int vec_dot(Vector a, Vector b, const Field& F, int n) {
  int s = 0;
  for (int i = 0; i < n; i++) s = F.add(s, F.mul(a.get(i), b.get(i)));
  return s;
}

int leading_index(Vector v, int n) {
  for (int i = 0; i < n; i++)
    if (v.get(i) != 0) return i;
  return n;
}

Subspace rref_of(const std::vector<Vector>& gens, int n, const Field& F) {
  std::vector<Vector> rows = gens;
  std::vector<Vector> out;
  int col = 0;
  size_t done = 0;
  while (col < n && done < rows.size()) {
    size_t piv = done;
    while (piv < rows.size() && rows[piv].get(col) == 0) piv++;
    if (piv == rows.size()) { col++; continue; }
    std::swap(rows[done], rows[piv]);
    rows[done] = vec_scale(F.inv(rows[done].get(col)), rows[done], F, n);
    for (size_t r = done + 1; r < rows.size(); r++) {
      int c = rows[r].get(col);
      if (c != 0) rows[r] = vec_add(rows[r], vec_scale(F.neg(c), rows[done], F, n), F, n);
    }
    done++;
    col++;
  }
  rows.resize(done);
  // back-substitute to clear above pivots
  for (int r = (int)done - 1; r >= 0; r--) {
    int p = leading_index(rows[r], n);
    for (int s = 0; s < r; s++) {
      int c = rows[s].get(p);
      if (c != 0) rows[s] = vec_add(rows[s], vec_scale(F.neg(c), rows[r], F, n), F, n);
    }
  }
  Subspace S;
  S.n = n;
  S.rows = rows;
  return S;
}

Subspace zero_space(int n) {
  Subspace s;
  s.n = n;
  return s;
}

Subspace full_space(int n) {
  Subspace s;
  s.n = n;
  for (int i = 0; i < n; i++) {
    Vector v;
    v.set(i, 1);
    s.rows.push_back(v);
  }
  return s;
}

Subspace sum(const Subspace& a, const Subspace& b, const Field& F) {
  std::vector<Vector> g = a.rows;
  g.insert(g.end(), b.rows.begin(), b.rows.end());
  return rref_of(g, a.n, F);
}

bool contains(const Subspace& s, Vector v, const Field& F) {
  for (const Vector& r : s.rows) {
    int p = leading_index(r, s.n);
    int c = v.get(p);
    if (c != 0) v = vec_add(v, vec_scale(F.neg(c), r, F, s.n), F, s.n);
  }
  return v.is_zero();
}

bool contains(const Subspace& a, const Subspace& b, const Field& F) {
  for (const Vector& r : b.rows)
    if (!contains(a, r, F)) return false;
  return true;
}

Subspace orthogonal_complement(const Subspace& s, const Field& F) {
  // kernel of the RREF row matrix wrt the standard dot product
  int n = s.n;
  std::vector<int> piv = profile(s);
  std::vector<char> is_piv(n, 0);
  for (int p : piv) is_piv[p] = 1;
  std::vector<Vector> basis;
  for (int j = 0; j < n; j++) {
    if (is_piv[j]) continue;
    Vector v;
    v.set(j, 1);
    for (size_t i = 0; i < piv.size(); i++) v.set(piv[i], F.neg(s.rows[i].get(j)));
    basis.push_back(v);
  }
  return rref_of(basis, n, F);
}

Subspace intersect(const Subspace& a, const Subspace& b, const Field& F) {
  return orthogonal_complement(
      sum(orthogonal_complement(a, F), orthogonal_complement(b, F), F), F);
}

std::vector<int> profile(const Subspace& s) {
  std::vector<int> p;
  p.reserve(s.rows.size());
  for (const Vector& r : s.rows) p.push_back(leading_index(r, s.n));
  return p;
}

Vector min_nonzero_vector(const Subspace& s) {
  if (s.rows.empty()) throw std::domain_error("zero space has no nonzero vector");
  return s.rows.back();
}

std::vector<Vector> all_vectors(const Subspace& s, const Field& F) {
  int k = s.dim();
  long total = 1;
  for (int i = 0; i < k; i++) total *= F.q;
  std::vector<Vector> out;
  out.reserve(total);
  std::vector<int> c(k, 0);
  for (long t = 0; t < total; t++) {
    Vector v;
    for (int i = 0; i < k; i++)
      if (c[i] != 0) v = vec_add(v, vec_scale(c[i], s.rows[i], F, s.n), F, s.n);
    out.push_back(v);
    for (int i = 0; i < k; i++) {
      if (++c[i] < F.q) break;
      c[i] = 0;
    }
  }
  return out;
}

bool subspace_less(const Subspace& a, const Subspace& b) {
  // compare u_1 = last row first; ties move up the RREF
  size_t k = a.rows.size();
  for (size_t i = 0; i < k; i++) {
    Vector x = a.rows[k - 1 - i], y = b.rows[k - 1 - i];
    if (x != y) return x < y;
  }
  return false;
}

// full row reduction; returns the pivot column of each surviving row
static std::vector<int> reduce_rows(std::vector<std::vector<int>>& m, const Field& F) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = (int)m.size(), cols = (int)m[0].size(), rank = 0;
  for (int c = 0; c < cols && rank < rows; c++) {
    int piv = -1;
    for (int r = rank; r < rows; r++)
      if (m[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    int inv = F.inv(m[rank][c]);
    for (int j = c; j < cols; j++) m[rank][j] = F.mul(inv, m[rank][j]);
    for (int r = 0; r < rows; r++) {
      if (r == rank || m[r][c] == 0) continue;
      int f = F.neg(m[r][c]);
      for (int j = c; j < cols; j++) m[r][j] = F.add(m[r][j], F.mul(f, m[rank][j]));
    }
    pivots.push_back(c);
    rank++;
  }
  return pivots;
}

int matrix_rank(std::vector<std::vector<int>> m, const Field& F) {
  return (int)reduce_rows(m, F).size();
}

std::vector<std::vector<int>> nullspace_basis(std::vector<std::vector<int>> m,
                                              const Field& F) {
  if (m.empty()) return {};
  int cols = (int)m[0].size();
  std::vector<int> pivots = reduce_rows(m, F);
  std::vector<int> pivot_of(cols, -1);
  for (size_t i = 0; i < pivots.size(); i++) pivot_of[pivots[i]] = (int)i;
  std::vector<std::vector<int>> out;
  for (int c = 0; c < cols; c++) {
    if (pivot_of[c] >= 0) continue;
    std::vector<int> x(cols, 0);
    x[c] = 1;
    for (int p = 0; p < cols; p++)
      if (pivot_of[p] >= 0) x[p] = F.neg(m[pivot_of[p]][c]);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace qmat
