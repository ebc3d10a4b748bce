#pragma once

#include <cstdint>
#include <vector>

#include "qmat/gf.hpp"

namespace qmat {

constexpr int kMaxN = 15;

// Vector in F_q^n, n <= 15, packed 4 bits per coordinate with coordinate 0
// in the most significant used nibble. Raw comparison of the packed word is
// then exactly the lex order with earlier coordinates more significant.
struct Vector {
  uint64_t raw = 0;

  int get(int i) const { return (int)((raw >> (60 - 4 * i)) & 0xF); }
  void set(int i, int c) {
    int sh = 60 - 4 * i;
    raw = (raw & ~(uint64_t(0xF) << sh)) | (uint64_t(c) << sh);
  }
  bool is_zero() const { return raw == 0; }
  auto operator<=>(const Vector&) const = default;
};

Vector vec_from(const std::vector<int>& coords);
std::vector<int> vec_coords(Vector v, int n);
Vector vec_add(Vector a, Vector b, const Field& F, int n);
Vector vec_scale(int c, Vector a, const Field& F, int n);
int vec_dot(Vector a, Vector b, const Field& F, int n);
// position of the leading (leftmost) nonzero coordinate; n if zero
int leading_index(Vector v, int n);

// Subspace of F_q^n in canonical RREF: rows sorted by pivot position
// ascending, pivots 1, pivot columns cleared elsewhere. Two subspaces are
// equal iff their rows are identical.
struct Subspace {
  int n = 0;
  std::vector<Vector> rows;

  int dim() const { return (int)rows.size(); }
  bool operator==(const Subspace&) const = default;
};

using Chain = std::vector<Subspace>;

// canonical form of the span of the given vectors
Subspace rref_of(const std::vector<Vector>& gens, int n, const Field& F);
Subspace zero_space(int n);
Subspace full_space(int n);

Subspace sum(const Subspace& a, const Subspace& b, const Field& F);
Subspace intersect(const Subspace& a, const Subspace& b, const Field& F);
bool contains(const Subspace& s, Vector v, const Field& F);
bool contains(const Subspace& a, const Subspace& b, const Field& F);  // b <= a
Subspace orthogonal_complement(const Subspace& s, const Field& F);

// pivot positions of the RREF rows, ascending
std::vector<int> profile(const Subspace& s);
// the lex-least nonzero vector of the subspace: its last RREF row
Vector min_nonzero_vector(const Subspace& s);

// all q^dim vectors of the subspace (zero included)
std::vector<Vector> all_vectors(const Subspace& s, const Field& F);

// order on same-dimension subspaces: lex on the reduced generator tuple
// (u_1,...,u_k) = RREF rows bottom-up, so u_1 comparisons come first
bool subspace_less(const Subspace& a, const Subspace& b);

// rank and nullspace of a plain index matrix over any Field (entries are
// field indices); used for matrices over extension fields, where rows are
// not packed Vectors
int matrix_rank(std::vector<std::vector<int>> m, const Field& F);
// rows spanning {x : m x^T = 0}
std::vector<std::vector<int>> nullspace_basis(std::vector<std::vector<int>> m,
                                              const Field& F);

}  // namespace qmat
