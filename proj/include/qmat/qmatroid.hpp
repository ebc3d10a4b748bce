#pragma once

#include <memory>
#include <optional>
#include <string>

#include "qmat/grassmann.hpp"

namespace qmat {

// q-matroid (F_q^n, rho) with the rank of every subspace materialized over a
// shared Grassmannian index. The extension field data (m, representation)
// is kept when the matroid came from a matrix.
struct QMatroid {
  std::shared_ptr<const GrassmannianIndex> G;
  std::vector<int> rank;
  int r = 0;  // rank of the full space
  std::string name;
  int m = 1;  // extension degree when representable, 1 otherwise
  std::vector<std::vector<int>> rep;  // representation matrix over F_{q^m}, may be empty

  int n() const { return G->n; }
  int q() const { return G->q; }
  int rho(int id) const { return rank[id]; }
  int eta(int id) const { return G->dim_of(id) - rank[id]; }
};

QMatroid uniform_qmatroid(int k, int n, int q, long budget = 10000000);
QMatroid from_rank_table(int n, int q, const std::vector<int>& table, long budget = 10000000);
// rows of the k x n matrix are over F_{q^m} (entries are field indices);
// rho(U) = rank of mat * U^T over F_{q^m}
QMatroid from_representation(int q, int m, int n,
                             const std::vector<std::vector<int>>& mat,
                             long budget = 10000000);

// P1 (0 <= rho <= dim), P2 (monotone), P3 (submodular on all pairs);
// returns a violation message or nothing
std::optional<std::string> axiom_violation(const QMatroid& M);

std::vector<int> independents(const QMatroid& M);
std::vector<int> bases(const QMatroid& M);
std::vector<int> circuits(const QMatroid& M);
// cycles_by_nullity(M)[i] = ids of the q-cycles of nullity i; index 0 holds
// the zero space
std::vector<std::vector<int>> cycles_by_nullity(const QMatroid& M);
std::vector<int> flats(const QMatroid& M);
std::vector<int> loops(const QMatroid& M);    // 1-dim ids of rank 0
std::vector<int> coloops(const QMatroid& M);  // 1-dim ids of dual rank 0

QMatroid dual(const QMatroid& M);
// the matroid restricted to the subspace with the given id, on a fresh
// ambient space of that dimension
QMatroid restrict(const QMatroid& M, int id);

// true iff coloops exist; asserts the three equivalent readings agree
// (coloop list nonempty, span of circuits proper, top cycle proper)
bool has_coloop(const QMatroid& M);
// the unique minimal subspace of maximal nullity
int top_cycle(const QMatroid& M);
// intersection of all bases as a subspace
Subspace basis_intersection(const QMatroid& M);

}  // namespace qmat
