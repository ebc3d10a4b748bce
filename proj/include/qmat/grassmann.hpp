#pragma once

#include <vector>

#include "qmat/linalg.hpp"

namespace qmat {

// Every subspace of F_q^n, indexed in the canonical order: dimension
// ascending, subspace_less within a dimension. Ids are dense 0..N-1 with
// id 0 the zero space and id N-1 the full space. Inclusion, hyperplane,
// cover and orthogonal-complement relations are materialized up front.
struct GrassmannianIndex {
  int n = 0, q = 0;
  Field F;
  std::vector<Subspace> spaces;
  std::vector<int> dim_first;                 // size n+2, dim_first[n+1] = N
  std::vector<std::vector<int>> subs;         // all ids contained in i (incl. 0 and i)
  std::vector<std::vector<int>> hyperplanes;  // codim-1 ids inside i
  std::vector<std::vector<int>> covers;       // dim+1 ids containing i
  std::vector<int> perp;

  int size() const { return (int)spaces.size(); }
  int dim_of(int id) const { return spaces[id].dim(); }
  int zero_id() const { return 0; }
  int full_id() const { return size() - 1; }
  const Subspace& at(int id) const { return spaces[id]; }
  int count_of_dim(int k) const { return dim_first[k + 1] - dim_first[k]; }

  // id of a canonical-form subspace; -1 if the form is unknown (foreign n)
  int id_of(const Subspace& s) const;
  int id_of_span(const std::vector<Vector>& gens) const;
};

// Enumerates all subspaces; throws if their number exceeds the budget.
GrassmannianIndex enumerate_subspaces(int n, int q, long budget = 10000000);

// Order |-_l on equal-length chains of ids (dimension-aligned): compare at
// the largest index where they differ. Returns <0, 0, >0.
int compare_chains_revlex(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace qmat
