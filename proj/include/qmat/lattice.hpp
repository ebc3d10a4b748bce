#pragma once

#include "qmat/qmatroid.hpp"

namespace qmat {

// Lattice of q-cycles ordered by inclusion. node_key holds the subspace id
// (or, for the classical mirror, the subset mask); nodes are sorted so that
// containment implies a smaller index, node 0 is the zero space and the last
// node is the top cycle. Atoms are the circuits. The builder checks that
// every pair of nodes has a unique minimal upper bound among the nodes and
// counts how often that join differs from the plain span.
struct CycleLattice {
  std::vector<int> node_key;
  std::vector<int> nullity;
  std::vector<std::vector<int>> strictly_below;  // node indices, sorted
  std::vector<int> atoms;                        // node indices
  long span_join_mismatches = 0;
  long join_pairs_checked = 0;

  int size() const { return (int)node_key.size(); }
  int top() const { return size() - 1; }
};

// pair_verify_cap bounds the number of nodes for which the quadratic join
// verification runs in full; larger lattices get atom-pair verification only
CycleLattice build_cycle_lattice(const QMatroid& M, int pair_verify_cap = 2000);

std::vector<mpz_class> mobius_all(const CycleLattice& L);  // mu(0,x) per node
mpz_class mobius_bottom_up(const CycleLattice& L);  // mu(0,1) by lower recursion
mpz_class mobius_top_down(const CycleLattice& L);   // mu(0,1) by upper recursion

struct Crosscut {
  std::vector<mpz_class> lambda;  // lambda[i] = #i-subsets of atoms joining to the top
  mpz_class alternating;          // sum (-1)^i lambda[i] = mu(0,1)
};

// exact Mobius-inversion DP over the lattice, any number of atoms
Crosscut rota_crosscut(const CycleLattice& L);
// direct 2^s subset enumeration; throws if 2^s exceeds the budget
Crosscut rota_crosscut_enum(const CycleLattice& L, long budget = 1L << 22);

// |mu(0,1)| of the cycle lattice, or 0 when the matroid has a coloop
mpz_class mu_bar(const QMatroid& M);

}  // namespace qmat
