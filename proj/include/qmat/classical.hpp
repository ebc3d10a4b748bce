#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmat/gf.hpp"
#include "qmat/lattice.hpp"

namespace qmat {

// ordinary matroid on {0,..,n-1}; subsets are bitmasks indexing a full rank
// table, so every derived notion is an exhaustive scan
struct ClassicalMatroid {
  int n = 0;
  std::vector<int> rank;  // size 1 << n
  int r = 0;
  std::string name;

  int rho(int mask) const { return rank[mask]; }
  int eta(int mask) const { return __builtin_popcount((unsigned)mask) - rank[mask]; }
};

ClassicalMatroid uniform_matroid(int k, int n);
ClassicalMatroid matroid_from_rank_table(int n, std::vector<int> table,
                                         std::string name = std::string());
// columns of the matrix are the ground set; rank of a subset = matrix rank
// of the chosen columns over F
ClassicalMatroid matroid_from_matrix(const Field& F, const std::vector<std::vector<int>>& rows);
// rank of an edge subset = vertices - components
ClassicalMatroid graphic_matroid(int vertices, const std::vector<std::pair<int, int>>& edges);

// (R1)-(R3), exhaustive; nullopt when M is a matroid
std::optional<std::string> axiom_violation(const ClassicalMatroid& M);

std::vector<int> independent_sets(const ClassicalMatroid& M);
std::vector<int> matroid_bases(const ClassicalMatroid& M);
std::vector<int> matroid_circuits(const ClassicalMatroid& M);
std::vector<int> matroid_flats(const ClassicalMatroid& M);
std::vector<int> matroid_loops(const ClassicalMatroid& M);
std::vector<int> matroid_coloops(const ClassicalMatroid& M);
ClassicalMatroid dual(const ClassicalMatroid& M);

// cycles graded by nullity, each class the masks that shrink in nullity when
// any element is removed; cycles_as_circuit_unions must produce the same
// family, and has_coloop must agree with the top cycle being proper
std::vector<std::vector<int>> cycles_by_nullity(const ClassicalMatroid& M);
std::vector<int> cycles_as_circuit_unions(const ClassicalMatroid& M);
bool has_coloop(const ClassicalMatroid& M);

// lattice of cycles ordered by inclusion; join = union, checked to land on a
// node for every pair
CycleLattice build_classical_cycle_lattice(const ClassicalMatroid& M);
mpz_class classical_mu_bar(const ClassicalMatroid& M);

// independent / dependent k-sets and both alternating sums over them; the
// two sums agree whenever n >= 2
struct FaceCensus {
  std::vector<mpz_class> f, d;
  mpz_class chi_f = 0, chi_d = 0;
};
FaceCensus face_census(const ClassicalMatroid& M);

// chains of nonempty subsets with independent / dependent tops; the chain
// route chi(I_M) must equal the face route chi(S_M)
struct ChainProof {
  std::vector<mpz_class> f, d, s;
  mpz_class chi_chain = 0;
  bool matches_face = false;
};
ChainProof chain_proof_check(const ClassicalMatroid& M);

// the five alternating chain sums over all subsets of an n-set
struct Lemma36 {
  mpz_class with_top, without_top, with_empty_not_top, with_both, all_chains;
  bool ok = false;
};
Lemma36 lemma36_sums(int n);

// chi(S_M) = (-1)^(r-1) mu_bar(M), with the cross-cut identity checked on
// the lattice whenever the matroid is coloop-free with nullity >= 2
struct Theorem32 {
  mpz_class chi, mu, mu_bar, crosscut;
  int r = 0;
  bool holds = false;
  bool crosscut_checked = false;
};
Theorem32 theorem32_check(const ClassicalMatroid& M);

}  // namespace qmat
