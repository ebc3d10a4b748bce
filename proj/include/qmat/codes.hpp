#pragma once

#include "qmat/qmatroid.hpp"

namespace qmat {

// Gabidulin rank-metric code C <= F_{q^m}^n with a full-row-rank k x n
// generator matrix. Entries are big-field indices; the fixed basis of
// F_{q^m}/F_q is the power basis {1, beta, ..., beta^{m-1}} of gf.hpp.
struct RankMetricCode {
  int q = 0, m = 1, n = 0, k = 0;
  Field Fq, Fqm;
  Embedding emb;
  std::vector<std::vector<int>> gen;
  std::string name;
};

RankMetricCode make_code(int q, int m, int n,
                         const std::vector<std::vector<int>>& gen,
                         std::string name = "");

// Supp(x): F_q-rowspace in F_q^n of the m x n coordinate expansion of x,
// row i of the expansion being (phi(x_1)[i], ..., phi(x_n)[i])
Subspace support_of_vector(const RankMetricCode& C, const std::vector<int>& x);
// span of the supports of the given codewords; when the spanned subcode has
// at most 4096 members the member-by-member route is recomputed and asserted
// equal, so the support is independent of the generating set
Subspace support_of_subcode(const RankMetricCode& C,
                            const std::vector<std::vector<int>>& gens);

// the q-matroid whose q-cycles the supports realize: M = dual(M_C) with
// rho_{M_C}(U) = rank of gen * Y^T over F_{q^m} ("generator" reading) or the
// same built from a parity-check matrix of C ("parity-check" reading)
QMatroid code_matroid(const RankMetricCode& C, const std::string& reading);

struct Lemma62Report {
  bool ok = false;
  std::string reading;          // reading under which the support identity held
  long subcodes = 0;            // subspaces of C enumerated
  long cycle_count = 0;         // q-cycles of M, zero space included
  bool supports_match = false;  // {supp(D) : D subcode} == {q-cycles of M}
  bool nullity_match = false;   // dim D_U == eta_M(U) and supp(D_U) == U
};

// tries the generator reading first and falls back to the parity-check
// reading; budget k <= 4, m <= 4, n <= 4
Lemma62Report verify_lemma62(const RankMetricCode& C);

struct WeightsReport {
  std::vector<int> by_subcodes;  // d_1..d_k, minimum support dimensions
  std::vector<int> by_cycles;    // minimum dimension of a nullity-r cycle
  std::string reading;
  bool agree = false;
};

// computes d_r by both routes; throws if they disagree or are not monotone
WeightsReport generalized_rank_weights(const RankMetricCode& C);

}  // namespace qmat
