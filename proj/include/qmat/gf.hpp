#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qmat {

// Finite field F_q with q = p^e, q <= cap (default 16). Elements are indices
// 0..q-1; the base-p digits of an index are the polynomial coefficients of
// the element, constant term first. So 0 and 1 are the field's zero and one,
// the prime subfield occupies indices 0..p-1, and for prime q the index is
// the residue itself. The element order used everywhere is index order.
struct Field {
  int q = 0, p = 0, e = 1;
  std::vector<int> modulus;  // e+1 coefficients, constant first; empty for prime q
  std::vector<uint8_t> add_t, mul_t, neg_t, inv_t;

  int add(int a, int b) const { return add_t[a * q + b]; }
  int sub(int a, int b) const { return add_t[a * q + neg_t[b]]; }
  int mul(int a, int b) const { return mul_t[a * q + b]; }
  int neg(int a) const { return neg_t[a]; }
  int inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_t[a];
  }
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, long k) const;
};

// Validates that q is a prime power within the cap and builds the tables.
// Non-prime q use fixed moduli: x^2+x+1 (4), x^3+x+1 (8), x^2+2x+2 (9),
// x^4+x+1 (16).
Field make_field(int q, int cap = 16);

// Gaussian binomial [n k]_q as an exact integer; q = 1 degenerates to the
// ordinary binomial coefficient. Out-of-range k gives 0.
mpz_class gaussian_binomial(int n, int k, int q);

mpz_class binom(long n, long k);
mpz_class mpz_pow_int(long base, unsigned long exp);

// Both sides of the q-binomial theorem
//   prod_{k=0}^{n-1} (1 - q^k t) = sum_{k=0}^{n} (-1)^k q^{k(k-1)/2} [n k]_q t^k
// as coefficient vectors in t of length n+1.
std::pair<std::vector<mpz_class>, std::vector<mpz_class>>
q_binomial_theorem_lhs_rhs(int n, int q);

// Embedding of F_q into F_{q^m}; both fields use the representation above.
// iota maps sub-field indices to big-field indices. phi writes a big-field
// element as its coordinate row (c_0,...,c_{m-1}) over F_q in the basis
// {1, beta, ..., beta^{m-1}}, beta the index-p element of the big field.
struct Embedding {
  Field sub, sup;
  int m = 1;
  std::vector<int> iota;               // size sub.q
  std::vector<std::vector<int>> phi;   // size sup.q, rows of length m
  int from_coords(const std::vector<int>& c) const;  // inverse of phi
};

Embedding make_embedding(const Field& sub, const Field& sup);

}  // namespace qmat
