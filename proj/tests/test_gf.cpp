#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmat/gf.hpp"

using namespace qmat;

namespace {
const int kSupported[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
}

TEST_CASE("field axioms hold exhaustively for every supported q") {
  for (int q : kSupported) {
    CAPTURE(q);
    Field F = make_field(q);
    CHECK(F.q == q);
    for (int a = 0; a < q; a++) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.mul(a, 0) == 0);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      for (int b = 0; b < q; b++) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (int c = 0; c < q; c++) {
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
    // characteristic: adding 1 to itself p times cycles through the prime subfield
    int s = 0;
    for (int i = 0; i < F.p; i++) {
      CHECK(s < F.p);  // prime subfield sits at indices 0..p-1
      s = F.add(s, 1);
    }
    CHECK(s == 0);
  }
}

TEST_CASE("non-prime fields match their fixed moduli") {
  Field F4 = make_field(4);
  // alpha = index 2 is "x"; x^2 = x+1, x(x+1) = 1
  CHECK(F4.mul(2, 2) == 3);
  CHECK(F4.mul(2, 3) == 1);
  CHECK(F4.add(2, 3) == 1);

  Field F8 = make_field(8);
  CHECK(F8.pow(2, 3) == 3);   // x^3 = x+1 -> digits (1,1,0) -> index 3
  CHECK(F8.pow(2, 7) == 1);   // multiplicative order divides 7
  CHECK(F8.mul(2, 4) == 3);   // x * x^2 = x^3

  Field F9 = make_field(9);
  CHECK(F9.pow(3, 2) == 4);   // x^2 = x+1 over F_3 -> digits (1,1) -> index 4
  CHECK(F9.add(1, 1) == 2);
  CHECK(F9.add(2, 1) == 0);

  Field F16 = make_field(16);
  CHECK(F16.pow(2, 4) == 3);  // x^4 = x+1
  CHECK(F16.pow(2, 15) == 1);
}

TEST_CASE("make_field rejects non prime powers and out-of-cap sizes") {
  CHECK_THROWS(make_field(6));
  CHECK_THROWS(make_field(12));
  CHECK_THROWS(make_field(1));
  CHECK_THROWS(make_field(17));
  CHECK_THROWS(make_field(32, 16));
  CHECK_NOTHROW(make_field(16, 16));
}

TEST_CASE("gaussian binomial frozen values") {
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(4, 2, 3) == 130);
  CHECK(gaussian_binomial(4, 1, 3) == 40);
  CHECK(gaussian_binomial(2, 1, 4) == 5);
  CHECK(gaussian_binomial(5, 2, 2) == 155);
  CHECK(gaussian_binomial(7, 3, 2) == 11811);
  CHECK(gaussian_binomial(6, 3, 2) == 1395);
  // q = 1 degenerates to binomial coefficients
  CHECK(gaussian_binomial(7, 3, 1) == 35);
  CHECK(gaussian_binomial(10, 5, 1) == 252);
  CHECK(gaussian_binomial(4, 5, 2) == 0);
  CHECK(gaussian_binomial(4, -1, 2) == 0);
}

TEST_CASE("gaussian binomial properties") {
  for (int q : {1, 2, 3, 4, 5}) {
    for (int n = 0; n <= 8; n++) {
      CHECK(gaussian_binomial(n, 0, q) == 1);
      CHECK(gaussian_binomial(n, n, q) == 1);
      for (int k = 0; k <= n; k++) {
        CAPTURE(q); CAPTURE(n); CAPTURE(k);
        CHECK(gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q));
        if (k >= 1) {
          // both q-Pascal identities
          mpz_class a = gaussian_binomial(n - 1, k - 1, q) +
                        mpz_pow_int(q, k) * gaussian_binomial(n - 1, k, q);
          mpz_class b = mpz_pow_int(q, n - k) * gaussian_binomial(n - 1, k - 1, q) +
                        gaussian_binomial(n - 1, k, q);
          CHECK(gaussian_binomial(n, k, q) == a);
          CHECK(gaussian_binomial(n, k, q) == b);
        }
      }
    }
  }
}

TEST_CASE("q-binomial theorem is a polynomial identity") {
  for (int q : {1, 2, 3, 4, 9, 16}) {
    for (int n = 0; n <= 10; n++) {
      CAPTURE(q); CAPTURE(n);
      auto [lhs, rhs] = q_binomial_theorem_lhs_rhs(n, q);
      REQUIRE(lhs.size() == rhs.size());
      for (size_t i = 0; i < lhs.size(); i++) CHECK(lhs[i] == rhs[i]);
    }
  }
}

TEST_CASE("embeddings of prime fields are literal and homomorphic") {
  Field F2 = make_field(2), F4 = make_field(4), F8 = make_field(8);
  Embedding e24 = make_embedding(F2, F4);
  CHECK(e24.m == 2);
  CHECK(e24.iota == std::vector<int>{0, 1});
  // phi in basis {1, x}: index 2 is x -> (0,1); index 3 is 1+x -> (1,1)
  CHECK(e24.phi[0] == std::vector<int>{0, 0});
  CHECK(e24.phi[1] == std::vector<int>{1, 0});
  CHECK(e24.phi[2] == std::vector<int>{0, 1});
  CHECK(e24.phi[3] == std::vector<int>{1, 1});
  for (int v = 0; v < 4; v++) CHECK(e24.from_coords(e24.phi[v]) == v);

  Embedding e28 = make_embedding(F2, F8);
  CHECK(e28.m == 3);
  for (int v = 0; v < 8; v++) {
    // base-2 digits of the index, by the representation convention
    CHECK(e28.phi[v] == std::vector<int>{v & 1, (v >> 1) & 1, (v >> 2) & 1});
  }
}

TEST_CASE("embedding F_4 into F_16") {
  Field F4 = make_field(4), F16 = make_field(16);
  Embedding e = make_embedding(F4, F16);
  CHECK(e.m == 2);
  // iota(2) must be a root of x^2+x+1 in F_16
  int r = e.iota[2];
  CHECK(F16.add(F16.add(F16.mul(r, r), r), 1) == 0);
  // iota respects both operations on all pairs (constructor verifies too)
  for (int a = 0; a < 4; a++)
    for (int b = 0; b < 4; b++) {
      CHECK(e.iota[F4.add(a, b)] == F16.add(e.iota[a], e.iota[b]));
      CHECK(e.iota[F4.mul(a, b)] == F16.mul(e.iota[a], e.iota[b]));
    }
  // phi linear over F_4: phi(iota(c) * v) = c * phi(v)
  for (int c = 0; c < 4; c++)
    for (int v = 0; v < 16; v++) {
      int cv = F16.mul(e.iota[c], v);
      for (int i = 0; i < 2; i++)
        CHECK(e.phi[cv][i] == F4.mul(c, e.phi[v][i]));
    }
}

TEST_CASE("incompatible embeddings are rejected") {
  CHECK_THROWS(make_embedding(make_field(2), make_field(9)));
  CHECK_THROWS(make_embedding(make_field(4), make_field(8)));
}
