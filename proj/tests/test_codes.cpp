#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmat/codes.hpp"

using namespace qmat;

// F_4 indices: 0, 1, alpha = 2, alpha + 1 = 3

TEST_CASE("construction guards") {
  CHECK_NOTHROW(make_code(2, 2, 2, {{1, 2}}));
  CHECK_THROWS(make_code(2, 2, 2, {{1, 2}, {2, 3}}));  // row 2 = alpha * row 1
  CHECK_THROWS(make_code(2, 3, 2, {{1, 0}, {0, 7}, {1, 7}}));  // dependent rows
  CHECK_THROWS(make_code(2, 5, 2, {{1, 0}}));  // q^m = 32 over the cap
  CHECK_THROWS(make_code(2, 2, 2, {{1, 4}}));  // entry outside F_4
  CHECK_NOTHROW(make_code(3, 2, 2, {{1, 3}}));  // F_9
}

TEST_CASE("supports of codewords") {
  RankMetricCode C = make_code(2, 2, 3, {{0, 0, 1}});
  CHECK(support_of_vector(C, {0, 0, 0}) == zero_space(3));
  Subspace s = support_of_vector(C, {0, 0, 1});
  CHECK(s.dim() == 1);
  CHECK(s == rref_of({vec_from({0, 0, 1})}, 3, C.Fq));

  // scaling by a nonzero scalar of F_q leaves the support unchanged
  RankMetricCode D = make_code(3, 2, 2, {{1, 3}});
  std::vector<int> x = {4, 7};
  for (int lam = 1; lam < 3; lam++) {
    std::vector<int> lx = {D.Fqm.mul(D.emb.iota[lam], 4), D.Fqm.mul(D.emb.iota[lam], 7)};
    CHECK(support_of_vector(D, lx) == support_of_vector(D, x));
  }

  // the expansion of (1, alpha) over the basis {1, alpha} is the identity
  RankMetricCode E = make_code(2, 2, 2, {{1, 2}});
  CHECK(support_of_vector(E, {1, 2}) == full_space(2));
}

TEST_CASE("subcode supports do not depend on the generating set") {
  RankMetricCode C = make_code(2, 2, 3, {{1, 0, 2}, {0, 1, 3}});
  std::vector<int> a = {1, 0, 2}, b = {0, 1, 3};
  Subspace s = support_of_subcode(C, {a, b});
  // mix the generators over F_4: {a + alpha b, b}
  std::vector<int> mixed(3);
  for (int j = 0; j < 3; j++) mixed[j] = C.Fqm.add(a[j], C.Fqm.mul(2, b[j]));
  CHECK(support_of_subcode(C, {mixed, b}) == s);
  CHECK(support_of_subcode(C, {a, b, mixed}) == s);
  CHECK(support_of_subcode(C, {}) == zero_space(3));
}

TEST_CASE("support identity and the weights of the (1, alpha) code") {
  RankMetricCode C = make_code(2, 2, 2, {{1, 2}}, "C_(1,a)");
  Lemma62Report L = verify_lemma62(C);
  CHECK(L.ok);
  CHECK(L.reading == "generator");
  CHECK(L.subcodes == 2);     // 0 and C
  CHECK(L.cycle_count == 2);  // zero space and F_2^2
  CHECK(L.supports_match);
  CHECK(L.nullity_match);

  WeightsReport W = generalized_rank_weights(C);
  CHECK(W.agree);
  CHECK(W.by_subcodes == std::vector<int>{2});
  CHECK(W.by_cycles == std::vector<int>{2});
}

TEST_CASE("identity codes have d_r = r") {
  for (int n = 1; n <= 3; n++) {
    std::vector<std::vector<int>> I(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; i++) I[i][i] = 1;
    RankMetricCode C = make_code(2, 2, n, I);
    CAPTURE(n);
    Lemma62Report L = verify_lemma62(C);
    CHECK(L.ok);
    CHECK(L.reading == "generator");
    WeightsReport W = generalized_rank_weights(C);
    std::vector<int> expect;
    for (int r = 1; r <= n; r++) expect.push_back(r);
    CHECK(W.by_subcodes == expect);
    CHECK(W.by_cycles == expect);
  }
}

TEST_CASE("battery of small codes") {
  std::vector<RankMetricCode> codes = {
      make_code(2, 2, 3, {{0, 0, 1}}),            // degenerate single row
      make_code(2, 2, 3, {{1, 0, 2}, {0, 1, 3}}),
      make_code(3, 2, 2, {{1, 3}}),
      make_code(2, 3, 3, {{1, 2, 4}}),            // F_8
      make_code(2, 2, 4, {{1, 0, 2, 3}, {0, 1, 1, 2}}),
      make_code(2, 2, 4, {{1, 0, 0, 2}, {0, 1, 0, 3}, {0, 0, 1, 1}}),
  };
  for (const RankMetricCode& C : codes) {
    CAPTURE(C.name);
    Lemma62Report L = verify_lemma62(C);
    CHECK(L.ok);
    WeightsReport W = generalized_rank_weights(C);
    CHECK(W.agree);
    REQUIRE((int)W.by_subcodes.size() == C.k);
    for (int r = 1; r < C.k; r++) CHECK(W.by_subcodes[r] >= W.by_subcodes[r - 1]);
    // d_k is the dimension of the support of the whole code
    Subspace top = support_of_subcode(C, C.gen);
    CHECK(W.by_subcodes[C.k - 1] == top.dim());
  }

  // frozen spot values; the second code holds (1,1,1) = row1 + row2, a
  // codeword of rank weight 1
  CHECK(generalized_rank_weights(codes[0]).by_subcodes == std::vector<int>{1});
  CHECK(generalized_rank_weights(codes[1]).by_subcodes == std::vector<int>{1, 3});
  CHECK(generalized_rank_weights(codes[2]).by_subcodes == std::vector<int>{2});
}

TEST_CASE("code matroid readings") {
  RankMetricCode C = make_code(2, 2, 2, {{1, 2}});
  QMatroid Mg = code_matroid(C, "generator");
  CHECK(Mg.r == 1);  // dual of U(1,2) is U(1,2)
  CHECK(Mg.eta(Mg.G->full_id()) == 1);
  QMatroid Mp = code_matroid(C, "parity-check");
  CHECK(!axiom_violation(Mp));
  CHECK_THROWS(code_matroid(C, "rowspace"));

  RankMetricCode Z = make_code(2, 2, 2, {});
  Lemma62Report L = verify_lemma62(Z);
  CHECK(L.ok);
  CHECK(L.subcodes == 1);
  CHECK(L.cycle_count == 1);
  CHECK(generalized_rank_weights(Z).by_subcodes.empty());
}
