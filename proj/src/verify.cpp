#include "qmat/verify.hpp"

#include "qmat/euler.hpp"

namespace qmat {

namespace {

// one named check: count it, and record a failure message if it is false
void expect(VerifyResult& R, bool ok, const std::string& what) {
  R.checks++;
  if (!ok) R.failures.push_back(what);
}

mpz_class eval_poly(const std::vector<mpz_class>& coeff, long t) {
  mpz_class v = 0;
  for (size_t i = coeff.size(); i-- > 0;) v = v * t + coeff[i];
  return v;
}

// inner bracket of the closed formula: sum_j (-1)^{n+i+j-1} q^binom(n-j,2) [l j]_q
mpz_class formula_bracket(int n, int q, int i, int l) {
  mpz_class s = 0;
  for (int j = 0; j <= l; j++) {
    mpz_class term = mpz_pow_int(q, (n - j) * (n - j - 1) / 2) *
                     gaussian_binomial(l, j, q);
    s += ((n + i + j - 1) % 2 == 0) ? term : -term;
  }
  return s;
}

}  // namespace

std::string VerifyResult::summary() const {
  std::string s = name + ": " + (ok() ? "pass" : "FAIL") + " (" +
                  std::to_string(checks) + " checks";
  if (!ok()) s += ", " + std::to_string(failures.size()) + " failures";
  s += ")";
  return s;
}

VerifyResult verify_example47() {
  VerifyResult R{"example47", 0, {}};
  QMatroid M = from_representation(2, 2, 3, {{0, 0, 1}});
  ChainCensus c = chain_census(M);
  EulerFormula F = euler_formula(M);
  expect(R, c.chi_f == 3, "chi_census != 3");
  expect(R, F.chi == 3, "chi_formula != 3");
  expect(R, F.chi_collapsed == 3, "collapsed formula != 3");
  expect(R, F.mu_bar_value == 0, "mu_bar != 0");
  expect(R, F.lambda.lambda[1][2] == 3, "lambda_{1,2} != 3");
  expect(R, F.lambda.lambda[2][1] == 3, "lambda_{2,1} != 3");
  expect(R, F.lambda.lambda[3][1] == 1, "lambda_{3,1} != 1");
  // the expansion 3(-8+6-1)+3(8-2)-1(8-2) = 3, bracket by bracket
  mpz_class b12 = formula_bracket(3, 2, 1, 2);
  mpz_class b21 = formula_bracket(3, 2, 2, 1);
  mpz_class b31 = formula_bracket(3, 2, 3, 1);
  expect(R, b12 == -8 + 6 - 1, "bracket (i=1,l=2) != -8+6-1");
  expect(R, b21 == 8 - 2, "bracket (i=2,l=1) != 8-2");
  expect(R, b31 == -(8 - 2), "bracket (i=3,l=1) != -(8-2)");
  expect(R, 3 * b12 + 3 * b21 + 1 * b31 == 3, "assembled expansion != 3");
  return R;
}

VerifyResult verify_example45_family() {
  VerifyResult R{"example45", 0, {}};
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4},
                                                      {3, 3}, {3, 4}}) {
    QMatroid M = uniform_qmatroid(n - 2, n, q);
    mpz_class geom = 0;
    for (int t = 0; t <= n - 2; t++) geom += mpz_pow_int(q, t);
    mpz_class want = geom * mpz_pow_int(q, (n - 1) * (n - 2) / 2);
    if (n % 2 == 0) want = -want;
    ChainCensus c = chain_census(M);
    expect(R, c.chi_f == want, M.name + ": chi != closed form");
    if (q == 2 && n == 3) expect(R, c.chi_f == 6, "U(1,3;q=2): chi != 6");
    if (q == 2 && n == 4) expect(R, c.chi_f == -56, "U(2,4;q=2): chi != -56");
  }
  return R;
}

VerifyResult verify_theorem42(const QBattery& B) {
  VerifyResult R{"theorem42", 0, {}};
  expect(R, (long)B.members.size() >= 40, "battery smaller than 40");
  expect(R, B.uniforms == 28, "uniform sweep is not 28 members");
  expect(R, B.representables >= 10, "fewer than 10 representable members");
  expect(R, B.tables >= 5, "fewer than 5 table members");
  for (const QMatroid& M : B.members) {
    ChainCensus c = chain_census(M);
    EulerFormula F = euler_formula(M);
    expect(R, c.chi_f == F.chi, M.name + ": formula != census");
    expect(R, c.chi_f == c.chi_d, M.name + ": f-route != d-route");
    expect(R, F.chi == F.chi_collapsed, M.name + ": collapsed form differs");
  }
  return R;
}

VerifyResult verify_remark46() {
  VerifyResult R{"remark46", 0, {}};
  for (int q : {2, 3})
    for (int n = 1; n <= 4; n++)
      for (int k = 0; k <= n; k++)
        expect(R, check_gpr_uniform_formula(k, n, q),
               "U(" + std::to_string(k) + "," + std::to_string(n) +
                   ";q=" + std::to_string(q) + "): closed form fails");
  return R;
}

VerifyResult verify_lemma41() {
  VerifyResult R{"lemma41", 0, {}};
  for (int q : {2, 3})
    for (int n = 1; n <= 4; n++) {
      Lemma41 L = lemma41_sums(n, q);
      expect(R, L.ok, "n=" + std::to_string(n) + ",q=" + std::to_string(q) +
                          ": five sums disagree");
    }
  return R;
}

VerifyResult verify_homology(const QBattery& B) {
  VerifyResult R{"homology", 0, {}};
  for (const QMatroid& M : B.members) {
    ChainCensus c = chain_census(M);
    RestrictionReport rr = restriction_fixed_chains(M);
    expect(R, rr.shelling_ok, M.name + ": chain order is not a shelling");
    expect(R, abs(c.chi_f) == rr.count,
           M.name + ": fixed chains != |chi|");
    expect(R, rr.homology_degree == M.r - 1, M.name + ": degree != rank-1");
    ChiZero z = chi_zero_characterization(M);
    expect(R, z.chi_is_zero == z.is_free,
           M.name + ": chi = 0 does not match freeness");
    expect(R, (c.chi_f == 0) == z.is_free,
           M.name + ": census zero-ness does not match freeness");
  }
  return R;
}

VerifyResult verify_theorem32(const ClassicalBattery& B) {
  VerifyResult R{"theorem32", 0, {}};
  expect(R, (long)B.members.size() >= 100, "battery smaller than 100");
  for (const ClassicalMatroid& M : B.members) {
    Theorem32 T = theorem32_check(M);
    expect(R, T.holds, M.name + ": chi != (-1)^{r-1} mu_bar");
    if (has_coloop(M))
      expect(R, T.chi == 0, M.name + ": coloop but chi != 0");
    ChainProof P = chain_proof_check(M);
    expect(R, P.matches_face, M.name + ": chain route != face route");
  }
  for (int n = 1; n <= 10; n++)
    expect(R, lemma36_sums(n).ok, "chain sum constants fail at n=" + std::to_string(n));
  return R;
}

VerifyResult verify_crosscut(const QBattery& Q, const ClassicalBattery& C) {
  VerifyResult R{"crosscut", 0, {}};
  for (const QMatroid& M : Q.members) {
    CycleLattice L = build_cycle_lattice(M);
    if (L.nullity[L.top()] < 2) continue;
    mpz_class mu = mobius_bottom_up(L);
    expect(R, mu == mobius_top_down(L), M.name + ": recursions disagree");
    expect(R, rota_crosscut(L).alternating == mu,
           M.name + ": crosscut != recursion");
  }
  for (const ClassicalMatroid& M : C.members) {
    CycleLattice L = build_classical_cycle_lattice(M);
    if (L.nullity[L.top()] < 2) continue;
    mpz_class mu = mobius_bottom_up(L);
    expect(R, mu == mobius_top_down(L), M.name + ": recursions disagree");
    expect(R, rota_crosscut(L).alternating == mu,
           M.name + ": crosscut != recursion");
  }
  return R;
}

VerifyResult verify_codes() {
  VerifyResult R{"codes", 0, {}};
  std::vector<RankMetricCode> battery = code_battery();
  expect(R, battery.size() >= 5, "fewer than 5 codes");
  for (const RankMetricCode& C : battery) {
    Lemma62Report L = verify_lemma62(C);
    expect(R, L.ok, C.name + ": support lattice identity fails");
    expect(R, L.supports_match, C.name + ": support sets differ");
    expect(R, L.nullity_match, C.name + ": nullity grading differs");
    try {
      WeightsReport W = generalized_rank_weights(C);
      expect(R, W.agree, C.name + ": routes disagree");
    } catch (const std::exception& e) {
      expect(R, false, C.name + ": " + e.what());
    }
  }
  WeightsReport W = generalized_rank_weights(make_code(2, 2, 2, {{1, 2}}));
  expect(R, W.by_subcodes == std::vector<int>{2} && W.by_cycles == std::vector<int>{2},
         "(1,alpha) over F_4: d != (2)");
  return R;
}

VerifyResult verify_basis_intersection(const QBattery& B) {
  VerifyResult R{"basis-intersection", 0, {}};
  for (const QMatroid& M : B.members) {
    if (M.r == 0 || M.r == M.n()) continue;
    expect(R, basis_intersection(M).dim() == 0,
           M.name + ": basis intersection is nonzero");
    expect(R, chain_census(M).chi_f != 0, M.name + ": chi = 0 despite 0 < r < n");
  }
  return R;
}

VerifyResult verify_qbinomial() {
  VerifyResult R{"qbinomial", 0, {}};
  for (int q : {2, 3, 4})
    for (int n = 1; n <= 8; n++) {
      auto [lhs, rhs] = q_binomial_theorem_lhs_rhs(n, q);
      expect(R, lhs == rhs, "coefficients differ at n=" + std::to_string(n) +
                                ",q=" + std::to_string(q));
      for (long t : {0L, 1L, 2L, (long)q})
        expect(R, eval_poly(lhs, t) == eval_poly(rhs, t),
               "values differ at n=" + std::to_string(n) + ",q=" +
                   std::to_string(q) + ",t=" + std::to_string(t));
    }
  for (int l = 1; l <= 12; l++) {
    mpz_class s = 0;
    for (int j = 0; j <= l; j++) s += (j % 2 == 0) ? binom(l, j) : -binom(l, j);
    expect(R, s == 0, "alternating binomial sum != 0 at l=" + std::to_string(l));
  }
  return R;
}

std::vector<VerifyResult> verify_all(unsigned seed) {
  QBattery Q = q_battery();
  ClassicalBattery C = classical_battery(seed);
  return {verify_example47(),  verify_example45_family(),
          verify_theorem42(Q), verify_remark46(),
          verify_lemma41(),    verify_homology(Q),
          verify_theorem32(C), verify_crosscut(Q, C),
          verify_codes(),      verify_basis_intersection(Q),
          verify_qbinomial()};
}

std::vector<std::string> battery_names() {
  return {"example47", "example45", "theorem42",          "remark46",
          "lemma41",   "homology",  "theorem32",          "crosscut",
          "codes",     "basis-intersection", "qbinomial", "all"};
}

VerifyResult run_named_battery(const std::string& name, unsigned seed) {
  if (name == "example47") return verify_example47();
  if (name == "example45") return verify_example45_family();
  if (name == "theorem42") return verify_theorem42(q_battery());
  if (name == "remark46") return verify_remark46();
  if (name == "lemma41") return verify_lemma41();
  if (name == "homology") return verify_homology(q_battery());
  if (name == "theorem32") return verify_theorem32(classical_battery(seed));
  if (name == "crosscut") return verify_crosscut(q_battery(), classical_battery(seed));
  if (name == "codes") return verify_codes();
  if (name == "basis-intersection" || name == "lemma54")
    return verify_basis_intersection(q_battery());
  if (name == "qbinomial") return verify_qbinomial();
  if (name == "all") {
    VerifyResult all{"all", 0, {}};
    for (const VerifyResult& r : verify_all(seed)) {
      all.checks += r.checks;
      for (const std::string& f : r.failures)
        all.failures.push_back(r.name + ": " + f);
    }
    return all;
  }
  throw std::invalid_argument("unknown battery \"" + name + "\"");
}

}  // namespace qmat
