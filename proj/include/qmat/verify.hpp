#pragma once

#include "qmat/battery.hpp"

namespace qmat {

struct VerifyResult {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

// One verifier per acceptance criterion, in the published order.
VerifyResult verify_example47();            // 1: the rank-1 example, chi = 3
VerifyResult verify_example45_family();     // 2: chi(U(n-2,n)) closed form
VerifyResult verify_theorem42(const QBattery& B);          // 3: formula = census
VerifyResult verify_remark46();             // 4: uniform |chi| closed form
VerifyResult verify_lemma41();              // 5: five chain sums
VerifyResult verify_homology(const QBattery& B);           // 6: fixed chains = |chi|
VerifyResult verify_theorem32(const ClassicalBattery& B);  // 7: classical mirror
VerifyResult verify_crosscut(const QBattery& Q, const ClassicalBattery& C);  // 8
VerifyResult verify_codes();                // 9: support lattice identity and the d_r routes
VerifyResult verify_basis_intersection(const QBattery& B);  // 10
VerifyResult verify_qbinomial();            // 11: product identity and the q = 1 collapse

// every verifier over freshly built batteries, in criterion order
std::vector<VerifyResult> verify_all(unsigned seed = 1);

// verifier by battery name for the CLI; throws on unknown names
VerifyResult run_named_battery(const std::string& name, unsigned seed = 1);
std::vector<std::string> battery_names();

}  // namespace qmat
