#pragma once

#include "qmat/classical.hpp"
#include "qmat/codes.hpp"
#include "qmat/qmatroid.hpp"

namespace qmat {

// The fixed q-matroid test battery: all U(k,n) for q in {2,3} and n <= 4,
// twelve representable members over F_4/F_8 with n <= 4, and five explicit
// rank tables. Composition counts are kept for acceptance checks.
struct QBattery {
  std::vector<QMatroid> members;
  int uniforms = 0;
  int representables = 0;
  int tables = 0;
};
QBattery q_battery();

// The classical battery: all U(k,n) for n <= 7, seeded random 3 x 6 matrices
// over F_2 and F_3, and small graphic matroids (trees, cycles, K_4, and
// degenerate graphs). At least 100 members for any seed.
struct ClassicalBattery {
  std::vector<ClassicalMatroid> members;
  int uniforms = 0;
  int representables = 0;
  int graphic = 0;
};
ClassicalBattery classical_battery(unsigned seed = 1);

// Rank-metric codes with k <= 3 and m, n <= 4 over F_4, F_8 and F_9
std::vector<RankMetricCode> code_battery();

}  // namespace qmat
