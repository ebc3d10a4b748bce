#include "qmat/battery.hpp"

#include <random>
#include <stdexcept>

namespace qmat {

QBattery q_battery() {
  QBattery B;
  for (int q : {2, 3})
    for (int n = 1; n <= 4; n++)
      for (int k = 0; k <= n; k++) {
        B.members.push_back(uniform_qmatroid(k, n, q));
        B.uniforms++;
      }

  // representable members; q = 2 throughout, m = 2 is F_4 and m = 3 is F_8
  const std::vector<std::pair<int, std::vector<std::vector<int>>>> reps = {
      {2, {{1, 2}}},
      {2, {{1, 2, 3}}},
      {2, {{0, 0, 1}}},  // the rank-1 matroid with four independent lines
      {2, {{1, 0, 2}, {0, 1, 3}}},
      {2, {{1, 2, 0, 3}, {0, 1, 1, 2}}},
      {2, {{1, 0, 2, 3}}},
      {2, {{1, 1, 2, 0}, {0, 2, 1, 1}}},
      {2, {{1, 0, 0, 2}, {0, 1, 0, 3}, {0, 0, 1, 1}}},
      {3, {{1, 2, 4}}},
      {3, {{1, 2, 4, 3}}},
      {3, {{1, 0, 2}, {0, 1, 4}}},
      {3, {{1, 2, 0, 4}, {0, 1, 2, 3}}},
  };
  for (const auto& [m, mat] : reps) {
    B.members.push_back(from_representation(2, m, (int)mat[0].size(), mat));
    B.representables++;
  }

  // explicit rank tables in canonical subspace id order
  const std::vector<std::tuple<int, int, std::vector<int>>> tables = {
      // a q-loop <(0,1)> next to a free line, from the 1 x 2 matrix [1 0]
      {2, 2, {0, 0, 1, 1, 1}},
      // the four-independent-lines matroid again, entered by table
      {3, 2, {0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1}},
      // uniform tables written out literally
      {3, 2, {0, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2}},
      {2, 3, {0, 1, 1, 1, 1, 1}},
      {2, 2, {0, 0, 0, 0, 0}},
  };
  for (const auto& [n, q, table] : tables) {
    B.members.push_back(from_rank_table(n, q, table));
    B.tables++;
  }

  for (const QMatroid& M : B.members)
    if (auto v = axiom_violation(M))
      throw std::logic_error("battery member " + M.name + ": " + *v);
  return B;
}

ClassicalBattery classical_battery(unsigned seed) {
  ClassicalBattery B;
  for (int n = 1; n <= 7; n++)
    for (int k = 0; k <= n; k++) {
      B.members.push_back(uniform_matroid(k, n));
      B.uniforms++;
    }

  std::mt19937 rng(seed);
  Field F2 = make_field(2), F3 = make_field(3);
  for (int q : {2, 3})
    for (int t = 0; t < 30; t++) {
      std::vector<std::vector<int>> rows(3, std::vector<int>(6));
      for (auto& row : rows)
        for (int& x : row) x = (int)(rng() % (unsigned)q);
      B.members.push_back(matroid_from_matrix(q == 2 ? F2 : F3, rows));
      B.representables++;
    }

  const std::vector<std::pair<int, std::vector<std::pair<int, int>>>> graphs = {
      {2, {{0, 1}}},                                           // one edge
      {3, {{0, 1}, {1, 2}}},                                   // path
      {4, {{0, 1}, {0, 2}, {0, 3}}},                           // star
      {3, {{0, 1}, {1, 2}, {2, 0}}},                           // triangle
      {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}},                   // square
      {5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}},           // pentagon
      {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},   // K_4
      {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}},           // K_4 minus an edge
      {4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}},                   // triangle + pendant
      {2, {{0, 1}, {0, 1}, {0, 0}}},                           // parallel pair + self-loop
  };
  for (const auto& [v, e] : graphs) {
    B.members.push_back(graphic_matroid(v, e));
    B.graphic++;
  }

  for (const ClassicalMatroid& M : B.members)
    if (auto viol = axiom_violation(M))
      throw std::logic_error("battery member " + M.name + ": " + *viol);
  return B;
}

std::vector<RankMetricCode> code_battery() {
  return {
      make_code(2, 2, 2, {{1, 2}}, "F4 (1,a)"),
      make_code(2, 2, 3, {{0, 0, 1}}, "F4 degenerate"),
      make_code(2, 2, 3, {{1, 0, 2}, {0, 1, 3}}, "F4 [2,3]"),
      make_code(2, 2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, "F4 identity 3"),
      make_code(2, 3, 3, {{1, 2, 4}}, "F8 Gabidulin row"),
      make_code(3, 2, 2, {{1, 3}}, "F9 (1,b)"),
      make_code(2, 2, 4, {{1, 0, 2, 3}, {0, 1, 1, 2}}, "F4 [4,2]"),
      make_code(2, 2, 4, {{1, 0, 0, 2}, {0, 1, 0, 3}, {0, 0, 1, 1}}, "F4 [4,3]"),
  };
}

}  // namespace qmat
