#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qmat/linalg.hpp"

using namespace qmat;

TEST_CASE("vector packing and lex order") {
  Vector v = vec_from({1, 0, 2, 3});
  CHECK(v.get(0) == 1);
  CHECK(v.get(1) == 0);
  CHECK(v.get(2) == 2);
  CHECK(v.get(3) == 3);
  CHECK(vec_coords(v, 4) == std::vector<int>{1, 0, 2, 3});
  // raw comparison is lex with coordinate 0 most significant
  CHECK(vec_from({0, 1, 1}) < vec_from({1, 0, 0}));
  CHECK(vec_from({1, 0, 0}) < vec_from({1, 0, 1}));
  CHECK(vec_from({0, 0, 2}) < vec_from({0, 1, 0}));
  CHECK(leading_index(vec_from({0, 0, 3, 1}), 4) == 2);
  CHECK(leading_index(Vector{}, 4) == 4);
}

TEST_CASE("vector arithmetic") {
  Field F = make_field(3);
  Vector a = vec_from({1, 2, 0}), b = vec_from({2, 2, 1});
  CHECK(vec_add(a, b, F, 3) == vec_from({0, 1, 1}));
  CHECK(vec_scale(2, a, F, 3) == vec_from({2, 1, 0}));
  CHECK(vec_dot(a, b, F, 3) == 0);  // 1*2 + 2*2 = 6 = 0 mod 3
  CHECK(vec_dot(a, a, F, 3) == 2);
}

TEST_CASE("rref canonical form") {
  Field F = make_field(3);
  // same span, different generators
  Subspace s1 = rref_of({vec_from({1, 2, 1}), vec_from({0, 1, 1})}, 3, F);
  Subspace s2 = rref_of({vec_from({2, 1, 2}), vec_from({1, 0, 2}), vec_from({2, 2, 0})}, 3, F);
  CHECK(s1.dim() == 2);
  CHECK(s1 == s2);
  CHECK(profile(s1) == std::vector<int>{0, 1});
  // pivot columns are cleared: row 0 has 0 in column 1
  CHECK(s1.rows[0].get(1) == 0);
  CHECK(rref_of({}, 3, F) == zero_space(3));
  CHECK(rref_of({Vector{}}, 3, F).dim() == 0);
  CHECK(full_space(3).dim() == 3);
}

TEST_CASE("randomized span invariants over several fields") {
  std::mt19937_64 rng(12345);
  for (int q : {2, 3, 4, 5}) {
    Field F = make_field(q);
    for (int n : {1, 3, 5}) {
      for (int trial = 0; trial < 60; trial++) {
        int g = (int)(rng() % (n + 2));
        std::vector<Vector> gens;
        for (int i = 0; i < g; i++) {
          std::vector<int> c(n);
          for (int j = 0; j < n; j++) c[j] = (int)(rng() % q);
          gens.push_back(vec_from(c));
        }
        Subspace S = rref_of(gens, n, F);
        CHECK(S.dim() <= n);
        // every generator lies in the span; every span vector reduces to zero
        for (const Vector& v : gens) CHECK(contains(S, v, F));
        // canonical form is stable under re-generation from its own vectors
        auto vecs = all_vectors(S, F);
        CHECK((long)vecs.size() == (long)[&] { long t = 1; for (int i = 0; i < S.dim(); i++) t *= q; return t; }());
        std::shuffle(vecs.begin(), vecs.end(), rng);
        CHECK(rref_of(vecs, n, F) == S);
        // profile strictly increasing
        auto p = profile(S);
        for (size_t i = 1; i < p.size(); i++) CHECK(p[i - 1] < p[i]);
        // the last RREF row is the lex-least nonzero vector of the space
        if (S.dim() > 0) {
          Vector mn = vec_from(std::vector<int>(n, q - 1));
          bool found = false;
          for (const Vector& v : all_vectors(S, F))
            if (!v.is_zero() && (!found || v < mn)) { mn = v; found = true; }
          CHECK(min_nonzero_vector(S) == mn);
        }
      }
    }
  }
}

TEST_CASE("sum, intersection, complement dimensions") {
  std::mt19937_64 rng(777);
  for (int q : {2, 3, 4}) {
    Field F = make_field(q);
    int n = 4;
    auto random_space = [&]() {
      int g = (int)(rng() % (n + 1));
      std::vector<Vector> gens;
      for (int i = 0; i < g; i++) {
        std::vector<int> c(n);
        for (int j = 0; j < n; j++) c[j] = (int)(rng() % q);
        gens.push_back(vec_from(c));
      }
      return rref_of(gens, n, F);
    };
    for (int trial = 0; trial < 80; trial++) {
      Subspace a = random_space(), b = random_space();
      Subspace s = sum(a, b, F), i = intersect(a, b, F);
      CHECK(s.dim() + i.dim() == a.dim() + b.dim());
      CHECK(contains(s, a, F));
      CHECK(contains(s, b, F));
      CHECK(contains(a, i, F));
      CHECK(contains(b, i, F));
      // intersection is exactly the common vectors
      for (const Vector& v : all_vectors(a, F))
        CHECK(contains(i, v, F) == contains(b, v, F));

      Subspace ac = orthogonal_complement(a, F);
      CHECK(ac.dim() == n - a.dim());
      CHECK(orthogonal_complement(ac, F) == a);
      for (const Vector& u : a.rows)
        for (const Vector& w : ac.rows) CHECK(vec_dot(u, w, F, n) == 0);
      // contravariance
      if (contains(a, b, F)) CHECK(contains(orthogonal_complement(b, F), ac, F));
    }
  }
}

TEST_CASE("subspace order on lines of F_2^2") {
  Field F = make_field(2);
  Subspace e2 = rref_of({vec_from({0, 1})}, 2, F);
  Subspace e1 = rref_of({vec_from({1, 0})}, 2, F);
  Subspace d = rref_of({vec_from({1, 1})}, 2, F);
  CHECK(subspace_less(e2, e1));
  CHECK(subspace_less(e1, d));
  CHECK(subspace_less(e2, d));
  CHECK(!subspace_less(d, e2));
  CHECK(!subspace_less(e1, e1));
}

TEST_CASE("subspace order is total on same-dimension spaces") {
  Field F = make_field(2);
  int n = 4;
  // all 2-dim subspaces of F_2^4 via brute force over vector pairs
  std::set<std::vector<uint64_t>> seen;
  std::vector<Subspace> planes;
  for (uint64_t x = 1; x < 16; x++)
    for (uint64_t y = x + 1; y < 16; y++) {
      std::vector<int> cx(n), cy(n);
      for (int i = 0; i < n; i++) { cx[i] = (int)((x >> i) & 1); cy[i] = (int)((y >> i) & 1); }
      Subspace s = rref_of({vec_from(cx), vec_from(cy)}, n, F);
      if (s.dim() != 2) continue;
      std::vector<uint64_t> key;
      for (auto& r : s.rows) key.push_back(r.raw);
      if (seen.insert(key).second) planes.push_back(s);
    }
  CHECK(planes.size() == 35);
  std::sort(planes.begin(), planes.end(),
            [](const Subspace& a, const Subspace& b) { return subspace_less(a, b); });
  for (size_t i = 1; i < planes.size(); i++) {
    CHECK(subspace_less(planes[i - 1], planes[i]));
    CHECK(!subspace_less(planes[i], planes[i - 1]));
  }
  // least plane contains the two smallest nonzero vectors (0001 and 0010)
  CHECK(contains(planes[0], vec_from({0, 0, 0, 1}), F));
  CHECK(contains(planes[0], vec_from({0, 0, 1, 0}), F));
}
