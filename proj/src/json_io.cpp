#include "qmat/json_io.hpp"

#include <fstream>
#include <sstream>

namespace qmat {

namespace {

using nlohmann::json;

std::string s(const mpz_class& x) { return x.get_str(); }

json mpz_array(const std::vector<mpz_class>& v) {
  json a = json::array();
  for (const mpz_class& x : v) a.push_back(s(x));
  return a;
}

std::string vec_str(Vector v, int n) {
  std::string out;
  for (int i = 0; i < n; i++) {
    if (i) out += ',';
    out += std::to_string(v.get(i));
  }
  return out;
}

std::string mask_str(int mask) {
  std::string out = "{";
  bool first = true;
  for (int e = 0; mask >> e; e++)
    if (mask >> e & 1) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
  return out + "}";
}

int require_int(const json& j, const char* key) {
  if (!j.contains(key)) throw std::runtime_error(std::string("missing key \"") + key + "\"");
  if (!j.at(key).is_number_integer())
    throw std::runtime_error(std::string("key \"") + key + "\" must be an integer");
  return j.at(key).get<int>();
}

std::vector<std::vector<int>> require_matrix(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw std::runtime_error(std::string("missing array \"") + key + "\"");
  std::vector<std::vector<int>> rows;
  for (const json& r : j.at(key)) rows.push_back(r.get<std::vector<int>>());
  return rows;
}

// Hasse edges of the lattice: y is covered by x when nothing sits between
std::vector<std::pair<int, int>> hasse_edges(const CycleLattice& L) {
  std::vector<std::pair<int, int>> edges;
  for (int x = 1; x < L.size(); x++) {
    const auto& sb = L.strictly_below[x];
    for (int y : sb) {
      bool covered = false;
      for (int z : sb) {
        if (z <= y) continue;
        if (std::binary_search(L.strictly_below[z].begin(), L.strictly_below[z].end(), y)) {
          covered = true;
          break;
        }
      }
      if (!covered) edges.push_back({y, x});
    }
  }
  return edges;
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); i++) {
      if (text[i] == '\n') { line++; col = 1; } else col++;
    }
    throw std::runtime_error(path + ":" + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + e.what());
  }
}

QMatroid qmatroid_from_json(const json& j, long budget) {
  int q = require_int(j, "q");
  int n = require_int(j, "n");
  if (q < 2) throw std::runtime_error("q-matroid needs q >= 2 (q = 1 is the classical kind)");
  std::string kind = j.value("kind", "");
  QMatroid M;
  if (kind == "uniform") {
    M = uniform_qmatroid(require_int(j, "k"), n, q, budget);
  } else if (kind == "representable") {
    M = from_representation(q, j.value("m", 1), n, require_matrix(j, "matrix"), budget);
  } else if (kind == "table") {
    std::vector<int> table = j.at("table").get<std::vector<int>>();
    M = from_rank_table(n, q, table, budget);
  } else {
    throw std::runtime_error("unknown q-matroid kind \"" + kind + "\"");
  }
  if (j.contains("name")) M.name = j.at("name").get<std::string>();
  return M;
}

ClassicalMatroid classical_from_json(const json& j) {
  if (require_int(j, "q") != 1)
    throw std::runtime_error("classical matroid files use the sentinel q = 1");
  std::string kind = j.value("kind", "");
  ClassicalMatroid M;
  if (kind == "uniform") {
    M = uniform_matroid(require_int(j, "k"), require_int(j, "n"));
  } else if (kind == "table") {
    M = matroid_from_rank_table(require_int(j, "n"), j.at("table").get<std::vector<int>>());
  } else if (kind == "matrix") {
    M = matroid_from_matrix(make_field(require_int(j, "field")), require_matrix(j, "matrix"));
  } else if (kind == "graphic") {
    std::vector<std::pair<int, int>> edges;
    for (const json& e : j.at("edges")) {
      auto p = e.get<std::vector<int>>();
      if (p.size() != 2) throw std::runtime_error("edges must be [u,v] pairs");
      edges.push_back({p[0], p[1]});
    }
    M = graphic_matroid(require_int(j, "vertices"), edges);
  } else {
    throw std::runtime_error("unknown classical kind \"" + kind + "\"");
  }
  if (j.contains("name")) M.name = j.at("name").get<std::string>();
  return M;
}

RankMetricCode code_from_json(const json& j) {
  std::string basis = j.value("basis", "default");
  if (basis != "default")
    throw std::runtime_error("only the default power basis is supported");
  auto mat = require_matrix(j, "matrix");
  if (j.contains("k") && require_int(j, "k") != (int)mat.size())
    throw std::runtime_error("k does not match the matrix row count");
  return make_code(require_int(j, "q"), require_int(j, "m"), require_int(j, "n"),
                   mat, j.value("name", ""));
}

json euler_report_json(const QMatroid& M) {
  ChainCensus c = chain_census(M);
  EulerFormula F = euler_formula(M);
  RestrictionReport R = restriction_fixed_chains(M);
  json j;
  j["name"] = M.name;
  j["q"] = M.q();
  j["n"] = M.n();
  j["rank"] = M.r;
  j["chi_census"] = s(c.chi_f);
  j["chi_formula"] = s(F.chi);
  j["f"] = mpz_array(c.f);
  j["d"] = mpz_array(c.d);
  j["s"] = mpz_array(c.s);
  json lam = json::array();
  for (int i = 1; i <= F.lambda.s; i++)
    for (int l = 0; l <= F.lambda.n; l++)
      if (F.lambda.lambda[i][l] != 0)
        lam.push_back({{"i", i}, {"l", l}, {"count", s(F.lambda.lambda[i][l])}});
  j["lambda"] = lam;
  j["mu_bar"] = s(F.mu_bar_value);
  j["shelling_ok"] = R.shelling_ok;
  mpz_class mag = abs(c.chi_f);
  if (R.shelling_ok && mag == R.count)
    j["homology"] = {{"degree", R.homology_degree}, {"rank", R.count}};
  else
    j["homology"] = nullptr;
  return j;
}

json classical_report_json(const ClassicalMatroid& M) {
  FaceCensus face = face_census(M);
  ChainProof chain = chain_proof_check(M);
  Theorem32 T = theorem32_check(M);
  json j;
  j["name"] = M.name;
  j["n"] = M.n;
  j["rank"] = M.r;
  j["f"] = mpz_array(face.f);
  j["d"] = mpz_array(face.d);
  j["chi_face"] = s(face.chi_f);
  j["chi_chain"] = s(chain.chi_chain);
  j["chain_matches_face"] = chain.matches_face;
  j["mu"] = s(T.mu);
  j["mu_bar"] = s(T.mu_bar);
  j["theorem_holds"] = T.holds;
  j["crosscut_checked"] = T.crosscut_checked;
  return j;
}

json weights_report_json(const RankMetricCode& C) {
  WeightsReport W = generalized_rank_weights(C);
  Lemma62Report L = verify_lemma62(C);
  json j;
  j["name"] = C.name;
  j["q"] = C.q;
  j["m"] = C.m;
  j["n"] = C.n;
  j["k"] = C.k;
  j["reading"] = W.reading;
  j["lemma62_ok"] = L.ok;
  j["d"] = W.by_subcodes;
  json certs = json::array();
  if (C.k > 0) {
    QMatroid M = code_matroid(C, W.reading);
    auto grades = cycles_by_nullity(M);
    for (int r = 1; r <= C.k; r++) {
      int best = -1;
      for (int id : grades[r])
        if (best < 0 || M.G->dim_of(id) < M.G->dim_of(best)) best = id;
      json rows = json::array();
      for (const Vector& v : M.G->at(best).rows) rows.push_back(vec_str(v, C.n));
      certs.push_back({{"r", r}, {"dim", M.G->dim_of(best)}, {"cycle", rows}});
    }
  }
  j["certificates"] = certs;
  return j;
}

json mobius_report_json(const QMatroid& M) {
  CycleLattice L = build_cycle_lattice(M);
  Crosscut X = rota_crosscut(L);
  json j;
  j["name"] = M.name;
  j["nodes"] = L.size();
  j["atoms"] = (int)L.atoms.size();
  j["mu"] = s(mobius_bottom_up(L));
  j["mu_bar"] = s(mu_bar(M));
  j["crosscut_lambda"] = mpz_array(X.lambda);
  j["span_join_mismatches"] = L.span_join_mismatches;
  return j;
}

json mobius_report_json(const ClassicalMatroid& M) {
  CycleLattice L = build_classical_cycle_lattice(M);
  Crosscut X = rota_crosscut(L);
  json j;
  j["name"] = M.name;
  j["nodes"] = L.size();
  j["atoms"] = (int)L.atoms.size();
  j["mu"] = s(mobius_bottom_up(L));
  j["mu_bar"] = s(classical_mu_bar(M));
  j["crosscut_lambda"] = mpz_array(X.lambda);
  j["span_join_mismatches"] = L.span_join_mismatches;
  return j;
}

std::string lattice_dot(const QMatroid& M) {
  CycleLattice L = build_cycle_lattice(M);
  std::vector<mpz_class> mu = mobius_all(L);
  std::ostringstream out;
  out << "digraph cycles {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < L.size(); i++) {
    const Subspace& S = M.G->at(L.node_key[i]);
    out << "  n" << i << " [label=\"";
    if (S.dim() == 0) out << "0\\n";
    for (const Vector& v : S.rows) out << vec_str(v, M.n()) << "\\n";
    out << "dim " << S.dim() << ", eta " << L.nullity[i] << "\\nmu " << s(mu[i])
        << "\"];\n";
  }
  for (auto [y, x] : hasse_edges(L)) out << "  n" << y << " -> n" << x << ";\n";
  out << "}\n";
  return out.str();
}

std::string lattice_dot(const ClassicalMatroid& M) {
  CycleLattice L = build_classical_cycle_lattice(M);
  std::vector<mpz_class> mu = mobius_all(L);
  std::ostringstream out;
  out << "digraph cycles {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < L.size(); i++) {
    int mask = L.node_key[i];
    out << "  n" << i << " [label=\"" << mask_str(mask) << "\\nsize "
        << __builtin_popcount((unsigned)mask) << ", eta " << L.nullity[i]
        << "\\nmu " << s(mu[i]) << "\"];\n";
  }
  for (auto [y, x] : hasse_edges(L)) out << "  n" << y << " -> n" << x << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace qmat
