#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qmat/json_io.hpp"
#include "qmat/verify.hpp"

using namespace qmat;

namespace {

struct Input {
  std::string file;
  std::string family;
  long budget_subspaces = 10000000;
  long budget_circuits = 1L << 22;
  std::string format = "text";
  std::string out;
};

void add_input_options(CLI::App* cmd, Input& in, bool with_dot) {
  cmd->add_option("--input", in.file, "JSON description file");
  cmd->add_option("--family", in.family,
                  "named family, e.g. uniform:q=2,k=1,n=3 (q=1 is classical)");
  cmd->add_option("--budget-subspaces", in.budget_subspaces,
                  "largest allowed subspace count");
  cmd->add_option("--budget-circuits", in.budget_circuits,
                  "largest allowed circuit count");
  cmd->add_option("--format", in.format, "output format")
      ->check(CLI::IsMember(with_dot ? std::vector<std::string>{"text", "json", "dot"}
                                     : std::vector<std::string>{"text", "json"}));
  cmd->add_option("--out", in.out, "write the report to this file");
}

// "uniform:q=2,k=1,n=3" -> kind and integer parameters
std::pair<std::string, std::map<std::string, int>> parse_family(const std::string& s) {
  size_t colon = s.find(':');
  if (colon == std::string::npos)
    throw std::runtime_error("family must look like kind:key=value,...");
  std::map<std::string, int> params;
  std::string rest = s.substr(colon + 1);
  size_t pos = 0;
  while (pos < rest.size()) {
    size_t comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    std::string item = rest.substr(pos, comma - pos);
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("family parameter \"" + item + "\" is not key=value");
    params[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
    pos = comma + 1;
  }
  return {s.substr(0, colon), params};
}

int family_param(const std::map<std::string, int>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw std::runtime_error("family needs " + key + "=...");
  return it->second;
}

// true when the input describes the q = 1 mirror
bool input_is_classical(const Input& in, nlohmann::json* file_json) {
  if (!in.family.empty()) {
    auto [kind, params] = parse_family(in.family);
    auto it = params.find("q");
    return it == params.end() || it->second == 1;
  }
  *file_json = load_json_file(in.file);
  return file_json->value("q", 2) == 1;
}

QMatroid load_qmatroid(const Input& in) {
  if (!in.family.empty()) {
    auto [kind, params] = parse_family(in.family);
    if (kind != "uniform") throw std::runtime_error("unknown family kind \"" + kind + "\"");
    return uniform_qmatroid(family_param(params, "k"), family_param(params, "n"),
                            family_param(params, "q"), in.budget_subspaces);
  }
  if (in.file.empty()) throw std::runtime_error("need --input or --family");
  return qmatroid_from_json(load_json_file(in.file), in.budget_subspaces);
}

ClassicalMatroid load_classical(const Input& in, const nlohmann::json& file_json) {
  if (!in.family.empty()) {
    auto [kind, params] = parse_family(in.family);
    if (kind != "uniform") throw std::runtime_error("unknown family kind \"" + kind + "\"");
    return uniform_matroid(family_param(params, "k"), family_param(params, "n"));
  }
  return classical_from_json(file_json);
}

void emit(const Input& in, const std::string& text) {
  if (in.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(in.out);
  if (!f) throw std::runtime_error(in.out + ": cannot write");
  f << text;
}

void check_circuit_budget(const QMatroid& M, long budget) {
  long c = (long)circuits(M).size();
  if (c > budget)
    throw std::runtime_error("circuit count " + std::to_string(c) +
                             " exceeds --budget-circuits " + std::to_string(budget));
}

int cmd_euler(const Input& in) {
  QMatroid M = load_qmatroid(in);
  check_circuit_budget(M, in.budget_circuits);
  nlohmann::json r = euler_report_json(M);
  if (in.format == "json") {
    emit(in, r.dump(2) + "\n");
    return 0;
  }
  std::string lambda;
  for (const auto& e : r["lambda"])
    lambda += " lambda[" + e["i"].dump() + "][" + e["l"].dump() + "]=" +
              e["count"].get<std::string>();
  std::string homology =
      r["homology"].is_null()
          ? "none (chain order is not a shelling here)"
          : "rank " + r["homology"]["rank"].dump() + " in degree " +
                r["homology"]["degree"].dump();
  emit(in, M.name + "\n  chi (census)  = " + r["chi_census"].get<std::string>() +
               "\n  chi (formula) = " + r["chi_formula"].get<std::string>() +
               "\n  mu_bar = " + r["mu_bar"].get<std::string>() + "\n  lambda:" +
               (lambda.empty() ? " (none)" : lambda) + "\n  homology: " + homology +
               "\n  shelling_ok: " + (r["shelling_ok"].get<bool>() ? "yes" : "no") +
               "\n");
  return 0;
}

int cmd_classical(const Input& in) {
  if (in.family.empty() && in.file.empty())
    throw std::runtime_error("need --input or --family");
  nlohmann::json file_json;
  if (!input_is_classical(in, &file_json))
    throw std::runtime_error("classical expects a q = 1 description");
  ClassicalMatroid M = load_classical(in, file_json);
  nlohmann::json r = classical_report_json(M);
  if (in.format == "json") {
    emit(in, r.dump(2) + "\n");
    return 0;
  }
  emit(in, M.name + "\n  chi (faces)  = " + r["chi_face"].get<std::string>() +
               "\n  chi (chains) = " + r["chi_chain"].get<std::string>() +
               "\n  mu = " + r["mu"].get<std::string>() + ", mu_bar = " +
               r["mu_bar"].get<std::string>() + "\n  sign identity: " +
               (r["theorem_holds"].get<bool>() ? "holds" : "FAILS") + "\n");
  return 0;
}

int cmd_weights(const Input& in) {
  if (in.file.empty()) throw std::runtime_error("weights needs --input (a code file)");
  RankMetricCode C = code_from_json(load_json_file(in.file));
  nlohmann::json r = weights_report_json(C);
  if (in.format == "json") {
    emit(in, r.dump(2) + "\n");
    return 0;
  }
  std::string d;
  for (const auto& x : r["d"]) d += (d.empty() ? "" : ", ") + x.dump();
  std::string text = C.name + "\n  reading: " + r["reading"].get<std::string>() +
                     "\n  d = (" + d + ")\n";
  for (const auto& cert : r["certificates"]) {
    text += "  d_" + cert["r"].dump() + " achieved by the cycle of dim " +
            cert["dim"].dump() + ":";
    for (const auto& row : cert["cycle"]) text += " [" + row.get<std::string>() + "]";
    text += "\n";
  }
  emit(in, text);
  return 0;
}

int cmd_mobius(const Input& in) {
  nlohmann::json file_json;
  if (input_is_classical(in, &file_json)) {
    ClassicalMatroid M = load_classical(in, file_json);
    if (in.format == "dot") {
      emit(in, lattice_dot(M));
      return 0;
    }
    nlohmann::json r = mobius_report_json(M);
    if (in.format == "json") {
      emit(in, r.dump(2) + "\n");
      return 0;
    }
    emit(in, M.name + "\n  mu = " + r["mu"].get<std::string>() + ", mu_bar = " +
                 r["mu_bar"].get<std::string>() + "\n  lattice: " +
                 r["nodes"].dump() + " cycles, " + r["atoms"].dump() + " circuits\n");
    return 0;
  }
  QMatroid M = load_qmatroid(in);
  check_circuit_budget(M, in.budget_circuits);
  if (in.format == "dot") {
    emit(in, lattice_dot(M));
    return 0;
  }
  nlohmann::json r = mobius_report_json(M);
  if (in.format == "json") {
    emit(in, r.dump(2) + "\n");
    return 0;
  }
  emit(in, M.name + "\n  mu = " + r["mu"].get<std::string>() + ", mu_bar = " +
               r["mu_bar"].get<std::string>() + "\n  lattice: " + r["nodes"].dump() +
               " cycles, " + r["atoms"].dump() + " circuits\n");
  return 0;
}

int cmd_verify(const std::string& name, unsigned seed, const Input& in) {
  std::vector<VerifyResult> results;
  if (name == "all")
    results = verify_all(seed);
  else
    results.push_back(run_named_battery(name, seed));
  std::string text;
  long failures = 0;
  for (const VerifyResult& r : results) {
    text += r.summary() + "\n";
    for (const std::string& f : r.failures) text += "    " + f + "\n";
    failures += (long)r.failures.size();
  }
  if (in.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const VerifyResult& r : results)
      j.push_back({{"name", r.name}, {"checks", r.checks}, {"failures", r.failures}});
    emit(in, j.dump(2) + "\n");
  } else {
    emit(in, text);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Euler characteristics and Mobius numbers of q-matroids"};
  app.require_subcommand(1);

  Input in;
  CLI::App* euler = app.add_subcommand("euler", "chain census, closed formula, homology");
  add_input_options(euler, in, false);
  CLI::App* classical = app.add_subcommand("classical", "the q = 1 mirror checks");
  add_input_options(classical, in, false);
  CLI::App* weights = app.add_subcommand("weights", "generalized rank weights of a code");
  add_input_options(weights, in, false);
  CLI::App* mobius = app.add_subcommand("mobius", "cycle lattice and Mobius numbers");
  add_input_options(mobius, in, true);

  CLI::App* verify = app.add_subcommand("verify", "run a named acceptance battery");
  std::string battery = "all";
  unsigned seed = 1;
  std::string names;
  for (const std::string& n : battery_names()) names += (names.empty() ? "" : ", ") + n;
  verify->add_option("battery", battery, "one of: " + names);
  verify->add_option("--seed", seed, "seed for the randomized classical members");
  verify->add_option("--format", in.format, "output format")
      ->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));
  verify->add_option("--out", in.out, "write the report to this file");

  CLI11_PARSE(app, argc, argv);
  try {
    if (euler->parsed()) return cmd_euler(in);
    if (weights->parsed()) return cmd_weights(in);
    if (mobius->parsed()) return cmd_mobius(in);
    if (classical->parsed()) return cmd_classical(in);
    if (verify->parsed()) return cmd_verify(battery, seed, in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
