// Command-line front end. Talks to the solvers only through the C interface.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gvp/gvp.h"

namespace {

using nlohmann::json;

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kUnknownAlgorithm = 2,
  kParse = 3,
  kPrecondition = 4,
  kInternal = 5,
};

struct Failure {
  int code;
  std::string message;
};

int exit_for(gvp_status status) {
  switch (status) {
    case GVP_OK: return kOk;
    case GVP_ERR_UNKNOWN_ALGORITHM: return kUnknownAlgorithm;
    case GVP_ERR_PARSE: return kParse;
    case GVP_ERR_PRECONDITION:
    case GVP_ERR_LIMIT: return kPrecondition;
    case GVP_ERR_INVALID_ARGUMENT: return kUsage;
    case GVP_ERR_INTERNAL: return kInternal;
  }
  return kInternal;
}

void check(gvp_status status, const std::string& context, int override_code = -1) {
  if (status == GVP_OK) return;
  throw Failure{override_code >= 0 ? override_code : exit_for(status), context + ": " + gvp_last_error()};
}

struct CString {
  char* text = nullptr;
  ~CString() { gvp_string_free(text); }
  std::string str() const { return text != nullptr ? std::string(text) : std::string(); }
};

using InstancePtr = std::unique_ptr<gvp_instance, decltype(&gvp_instance_free)>;
using SolutionPtr = std::unique_ptr<gvp_solution, decltype(&gvp_solution_free)>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kParse, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kUsage, "cannot write " + path};
  out << text;
}

InstancePtr load_instance(const std::string& path) {
  std::string text = read_file(path);
  gvp_instance* raw = nullptr;
  // Anything wrong with the instance file itself is a parse failure.
  check(gvp_instance_parse(text.c_str(), &raw), path, kParse);
  return InstancePtr(raw, gvp_instance_free);
}

std::uint64_t oracle_limit_from_env() {
  const char* env = std::getenv("GVP_ORACLE_LIMIT");
  if (env == nullptr || *env == '\0') return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw Failure{kUsage, std::string("GVP_ORACLE_LIMIT is not a number: ") + env};
  }
}

struct SolveFlags {
  std::string algorithm = "auto";
  std::string epsilon;
  std::optional<std::int64_t> cap;
  int r = 2;
  std::optional<std::uint64_t> seed;
  std::string coloring_path;
  std::string decomposition_path;
  int max_width = 4;
};

struct SolveResult {
  json doc;
  std::string revenue;
  double elapsed_ms = 0;
};

// Solves, then re-evaluates the printed prices through gvp_evaluate.
SolveResult run_solver(const gvp_instance* instance, const SolveFlags& flags) {
  std::string coloring = flags.coloring_path.empty() ? std::string() : read_file(flags.coloring_path);
  std::string decomposition = flags.decomposition_path.empty() ? std::string() : read_file(flags.decomposition_path);
  gvp_solve_options options;
  gvp_solve_options_init(&options);
  options.algorithm = flags.algorithm.c_str();
  options.epsilon = flags.epsilon.empty() ? nullptr : flags.epsilon.c_str();
  options.price_cap = flags.cap.value_or(-1);
  options.r = flags.r;
  options.has_seed = flags.seed.has_value();
  options.seed = flags.seed.value_or(0);
  options.coloring_json = flags.coloring_path.empty() ? nullptr : coloring.c_str();
  options.decomposition_json = flags.decomposition_path.empty() ? nullptr : decomposition.c_str();
  options.oracle_limit = oracle_limit_from_env();
  options.max_width = flags.max_width;

  const auto start = std::chrono::steady_clock::now();
  gvp_solution* raw = nullptr;
  check(gvp_solve(instance, &options, &raw), flags.algorithm);
  SolutionPtr solution(raw, gvp_solution_free);
  const auto stop = std::chrono::steady_clock::now();

  CString text;
  check(gvp_solution_to_json(solution.get(), &text.text), "serialise");
  SolveResult result;
  result.doc = json::parse(text.str());
  result.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  result.revenue = result.doc["revenue"].get<std::string>();

  CString recomputed;
  check(gvp_evaluate(instance, result.doc["prices"].dump().c_str(), &recomputed.text), "re-evaluate");
  if (recomputed.str() != result.revenue) {
    throw Failure{kInternal, "revenue mismatch: solver reported " + result.revenue + ", prices earn " + recomputed.str()};
  }
  return result;
}

void add_solve_flags(CLI::App* cmd, SolveFlags& flags) {
  cmd->add_option("--epsilon", flags.epsilon, "approximation parameter, e.g. 1/10");
  cmd->add_option("--cap", flags.cap, "price cap P");
  cmd->add_option("--r", flags.r, "Sherali-Adams level");
  cmd->add_option("--seed", flags.seed, "random seed");
  cmd->add_option("--coloring", flags.coloring_path, "coloring JSON");
  cmd->add_option("--decomposition", flags.decomposition_path, "tree decomposition JSON");
  cmd->add_option("--max-width", flags.max_width, "decomposition width budget");
}

int cmd_solve(const std::string& path, const SolveFlags& flags, const std::string& out) {
  InstancePtr instance = load_instance(path);
  SolveResult result = run_solver(instance.get(), flags);
  result.doc["elapsed_ms"] = result.elapsed_ms;
  write_output(out, result.doc.dump() + "\n");
  return kOk;
}

struct GenFlags {
  std::string generator;
  std::optional<int> n, k, rows, cols, leaves;
  std::string budgets, budget, budget_range, edge_prob, keep_prob, graph_path, sidecar_path;
  std::uint64_t seed = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

int cmd_gen(const GenFlags& flags, const std::string& out) {
  json params = json::object();
  params["seed"] = flags.seed;
  if (flags.n) params["n"] = *flags.n;
  if (flags.k) params["k"] = *flags.k;
  if (flags.rows) params["rows"] = *flags.rows;
  if (flags.cols) params["cols"] = *flags.cols;
  if (flags.leaves) params["leaves"] = *flags.leaves;
  if (!flags.budgets.empty()) params["budgets"] = split(flags.budgets, ',');
  if (!flags.budget.empty()) params["budget"] = flags.budget;
  if (!flags.budget_range.empty()) {
    auto parts = split(flags.budget_range, ',');
    if (parts.size() != 2) throw Failure{kUsage, "--budget-range expects lo,hi"};
    try {
      params["budget_lo"] = std::stoll(parts[0]);
      params["budget_hi"] = std::stoll(parts[1]);
    } catch (const std::exception&) {
      throw Failure{kUsage, "--budget-range expects integers"};
    }
  }
  if (!flags.edge_prob.empty()) params["edge_prob"] = flags.edge_prob;
  if (!flags.keep_prob.empty()) params["keep_prob"] = flags.keep_prob;
  if (!flags.graph_path.empty()) {
    try {
      params["graph"] = json::parse(read_file(flags.graph_path));
    } catch (const json::exception& e) {
      throw Failure{kParse, flags.graph_path + ": " + e.what()};
    }
  }
  CString instance, sidecar;
  check(gvp_generate(flags.generator.c_str(), params.dump().c_str(), &instance.text, &sidecar.text), "gen");
  write_output(out, instance.str() + "\n");
  std::string sidecar_path = flags.sidecar_path;
  if (sidecar_path.empty() && !out.empty() && sidecar.str() != "null") {
    std::filesystem::path p(out);
    sidecar_path = (p.parent_path() / (p.stem().string() + ".sidecar.json")).string();
  }
  if (!sidecar_path.empty() && sidecar.str() != "null") write_output(sidecar_path, sidecar.str() + "\n");
  return kOk;
}

long double rational_to_double(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return std::stold(text);
  return std::stold(text.substr(0, slash)) / std::stold(text.substr(slash + 1));
}

int cmd_bench(const std::string& manifest_path, const std::string& out) {
  json manifest;
  try {
    manifest = json::parse(read_file(manifest_path));
  } catch (const json::exception& e) {
    throw Failure{kParse, manifest_path + ": " + e.what()};
  }
  if (!manifest.is_object()) throw Failure{kParse, "manifest must be a JSON object"};
  const std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();
  const bool with_oracle = manifest.value("oracle", false);
  std::vector<std::string> algorithms;
  std::vector<std::pair<std::string, std::string>> instances;  // name, path
  try {
    for (const auto& a : manifest.value("algorithms", json::array())) algorithms.push_back(a.get<std::string>());
    for (const auto& item : manifest.value("instances", json::array())) {
      if (item.is_string()) {
        auto p = item.get<std::string>();
        instances.emplace_back(std::filesystem::path(p).stem().string(), (base / p).string());
      } else {
        instances.emplace_back(item.at("name").get<std::string>(), (base / item.at("path").get<std::string>()).string());
      }
    }
  } catch (const json::exception& e) {
    throw Failure{kParse, "manifest: " + std::string(e.what())};
  }
  SolveFlags common;
  common.epsilon = manifest.value("epsilon", std::string());
  if (manifest.contains("seed")) common.seed = manifest["seed"].get<std::uint64_t>();
  if (manifest.contains("max_width")) common.max_width = manifest["max_width"].get<int>();

  std::ostringstream csv;
  csv << (with_oracle ? "instance,algorithm,revenue,oracle,ratio,elapsed_ms\n" : "instance,algorithm,revenue,elapsed_ms\n");
  int status = kOk;
  for (const auto& [name, path] : instances) {
    InstancePtr instance = load_instance(path);
    std::string oracle_value;
    if (with_oracle) {
      SolveFlags oracle_flags = common;
      oracle_flags.algorithm = "oracle";
      try {
        oracle_value = run_solver(instance.get(), oracle_flags).revenue;
      } catch (const Failure& f) {
        std::cerr << name << ": oracle: " << f.message << "\n";
        status = std::max(status, static_cast<int>(kPrecondition));
      }
    }
    for (const auto& alg : algorithms) {
      SolveFlags flags = common;
      flags.algorithm = alg;
      std::string revenue;
      double elapsed = 0;
      try {
        SolveResult result = run_solver(instance.get(), flags);
        revenue = result.revenue;
        elapsed = result.elapsed_ms;
      } catch (const Failure& f) {
        std::cerr << name << ": " << alg << ": " << f.message << "\n";
        status = std::max(status, f.code);
      }
      csv << name << ',' << alg << ',' << revenue;
      if (with_oracle) {
        std::string ratio;
        if (!revenue.empty() && !oracle_value.empty() && oracle_value != "0") {
          std::ostringstream r;
          r.precision(9);
          r << rational_to_double(revenue) / rational_to_double(oracle_value);
          ratio = r.str();
        }
        csv << ',' << oracle_value << ',' << ratio;
      }
      csv << ',' << elapsed << '\n';
    }
  }
  write_output(out, csv.str());
  return status;
}

int cmd_validate(const std::string& path, const std::string& decomposition_path, const std::string& coloring_path) {
  json report{{"ok", false}};
  gvp_instance* raw = nullptr;
  std::string text = read_file(path);
  if (gvp_instance_parse(text.c_str(), &raw) != GVP_OK) {
    report["checks"] = json::array({{{"check", "instance"}, {"ok", false}, {"witness", gvp_last_error()}}});
    std::cout << report.dump() << "\n";
    return kUsage;
  }
  InstancePtr instance(raw, gvp_instance_free);
  std::string decomposition = decomposition_path.empty() ? std::string() : read_file(decomposition_path);
  std::string coloring = coloring_path.empty() ? std::string() : read_file(coloring_path);
  CString out;
  int passed = 0;
  check(gvp_validate(instance.get(), decomposition_path.empty() ? nullptr : decomposition.c_str(),
                     coloring_path.empty() ? nullptr : coloring.c_str(), &out.text, &passed),
        "validate");
  std::cout << out.str() << "\n";
  return passed ? kOk : kUsage;
}

int cmd_sa_gap(const std::string& path, const std::string& r_list, std::optional<std::int64_t> cap,
               const std::string& out) {
  InstancePtr instance = load_instance(path);
  std::vector<int> rs;
  for (const auto& part : split(r_list, ',')) {
    try {
      rs.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw Failure{kUsage, "--r expects a comma-separated list of integers"};
    }
  }
  CString csv;
  check(gvp_sa_gap(instance.get(), rs.data(), rs.size(), cap.value_or(-1), &csv.text), "sa-gap");
  write_output(out, csv.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex pricing solvers"};
  app.require_subcommand(1);
  std::string out;

  std::string solve_path;
  std::string alg = "auto";
  SolveFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "solve an instance and print the solution JSON");
  solve->add_option("instance", solve_path, "instance JSON")->required();
  solve->add_option("--alg", alg, "auto, oracle, dp, fptas, ptas-planar, degree2, degree4, kpartite, general, lp-opt, sa");
  add_solve_flags(solve, solve_flags);
  solve->add_option("--out", out, "write to a file instead of stdout");

  std::string oracle_path;
  std::optional<std::int64_t> oracle_cap;
  auto* oracle = app.add_subcommand("oracle", "brute-force optimum over integer prices");
  oracle->add_option("instance", oracle_path, "instance JSON")->required();
  oracle->add_option("--cap", oracle_cap, "price cap P (default: largest budget)");
  oracle->add_option("--out", out, "write to a file instead of stdout");

  GenFlags gen_flags;
  auto* gen = app.add_subcommand("gen", "write a generated instance");
  gen->add_option("generator", gen_flags.generator, "path, cycle, star, grid, random-sp, kpartite-random, vc-reduction")
      ->required();
  gen->add_option("--n", gen_flags.n, "vertex count");
  gen->add_option("--k", gen_flags.k, "class count");
  gen->add_option("--rows", gen_flags.rows, "grid rows");
  gen->add_option("--cols", gen_flags.cols, "grid columns");
  gen->add_option("--leaves", gen_flags.leaves, "star leaves");
  gen->add_option("--budgets", gen_flags.budgets, "comma-separated budget per edge");
  gen->add_option("--budget", gen_flags.budget, "one budget for every edge");
  gen->add_option("--budget-range", gen_flags.budget_range, "lo,hi for uniform integer budgets");
  gen->add_option("--edge-prob", gen_flags.edge_prob, "edge probability for kpartite-random");
  gen->add_option("--keep-prob", gen_flags.keep_prob, "edge keep probability for random-sp");
  gen->add_option("--graph", gen_flags.graph_path, "input graph for vc-reduction");
  gen->add_option("--seed", gen_flags.seed, "random seed");
  gen->add_option("--sidecar", gen_flags.sidecar_path, "where to write the sidecar JSON");
  gen->add_option("--out", out, "write to a file instead of stdout");

  std::string manifest;
  auto* bench = app.add_subcommand("bench", "run a manifest of instances and algorithms, print CSV");
  bench->add_option("--manifest", manifest, "manifest JSON")->required();
  bench->add_option("--out", out, "write to a file instead of stdout");

  std::string validate_path, validate_decomposition, validate_coloring;
  auto* validate = app.add_subcommand("validate", "check an instance, decomposition and coloring");
  validate->add_option("instance", validate_path, "instance JSON")->required();
  validate->add_option("--decomposition", validate_decomposition, "tree decomposition JSON");
  validate->add_option("--coloring", validate_coloring, "coloring JSON");

  std::string gap_path, gap_r = "2,3";
  std::optional<std::int64_t> gap_cap;
  auto* gap = app.add_subcommand("sa-gap", "relaxation value against the integral optimum, as CSV");
  gap->add_option("instance", gap_path, "instance JSON")->required();
  gap->add_option("--r", gap_r, "comma-separated levels");
  gap->add_option("--cap", gap_cap, "price cap P (default: largest budget)");
  gap->add_option("--out", out, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) {
      solve_flags.algorithm = alg;
      return cmd_solve(solve_path, solve_flags, out);
    }
    if (*oracle) {
      SolveFlags flags;
      flags.algorithm = "oracle";
      flags.cap = oracle_cap;
      return cmd_solve(oracle_path, flags, out);
    }
    if (*gen) return cmd_gen(gen_flags, out);
    if (*bench) return cmd_bench(manifest, out);
    if (*validate) return cmd_validate(validate_path, validate_decomposition, validate_coloring);
    if (*gap) return cmd_sa_gap(gap_path, gap_r, gap_cap, out);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return kUsage;
}
