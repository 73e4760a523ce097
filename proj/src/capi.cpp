#include "gvp/gvp.h"

#include <cstring>
#include <json.hpp>
#include <sstream>

#include "gvp/dispatch.hpp"
#include "gvp/error.hpp"
#include "gvp/generators.hpp"
#include "gvp/io.hpp"
#include "gvp/planar.hpp"
#include "gvp/sherali_adams.hpp"

struct gvp_instance {
  gvp::AnyInstance value;
};

struct gvp_solution {
  gvp::Solution value;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

gvp_status status_of(gvp::ErrorKind kind) {
  switch (kind) {
    case gvp::ErrorKind::invalid_argument: return GVP_ERR_INVALID_ARGUMENT;
    case gvp::ErrorKind::parse: return GVP_ERR_PARSE;
    case gvp::ErrorKind::precondition: return GVP_ERR_PRECONDITION;
    case gvp::ErrorKind::limit_exceeded: return GVP_ERR_LIMIT;
    case gvp::ErrorKind::internal: return GVP_ERR_INTERNAL;
  }
  return GVP_ERR_INTERNAL;
}

template <class F>
gvp_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return GVP_OK;
  } catch (const gvp::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GVP_ERR_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GVP_ERR_INTERNAL;
  }
}

char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) gvp::fail(gvp::ErrorKind::invalid_argument, what);
}

// ---- generator parameters ----

json parse_params(const char* text) {
  if (text == nullptr || *text == '\0') return json::object();
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) gvp::fail(gvp::ErrorKind::parse, "generator parameters must be a JSON object");
    return doc;
  } catch (const json::exception& e) {
    gvp::fail(gvp::ErrorKind::parse, std::string("malformed generator parameters: ") + e.what());
  }
}

std::int64_t int_param(const json& params, const char* key, std::optional<std::int64_t> fallback = std::nullopt) {
  auto it = params.find(key);
  if (it == params.end()) {
    if (!fallback) gvp::fail(gvp::ErrorKind::invalid_argument, std::string("missing parameter \"") + key + "\"");
    return *fallback;
  }
  if (!it->is_number_integer()) gvp::fail(gvp::ErrorKind::invalid_argument, std::string("\"") + key + "\" must be an integer");
  return it->get<std::int64_t>();
}

int small_int(const json& params, const char* key, std::optional<std::int64_t> fallback = std::nullopt) {
  std::int64_t v = int_param(params, key, fallback);
  if (v < 0 || v > 100'000) gvp::fail(gvp::ErrorKind::invalid_argument, std::string("\"") + key + "\" is out of range");
  return static_cast<int>(v);
}

gvp::Rational text_rational(const json& value) {
  if (value.is_string()) return gvp::parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return gvp::parse_rational(value.dump());
  gvp::fail(gvp::ErrorKind::invalid_argument, "expected a rational string");
}

gvp::Instance attach_budgets(const gvp::Instance& topology, const json& params, gvp::Rng& rng) {
  if (auto it = params.find("budgets"); it != params.end()) {
    require(it->is_array(), "\"budgets\" must be an array");
    std::vector<gvp::Rational> budgets;
    for (const json& b : *it) budgets.push_back(text_rational(b));
    return gvp::with_budgets(topology, budgets);
  }
  if (params.contains("budget_hi")) {
    return gvp::with_random_budgets(topology, int_param(params, "budget_lo", 1), int_param(params, "budget_hi"), rng);
  }
  std::vector<gvp::Rational> one{params.contains("budget") ? text_rational(params["budget"]) : gvp::Rational(1)};
  return gvp::with_budgets(topology, one);
}

std::pair<std::uint64_t, std::uint64_t> probability(const json& params, const char* key, const char* fallback) {
  gvp::Rational p = gvp::parse_rational(params.contains(key) ? params[key].get<std::string>() : std::string(fallback));
  require(p >= 0 && p <= 1, "probability must lie in [0, 1]");
  require(p.get_den().fits_ulong_p(), "probability denominator too large");
  return {p.get_num().get_ui(), p.get_den().get_ui()};
}

}  // namespace

extern "C" {

const char* gvp_version(void) { return "1.0.0"; }

const char* gvp_last_error(void) { return last_error.c_str(); }

void gvp_string_free(char* text) { std::free(text); }

gvp_status gvp_instance_parse(const char* text, gvp_instance** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new gvp_instance{gvp::parse_any_instance(text)};
  });
}

void gvp_instance_free(gvp_instance* instance) { delete instance; }

int gvp_instance_is_hyper(const gvp_instance* instance) {
  return instance != nullptr && std::holds_alternative<gvp::HyperInstance>(instance->value) ? 1 : 0;
}

int gvp_instance_vertex_count(const gvp_instance* instance) {
  if (instance == nullptr) return -1;
  return std::visit([](const auto& x) { return x.vertex_count(); }, instance->value);
}

size_t gvp_instance_edge_count(const gvp_instance* instance) {
  if (instance == nullptr) return 0;
  return std::visit([](const auto& x) { return x.edge_count(); }, instance->value);
}

gvp_status gvp_instance_to_json(const gvp_instance* instance, char** out) {
  return guarded([&] {
    require(instance != nullptr && out != nullptr, "null argument");
    *out = copy_out(std::visit([](const auto& x) { return gvp::to_json(x); }, instance->value));
  });
}

void gvp_solve_options_init(gvp_solve_options* options) {
  if (options == nullptr) return;
  *options = gvp_solve_options{};
  options->algorithm = "auto";
  options->price_cap = -1;
  options->r = 2;
  options->max_width = 4;
}

gvp_status gvp_solve(const gvp_instance* instance, const gvp_solve_options* options, gvp_solution** out) {
  const std::string alg = options != nullptr && options->algorithm != nullptr ? options->algorithm : "auto";
  if (!gvp::is_known_algorithm(alg)) {
    last_error = "unknown algorithm '" + alg + "'";
    return GVP_ERR_UNKNOWN_ALGORITHM;
  }
  return guarded([&] {
    require(instance != nullptr && out != nullptr, "null argument");
    gvp_solve_options defaults;
    gvp_solve_options_init(&defaults);
    const gvp_solve_options& o = options != nullptr ? *options : defaults;
    gvp::SolveRequest request;
    request.algorithm = alg;
    if (o.epsilon != nullptr) request.epsilon = gvp::parse_rational(o.epsilon);
    if (o.price_cap >= 0) request.price_cap = o.price_cap;
    request.r = o.r;
    if (o.has_seed) request.seed = o.seed;
    if (o.coloring_json != nullptr) request.coloring = gvp::parse_coloring(o.coloring_json);
    if (o.decomposition_json != nullptr) request.decomposition = gvp::parse_decomposition(o.decomposition_json);
    if (o.oracle_limit > 0) request.oracle_limit = o.oracle_limit;
    if (o.max_width > 0) request.max_width = o.max_width;
    gvp::Solution solution = std::visit([&](const auto& x) { return gvp::solve(x, request); }, instance->value);
    *out = new gvp_solution{std::move(solution)};
  });
}

void gvp_solution_free(gvp_solution* solution) { delete solution; }

gvp_status gvp_solution_to_json(const gvp_solution* solution, char** out) {
  return guarded([&] {
    require(solution != nullptr && out != nullptr, "null argument");
    *out = copy_out(gvp::to_json(solution->value));
  });
}

gvp_status gvp_solution_revenue(const gvp_solution* solution, char** out) {
  return guarded([&] {
    require(solution != nullptr && out != nullptr, "null argument");
    *out = copy_out(gvp::to_string(solution->value.revenue));
  });
}

gvp_status gvp_evaluate(const gvp_instance* instance, const char* prices_json, char** revenue_out) {
  return guarded([&] {
    require(instance != nullptr && prices_json != nullptr && revenue_out != nullptr, "null argument");
    gvp::Prices prices = gvp::parse_prices(prices_json);
    gvp::Rational revenue = std::visit(
        [&](const auto& x) {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, gvp::Instance>) {
            return gvp::evaluate_revenue(x, prices);
          } else {
            return gvp::evaluate_revenue_smp(x, prices);
          }
        },
        instance->value);
    *revenue_out = copy_out(gvp::to_string(revenue));
  });
}

gvp_status gvp_validate(const gvp_instance* instance, const char* decomposition_json, const char* coloring_json,
                        char** report_out, int* passed) {
  return guarded([&] {
    require(instance != nullptr && report_out != nullptr && passed != nullptr, "null argument");
    json checks = json::array();
    bool all = true;
    checks.push_back({{"check", "instance"}, {"ok", true}});

    // Decompositions are checked against the graph, or the primal graph of a hypergraph.
    gvp::Instance graph = std::holds_alternative<gvp::Instance>(instance->value)
                              ? std::get<gvp::Instance>(instance->value)
                              : gvp::primal_graph(std::get<gvp::HyperInstance>(instance->value));
    if (decomposition_json != nullptr) {
      json entry{{"check", "decomposition"}};
      try {
        gvp::TreeDecomposition td = gvp::parse_decomposition(decomposition_json);
        gvp::DecompositionCheck result{};
        if (td.node_count() > 0 && td.parent.size() == td.bags.size()) {
          try {
            td = gvp::assign_owners(graph, td);
          } catch (const gvp::Error&) {
            // leave owners empty; the structural check reports the problem
          }
        }
        result = gvp::validate_decomposition(graph, td);
        entry["ok"] = result.ok;
        if (!result.ok) {
          entry["property"] = result.property;
          entry["witness"] = result.witness;
        } else {
          entry["width"] = td.measured_width();
        }
        all = all && result.ok;
      } catch (const gvp::Error& e) {
        entry["ok"] = false;
        entry["witness"] = e.what();
        all = false;
      }
      checks.push_back(entry);
    }
    if (coloring_json != nullptr) {
      json entry{{"check", "coloring"}};
      try {
        gvp::ColoringCheck result = gvp::validate_coloring(graph, gvp::parse_coloring(coloring_json));
        entry["ok"] = result.ok;
        if (!result.ok) {
          entry["witness"] = result.witness;
          if (result.edge >= 0) entry["edge"] = result.edge;
        }
        all = all && result.ok;
      } catch (const gvp::Error& e) {
        entry["ok"] = false;
        entry["witness"] = e.what();
        all = false;
      }
      checks.push_back(entry);
    }
    *passed = all ? 1 : 0;
    *report_out = copy_out(json{{"ok", all}, {"checks", checks}}.dump());
  });
}

gvp_status gvp_generate(const char* generator, const char* params_json, char** instance_out, char** sidecar_out) {
  return guarded([&] {
    require(generator != nullptr && instance_out != nullptr, "null argument");
    const std::string name = generator;
    const json params = parse_params(params_json);
    gvp::Rng rng(static_cast<std::uint64_t>(int_param(params, "seed", 0)));
    std::string instance;
    json sidecar = nullptr;
    if (name == "path") {
      instance = gvp::to_json(attach_budgets(gvp::path_graph(small_int(params, "n")), params, rng));
    } else if (name == "cycle") {
      instance = gvp::to_json(attach_budgets(gvp::cycle_graph(small_int(params, "n")), params, rng));
    } else if (name == "star") {
      instance = gvp::to_json(attach_budgets(gvp::star_graph(small_int(params, "leaves")), params, rng));
    } else if (name == "grid") {
      instance = gvp::to_json(
          attach_budgets(gvp::grid_graph(small_int(params, "rows"), small_int(params, "cols")), params, rng));
    } else if (name == "random-sp") {
      auto [num, den] = probability(params, "keep_prob", "3/4");
      instance = gvp::to_json(attach_budgets(gvp::random_partial_2tree(small_int(params, "n"), rng, num, den), params, rng));
    } else if (name == "kpartite-random") {
      auto [num, den] = probability(params, "edge_prob", "1/2");
      auto [graph, coloring] = gvp::random_kpartite(small_int(params, "n"), small_int(params, "k"), rng, num, den);
      instance = gvp::to_json(attach_budgets(graph, params, rng));
      sidecar = json::parse(gvp::to_json(coloring));
    } else if (name == "vc-reduction") {
      require(params.contains("graph"), "vc-reduction needs a \"graph\" instance");
      gvp::Instance graph = gvp::parse_instance(params["graph"].dump());
      instance = gvp::to_json(gvp::vc_to_gvp(graph));
      if (graph.vertex_count() <= 24) {
        const int vc = gvp::min_vertex_cover(graph);
        sidecar = {{"expected_opt_formula",
                    {{"E", graph.edge_count()}, {"V", graph.vertex_count()}, {"VC", vc}}},
                   {"expected_opt", gvp::to_string(gvp::vc_reduction_opt(graph.vertex_count(), graph.edge_count(), vc))}};
      }
    } else {
      gvp::fail(gvp::ErrorKind::invalid_argument, "unknown generator '" + name + "'");
    }
    *instance_out = copy_out(instance);
    if (sidecar_out != nullptr) *sidecar_out = copy_out(sidecar.dump());
  });
}

gvp_status gvp_sa_gap(const gvp_instance* instance, const int* r_values, size_t count, int64_t price_cap,
                      char** csv_out) {
  return guarded([&] {
    require(instance != nullptr && csv_out != nullptr && (count == 0 || r_values != nullptr), "null argument");
    require(std::holds_alternative<gvp::Instance>(instance->value), "sa-gap needs a graph instance");
    const auto& graph = std::get<gvp::Instance>(instance->value);
    std::int64_t cap = price_cap;
    if (cap < 0) {
      cap = gvp::to_int64(gvp::floor_rational(graph.max_budget()));
    }
    auto rows = gvp::gap_report(graph, std::vector<int>(r_values, r_values + count), cap);
    std::ostringstream csv;
    csv << "r,lp_value,integral_opt,gap\n";
    for (const auto& row : rows) {
      csv << row.r << ',' << gvp::to_string(row.lp_value) << ',' << gvp::to_string(row.integral_opt) << ','
          << (row.gap ? gvp::to_string(*row.gap) : std::string()) << '\n';
    }
    *csv_out = copy_out(csv.str());
  });
}

}  // extern "C"
