#include "gvp/sherali_adams.hpp"

#include <algorithm>

#include "gvp/error.hpp"
#include "gvp/oracle.hpp"
#include "gvp/random.hpp"

namespace gvp {

namespace {

// All subsets of {0..n-1} with at most r elements, by size then lexicographically.
std::vector<std::vector<int>> small_subsets(int n, int r) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> layer{{}};
  for (int size = 1; size <= std::min(r, n); ++size) {
    std::vector<std::vector<int>> next;
    for (const auto& s : layer) {
      for (int v = s.empty() ? 0 : s.back() + 1; v < n; ++v) {
        auto t = s;
        t.push_back(v);
        next.push_back(std::move(t));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::size_t checked_power(std::int64_t base, std::size_t exp, std::size_t limit) {
  std::size_t value = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (value > limit / static_cast<std::size_t>(base)) {
      fail(ErrorKind::limit_exceeded, "relaxation exceeds " + std::to_string(limit) + " variables");
    }
    value *= static_cast<std::size_t>(base);
  }
  return value;
}

void check_cap(std::int64_t price_cap) {
  if (price_cap < 0) fail(ErrorKind::invalid_argument, "price cap must be nonnegative");
}

}  // namespace

std::size_t LPRModel::block_size(std::size_t set_size) const {
  return checked_power(price_cap + 1, set_size, static_cast<std::size_t>(-1));
}

std::size_t LPRModel::column(const std::vector<int>& set, std::span<const std::int64_t> alpha) const {
  auto it = set_offset.find(set);
  if (it == set_offset.end() || alpha.size() != set.size()) {
    fail(ErrorKind::invalid_argument, "no variable for this vertex set");
  }
  std::size_t index = 0;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (alpha[i] < 0 || alpha[i] > price_cap) fail(ErrorKind::invalid_argument, "price outside 0..P");
    index += static_cast<std::size_t>(alpha[i]) * stride;
    stride *= static_cast<std::size_t>(price_cap + 1);
  }
  return it->second + index;
}

std::size_t LPRModel::column(const AssignmentKey& key) const { return column(key.set, key.alpha); }

AssignmentKey LPRModel::key_of(std::size_t col) const {
  for (const auto& [set, offset] : set_offset) {
    std::size_t size = block_size(set.size());
    if (col >= offset && col < offset + size) {
      AssignmentKey key{set, {}};
      std::size_t index = col - offset;
      for (std::size_t i = 0; i < set.size(); ++i) {
        key.alpha.push_back(static_cast<std::int64_t>(index % static_cast<std::size_t>(price_cap + 1)));
        index /= static_cast<std::size_t>(price_cap + 1);
      }
      return key;
    }
  }
  fail(ErrorKind::invalid_argument, "column out of range");
}

LPRModel build_lp_r(const Instance& instance, int r, std::int64_t price_cap, const SaOptions& options) {
  if (r < 1) fail(ErrorKind::invalid_argument, "level r must be positive");
  check_cap(price_cap);
  const int n = instance.vertex_count();
  LPRModel model;
  model.r = r;
  model.price_cap = price_cap;
  model.vertex_count = n;

  const auto subsets = small_subsets(n, r);
  std::size_t total = 0;
  for (const auto& s : subsets) {
    model.set_offset.emplace(s, total);
    total += checked_power(price_cap + 1, s.size(), options.variable_limit);
    if (total > options.variable_limit) {
      fail(ErrorKind::limit_exceeded, "relaxation exceeds " + std::to_string(options.variable_limit) + " variables");
    }
  }
  const auto radix = static_cast<std::size_t>(price_cap + 1);
  LPProgram& program = model.program;
  program.objective.assign(total, Rational(0));
  program.bounds.assign(total, VariableBound{Rational(0), Rational(1)});

  LinearConstraint normal;
  normal.coefficients.assign(total, Rational(0));
  normal.coefficients[model.set_offset.at({})] = 1;
  normal.relation = Relation::equal;
  normal.rhs = 1;
  program.constraints.push_back(std::move(normal));

  // Single-vertex extensions: y(S, alpha) = Sum_i y(S + t, alpha + i).
  for (const auto& s : subsets) {
    if (static_cast<int>(s.size()) >= r) continue;
    const std::size_t base = model.set_offset.at(s);
    const std::size_t count = model.block_size(s.size());
    for (int t = 0; t < n; ++t) {
      if (std::binary_search(s.begin(), s.end(), t)) continue;
      auto ext = s;
      ext.insert(std::lower_bound(ext.begin(), ext.end(), t), t);
      const std::size_t pos = static_cast<std::size_t>(std::lower_bound(ext.begin(), ext.end(), t) - ext.begin());
      const std::size_t ext_base = model.set_offset.at(ext);
      std::size_t low_stride = 1;
      for (std::size_t i = 0; i < pos; ++i) low_stride *= radix;
      for (std::size_t a = 0; a < count; ++a) {
        LinearConstraint con;
        con.coefficients.assign(total, Rational(0));
        con.coefficients[base + a] = -1;
        // Insert digit i at position pos of alpha.
        const std::size_t low = a % low_stride;
        const std::size_t high = a / low_stride;
        for (std::size_t i = 0; i < radix; ++i) {
          con.coefficients[ext_base + low + i * low_stride + high * low_stride * radix] = 1;
        }
        con.relation = Relation::equal;
        con.rhs = 0;
        program.constraints.push_back(std::move(con));
      }
    }
  }

  for (const Edge& e : instance.edges()) {
    const int u = std::min(e.u, e.v);
    const int v = std::max(e.u, e.v);
    const std::size_t base = model.set_offset.at({u, v});
    for (std::int64_t i = 0; i <= price_cap; ++i) {
      for (std::int64_t j = 0; j <= price_cap; ++j) {
        if (Rational(static_cast<long>(i + j)) > e.budget) continue;
        program.objective[base + static_cast<std::size_t>(i) + static_cast<std::size_t>(j) * radix] +=
            static_cast<long>(i + j);
      }
    }
  }
  return model;
}

std::size_t BaseLPModel::x_column(int v, std::int64_t i) const {
  return static_cast<std::size_t>(v) * static_cast<std::size_t>(price_cap + 1) + static_cast<std::size_t>(i);
}

std::size_t BaseLPModel::z_column(std::size_t pair, std::int64_t i, std::int64_t j) const {
  const auto radix = static_cast<std::size_t>(price_cap + 1);
  return static_cast<std::size_t>(vertex_count) * radix + pair * radix * radix + static_cast<std::size_t>(i) * radix +
         static_cast<std::size_t>(j);
}

BaseLPModel build_base_lp(const Instance& instance, std::int64_t price_cap, const SaOptions& options) {
  check_cap(price_cap);
  BaseLPModel model;
  model.vertex_count = instance.vertex_count();
  model.price_cap = price_cap;
  for (const Edge& e : instance.edges()) {
    std::pair<int, int> p{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (std::find(model.pairs.begin(), model.pairs.end(), p) == model.pairs.end()) model.pairs.push_back(p);
  }
  const std::size_t radix = static_cast<std::size_t>(price_cap + 1);
  const std::size_t total = checked_power(price_cap + 1, 1, options.variable_limit) *
                            (static_cast<std::size_t>(model.vertex_count) + model.pairs.size() * radix);
  if (total > options.variable_limit) {
    fail(ErrorKind::limit_exceeded, "base relaxation exceeds " + std::to_string(options.variable_limit) + " variables");
  }
  LPProgram& program = model.program;
  program.objective.assign(total, Rational(0));
  program.bounds.assign(total, VariableBound{Rational(0), Rational(1)});
  auto blank = [&] {
    LinearConstraint con;
    con.coefficients.assign(total, Rational(0));
    return con;
  };
  for (int v = 0; v < model.vertex_count; ++v) {
    auto con = blank();
    for (std::int64_t i = 0; i <= price_cap; ++i) con.coefficients[model.x_column(v, i)] = 1;
    con.relation = Relation::equal;
    con.rhs = 1;
    program.constraints.push_back(std::move(con));
  }
  for (std::size_t p = 0; p < model.pairs.size(); ++p) {
    auto [u, v] = model.pairs[p];
    auto sum = blank();
    for (std::int64_t i = 0; i <= price_cap; ++i) {
      for (std::int64_t j = 0; j <= price_cap; ++j) {
        sum.coefficients[model.z_column(p, i, j)] = 1;
        // z - x(u,i) - x(v,j) >= -1
        auto lift = blank();
        lift.coefficients[model.z_column(p, i, j)] = 1;
        lift.coefficients[model.x_column(u, i)] = -1;
        lift.coefficients[model.x_column(v, j)] = -1;
        lift.relation = Relation::greater_equal;
        lift.rhs = -1;
        program.constraints.push_back(std::move(lift));
      }
    }
    sum.relation = Relation::equal;
    sum.rhs = 1;
    program.constraints.push_back(std::move(sum));
  }
  for (const Edge& e : instance.edges()) {
    std::pair<int, int> key{std::min(e.u, e.v), std::max(e.u, e.v)};
    const auto p = static_cast<std::size_t>(std::find(model.pairs.begin(), model.pairs.end(), key) - model.pairs.begin());
    for (std::int64_t i = 0; i <= price_cap; ++i) {
      for (std::int64_t j = 0; j <= price_cap; ++j) {
        if (Rational(static_cast<long>(i + j)) <= e.budget) {
          program.objective[model.z_column(p, i, j)] += static_cast<long>(i + j);
        }
      }
    }
  }
  return model;
}

std::vector<Rational> point_assignment(const LPRModel& model, std::span<const std::int64_t> prices) {
  if (static_cast<int>(prices.size()) != model.vertex_count) {
    fail(ErrorKind::invalid_argument, "price vector has the wrong length");
  }
  std::vector<Rational> y(model.program.variable_count(), Rational(0));
  for (const auto& entry : model.set_offset) {
    std::vector<std::int64_t> alpha;
    for (int v : entry.first) alpha.push_back(prices[v]);
    y[model.column(entry.first, alpha)] = 1;
  }
  return y;
}

namespace {

// Walks the decomposition from the root. `pick` receives the candidate bag
// assignments (column order) with their masses and the conditioning mass, and
// returns the chosen index.
template <class Pick>
Solution round_walk(const Instance& instance, const TreeDecomposition& td, const LPRModel& model,
                    std::span<const Rational> y, Pick pick, const char* label) {
  if (y.size() != model.program.variable_count()) fail(ErrorKind::invalid_argument, "solution has the wrong length");
  if (model.vertex_count != instance.vertex_count()) fail(ErrorKind::invalid_argument, "model built for another instance");
  TreeDecomposition owned = assign_owners(instance, td);
  owned.width = owned.measured_width();
  if (auto check = validate_decomposition(instance, owned); !check.ok) {
    fail(ErrorKind::precondition, "invalid decomposition (property " + std::to_string(check.property) + "): " +
                                      check.witness);
  }
  if (owned.width + 1 > model.r) {
    fail(ErrorKind::precondition, "rounding needs r >= width + 1 (r = " + std::to_string(model.r) + ", width " +
                                      std::to_string(owned.width) + ")");
  }
  const int n = instance.vertex_count();
  std::vector<std::int64_t> price(n, -1);
  std::vector<std::vector<int>> children(owned.node_count());
  for (int t = 0; t < owned.node_count(); ++t) {
    if (owned.parent[t] != -1) children[owned.parent[t]].push_back(t);
  }
  std::vector<int> order{owned.root()};
  const auto radix = static_cast<std::size_t>(model.price_cap + 1);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int t = order[head];
    for (int c : children[t]) order.push_back(c);
    const auto& bag = owned.bags[t];

    std::vector<int> known;
    std::vector<std::int64_t> beta;
    for (int v : bag) {
      if (price[v] >= 0) {
        known.push_back(v);
        beta.push_back(price[v]);
      }
    }
    const Rational& condition = y[model.column(known, beta)];
    if (condition <= 0) fail(ErrorKind::internal, "conditioning on an assignment of zero mass");

    std::vector<std::vector<std::int64_t>> candidates;
    std::vector<Rational> mass;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < bag.size(); ++i) combos *= radix;
    std::vector<std::int64_t> alpha(bag.size());
    for (std::size_t a = 0; a < combos; ++a) {
      std::size_t rest = a;
      bool consistent = true;
      for (std::size_t i = 0; i < bag.size(); ++i) {
        alpha[i] = static_cast<std::int64_t>(rest % radix);
        rest /= radix;
        if (price[bag[i]] >= 0 && price[bag[i]] != alpha[i]) consistent = false;
      }
      if (!consistent) continue;
      const Rational& w = y[model.column(bag, alpha)];
      if (w < 0) fail(ErrorKind::internal, "negative mass in the relaxation solution");
      if (w == 0) continue;
      candidates.push_back(alpha);
      mass.push_back(w);
    }
    Rational sum = 0;
    for (const auto& w : mass) sum += w;
    if (sum != condition) fail(ErrorKind::internal, "bag marginal does not match its conditioning mass");
    const std::size_t chosen = pick(mass, condition);
    for (std::size_t i = 0; i < bag.size(); ++i) price[bag[i]] = candidates[chosen][i];
  }
  Prices prices(n);
  for (int v = 0; v < n; ++v) prices[v] = Rational(static_cast<long>(std::max<std::int64_t>(price[v], 0)));
  return make_solution(instance, std::move(prices), label);
}

}  // namespace

Solution sa_round(const Instance& instance, const TreeDecomposition& td, const LPRModel& model,
                  std::span<const Rational> y, std::uint64_t seed) {
  Rng rng(seed);
  mpz_class two64;
  mpz_ui_pow_ui(two64.get_mpz_t(), 2, 64);
  auto pick = [&](const std::vector<Rational>& mass, const Rational& condition) {
    // u uniform on [0, 1) with 64 bits; first cell whose cumulative share exceeds u.
    mpz_class draw;
    const std::uint64_t bits = rng.next();
    mpz_import(draw.get_mpz_t(), 1, 1, sizeof(bits), 0, 0, &bits);
    Rational threshold(draw, two64);
    threshold.canonicalize();
    threshold *= condition;
    Rational cumulative = 0;
    for (std::size_t i = 0; i < mass.size(); ++i) {
      cumulative += mass[i];
      if (cumulative > threshold) return i;
    }
    return mass.size() - 1;
  };
  return round_walk(instance, td, model, y, pick, "sa-round");
}

Solution sa_round_deterministic(const Instance& instance, const TreeDecomposition& td, const LPRModel& model,
                                std::span<const Rational> y) {
  auto pick = [](const std::vector<Rational>&, const Rational&) { return std::size_t{0}; };
  return round_walk(instance, td, model, y, pick, "sa");
}

std::vector<GapRow> gap_report(const Instance& instance, const std::vector<int>& r_values, std::int64_t price_cap,
                               const SaOptions& options) {
  const Rational integral = brute_force_opt(instance, price_cap).revenue;
  std::vector<GapRow> rows;
  for (int r : r_values) {
    LPRModel model = build_lp_r(instance, r, price_cap, options);
    LPSolution solution = solve_lp(model.program);
    if (solution.status != LPStatus::optimal) fail(ErrorKind::internal, "relaxation is not optimal");
    GapRow row{r, solution.value, integral, std::nullopt};
    if (integral != 0) row.gap = solution.value / integral;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gvp
