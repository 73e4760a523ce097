#include "gvp/lp.hpp"

#include "gvp/error.hpp"

namespace gvp {

void LPProgram::validate() const {
  const std::size_t n = objective.size();
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (constraints[i].coefficients.size() != n) {
      fail(ErrorKind::invalid_argument, "constraint " + std::to_string(i) + " has " +
                                            std::to_string(constraints[i].coefficients.size()) +
                                            " coefficients, expected " + std::to_string(n));
    }
  }
  if (!bounds.empty() && bounds.size() != n) fail(ErrorKind::invalid_argument, "bounds list has the wrong length");
  for (std::size_t j = 0; j < bounds.size(); ++j) {
    if (bounds[j].lower < 0) fail(ErrorKind::invalid_argument, "variable " + std::to_string(j) + " has a negative lower bound");
  }
}

const VariableBound& LPProgram::bound(std::size_t j) const {
  static const VariableBound kDefault{};
  return bounds.empty() ? kDefault : bounds[j];
}

const char* to_string(LPStatus status) {
  switch (status) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

thread_local LpAuditScope* current_audit = nullptr;

// Rows of the internal form  A x' <= b,  x' >= 0,  where x = lower + x'.
struct InternalRow {
  std::vector<Rational> a;
  Rational b;
  int source;  // constraint index, or -(j + 1) for the upper bound of variable j
  int sign;    // +1 or -1: the row is sign * (original row)
};

// Dense simplex tableau. Columns 0..n-1 are nonbasic variables, column n the
// phase-one auxiliary, column n+1 the right-hand side. Row m is the objective,
// row m+1 the phase-one objective. Variable ids: originals 0..n-1, slacks n..n+m-1,
// auxiliary -1.
class Tableau {
 public:
  Tableau(const std::vector<InternalRow>& rows, const std::vector<Rational>& c)
      : m_(static_cast<int>(rows.size())), n_(static_cast<int>(c.size())), nonbasic_(n_ + 1), basic_(m_),
        d_(m_ + 2, std::vector<Rational>(n_ + 2)) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) d_[i][j] = rows[i].a[j];
      d_[i][n_] = -1;
      d_[i][n_ + 1] = rows[i].b;
      basic_[i] = n_ + i;
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      d_[m_][j] = -c[j];
    }
    nonbasic_[n_] = -1;
    d_[m_ + 1][n_] = 1;
  }

  LPStatus solve() {
    int r = 0;
    for (int i = 1; i < m_; ++i) {
      if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
    }
    if (m_ > 0 && d_[r][n_ + 1] < 0) {
      pivot(r, n_);
      if (!run(2) || d_[m_ + 1][n_ + 1] < 0) return LPStatus::infeasible;
      for (int i = 0; i < m_; ++i) {
        if (basic_[i] != -1) continue;
        int s = -1;
        for (int j = 0; j < n_; ++j) {
          if (sgn(d_[i][j]) != 0 && (s == -1 || nonbasic_[j] < nonbasic_[s])) s = j;
        }
        if (s != -1) pivot(i, s);
      }
    }
    return run(1) ? LPStatus::optimal : LPStatus::unbounded;
  }

  Rational value() const { return d_[m_][n_ + 1]; }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_);
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] >= 0 && basic_[i] < n_) x[basic_[i]] = d_[i][n_ + 1];
    }
    return x;
  }

  // Objective-row entry of each slack while nonbasic: the row's shadow price.
  std::vector<Rational> row_duals() const {
    std::vector<Rational> y(m_);
    for (int j = 0; j <= n_; ++j) {
      if (nonbasic_[j] >= n_) y[nonbasic_[j] - n_] = d_[m_][j];
    }
    return y;
  }

 private:
  void pivot(int r, int s) {
    Rational inv = 1 / d_[r][s];
    std::vector<int> support;
    for (int j = 0; j < n_ + 2; ++j) {
      if (j != s && sgn(d_[r][j]) != 0) support.push_back(j);
    }
    Rational factor;
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || sgn(d_[i][s]) == 0) continue;
      factor = d_[i][s] * inv;
      for (int j : support) d_[i][j] -= d_[r][j] * factor;
      d_[i][s] = -factor;
    }
    for (int j : support) d_[r][j] *= inv;
    d_[r][s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  // Bland's rule: lowest-id improving column, ratio ties broken by lowest basic id.
  bool run(int phase) {
    const int x = phase == 1 ? m_ : m_ + 1;
    for (;;) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (phase == 1 && nonbasic_[j] == -1) continue;
        if (d_[x][j] < 0 && (s == -1 || nonbasic_[j] < nonbasic_[s])) s = j;
      }
      if (s == -1) return true;
      int r = -1;
      Rational best_ratio;
      Rational ratio;
      for (int i = 0; i < m_; ++i) {
        if (d_[i][s] <= 0) continue;
        ratio = d_[i][n_ + 1] / d_[i][s];
        if (r == -1 || ratio < best_ratio || (ratio == best_ratio && basic_[i] < basic_[r])) {
          r = i;
          best_ratio = ratio;
        }
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  int m_;
  int n_;
  std::vector<int> nonbasic_;
  std::vector<int> basic_;
  std::vector<std::vector<Rational>> d_;
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational total = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (sgn(a[j]) != 0 && sgn(b[j]) != 0) total += a[j] * b[j];
  }
  return total;
}

}  // namespace

LPSolution solve_lp(const LPProgram& program) {
  program.validate();
  const std::size_t n = program.variable_count();
  std::vector<Rational> lower(n);
  for (std::size_t j = 0; j < n; ++j) lower[j] = program.bound(j).lower;

  std::vector<InternalRow> rows;
  auto push = [&](const std::vector<Rational>& a, const Rational& rhs, int source, int sign) {
    InternalRow row{a, rhs - dot(a, lower), source, sign};
    if (sign < 0) {
      for (auto& x : row.a) x = -x;
      row.b = -row.b;
    }
    rows.push_back(std::move(row));
  };
  for (std::size_t i = 0; i < program.constraints.size(); ++i) {
    const auto& con = program.constraints[i];
    const int src = static_cast<int>(i);
    if (con.relation != Relation::greater_equal) push(con.coefficients, con.rhs, src, +1);
    if (con.relation != Relation::less_equal) push(con.coefficients, con.rhs, src, -1);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (const auto& hi = program.bound(j).upper) {
      std::vector<Rational> unit(n);
      unit[j] = 1;
      push(unit, *hi, -static_cast<int>(j) - 1, +1);
    }
  }

  Tableau tableau(rows, program.objective);
  LPSolution solution;
  solution.status = tableau.solve();
  if (solution.status != LPStatus::optimal) return solution;

  solution.assignment = tableau.primal();
  for (std::size_t j = 0; j < n; ++j) solution.assignment[j] += lower[j];
  solution.value = dot(program.objective, solution.assignment);

  auto y = tableau.row_duals();
  solution.duals.assign(program.constraints.size(), Rational(0));
  solution.bound_duals.assign(n, Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].source >= 0) {
      solution.duals[rows[i].source] += rows[i].sign * y[i];
    } else {
      solution.bound_duals[-rows[i].source - 1] += y[i];
    }
  }
  // b.y + hi.w + lo.d with d the reduced cost of the lower bounds.
  Rational dual_value = 0;
  for (std::size_t i = 0; i < program.constraints.size(); ++i) dual_value += solution.duals[i] * program.constraints[i].rhs;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& b = program.bound(j);
    if (b.upper) dual_value += solution.bound_duals[j] * *b.upper;
    if (sgn(b.lower) != 0) {
      Rational reduced = program.objective[j] - solution.bound_duals[j];
      for (std::size_t i = 0; i < program.constraints.size(); ++i) {
        reduced -= solution.duals[i] * program.constraints[i].coefficients[j];
      }
      dual_value += b.lower * reduced;
    }
  }
  solution.dual_value = dual_value;
  const Rational tableau_value = tableau.value() + dot(program.objective, lower);
  if (solution.value != tableau_value || solution.dual_value != solution.value) {
    fail(ErrorKind::internal, "simplex certificate mismatch: primal " + to_string(solution.value) + ", tableau " +
                                  to_string(tableau_value) + ", dual " + to_string(solution.dual_value));
  }
  if (current_audit != nullptr) current_audit->callback_(program, solution);
  return solution;
}

LpAuditScope::LpAuditScope(Callback callback) : callback_(std::move(callback)), previous_(current_audit) {
  current_audit = this;
}

LpAuditScope::~LpAuditScope() { current_audit = previous_; }

CertificateCheck verify_certificate(const LPProgram& program, const LPSolution& solution) {
  auto bad = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  if (solution.status != LPStatus::optimal) return bad("solution is not optimal");
  const std::size_t n = program.variable_count();
  const std::size_t k = program.constraints.size();
  if (solution.assignment.size() != n || solution.duals.size() != k || solution.bound_duals.size() != n) {
    return bad("certificate has the wrong dimensions");
  }
  const auto& x = solution.assignment;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& b = program.bound(j);
    if (x[j] < b.lower || (b.upper && x[j] > *b.upper)) return bad("variable " + std::to_string(j) + " violates its bounds");
  }
  for (std::size_t i = 0; i < k; ++i) {
    const auto& con = program.constraints[i];
    Rational lhs = dot(con.coefficients, x);
    bool holds = con.relation == Relation::less_equal ? lhs <= con.rhs
                 : con.relation == Relation::equal    ? lhs == con.rhs
                                                      : lhs >= con.rhs;
    if (!holds) return bad("constraint " + std::to_string(i) + " is violated");
    const Rational& y = solution.duals[i];
    if ((con.relation == Relation::less_equal && y < 0) || (con.relation == Relation::greater_equal && y > 0)) {
      return bad("dual of constraint " + std::to_string(i) + " has the wrong sign");
    }
  }
  if (dot(program.objective, x) != solution.value) return bad("reported value differs from objective . x");

  Rational dual_value = 0;
  for (std::size_t i = 0; i < k; ++i) dual_value += solution.duals[i] * program.constraints[i].rhs;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& b = program.bound(j);
    const Rational& w = solution.bound_duals[j];
    if (w < 0 || (!b.upper && w != 0)) return bad("bound dual of variable " + std::to_string(j) + " is invalid");
    Rational reduced = program.objective[j] - w;
    for (std::size_t i = 0; i < k; ++i) reduced -= solution.duals[i] * program.constraints[i].coefficients[j];
    if (reduced > 0) return bad("reduced cost of variable " + std::to_string(j) + " is positive");
    if (b.upper) dual_value += w * *b.upper;
    dual_value += b.lower * reduced;
  }
  if (dual_value != solution.value) {
    return bad("dual objective " + to_string(dual_value) + " differs from primal " + to_string(solution.value));
  }
  return {};
}

LPProgram lp_opt_program(const Instance& instance) {
  const int n = instance.vertex_count();
  LPProgram program;
  program.objective.assign(n, Rational(0));
  for (const Edge& e : instance.edges()) {
    program.objective[e.u] += 1;
    program.objective[e.v] += 1;
    LinearConstraint con;
    con.coefficients.assign(n, Rational(0));
    con.coefficients[e.u] = 1;
    con.coefficients[e.v] = 1;
    con.relation = Relation::less_equal;
    con.rhs = e.budget;
    program.constraints.push_back(std::move(con));
  }
  return program;
}

LPSolution lp_opt(const Instance& instance) { return solve_lp(lp_opt_program(instance)); }

}  // namespace gvp
