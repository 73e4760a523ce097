#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gvp/instance.hpp"

namespace gvp {

enum class Relation { less_equal, equal, greater_equal };

struct LinearConstraint {
  std::vector<Rational> coefficients;  // one per variable
  Relation relation = Relation::less_equal;
  Rational rhs;
};

struct VariableBound {
  Rational lower = 0;  // must be >= 0
  std::optional<Rational> upper;
};

/// maximize objective . x subject to the constraints and per-variable bounds.
/// An empty `bounds` means every variable is simply x >= 0.
struct LPProgram {
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<VariableBound> bounds;

  std::size_t variable_count() const noexcept { return objective.size(); }
  /// Throws Error(invalid_argument) on inconsistent dimensions or negative lower bounds.
  void validate() const;
  const VariableBound& bound(std::size_t j) const;
};

enum class LPStatus { optimal, infeasible, unbounded };

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  Rational value;
  std::vector<Rational> assignment;
  // Dual certificate, filled when optimal. `duals` follows the constraint list
  // (>= 0 for <=, <= 0 for >=, free for =); `bound_duals` prices the upper bounds.
  std::vector<Rational> duals;
  std::vector<Rational> bound_duals;
  Rational dual_value;
};

/// Exact two-phase simplex over rationals with Bland's pivoting rule.
LPSolution solve_lp(const LPProgram& program);

struct CertificateCheck {
  bool ok = true;
  std::string reason;
};

/// Independent re-check of an optimal solution: primal feasibility, objective
/// value, dual feasibility and equality of primal and dual objectives.
CertificateCheck verify_certificate(const LPProgram& program, const LPSolution& solution);

/// max sum_e (p(u) + p(v)) s.t. p(u) + p(v) <= B_e for every edge, p >= 0.
LPProgram lp_opt_program(const Instance& instance);
LPSolution lp_opt(const Instance& instance);

const char* to_string(LPStatus status);

/// While alive, every optimal solve_lp result on this thread is reported to the
/// callback. Scopes nest; the innermost one receives the reports.
class LpAuditScope {
 public:
  using Callback = std::function<void(const LPProgram&, const LPSolution&)>;
  explicit LpAuditScope(Callback callback);
  ~LpAuditScope();
  LpAuditScope(const LpAuditScope&) = delete;
  LpAuditScope& operator=(const LpAuditScope&) = delete;

 private:
  Callback callback_;
  LpAuditScope* previous_;
  friend LPSolution solve_lp(const LPProgram& program);
};

}  // namespace gvp
