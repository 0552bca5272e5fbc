#pragma once

#include "starbound/quantity.hpp"
#include "starbound/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace starbound {

/// Boxed variable. Boxes are mandatory: the solver and the certificate rely on them.
struct LPVar {
  std::string name;
  Quantity lo;
  Quantity hi;
};

/// sum(coef * x) <= rhs. Equalities are stored as a pair of rows.
struct LPRow {
  std::string tag;
  std::vector<std::pair<int, Quantity>> terms;  // sorted by column, no zeros
  Quantity rhs;
};

struct LPError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Sparse maximization problem. Columns are boxed, rows are <= constraints.
struct LPProblem {
  std::string map_id;
  std::string case_id;
  int triangles = 0;  // p
  int vertices = 0;   // N

  std::vector<LPVar> vars;
  std::vector<LPRow> rows;
  std::vector<std::pair<int, Rational>> objective;  // sorted by column

  int num_vars() const { return static_cast<int>(vars.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  int add_var(std::string name, Quantity lo, Quantity hi);
  /// Merges duplicate columns and drops zero terms. A row with no terms is kept
  /// only when its right-hand side could be negative; otherwise it is dropped.
  void add_le(std::string tag, std::vector<std::pair<int, Quantity>> terms, Quantity rhs);
  void add_ge(std::string tag, std::vector<std::pair<int, Quantity>> terms, Quantity rhs);
  /// Adds "tag" as <= and "tag/ge" as >=.
  void add_eq(const std::string& tag, std::vector<std::pair<int, Quantity>> terms, Quantity rhs);
  void set_objective(std::vector<std::pair<int, Rational>> c);

  int find_var(std::string_view name) const;  // -1 when absent
  /// Throws LPError on bad column indices, empty tags or inverted boxes.
  void check() const;
};

/// Line format: header, one "var" line per column, "obj", one "row" line per row, "end".
std::string dump_lp(const LPProblem& lp);
LPProblem parse_lp(std::string_view text);

/// Float evaluation helpers used by tests and reports.
double objective_value(const LPProblem& lp, const std::vector<double>& x);
/// Largest violation over rows and boxes (0 when x is feasible).
double max_violation(const LPProblem& lp, const std::vector<double>& x);

}  // namespace starbound
