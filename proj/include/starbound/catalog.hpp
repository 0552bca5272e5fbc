#pragma once

#include "starbound/quantity.hpp"
#include "starbound/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace starbound {

/// Cluster role a row is stated for.
enum class Context { QRTet, Quad, Flat, Upright, Half, Vertex };

/// Canonical variable kinds. Score variants (sigma_1, sigma_3.2, tau) are expanded
/// into sigma and sol on load and never stored.
enum class Kind { Sigma, Sol, Dih1, Dih2, Dih3, Y1, Y2, Y3, Y4, Y5, Y6, Quo, Vor0, SolA, Ad, H };
inline constexpr int kNumKinds = 16;

const char* context_name(Context c);
const char* kind_name(Kind k);
std::optional<Context> parse_context(std::string_view s);
std::optional<Kind> parse_kind(std::string_view s);
inline Kind y_kind(int i) { return static_cast<Kind>(static_cast<int>(Kind::Y1) + i - 1); }
inline Kind dih_kind(int i) { return static_cast<Kind>(static_cast<int>(Kind::Dih1) + i - 1); }

enum class Rel { Le, Lt, Ge, Gt };
const char* rel_text(Rel r);

/// One atom of an applicability condition: sum(coef * var) REL bound.
struct CondAtom {
  std::vector<std::pair<Kind, Rational>> terms;  // sorted by kind
  Rel rel = Rel::Le;
  Quantity bound;

  bool operator==(const CondAtom& o) const { return terms == o.terms && rel == o.rel && bound == o.bound; }
};

struct Term {
  Kind kind;
  Quantity coef;
  bool operator==(const Term& o) const { return kind == o.kind && coef == o.coef; }
};

/// sum(coef * var) <= rhs, or < rhs when open.
struct Inequality {
  std::string id;
  Context context = Context::QRTet;
  std::vector<Term> terms;  // sorted by kind, no zero coefficients
  Quantity rhs;
  bool open = false;
  std::vector<CondAtom> condition;  // conjunction; empty means unconditional
  std::string cite;

  std::string group() const;
  const Quantity* coef(Kind k) const;
  bool operator==(const Inequality& o) const;
};

struct MissingBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Certified knowledge about one cluster: variable boxes plus asserted linear facts
/// (branch hypotheses). Box endpoints may be symbolic.
struct ClusterContext {
  std::map<Kind, std::pair<Quantity, Quantity>> bounds;
  std::vector<CondAtom> facts;
};

/// True only when ctx implies every atom of the condition.
/// Throws MissingBound when an atom needs a variable ctx does not bound.
bool applicable(const Inequality& ineq, const ClusterContext& ctx);
bool implied(const CondAtom& atom, const ClusterContext& ctx);

class Catalog {
 public:
  explicit Catalog(std::vector<Inequality> rows);

  const Inequality& lookup(std::string_view id) const;
  const Inequality* find(std::string_view id) const;
  const std::vector<Inequality>& rows() const { return rows_; }
  std::vector<const Inequality*> group(std::string_view g) const;
  std::vector<const Inequality*> in_context(Context c) const;

  std::string export_text() const;
  static Catalog import_text(std::string_view text);

  /// Hash of the export text; changes whenever any row changes.
  std::string version() const;

 private:
  std::vector<Inequality> rows_;
  std::map<std::string, size_t, std::less<>> index_;
};

/// Whether a variable kind belongs to a context's signature.
bool kind_allowed(Context c, Kind k);

/// The complete built-in catalogue. Throws std::runtime_error if any embedded row
/// fails to parse or validate.
const Catalog& load_catalog();

/// Parses the embedded source statements; exposed for tests.
Catalog build_catalog();

/// The two linearization rows for Ad = A(h) * dih on h in [1, h_max], dih in
/// [dih_min, dih_max]. Irrational coefficients are rounded outward.
std::vector<Inequality> truncation_rows(const Rational& h_max, const Rational& dih_min, const Rational& dih_max);

namespace dsl {

/// Linear form over named variables with symbolic coefficients.
struct Linear {
  std::map<std::string, Quantity> vars;
  Quantity constant;
};

/// Parses an expression. With expand set, sigma1, sigma32 and tau are rewritten in
/// terms of sigma and sol; otherwise they stay as opaque names.
Linear parse_expr(std::string_view text, bool expand = true);

/// Parses "lhs REL rhs" into (lhs - rhs) REL 0.
std::pair<Linear, Rel> parse_relation(std::string_view text, bool expand = true);

/// Parses one source line "id | context | statement | condition".
Inequality parse_source_line(std::string_view line);

}  // namespace dsl

}  // namespace starbound
