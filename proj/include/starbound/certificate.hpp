#pragma once

#include "starbound/lp.hpp"
#include "starbound/rational.hpp"
#include "starbound/simplex.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace starbound {

enum class CertKind { Bound, Infeasible };

/// Nonnegative rational multipliers over the LP rows followed by one upper-box row
/// per column. For Infeasible certificates z is a Farkas direction.
struct DualCertificate {
  std::string map_id;
  std::string case_id;
  CertKind kind = CertKind::Bound;
  int rows = 0;
  int cols = 0;
  std::vector<std::pair<int, Rational>> z;  // sparse, sorted by row
  Rational epsilon;
  Rational claimed_bound;
};

struct CertReport {
  bool accepted = false;
  std::string failure;  // first failing condition, empty when accepted
  int witness = -1;     // row or column index tied to the failure
  Rational epsilon;
  Rational bound;       // exact upper bound on the objective (Bound kind)
};

/// 1e-8.
Rational max_epsilon();
/// 8 * pt_lo.
Rational score_target();

/// Rounds the float dual (or ray) to `digits` decimals, clips negatives, then
/// evaluates epsilon and the bound exactly.
DualCertificate extract_certificate(const LPProblem& lp, const SolveResult& res, int digits = 12);

/// Exact rational check. The bound is
///   B = c0 + (z.b' + eps * W) / (1 + eps),  W = sum_j max(0, 1 + c'_j) * range_j,
/// where columns are shifted to [0, range] so that c' <= 0. Accepts when eps < 1e-8,
/// B <= claimed bound and, when given, B < target. Infeasible certificates are accepted
/// when no point of the box satisfies the aggregated row.
CertReport check_certificate(const LPProblem& lp, const DualCertificate& cert,
                             const std::optional<Rational>& target = std::nullopt);

/// Worst-case error chain for p triangles and N vertices:
///   (p*pt_hi + zb + eps*(p*pt_hi + 2*pi_hi*N)) / (1 + eps).
Rational error_chain_bound(int p, int n, const Rational& zb, const Rational& eps);

std::string write_certificate(const DualCertificate& cert);
DualCertificate parse_certificate(std::string_view text);

}  // namespace starbound
