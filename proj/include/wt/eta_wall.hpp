#pragma once

// From a null-homotopy of the second component, recorded as crossing
// changes, to the Kojima eta-function and the beta-series.
//
// Each crossing change of L_2 contributes sign * t^n to Wall's
// self-intersection invariant mu(A), where n is the linking number of the
// accessory circle with L_1. The direction of the accessory circle is not
// determined, so n is only defined up to sign; lambda = mu + conj(mu) removes
// that ambiguity and equals eta(L).

#include <cstdint>
#include <string_view>
#include <vector>

#include "wt/laurent.hpp"

namespace wt {

struct CrossingChange {
  int sign = 1;              // right-hand rule, +1 or -1
  std::int64_t linking = 0;  // accessory circle vs. L_1

  friend bool operator==(const CrossingChange&, const CrossingChange&) = default;
};

/// Sum of sign * t^linking, as recorded. Depends on the per-record choice of
/// accessory-circle direction.
LaurentPoly mu(const std::vector<CrossingChange>& changes);
/// Sum of sign * (t^n + t^-n).
LaurentPoly lambda(const std::vector<CrossingChange>& changes);
/// lambda, after checking that the signs sum to zero (lambda(1) = 0).
LaurentPoly eta(const std::vector<CrossingChange>& changes);
/// to_x_poly(eta(changes)); the coefficient of x^i is beta^i.
XPoly beta_series(const std::vector<CrossingChange>& changes);

/// The four crossing changes unlinking the t_2-clasper link L^k:
/// (-, k), (+, k+1), (+, k+1), (-, k+2).
std::vector<CrossingChange> example_Lk(std::int64_t k);

/// One record per line, `+ INT` or `- INT`; `#` comments.
std::vector<CrossingChange> parse_crossings(std::string_view text);

}  // namespace wt
