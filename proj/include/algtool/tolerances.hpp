#pragma once

namespace algtool {

/// Every float decision in the toolkit reads its threshold from here.
struct Tolerances {
  double rank = 1e-8;      // σ/σ_ref below this counts as zero
  double span = 1e-7;      // float span membership
  double residual = 1e-8;  // minor and relation residuals
};

}  // namespace algtool
