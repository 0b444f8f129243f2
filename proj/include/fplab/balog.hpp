#pragma once

#include <array>
#include <string>
#include <vector>

#include "fplab/expr.hpp"
#include "fplab/report.hpp"
#include "fplab/setalg.hpp"

namespace fplab {

struct CoverageResult {
  std::string expression;
  FpSet achieved;
  bool covered = false;                  // achieved == F_p
  std::vector<std::uint32_t> missing_sample;  // up to 10 smallest uncovered

  std::size_t achieved_size() const { return achieved.size(); }
};

/// Evaluate `expression` with A bound to `a` and report coverage of F_p.
CoverageResult coverage(const std::string& expression, const FpSet& a);

/// Q = (A - A)/(A - A) against min{p, (|A|^2 + 3)/2}: flag paper_holds for
/// |Q| >= bound and direction_holds for |Q| + 1 >= bound. Throws TooSmall.
Report redei_check(const FpSet& a);

struct IteratedResult {
  CoverageResult coverage;
  double size_threshold = 0;  // p^{1/2 + 1/2^k}
  bool hypothesis = false;    // |A| >= threshold
};

/// (A - A)^{2k+1} coverage. Throws TooSmall for |A| < 2 and BadParams for k < 1.
IteratedResult balog_iterated(const FpSet& a, std::uint32_t k);

inline constexpr std::array<const char*, 3> kBalogExpressions = {
    "(2A-2A)/(A-A)",
    "((A-A)/(A-A))^2(A-A)",
    "(2A-2A)^3/(2A-2A)^2",
};

struct BalogNewResult {
  std::array<CoverageResult, 3> results;
  double size_threshold = 0;  // exp(-c log^{1/5} p) p^{1/2}
  bool above_threshold = false;
};

/// Coverage of the three expressions in kBalogExpressions. Throws TooSmall.
BalogNewResult balog_new_check(const FpSet& a, double c = 1.0);

/// Are all sums of A + B quadratic residues, and if so does
/// |A||B| <= (p - 1)/2 + |B ∩ (-A)| hold.
Report qr_decomposition_check(const FpSet& a, const FpSet& b);

}  // namespace fplab
