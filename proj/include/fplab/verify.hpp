#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fplab/field.hpp"
#include "fplab/report.hpp"

namespace fplab {

struct VerifyOptions {
  /// Run at p = 7 only with few random cases.
  bool minimal = false;
  /// Builds the field for each modulus. Tests substitute damaged tables here.
  std::function<FieldRef(std::uint64_t)> field_factory;
  std::uint64_t seed = 1;
};

/// Every module invariant, exercised on random and exhaustive cases. Each
/// property contributes the flag "<module>.<property>_pass" and the
/// quantities "<module>.<property>_cases" / "_failures". A property that
/// throws fails and leaves a note.
Report verify_suite(const VerifyOptions& opts = {});

/// Moduli used by verify_suite.
std::vector<std::uint32_t> verify_moduli(bool minimal);

}  // namespace fplab
