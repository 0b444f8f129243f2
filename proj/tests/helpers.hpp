#pragma once

#include <vector>

#include "fplab/setalg.hpp"
#include "oracle.hpp"

namespace testing_helpers {

inline fplab::FpSet make(const fplab::FieldRef& f, const oracle::Set& s) {
  std::vector<std::int64_t> v(s.begin(), s.end());
  return fplab::FpSet::of(f, v);
}

inline oracle::Set as_set(const fplab::FpSet& s) {
  oracle::Set out;
  for (auto x : s.elements()) out.insert(x);
  return out;
}

}  // namespace testing_helpers
