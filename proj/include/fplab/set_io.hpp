#pragma once

#include <iosfwd>
#include <string>

#include "fplab/incidence.hpp"
#include "fplab/setalg.hpp"

namespace fplab {

/// Set file: line 1 "p <modulus>", line 2 whitespace-separated elements in
/// [0, p). Duplicates are rejected.
FpSet read_set(std::istream& in, std::uint64_t table_bound = kDefaultTableBound);
FpSet read_set_file(const std::string& path);
void write_set(std::ostream& out, const FpSet& s);
void write_set_file(const std::string& path, const FpSet& s);

struct Configuration3 {
  PointSet3 points;
  PlaneSet planes;
};

/// Point/plane file: header "p <modulus>", then "pt x y z" and "pl a b c d"
/// lines in any order. Blank lines and '#' comments are skipped.
Configuration3 read_configuration(std::istream& in);
Configuration3 read_configuration_file(const std::string& path);
void write_configuration(std::ostream& out, const PointSet3& pts, const PlaneSet& planes);

}  // namespace fplab
