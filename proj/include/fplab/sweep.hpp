#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fplab/config.hpp"
#include "fplab/report.hpp"

namespace fplab {

/// Run the sweep named by `sweep = <kind>` in the config and return one
/// Report per job in (p, family, parameter) order.
///
/// Common keys:
///   sweep      paley | moment | system | incidence | structure-pipeline | balog
///   range.p    moduli, e.g. "101, 199" or "7..97" (primes in range)
///   seed       default seed for random families (default 1)
///   timestamp  copied into every report (default "unset") so that
///              identical configs serialize identically
///
/// Per sweep:
///   paley              range.A, range.B (families; B defaults to A),
///                      char = legendre|all or range.char, delta, c
///   moment             range.r (default 1,2), range.I (interval lengths,
///                      default 1..6), char = all|legendre or range.char
///   system             range.A, range.B
///   incidence          mode = skew (range.A, range.B) or random
///                      (range.points, range.planes)
///   structure-pipeline range.A, range.d (default 2,3), range.l (default 1..3)
///   balog              range.A, range.k (default 1), c
///
/// Jobs run on `workers` threads; the output does not depend on it. A job
/// that throws yields a report with flag job_pass = false.
std::vector<Report> run_experiment(const Config& config, unsigned workers = 1);

/// Run independent jobs on a bounded pool; results keep job order.
std::vector<Report> run_jobs(const std::vector<std::function<Report()>>& jobs, unsigned workers,
                             const std::string& kind);

}  // namespace fplab
