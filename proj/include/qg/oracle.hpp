#ifndef QG_ORACLE_HPP
#define QG_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>

#include "qg/bigint.hpp"
#include "qg/cayley.hpp"
#include "qg/perm.hpp"

namespace qg {

// Brute-force ground truth for small orders: enumerate every table,
// classify orbits of the relabelling action directly, count fixed tables
// directly. Everything here is independent of the class-by-class census
// evaluation it cross-checks.

/// Enumeration refuses orders above this unless the caller raises the
/// bound explicitly; order 6 already has (5!)^5 ~ 2.5e10 tables.
inline constexpr int kOracleBound = 5;

struct OrbitCensus {
  int n = 0;
  Int total_structures;  // ((n-1)!)^(n-1)
  Int orbit_count;
  std::map<std::uint64_t, std::uint64_t> orbit_size_histogram;  // size -> #orbits
};

/// Visits every valid order-n table exactly once in a fixed order: columns
/// advance like an odometer (last non-identity column fastest), each column
/// running through its coset representatives lexicographically. The
/// reference passed to the callback is reused between calls. Returns the
/// number of tables visited.
std::uint64_t enumerate_tables(int n,
                               const std::function<void(const CayleyTable&)>& fn,
                               int bound = kOracleBound);

/// Partitions all tables into orbits of the identity-fixing relabelling
/// action and reports the census.
OrbitCensus orbit_census(int n, int bound = kOracleBound);

/// Number of tables fixed by relabelling with sigma (given on {1..n-1},
/// embedded fixing n). Sharded over the first column when jobs > 1.
Int direct_fix_count(const Permutation& sigma, int n, int jobs = 1,
                     int bound = kOracleBound);

}  // namespace qg

#endif  // QG_ORACLE_HPP
