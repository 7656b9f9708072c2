#ifndef QG_BURNSIDE_HPP
#define QG_BURNSIDE_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "qg/bigint.hpp"
#include "qg/cycle_type.hpp"

namespace qg {

/// Class-by-class census of the conjugation action of S_{n-1} on the
/// order-n structures. QG(n) orbits are counted by averaging fixed points
/// over the group, grouped into one term per conjugacy class:
///
///     qg = (1/(n-1)!) * sum_t a_t * prod_k c_{t^k}^{r_{t,k}}
///
/// total_sum is the inner sum; it is always exactly divisible by (n-1)!.
struct CensusTable {
  int n = 0;
  std::vector<ClassRecord> rows;  // one per class, all_cycle_types order
  Int total_sum;
  Int qg;
};

/// Number of structures fixed by any permutation of class t:
/// prod_k centralizer_order(power_type(t,k))^{r_k}.
Int class_fix_count(const CycleType& t);

/// Full census with one row per conjugacy class of S_{n-1}. Rows may be
/// evaluated in parallel; the result is identical for any job count.
CensusTable census(int n, int jobs = 1);

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

/// QG(n) without materialising rows; memory stays flat in the class count,
/// so this is the path for large n. `progress`, when set, is invoked from
/// worker context as classes complete.
Int qg_count(int n, int jobs = 1, const ProgressFn& progress = {});

/// (n, QG(n)) for n = 1..n_max.
std::vector<std::pair<int, Int>> qg_sequence(int n_max, int jobs = 1);

}  // namespace qg

#endif  // QG_BURNSIDE_HPP
