#ifndef QG_CYCLE_TYPE_HPP
#define QG_CYCLE_TYPE_HPP

#include <string>
#include <vector>

#include "qg/bigint.hpp"
#include "qg/perm.hpp"

namespace qg {

/// Conjugacy class of the symmetric group S_m, encoded as the cycle-count
/// tuple (r_1,...,r_m) with r_k the number of length-k cycles. The defining
/// constraint sum_k k*r_k == m is enforced on construction. m == 0 (the
/// trivial group S_0, empty tuple) is allowed so order-1 structures need no
/// special casing downstream.
class CycleType {
 public:
  explicit CycleType(std::vector<int> counts);

  static CycleType identity(int m);
  static CycleType of(const Permutation& p);

  /// Parses either a partition string ("1+1+3", "0" for the empty type)
  /// or an r-tuple string ("(2,0,1,0,0)", "()" for the empty type).
  static CycleType parse(const std::string& text);

  int degree() const { return static_cast<int>(counts_.size()); }
  int count(int k) const { return counts_[k - 1]; }  // r_k
  const std::vector<int>& counts() const { return counts_; }

  /// Cycle lengths in increasing order, repeats kept ("parts" view).
  std::vector<int> parts() const;

  std::string partition_string() const;  // "1+1+3"
  std::string r_tuple_string() const;    // "(2,0,1,0,0)"

  bool operator==(const CycleType&) const = default;

 private:
  std::vector<int> counts_;
};

/// |C_{S_m}(sigma)| for sigma of type t: prod_k k^{r_k} * r_k!.
Int centralizer_order(const CycleType& t);

/// Number of elements of type t in S_m: m! / centralizer_order(t).
Int class_size(const CycleType& t);

/// Class of sigma^k for any sigma of type t (k >= 1). A length-l cycle
/// raised to the k-th power splits into gcd(l,k) cycles of length l/gcd(l,k).
CycleType power_type(const CycleType& t, long k);

/// Canonical class representative: cycles filled over 1..m in increasing
/// length order, e.g. (0,1,1,0,0) -> (1 2)(3 4 5).
Permutation representative(const CycleType& t);

/// Every cycle type of S_m exactly once, ordered by decreasing r-tuple
/// (identity class first, the single m-cycle last). Length is p(m).
std::vector<CycleType> all_cycle_types(int m);

/// p(m) by the pentagonal-number recurrence.
Int partition_count(int m);

/// Streams the partitions of m as descending part lists, reverse
/// lexicographically ([m], [m-1,1], ..., [1,...,1]). Yields the empty list
/// once for m == 0. next() returns false when exhausted; the reference
/// passed in is overwritten on each call.
class PartitionGenerator {
 public:
  explicit PartitionGenerator(int m);
  bool next(std::vector<int>& parts);

 private:
  bool advance();
  int m_;
  bool first_ = true;
  bool done_ = false;
  std::vector<int> a_;
};

template <class F>
void for_each_partition(int m, F&& f) {
  PartitionGenerator gen(m);
  std::vector<int> parts;
  while (gen.next(parts)) f(const_cast<const std::vector<int>&>(parts));
}

namespace detail {
/// power_type on raw count vectors, writing into a caller-owned buffer
/// (zeroed here). Hot path of the census evaluator.
void power_counts(const std::vector<int>& counts, long k, std::vector<int>& out);
}  // namespace detail

/// One row of the class-by-class census: everything the orbit-count
/// evaluation needs about a single conjugacy class of S_{n-1}.
struct ClassRecord {
  CycleType type;
  Int class_size;                      // a_t
  Int centralizer;                     // c_t, with a_t * c_t == m!
  std::vector<Int> power_centralizers; // c_{t^k} for k = 1..m
  Int fix_count;                       // prod_k c_{t^k}^{r_k}
};

}  // namespace qg

#endif  // QG_CYCLE_TYPE_HPP
