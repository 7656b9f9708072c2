#include "qg/burnside.hpp"

#include <atomic>
#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "qg/parallel.hpp"

namespace qg {

namespace {

// Shared read-only lookup tables sized for one degree m: factorials and the
// prime ingredients k^r of centralizer orders. Keeps the per-class work on
// small preformed bigints.
struct PowTables {
  int m;
  std::vector<Int> fact;                // fact[r] = r!, r <= m
  std::vector<std::vector<Int>> kpow;   // kpow[k][r] = k^r, k*r <= m

  explicit PowTables(int m_) : m(m_), fact(m_ + 1), kpow(m_ + 1) {
    fact[0] = 1;
    for (int r = 1; r <= m; ++r) fact[r] = fact[r - 1] * r;
    for (int k = 1; k <= m; ++k) {
      const int rmax = m / k;
      kpow[k].resize(rmax + 1);
      kpow[k][0] = 1;
      for (int r = 1; r <= rmax; ++r) kpow[k][r] = kpow[k][r - 1] * k;
    }
  }

  Int centralizer(const std::vector<int>& counts) const {
    Int order = 1;
    for (int k = 1; k <= static_cast<int>(counts.size()); ++k) {
      const int r = counts[k - 1];
      if (r == 0) continue;
      order *= kpow[k][r];
      order *= fact[r];
    }
    return order;
  }
};

struct CountsHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

using CentralizerMemo =
    std::unordered_map<std::vector<int>, Int, CountsHash>;

const Int& memoized_centralizer(const std::vector<int>& counts,
                                const PowTables& tables,
                                CentralizerMemo& memo) {
  auto it = memo.find(counts);
  if (it != memo.end()) return it->second;
  return memo.emplace(counts, tables.centralizer(counts)).first->second;
}

// a_t * fix(t) for one class, using only the powers k with r_k > 0.
Int class_term(const std::vector<int>& counts, const PowTables& tables,
               std::vector<int>& power_buffer) {
  Int fix = 1;
  Int factor;
  for (int k = 1; k <= static_cast<int>(counts.size()); ++k) {
    if (counts[k - 1] == 0) continue;
    detail::power_counts(counts, k, power_buffer);
    const Int cent = tables.centralizer(power_buffer);
    mpz_pow_ui(factor.get_mpz_t(), cent.get_mpz_t(),
               static_cast<unsigned long>(counts[k - 1]));
    fix *= factor;
  }
  Int a_t = tables.fact[tables.m];
  mpz_divexact(a_t.get_mpz_t(), a_t.get_mpz_t(),
               tables.centralizer(counts).get_mpz_t());
  return a_t * fix;
}

Int divide_by_group_order(const Int& total, const Int& group_order, int n) {
  if (!mpz_divisible_p(total.get_mpz_t(), group_order.get_mpz_t()))
    throw std::logic_error("census total for n=" + std::to_string(n) +
                           " is not divisible by (n-1)!");
  Int qg;
  mpz_divexact(qg.get_mpz_t(), total.get_mpz_t(), group_order.get_mpz_t());
  return qg;
}

}  // namespace

Int class_fix_count(const CycleType& t) {
  const PowTables tables(t.degree());
  Int fix = 1;
  Int factor;
  std::vector<int> power_buffer;
  for (int k = 1; k <= t.degree(); ++k) {
    if (t.count(k) == 0) continue;
    detail::power_counts(t.counts(), k, power_buffer);
    const Int cent = tables.centralizer(power_buffer);
    mpz_pow_ui(factor.get_mpz_t(), cent.get_mpz_t(),
               static_cast<unsigned long>(t.count(k)));
    fix *= factor;
  }
  return fix;
}

CensusTable census(int n, int jobs) {
  if (n < 1) throw std::invalid_argument("census: order must be >= 1");
  const int m = n - 1;
  const PowTables tables(m);
  const std::vector<CycleType> types = all_cycle_types(m);

  CensusTable result;
  result.n = n;
  result.rows.resize(types.size());

  jobs = resolve_jobs(jobs);
  std::atomic<std::size_t> next_index{0};
  run_workers(jobs, [&](int) {
    CentralizerMemo memo;
    std::vector<int> power_buffer;
    for (;;) {
      const std::size_t i = next_index.fetch_add(1);
      if (i >= types.size()) break;
      const CycleType& t = types[i];
      ClassRecord row{t, Int(0), Int(0), {}, Int(1)};
      row.centralizer = tables.centralizer(t.counts());
      row.class_size = tables.fact[m];
      mpz_divexact(row.class_size.get_mpz_t(), row.class_size.get_mpz_t(),
                   row.centralizer.get_mpz_t());
      row.power_centralizers.reserve(m);
      Int factor;
      for (int k = 1; k <= m; ++k) {
        detail::power_counts(t.counts(), k, power_buffer);
        const Int& cent = memoized_centralizer(power_buffer, tables, memo);
        row.power_centralizers.push_back(cent);
        if (t.count(k) > 0) {
          mpz_pow_ui(factor.get_mpz_t(), cent.get_mpz_t(),
                     static_cast<unsigned long>(t.count(k)));
          row.fix_count *= factor;
        }
      }
      result.rows[i] = std::move(row);
    }
  });

  result.total_sum = 0;
  for (const ClassRecord& row : result.rows)
    result.total_sum += row.class_size * row.fix_count;
  result.qg = divide_by_group_order(result.total_sum, tables.fact[m], n);
  return result;
}

Int qg_count(int n, int jobs, const ProgressFn& progress) {
  if (n < 1) throw std::invalid_argument("qg_count: order must be >= 1");
  const int m = n - 1;
  const PowTables tables(m);
  const std::uint64_t total_classes =
      progress ? partition_count(m).get_ui() : 0;

  jobs = resolve_jobs(jobs);
  constexpr std::size_t kBatch = 128;

  std::mutex gen_mutex;
  PartitionGenerator gen(m);
  std::atomic<std::uint64_t> classes_done{0};
  std::vector<Int> partial(jobs, Int(0));

  run_workers(jobs, [&](int w) {
    std::vector<std::vector<int>> batch;
    batch.reserve(kBatch);
    std::vector<int> counts(m), power_buffer;
    Int sum = 0;
    for (;;) {
      batch.clear();
      {
        std::lock_guard<std::mutex> lock(gen_mutex);
        std::vector<int> parts;
        while (batch.size() < kBatch && gen.next(parts)) batch.push_back(parts);
      }
      if (batch.empty()) break;
      for (const auto& parts : batch) {
        counts.assign(m, 0);
        for (int p : parts) ++counts[p - 1];
        sum += class_term(counts, tables, power_buffer);
      }
      if (progress) {
        const std::uint64_t done =
            classes_done.fetch_add(batch.size()) + batch.size();
        progress(done, total_classes);
      }
    }
    partial[w] = std::move(sum);
  });

  Int total = 0;
  for (const Int& part : partial) total += part;
  return divide_by_group_order(total, tables.fact[m], n);
}

std::vector<std::pair<int, Int>> qg_sequence(int n_max, int jobs) {
  if (n_max < 1) throw std::invalid_argument("qg_sequence: n_max must be >= 1");
  std::vector<std::pair<int, Int>> values;
  values.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) values.emplace_back(n, qg_count(n, jobs));
  return values;
}

}  // namespace qg
