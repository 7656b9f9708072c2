#include "qg/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "qg/parallel.hpp"

namespace qg {

namespace {

void check_bound(int n, int bound) {
  if (n < 1) throw std::invalid_argument("oracle: order must be >= 1");
  if (n > bound) {
    const Int tables = pow_int(factorial(n - 1), n - 1);
    throw std::domain_error(
        "order-" + std::to_string(n) + " enumeration covers ((n-1)!)^(n-1) = " +
        tables.get_str() + " tables, beyond the oracle bound " +
        std::to_string(bound) + "; raise the bound only if you know what you "
        "are doing");
  }
}

// Coset representatives for column j: all bijections {1..n-1} -> {1..n}\{j}
// in lexicographic order, each extended with n -> j implicitly.
std::vector<std::vector<int>> column_choices(int n, int j) {
  std::vector<int> rest;
  rest.reserve(n - 1);
  for (int v = 1; v <= n; ++v)
    if (v != j) rest.push_back(v);
  std::vector<std::vector<int>> arrangements;
  std::sort(rest.begin(), rest.end());
  do {
    arrangements.push_back(rest);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return arrangements;
}

CayleyTable blank_table(int n) {
  std::vector<std::vector<int>> cells(n, std::vector<int>(n));
  for (int i = 1; i <= n; ++i) cells[i - 1][n - 1] = i;
  for (int j = 1; j <= n; ++j) cells[n - 1][j - 1] = j;
  return CayleyTable{n, std::move(cells)};
}

void write_column(CayleyTable& q, int j, const std::vector<int>& arrangement) {
  for (int i = 1; i < q.n; ++i) q.cells[i - 1][j - 1] = arrangement[i - 1];
}

// Base-n digit key over the non-forced cells (rows and columns 1..n-1).
std::uint64_t table_key(const CayleyTable& q) {
  std::uint64_t key = 0;
  for (int i = 1; i < q.n; ++i)
    for (int j = 1; j < q.n; ++j)
      key = key * static_cast<std::uint64_t>(q.n) +
            static_cast<std::uint64_t>(q.at(i, j) - 1);
  return key;
}

std::vector<Permutation> identity_fixing_group(int n) {
  std::vector<Permutation> group;
  std::vector<int> images(n - 1);
  for (int i = 1; i < n; ++i) images[i - 1] = i;
  do {
    std::vector<int> full = images;
    full.push_back(n);
    group.push_back(Permutation::from_images(std::move(full)));
  } while (std::next_permutation(images.begin(), images.end()));
  return group;
}

// Runs fn over every table whose first free column is drawn from the
// arrangement indices first_lo, first_lo + stride, ...; the remaining
// columns run through a full odometer (last column fastest).
template <class Fn>
std::uint64_t enumerate_shard(int n, std::size_t first_lo, std::size_t stride,
                              Fn&& fn) {
  CayleyTable q = blank_table(n);
  if (n == 1) {
    if (first_lo == 0) {
      fn(const_cast<const CayleyTable&>(q));
      return 1;
    }
    return 0;
  }
  std::vector<std::vector<std::vector<int>>> choices(n - 1);
  for (int j = 1; j < n; ++j) choices[j - 1] = column_choices(n, j);

  std::uint64_t visited = 0;
  std::vector<std::size_t> index(n - 1, 0);
  for (std::size_t a0 = first_lo; a0 < choices[0].size(); a0 += stride) {
    write_column(q, 1, choices[0][a0]);
    std::fill(index.begin(), index.end(), 0);
    for (int j = 2; j < n; ++j) write_column(q, j, choices[j - 1][0]);
    for (;;) {
      fn(const_cast<const CayleyTable&>(q));
      ++visited;
      int j = n - 1;
      for (; j >= 2; --j) {
        if (++index[j - 1] < choices[j - 1].size()) {
          write_column(q, j, choices[j - 1][index[j - 1]]);
          break;
        }
        index[j - 1] = 0;
        write_column(q, j, choices[j - 1][0]);
      }
      if (j < 2) break;
    }
  }
  return visited;
}

}  // namespace

std::uint64_t enumerate_tables(int n,
                               const std::function<void(const CayleyTable&)>& fn,
                               int bound) {
  check_bound(n, bound);
  return enumerate_shard(n, 0, 1, fn);
}

OrbitCensus orbit_census(int n, int bound) {
  check_bound(n, bound);
  OrbitCensus census;
  census.n = n;
  census.total_structures = pow_int(factorial(n - 1), n - 1);
  census.orbit_count = 0;

  const std::vector<Permutation> group = identity_fixing_group(n);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(1 << 12);
  std::vector<std::uint64_t> orbit_keys;

  std::uint64_t visited = 0;
  enumerate_shard(n, 0, 1, [&](const CayleyTable& q) {
    ++visited;
    const std::uint64_t key = table_key(q);
    if (seen.count(key)) return;
    orbit_keys.clear();
    for (const Permutation& sigma : group)
      orbit_keys.push_back(table_key(relabel(q, sigma)));
    std::sort(orbit_keys.begin(), orbit_keys.end());
    orbit_keys.erase(std::unique(orbit_keys.begin(), orbit_keys.end()),
                     orbit_keys.end());
    for (std::uint64_t k : orbit_keys) seen.insert(k);
    census.orbit_count += 1;
    census.orbit_size_histogram[orbit_keys.size()] += 1;
  });

  if (census.total_structures != Int(static_cast<unsigned long>(visited)) ||
      visited != seen.size())
    throw std::logic_error("orbit closure failed to cover the enumeration");
  return census;
}

Int direct_fix_count(const Permutation& sigma, int n, int jobs, int bound) {
  check_bound(n, bound);
  if (sigma.degree() != n - 1)
    throw std::invalid_argument("direct_fix_count: sigma has degree " +
                                std::to_string(sigma.degree()) +
                                ", expected " + std::to_string(n - 1));
  if (n == 1) return 1;

  std::vector<int> s = sigma.images();  // embedded fixing n
  s.push_back(n);

  jobs = resolve_jobs(jobs);
  std::vector<std::uint64_t> partial(jobs, 0);
  run_workers(jobs, [&](int w) {
    std::uint64_t count = 0;
    enumerate_shard(n, static_cast<std::size_t>(w),
                    static_cast<std::size_t>(jobs), [&](const CayleyTable& q) {
                      for (int a = 1; a < n; ++a)
                        for (int b = 1; b < n; ++b)
                          if (q.at(s[a - 1], s[b - 1]) != s[q.at(a, b) - 1])
                            return;
                      ++count;
                    });
    partial[w] = count;
  });

  std::uint64_t total = 0;
  for (std::uint64_t part : partial) total += part;
  return Int(static_cast<unsigned long>(total));
}

}  // namespace qg
