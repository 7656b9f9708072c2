#include "qg/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qg {

namespace {

std::vector<int> identity_fixing_images(const Permutation& sigma, int n) {
  if (sigma.degree() != n)
    throw std::invalid_argument("relabelling permutation has degree " +
                                std::to_string(sigma.degree()) + ", expected " +
                                std::to_string(n));
  if (sigma.apply(n) != n)
    throw std::invalid_argument("relabelling permutation must fix " +
                                std::to_string(n));
  return sigma.images();
}

}  // namespace

CayleyTable validate_table(const std::vector<std::vector<int>>& cells) {
  const int n = static_cast<int>(cells.size());
  if (n == 0) throw std::invalid_argument("empty table");
  for (int i = 1; i <= n; ++i)
    if (static_cast<int>(cells[i - 1].size()) != n)
      throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                  std::to_string(cells[i - 1].size()) +
                                  " entries, expected " + std::to_string(n));
  // Right-quasigroup axiom: each column is a bijection.
  std::vector<int> seen_at(n, 0);
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      const int v = cells[i - 1][j - 1];
      if (v < 1 || v > n)
        throw std::invalid_argument("entry " + std::to_string(v) + " at row " +
                                    std::to_string(i) + ", column " +
                                    std::to_string(j) + " outside 1.." +
                                    std::to_string(n));
      if (seen_at[v - 1] == j)
        throw std::invalid_argument("column " + std::to_string(j) +
                                    " not bijective: entry " +
                                    std::to_string(v) + " repeats");
      seen_at[v - 1] = j;
    }
  }
  // Identity axiom with the identity pinned at index n.
  for (int j = 1; j <= n; ++j)
    if (cells[n - 1][j - 1] != j)
      throw std::invalid_argument("identity axiom violated in row " +
                                  std::to_string(n) + ": entry for column " +
                                  std::to_string(j) + " is " +
                                  std::to_string(cells[n - 1][j - 1]));
  for (int i = 1; i <= n; ++i)
    if (cells[i - 1][n - 1] != i)
      throw std::invalid_argument("identity axiom violated in column " +
                                  std::to_string(n) + ": entry for row " +
                                  std::to_string(i) + " is " +
                                  std::to_string(cells[i - 1][n - 1]));
  return CayleyTable{n, cells};
}

Transversal validate_transversal(std::vector<Permutation> perms) {
  const int n = static_cast<int>(perms.size());
  if (n == 0) throw std::invalid_argument("empty transversal");
  for (int i = 1; i <= n; ++i) {
    if (perms[i - 1].degree() != n)
      throw std::invalid_argument("representative " + std::to_string(i) +
                                  " has degree " +
                                  std::to_string(perms[i - 1].degree()) +
                                  ", expected " + std::to_string(n));
    if (perms[i - 1].apply(n) != i)
      throw std::invalid_argument("representative " + std::to_string(i) +
                                  " moves " + std::to_string(n) + " to " +
                                  std::to_string(perms[i - 1].apply(n)) +
                                  ", expected " + std::to_string(i));
  }
  if (!perms[n - 1].is_identity())
    throw std::invalid_argument("representative " + std::to_string(n) +
                                " must be the identity permutation");
  return Transversal{n, std::move(perms)};
}

Transversal to_transversal(const CayleyTable& q) {
  std::vector<Permutation> perms;
  perms.reserve(q.n);
  for (int i = 1; i <= q.n; ++i) {
    std::vector<int> images(q.n);
    for (int j = 1; j <= q.n; ++j) images[j - 1] = q.at(j, i);
    perms.push_back(Permutation::from_images(std::move(images)));
  }
  return validate_transversal(std::move(perms));
}

CayleyTable from_transversal(const Transversal& t) {
  std::vector<std::vector<int>> cells(t.n, std::vector<int>(t.n));
  for (int i = 1; i <= t.n; ++i)
    for (int j = 1; j <= t.n; ++j)
      cells[i - 1][j - 1] = t.perms[j - 1].apply(i);  // n^{sigma_i sigma_j}
  return validate_table(cells);
}

CayleyTable relabel(const CayleyTable& q, const Permutation& sigma) {
  const std::vector<int> s = identity_fixing_images(sigma, q.n);
  std::vector<std::vector<int>> cells(q.n, std::vector<int>(q.n));
  for (int i = 1; i <= q.n; ++i)
    for (int j = 1; j <= q.n; ++j)
      cells[s[i - 1] - 1][s[j - 1] - 1] = s[q.at(i, j) - 1];
  return CayleyTable{q.n, std::move(cells)};
}

Transversal conjugate_transversal(const Transversal& t, const Permutation& s) {
  const std::vector<int> images = identity_fixing_images(s, t.n);
  std::vector<Permutation> perms(t.n, Permutation::identity(t.n));
  for (int i = 1; i <= t.n; ++i)
    perms[images[i - 1] - 1] = t.perms[i - 1].conjugated_by(s);
  return validate_transversal(std::move(perms));
}

namespace {

// Shared search scaffold: runs `accept` over every candidate sigma in S_n
// with sigma(n) = n, in lexicographic image order, returning the first hit.
template <class Accept>
std::optional<Permutation> find_identity_fixing(int n, Accept&& accept) {
  std::vector<int> images(n - 1);
  std::iota(images.begin(), images.end(), 1);
  do {
    std::vector<int> full = images;
    full.push_back(n);
    if (accept(full)) return Permutation::from_images(std::move(full));
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

}  // namespace

std::optional<Permutation> isomorphic_by_bijection(const CayleyTable& a,
                                                   const CayleyTable& b) {
  if (a.n != b.n)
    throw std::invalid_argument("isomorphism test on tables of orders " +
                                std::to_string(a.n) + " and " +
                                std::to_string(b.n));
  const int n = a.n;
  if (n == 1) return Permutation::identity(1);
  return find_identity_fixing(n, [&](const std::vector<int>& f) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (b.at(f[i - 1], f[j - 1]) != f[a.at(i, j) - 1]) return false;
    return true;
  });
}

std::optional<Permutation> isomorphic_by_conjugation(const CayleyTable& a,
                                                     const CayleyTable& b) {
  if (a.n != b.n)
    throw std::invalid_argument("isomorphism test on tables of orders " +
                                std::to_string(a.n) + " and " +
                                std::to_string(b.n));
  const int n = a.n;
  if (n == 1) return Permutation::identity(1);
  const Transversal ta = to_transversal(a);
  const Transversal tb = to_transversal(b);
  return find_identity_fixing(n, [&](const std::vector<int>& images) {
    const Permutation sigma = Permutation::from_images(images);
    for (int i = 1; i <= n; ++i)
      if (ta.perms[i - 1].conjugated_by(sigma) !=
          tb.perms[images[i - 1] - 1])
        return false;
    return true;
  });
}

CayleyTable random_table(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_table: order must be >= 1");
  std::vector<std::vector<int>> cells(n, std::vector<int>(n));
  for (int i = 1; i <= n; ++i) cells[i - 1][n - 1] = i;
  for (int j = 1; j <= n; ++j) cells[n - 1][j - 1] = j;
  for (int j = 1; j < n; ++j) {
    std::vector<int> column;
    column.reserve(n - 1);
    for (int v = 1; v <= n; ++v)
      if (v != j) column.push_back(v);
    // Fisher-Yates with explicit draws so streams are identical across
    // standard libraries.
    for (int i = static_cast<int>(column.size()) - 1; i > 0; --i) {
      const auto pick = static_cast<std::size_t>(rng() % (i + 1));
      std::swap(column[i], column[pick]);
    }
    for (int i = 1; i < n; ++i) cells[i - 1][j - 1] = column[i - 1];
  }
  return validate_table(cells);
}

}  // namespace qg
