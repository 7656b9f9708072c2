#ifndef QG_CAYLEY_HPP
#define QG_CAYLEY_HPP

#include <optional>
#include <random>
#include <vector>

#include "qg/perm.hpp"

namespace qg {

/// Operation table of a right quasigroup with identity on {1..n}:
/// cells[i-1][j-1] = x_i o x_j, with the identity pinned at index n.
/// Axioms: every column is a bijection on {1..n} (unique x with x o a = b),
/// row n and column n are the identity row/column.
struct CayleyTable {
  int n = 0;
  std::vector<std::vector<int>> cells;

  int at(int i, int j) const { return cells[i - 1][j - 1]; }  // x_i o x_j

  bool operator==(const CayleyTable&) const = default;
};

/// Right transversal of the point stabiliser of n inside S_n: one coset
/// representative sigma_i per coset, identified by n^{sigma_i} == i, with
/// sigma_n the identity.
struct Transversal {
  int n = 0;
  std::vector<Permutation> perms;  // perms[i-1] = sigma_i

  bool operator==(const Transversal&) const = default;
};

/// Checks both axioms and returns the table; throws std::invalid_argument
/// naming the first violated axiom and the offending column or row.
CayleyTable validate_table(const std::vector<std::vector<int>>& cells);

/// Checks the coset-representative invariants (n^{sigma_i} == i, sigma_n
/// identity); throws std::invalid_argument on the first violation.
Transversal validate_transversal(std::vector<Permutation> perms);

/// Column i of the table read as the permutation j -> x_j o x_i. These are
/// the canonical coset representatives; from_transversal(to_transversal(q))
/// reproduces q exactly.
Transversal to_transversal(const CayleyTable& q);

/// cells[i][j] = n^{sigma_i sigma_j}. Accepts arbitrary coset
/// representatives, not only column permutations; the result is always a
/// valid table.
CayleyTable from_transversal(const Transversal& t);

/// Relabels by sigma in S_n with sigma(n) == n (throws otherwise):
/// result[i^sigma][j^sigma] = (q[i][j])^sigma. This is the conjugation
/// action transported to tables.
CayleyTable relabel(const CayleyTable& q, const Permutation& sigma);

/// Conjugates every representative and reindexes: result sigma'_{i^s} =
/// s^-1 sigma_i s. Matches relabel through the table correspondence.
Transversal conjugate_transversal(const Transversal& t, const Permutation& s);

/// Searches the (n-1)! identity-fixing bijections f for one with
/// b[i^f][j^f] == (a[i][j])^f everywhere. A verification oracle for small
/// n (<= 8), not a production isomorphism algorithm.
std::optional<Permutation> isomorphic_by_bijection(const CayleyTable& a,
                                                   const CayleyTable& b);

/// Searches for sigma fixing n with sigma^-1 sigma^a_i sigma == sigma^b_{i^sigma}
/// for every i, i.e. the transversals are conjugate. Agrees with the
/// bijection search witness for witness.
std::optional<Permutation> isomorphic_by_conjugation(const CayleyTable& a,
                                                     const CayleyTable& b);

/// Uniformly random valid table of order n (each non-identity column an
/// independent uniform coset representative). Deterministic for a given
/// generator state across platforms.
CayleyTable random_table(int n, std::mt19937_64& rng);

}  // namespace qg

#endif  // QG_CAYLEY_HPP
