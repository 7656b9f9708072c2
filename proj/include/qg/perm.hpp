#ifndef QG_PERM_HPP
#define QG_PERM_HPP

#include <string>
#include <vector>

namespace qg {

/// Permutation of {1..m}, stored as its image sequence: images()[j-1] = j^p.
///
/// Composition is a right action throughout the library:
///     j^(p*q) = (j^p)^q
/// so exponent chains read left to right. Permutations are immutable after
/// construction and safe to share between threads.
class Permutation {
 public:
  static Permutation identity(int m);

  /// Builds from a 1-based image sequence; throws std::invalid_argument
  /// unless the sequence is a bijection on {1..m}.
  static Permutation from_images(std::vector<int> images);

  /// Builds a degree-m permutation from disjoint cycles (figures 1..m);
  /// figures not mentioned stay fixed.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles,
                                 int m);

  /// Accepts one-line image notation ("2 1 4 5 3"), cycle notation
  /// ("(1 2)(3 4 5)"), or "id". For the cycle and "id" forms the degree is
  /// taken from `degree` when positive, otherwise from the largest figure
  /// mentioned.
  static Permutation parse(const std::string& text, int degree = 0);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int j) const { return images_[j - 1]; }  // j^p
  const std::vector<int>& images() const { return images_; }

  /// Right-action composition: j^(*this * q) == (j^*this)^q.
  Permutation operator*(const Permutation& q) const;

  Permutation inverse() const;

  /// s^-1 * (*this) * s, so (j^s)^result == (j^*this)^s.
  Permutation conjugated_by(const Permutation& s) const;

  /// k-th power under composition, k >= 0; pow(0) is the identity.
  Permutation pow(long k) const;

  /// Disjoint cycles covering {1..m}. Fixed points are kept as length-1
  /// cycles; each cycle starts at its least figure and cycles are ordered
  /// by least figure.
  std::vector<std::vector<int>> cycles() const;

  std::string one_line() const;      // "2 1 4 5 3"
  std::string cycle_string() const;  // "(1 2)(3 4 5)"; fixed points omitted, "id" if trivial

  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

}  // namespace qg

#endif  // QG_PERM_HPP
