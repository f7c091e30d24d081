#pragma once

#include <string>
#include <vector>

namespace hecke {

/// Permutation of {0..n-1} acting on the right: i.(uv) = (i.u).v.
/// img[i] is the image of i; s_i (1 <= i < n) swaps i-1 and i in 0-based terms.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);
  explicit Perm(std::vector<int> img);
  static Perm identity(int n) { return Perm(n); }
  static Perm simple(int n, int i);
  /// Product s_{w[0]} s_{w[1]} ... of simple reflections (1-based indices).
  static Perm from_word(int n, const std::vector<int>& word);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }
  int length() const;
  /// Reduced word (1-based simple reflections) whose product is this permutation.
  std::vector<int> reduced_word() const;
  /// True when l(w s_i) > l(w).
  bool right_ascent(int i) const;
  /// True when l(s_i w) > l(w).
  bool left_ascent(int i) const;
  Perm inverse() const;
  bool is_identity() const;
  Perm operator*(const Perm& o) const;
  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  /// Position of this permutation in the lexicographic list of all permutations of its size.
  int rank() const;
  static Perm unrank(int n, int k);

  /// One-line notation with 1-based values, e.g. "[2,3,1]".
  std::string to_string() const;

 private:
  std::vector<int> img_;
};

int factorial(int n);
std::vector<Perm> all_perms(int n);

}  // namespace hecke
