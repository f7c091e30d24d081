#pragma once

#include <string>
#include <vector>

#include "hecke/combinatorics/multipartition.hpp"
#include "hecke/combinatorics/perm.hpp"

namespace hecke {

/// Composition b = (b_1..b_kappa) of n into non-negative parts.
struct Composition {
  std::vector<int> parts;

  int kappa() const { return static_cast<int>(parts.size()); }
  int n() const;
  /// b_{i..j} with 1-based inclusive bounds; zero when j < i.
  int sum(int i, int j) const;
  bool operator==(const Composition& o) const { return parts == o.parts; }
  bool operator<(const Composition& o) const { return parts < o.parts; }
  /// Text form "[2,1]".
  std::string to_string() const;
  static Composition parse(const std::string& text);
};

/// Lambda(n, kappa) in decreasing lexicographic order.
std::vector<Composition> enumerate_compositions(int n, int kappa);

/// Layout of the r = p*t components into kappa consecutive groups of p*t_alpha components.
struct GroupLayout {
  int p = 1;
  std::vector<int> t;  // t_1..t_kappa

  int kappa() const { return static_cast<int>(t.size()); }
  int r() const;
  /// First and one-past-last 0-based component of group alpha (0-based alpha).
  int first_comp(int alpha) const;
  int end_comp(int alpha) const { return first_comp(alpha + 1); }
  int group_of(int comp) const;
};

/// w_{a,b} = (s_{a+b-1} ... s_1)^b as a permutation of {1..n}.
Perm w_ab(int n, int a, int b);
/// w_b = w_{b_kappa, b_{1..kappa-1}} ... w_{b_2, b_{1..1}}.
Perm w_b(const Composition& b);
/// Distinguished right coset representatives of the Young subgroup S_b in S_n.
std::vector<Perm> coset_reps(const Composition& b);

bool in_lambda_b(const Multipartition& lam, const Composition& b, const GroupLayout& g);
std::vector<Tableau> std_b(const Multipartition& lam, const Composition& b, const GroupLayout& g);
std::vector<Tableau> std_b_plus(const Multipartition& lam, const Composition& b, const GroupLayout& g);
/// Slices lambda into kappa multipartitions; throws NotInLambdaB.
std::vector<Multipartition> split_lambda(const Multipartition& lam, const Composition& b, const GroupLayout& g);
/// Inverse of split_lambda.
Multipartition join_lambda(const std::vector<Multipartition>& parts);
Multipartition omega_b(const Composition& b, const GroupLayout& g);

}  // namespace hecke
