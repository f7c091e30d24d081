#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hecke/combinatorics/perm.hpp"
#include "hecke/hecke/params.hpp"
#include "hecke/linalg/matrix.hpp"

namespace hecke {

/// Element of H_{r,n}: sorted sparse coordinates in the basis L_1^{c_1}...L_n^{c_n} T_w.
using Element = SparseVec;

Element elem_add(const Element& a, const Element& b);
Element elem_sub(const Element& a, const Element& b);
Element elem_scale(const Element& a, const Scalar& s);
Element elem_neg(const Element& a);

/// Dense scratch accumulator for building elements.
class Accumulator {
 public:
  Accumulator(Field f, int dim);
  void add(int idx, const Scalar& s);
  void add(const Element& e, const Scalar& s);
  void add(const Element& e);
  Element take();

 private:
  Field f_;
  std::vector<Scalar> v_;
  std::vector<char> used_;
  std::vector<int> touched_;
};

/// The Ariki-Koike algebra with normal-form multiplication. Tables are built at construction;
/// afterwards the object is read-only apart from an internally locked star cache.
class Algebra {
 public:
  explicit Algebra(Params P);

  const Params& params() const { return P_; }
  Field field() const { return P_.field; }
  int n() const { return P_.n; }
  int r() const { return P_.r; }
  int dim() const { return dim_; }
  int nperm() const { return nfact_; }

  int index(const std::vector<int>& c, const Perm& w) const;
  std::vector<int> exponents(int idx) const;
  Perm perm(int idx) const { return perms_[idx % nfact_]; }
  int perm_index(int idx) const { return idx % nfact_; }
  int exp_index(int idx) const { return idx / nfact_; }

  Element zero() const { return {}; }
  Element one() const;
  Element scalar(const Scalar& s) const;
  Element word(const std::vector<int>& c, const Perm& w) const;
  /// T_0 for i = 0, otherwise T_i (1 <= i < n).
  Element T(int i) const;
  Element Tw(const Perm& w) const;
  Element L(int k) const;
  Element T0_inverse() const { return t0inv_; }
  Element L_inverse(int k) const;
  /// T_0, T_1, ..., T_{n-1}.
  std::vector<Element> generators() const;
  /// T_0^p, T_0^{-1} T_1 T_0, T_1, ..., T_{n-1}: generators of the sigma-fixed subalgebra.
  std::vector<Element> subalgebra_generators() const;

  Element mul(const Element& a, const Element& b) const;
  Element rmul_T(const Element& a, int i) const;
  Element rmul_L(const Element& a, int k) const;
  Element lmul_T(int i, const Element& a) const;
  Element pow(const Element& a, int e) const;

  /// Anti-automorphism fixing T_0..T_{n-1}.
  Element star(const Element& a) const;
  /// sigma^power, diagonal on the basis with eigenvalue eps^{power * sum c}.
  Element sigma(const Element& a, int power = 1) const;
  /// Conjugation T_0^{-1} a T_0.
  Element tau(const Element& a) const;
  /// S_1 = T_0^p and S_m = T_0^{-1} L_m.
  Element murphy_S(int m) const;
  /// Indices of basis words with exponent sum divisible by p.
  std::vector<int> subalgebra_basis() const;
  bool in_subalgebra(const Element& a) const;

  /// Matrix of v -> v g on the span of `basis` (rows = coordinates of basis_i * g); throws NotInvariant.
  Matrix action_matrix(const std::vector<Element>& basis, const Element& g) const;

  std::string to_string(const Element& a) const;
  Element parse(const std::string& text) const;

 private:
  struct TLTerm {
    int j;      // L_j, 1-based
    int u;      // permutation rank
    Scalar c;
  };
  using TLList = std::vector<TLTerm>;

  Element hecke_rmul_word(int cidx, int v, const std::vector<int>& word, const Scalar& coef) const;
  Element rmul_L_build(const Element& a, int k);
  const Element& X(int j, const std::vector<int>& c);
  void build_E();
  void build_tables();
  int cindex(const std::vector<int>& c) const;

  Params P_;
  int dim_ = 0, nfact_ = 1, ncexp_ = 1;
  std::vector<Perm> perms_;
  std::vector<std::vector<int>> words_;  // reduced word per permutation rank
  std::vector<std::vector<int>> simple_right_;  // [rank][i] = rank of w s_i
  std::vector<std::vector<int>> simple_left_;   // [rank][i] = rank of s_i w
  Scalar q_, qinv_, qm1_;
  std::vector<std::vector<TLList>> TL_;  // [rank][k]
  std::vector<Element> E_;               // E_[j] = normal form of L_j^r
  std::map<std::pair<int, int>, Element> Xmemo_;
  std::vector<std::vector<Element>> RL_;  // [basis idx][k]
  Element t0inv_;
  mutable std::mutex star_mu_;
  mutable std::vector<std::unique_ptr<Element>> star_cache_;
};

/// Basis (echelon residues dropped, original products kept) of the right module generated by
/// `seeds` under right multiplication by `gens`.
std::vector<Element> spin(const Algebra& A, const std::vector<Element>& seeds, const std::vector<Element>& gens);

}  // namespace hecke
