#pragma once

#include <string>
#include <vector>

#include "hecke/hecke/algebra.hpp"
#include "hecke/hecke/representation.hpp"

namespace hecke {

/// Finite-dimensional algebra on a basis e_0..e_{N-1} with an automorphism theta of order p.
/// right_mult[j] is the matrix of x -> x e_j; rows of theta are the images theta(e_i).
struct FDAlgebra {
  Field field = nullptr;
  int dim = 0;
  std::vector<Matrix> right_mult;
  Matrix theta;
  int p = 1;
  std::vector<Scalar> one;  // coordinates of the identity

  std::vector<Scalar> mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
  std::vector<Scalar> apply_theta(const std::vector<Scalar>& a, int power) const;
};

/// H_{r,n} on its normal-form basis with theta = sigma.
FDAlgebra regular_fd_algebra(const Algebra& A);

/// A x <theta^{p/h}>, elements stored as h blocks of A-coordinates (block k carries theta^{k p/h}).
class CrossedProduct {
 public:
  /// Throws NotAutomorphism or WrongOrder when theta fails to be an automorphism of order dividing p.
  CrossedProduct(const FDAlgebra& A, int h);

  int dim() const { return h_ * A_.dim; }
  int h() const { return h_; }
  const FDAlgebra& base() const { return A_; }
  std::vector<Scalar> embed(const std::vector<Scalar>& a, int k = 0) const;
  std::vector<Scalar> mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

 private:
  const FDAlgebra& A_;
  int h_;
};

/// theta acting on H_{r,n}-modules through its values on the generators T_0..T_{n-1}:
/// theta(T_i) = scale[i] T_i. For sigma the scales are (eps, 1, ..., 1).
struct Twisting {
  Field field = nullptr;
  int p = 1;
  Scalar eps;
  std::vector<Scalar> scale;
};
Twisting sigma_twisting(const Params& P);

/// M^{theta^power}: rho'(g) = rho(theta^power(g)). Negative powers are allowed.
Representation twist(const Representation& M, const Twisting& tw, int power);

/// A module over A x <theta^{p/h}>: the A-action plus the matrix of theta^{p/h}.
struct CrossedModule {
  Representation base;
  Matrix theta;
  int h = 1;
  int dim() const { return base.dim; }
  /// Generators T_0..T_{n-1} followed by theta^{p/h}, for hom computations.
  Representation as_representation() const;
};

/// Inertia data of a simple module L: k minimal with L ~ L^{theta^k}, l = p/k, and an
/// isomorphism phi with phi^l = 1 intertwining L with L^{theta^{-k}} (the variance that makes
/// v.(a theta^{mk}) = eps^{mki} phi^m(va) an action).
struct InertiaData {
  Representation L;
  int l = 1, k = 1;
  Matrix phi;
  std::string extension;  // nonempty when phi needed a radical extension of the base field
};

/// Throws NotAbsolutelyIrreducible when End(L) is bigger than the field, NotSimple when the
/// generated operator algebra is not the full matrix algebra.
InertiaData inertia_group(const Representation& L, const Twisting& tw);
/// Absolutely simple: the generator matrices span the full matrix algebra.
bool is_absolutely_simple(const Representation& L);

/// L_{l,i} over A x G_L.
CrossedModule module_Lli(const InertiaData& data, int i, const Twisting& tw);
/// Restriction to A x H' (h' | h) or induction to A x H' (h | h').
CrossedModule restrict_crossed(const CrossedModule& M, int h_to, const Twisting& tw);
CrossedModule induce_crossed(const CrossedModule& M, int h_to, const Twisting& tw);

/// Character of an (A x H)-module on the spanning set {w theta^{m p/h}}, w a basis word of A.
std::vector<Scalar> crossed_character(const Algebra& A, const CrossedModule& M, const Twisting& tw);

struct CrossedSimple {
  int orbit_rep = 0;  // index into the list of simples of A
  int l = 1;
  int i = 0;
  CrossedModule module;  // L_{l,i} induced to A x Z_p
};
/// Simples of A x Z_p from the simples of A: one entry per (orbit, i).
std::vector<CrossedSimple> simples_of_crossed_product(const std::vector<Representation>& simples, const Twisting& tw);

/// Per-factor table [S_{d0,i} : D_{d0,j}], indexed by residues mod d0.
using SplitTable = std::vector<std::vector<long>>;
/// Sum over (j_1..j_kappa) in [0,d0)^kappa with j_1 + ... + j_kappa = (kappa-1) i + j mod d0 of
/// the product of tables[alpha][i][j_alpha]. Throws TableIncomplete.
long formula_main3(const std::vector<SplitTable>& tables, int kappa, int d0, int i, int j);

/// One term of the sum over twists in the splittable reduction.
struct SplitRequest {
  int a = 0;   // twist exponent, 1 <= a <= p/lcm(s,d)
  int i = 0;   // S index mod d0
  int j = 0;   // D index mod d0
  int d0 = 1;  // |G_S cap G_D|
};
/// Index set {(S_{s,i} restricted to G_0, D^{theta^a}_{d,j} restricted to G_0)}, one term per
/// double coset a in Z_p / G_S G_D.
/// Throws CyclicityNotEstablished unless `cyclic` is set.
std::vector<SplitRequest> splittable_reduction(int p, int s, int d, int i, int j, bool cyclic);

}  // namespace hecke
