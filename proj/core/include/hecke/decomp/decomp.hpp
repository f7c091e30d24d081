#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hecke/cellular/cellular.hpp"
#include "hecke/clifford/clifford.hpp"
#include "hecke/morita/morita.hpp"

namespace hecke {

/// (F, O, K): F = Q(zeta_M)(x) with q = x, O the functions defined at q0, K = Q(zeta_M).
/// Without q0 the system is generic and K = F.
struct ModularSystem {
  int M = 1;
  int r = 1, p = 1, n = 1;
  std::optional<Scalar> q0;  // in K
  std::vector<Scalar> Q;     // Q_1..Q_t in Q(zeta_M)

  Field F() const { return function_field(M); }
  Field K() const { return q0 ? cyclotomic_field(M) : function_field(M); }
  bool generic() const { return !q0.has_value(); }
  Params generic_params() const;
  Params special_params() const;
  std::string describe() const;
};

/// q0 = zeta_M^a (nullopt for generic), Q_i = zeta_M^{b_i}.
ModularSystem make_system(int M, int r, int p, int n, std::optional<long> q_power, const std::vector<long>& Q_powers);

/// A simple module label: orbit representative, inertia order l and index i mod l.
struct SimpleLabel {
  Multipartition shape;
  int l = 1;
  int i = 0;
  std::string to_string() const;
  bool operator==(const SimpleLabel& o) const { return shape == o.shape && l == o.l && i == o.i; }
};

struct DecompositionMatrix {
  std::vector<SimpleLabel> rows, cols;
  std::vector<std::vector<long>> entries;

  long at(int i, int j) const { return entries[i][j]; }
  bool is_identity() const;
  std::string to_string() const;
};

/// m with traces_M = sum_j m_j traces_j, checked to be non-negative integers accounting for
/// dim M. Throws IncompleteSimpleList.
std::vector<long> composition_multiplicities(const std::vector<Scalar>& traces_M, int dim_M,
                                             const std::vector<std::vector<Scalar>>& traces_simples,
                                             const std::vector<int>& dims);
/// The same against a fixed list of simples, reusing one inverted k x k block of traces.
class CharacterSolver {
 public:
  /// Throws IncompleteSimpleList when the characters are dependent.
  CharacterSolver(std::vector<std::vector<Scalar>> traces, std::vector<int> dims);
  std::vector<long> multiplicities(const std::vector<Scalar>& traces_M, int dim_M) const;

 private:
  std::vector<std::vector<Scalar>> traces_;
  std::vector<int> dims_;
  std::vector<int> pivots_;
  Matrix inv_;
};
/// Traces of the basis words `words` of A on M, composed with the projection `proj` when given.
std::vector<Scalar> word_traces(const Algebra& A, const Representation& M, const std::vector<int>& words,
                                const Matrix* proj = nullptr);
/// The oracle on H_{r,n}-modules over every basis word.
std::vector<long> composition_multiplicities(const Algebra& A, const Representation& M,
                                             const std::vector<Representation>& simples);

/// Both sides of a modular system for H_{r,n}: generic Specht modules, their specializations, the
/// nonzero D(mu), the sigma-action on labels found by intertwiners, and [S(lambda):D(mu)].
class HrnFamily {
 public:
  explicit HrnFamily(const ModularSystem& sys);

  const ModularSystem& system() const { return sys_; }
  const Algebra& AF() const { return *AF_; }
  const Algebra& AK() const { return sys_.generic() ? *AF_ : *AK_; }
  const Twisting& twF() const { return twF_; }
  const Twisting& twK() const { return twK_; }

  const std::vector<Multipartition>& shapes() const { return shapes_; }
  const std::vector<Multipartition>& dshapes() const { return dshapes_; }
  const Representation& SF(int i) const { return SF_[i]; }
  const Representation& SK(int i) const { return SK_[i]; }
  const Representation& D(int j) const { return D_[j]; }
  /// S(shapes[i])^sigma ~ S(shapes[sigma_S[i]]), and likewise for D.
  const std::vector<int>& sigma_S() const { return sigma_S_; }
  const std::vector<int>& sigma_D() const { return sigma_D_; }
  const DecompositionMatrix& matrix() const { return dm_; }
  /// Failed property checks (unitriangularity, blocks); empty when all hold.
  const std::vector<Check>& checks() const { return checks_; }

  int shape_index(const Multipartition& lam) const;
  int dshape_index(const Multipartition& mu) const;

 private:
  ModularSystem sys_;
  std::unique_ptr<Algebra> AF_, AK_;
  std::unique_ptr<Cellular> CF_, CK_;
  Twisting twF_, twK_;
  std::vector<Multipartition> shapes_, dshapes_;
  std::vector<Representation> SF_, SK_, D_;
  std::vector<int> sigma_S_, sigma_D_;
  DecompositionMatrix dm_;
  std::vector<Check> checks_;
};

/// Rows all lambda, columns the mu with D(mu) != 0. Throws GenericNotSemisimple.
DecompositionMatrix decomposition_matrix_hrn(const ModularSystem& sys);

/// A simple H_{r,p,n}-module as the image of an idempotent commuting with H_{r,p,n} on an
/// H_{r,n}-module (the identity when the inertia group is trivial).
struct RpnModule {
  SimpleLabel label;
  Representation parent;
  Matrix proj;
  int dim = 0;
  /// Action of the subalgebra generators on a basis of the image.
  Representation restricted(const Algebra& A) const;
  /// The same with T_0^{-1} h T_0 acting in place of h.
  Representation restricted_tau(const Algebra& A) const;
};

struct DirectResult {
  std::vector<RpnModule> F_simples, K_simples;
  DecompositionMatrix matrix;
  std::vector<Check> checks;
};

/// Direct decomposition numbers of H_{r,p,n}: eigenspace simples on both sides, the trace
/// oracle on the subalgebra basis words. Throws LatticeFailure, NotAbsolutelyIrreducible.
DirectResult simples_and_decomp_hrpn_direct(const ModularSystem& sys);

/// [S_i:D_j] = [S_{i+1}:D_{j+1}] within every pair of orbits.
std::vector<Check> verify_cyclicity(const DecompositionMatrix& m);

struct ReducedResult {
  DecompositionMatrix matrix;
  std::vector<std::string> trace;  // recursion trace, one line per step
};

/// Orbit partition, Theorem main1 factors per b, the splittable reduction with formula_main3,
/// labels mapped back to multipartitions of the input Q order.
ReducedResult decomp_hrpn_reduced(const ModularSystem& sys);

struct CompareReport {
  bool equal = false;
  std::vector<std::string> notes;
};
/// Entrywise comparison after matching labels by orbit representative and cyclic index shifts.
/// Throws LabelMismatch when the orbit label sets differ.
CompareReport compare_matrices(const DecompositionMatrix& direct, const DecompositionMatrix& reduced);

/// Nonzero [S(lambda):D(mu)] only within equal content classes.
std::vector<Check> block_compatibility(const HrnFamily& fam);

/// Canonical orbit representative: the shape among `orbit` appearing first in enumerate_multipartitions.
Multipartition canonical_shape(const std::vector<Multipartition>& orbit);

}  // namespace hecke
