#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hecke/cellular/cellular.hpp"
#include "hecke/combinatorics/composition.hpp"
#include "hecke/hecke/algebra.hpp"
#include "hecke/hecke/representation.hpp"

namespace hecke {

/// Q = Q_1 v ... v Q_kappa, each group a union of (eps,q)-orbits.
struct OrbitPartition {
  int kappa = 0;
  std::vector<std::vector<int>> groups;  // 0-based indices into the input Q list
  std::vector<int> t;                    // group sizes
  std::vector<int> order;                // grouped position -> input index

  bool is_grouped() const;
  GroupLayout layout(int p) const { return GroupLayout{p, t}; }
};

/// True when a = eps^i q^j b for some integers i, j.
bool same_orbit(const Params& P, const Scalar& a, const Scalar& b);
/// Finest partition into orbit-closed groups, groups ordered by their first member.
OrbitPartition orbit_partition(const Params& P);
/// P with Q reordered so that every group is consecutive.
Params grouped_params(const Params& P, const OrbitPartition& part);

struct VbElements {
  Element v, minus, u_plus;  // v = minus * u_plus
};

/// One exact identity check.
struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

/// v_b H_{r,n} (or v_b H_{r,p,n} when `fixed`) on the basis v_b L^c T_w of the basis results.
struct VbModule {
  Composition b;
  bool fixed = false;
  Element v;
  std::vector<Element> basis;
  std::vector<std::pair<std::vector<int>, Perm>> labels;  // (c, w) per basis element
  Representation rep;  // over A.generators(), or A.subalgebra_generators() when fixed
  std::shared_ptr<const Echelon> coords;  // tracked echelon of `basis`
  int dim() const { return static_cast<int>(basis.size()); }
};

struct EndoReport {
  Composition b;
  long dim_Hb = 0;
  int end_rn = 0;      // dim End_{H_{r,n}}(V^b)
  int end_rpn = 0;     // dim End_{H_{r,p,n}}(V^b)
  std::vector<Check> checks;
};

struct HpbReport {
  Composition b;
  long dim_Hpb_formula = 0;  // p^{kappa-1} dim H_b / p^kappa
  int end_rpn = 0;           // dim End_{H_{r,p,n}}(v_b H_{r,p,n})
  int hpb_action_dim = 0;    // dimension of the H_{p,b} operator algebra
  std::vector<Check> checks;
};

/// The bimodules V^b = v_b H_{r,n} for an algebra whose Q list is already grouped by orbits.
class Morita {
 public:
  explicit Morita(const Cellular& C);

  const Algebra& algebra() const { return A_; }
  const OrbitPartition& partition() const { return part_; }
  GroupLayout layout() const { return part_.layout(A_.params().p); }
  std::vector<Composition> compositions() const { return enumerate_compositions(A_.n(), part_.kappa); }

  /// prod_{j=1}^m (L_j^p - Q_k^p), k 1-based.
  Element u_factor(int m, int k) const;
  Element v_ab_plus(int a, int b, int s) const;
  Element v_ab(int a, int b, int s) const;
  VbElements v_b(const Composition& b) const;

  /// Prop. v-shift for every admissible i and every k; throws IdentityFailed.
  std::vector<Check> shift_identities(const Composition& b) const;
  /// Left and right annihilation for every alpha with b_alpha != 0; throws IdentityFailed.
  std::vector<Check> vanishing_identities(const Composition& b) const;

  /// Spanning set of the basis results, checked independent and spanning; throws RankDeficient.
  VbModule vb_basis(const Composition& b, bool fixed) const;
  /// The full module V^b with the subalgebra generators acting.
  Representation restricted(const VbModule& V) const;

  Element theta_b(const Composition& b, const Element& h) const;
  Element v_st(const Composition& b, const MurphyIndex& idx) const;
  /// theta_b kills m_st for s outside Std_b^+, and the remaining v_st form a basis of V^b.
  std::vector<Check> v_st_checks(const Composition& b) const;

  /// Operators of left multiplication by x on the module; throws NotInvariant.
  Matrix left_operator(const VbModule& V, const Element& x) const;
  /// Images of T_0^{(alpha)}, T_1^{(alpha)}, ... for each alpha with b_alpha > 0.
  std::vector<std::vector<Element>> hb_generators(const Composition& b) const;

  EndoReport endo_verify_main1(const Composition& b) const;
  HpbReport hpb_prime(const Composition& b) const;

  /// dim H_b = prod (p t_alpha)^{b_alpha} b_alpha!.
  long dim_Hb(const Composition& b) const;

 private:
  const Cellular& C_;
  const Algebra& A_;
  OrbitPartition part_;
  std::vector<Scalar> Qp_;  // Q_k^p
};

}  // namespace hecke
