#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "hecke/combinatorics/composition.hpp"
#include "hecke/hecke/algebra.hpp"
#include "hecke/hecke/representation.hpp"

namespace hecke {

struct MurphyIndex {
  Multipartition shape;
  int s = 0, t = 0;  // positions in enumerate_standard_tableaux(shape)
};

/// Cell module S(lambda) on the basis m_{t^lambda t} modulo the ideal above lambda.
struct SpechtModule {
  Multipartition shape;
  std::vector<Tableau> tableaux;
  Representation rep;
  Matrix gram;
  int dim() const { return rep.dim; }
};

/// D(lambda) = S(lambda)/rad, realized on the span of the Gram pivot columns.
struct SimpleQuotient {
  Multipartition shape;
  int rank = 0;
  std::vector<int> support;  // tableau positions spanning the complement of the radical
  Representation rep;        // empty (dim 0) when D(lambda) = 0
};

/// Murphy basis of H_{r,n} and everything read off from it. Specht modules are built in the
/// total order (most dominant first) against an echelon of the Murphy elements already seen.
class Cellular {
 public:
  explicit Cellular(const Algebra& A);

  const Algebra& algebra() const { return A_; }
  /// Shapes, greatest first in the total order refining dominance.
  const std::vector<Multipartition>& shapes() const { return shapes_; }
  const std::vector<Tableau>& tableaux(const Multipartition& lam) const;

  /// x_lambda u_lambda^+.
  const Element& m_lambda(const Multipartition& lam) const;
  Element murphy_element(const MurphyIndex& idx) const;
  /// All m_st, shapes in order, then s, then t.
  std::vector<Element> murphy_basis() const;
  /// Rows are m_st in normal-form coordinates; throws SingularChangeOfBasis unless invertible.
  Matrix change_of_basis() const;
  /// Basis of the span of m_uv with shape strictly dominating lambda.
  std::vector<Element> ideal_above(const Multipartition& lam) const;

  const SpechtModule& specht(const Multipartition& lam) const;
  SimpleQuotient simple(const Multipartition& lam) const;

 private:
  void advance_to(size_t k) const;

  const Algebra& A_;
  std::vector<Multipartition> shapes_;
  std::map<Multipartition, std::vector<Tableau>> tab_;
  mutable std::map<Multipartition, Element> mlam_;
  mutable std::unique_ptr<Echelon> ech_;
  mutable size_t done_ = 0;
  mutable std::map<Multipartition, SpechtModule> specht_;
};

SimpleQuotient gram_and_simple(const SpechtModule& S);

/// Shapes grouped by equal content functions; classes ordered by first member.
std::vector<std::vector<Multipartition>> blocks(const Params& P);

/// M^{omega_b} = u^+_{omega_b} H_{r,n} with its Murphy basis {m_st : s in Std_b(lambda)}.
struct OmegaModule {
  Multipartition omega;
  Element u_plus;
  std::vector<Element> basis;
  int rank_of_span = 0;  // rank of u^+ H computed from the normal-form basis
};
OmegaModule m_omega_module(const Cellular& C, const Composition& b, const GroupLayout& g);

}  // namespace hecke
