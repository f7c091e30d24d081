#pragma once

#include <string>
#include <vector>

#include "hecke/combinatorics/multipartition.hpp"
#include "hecke/exact/scalar.hpp"

namespace hecke {

/// Parameters of H_{r,n}(Q) with r = p t. The T_0 relation is prod_k (T_0^p - Q_k^p) = 0.
struct Params {
  int r = 1, p = 1, n = 1;
  Field field = nullptr;
  Scalar q;
  std::vector<Scalar> Q;  // Q_1..Q_t
  Scalar eps;             // primitive p-th root of unity

  int t() const { return r / p; }
  /// Q'_1..Q'_r with Q'_{i+pj+1} = eps^i Q_{j+1} (stored 0-based).
  std::vector<Scalar> expanded() const;
  /// Checks r = p t, nonzero parameters, and (when rpn) p > 1, n >= 3.
  void validate(bool rpn) const;
  std::string describe() const;
};

/// Builds parameters with eps = zeta_M^(M/p) taken from the field.
Params make_params(Field f, int r, int p, int n, const Scalar& q, const std::vector<Scalar>& Q);
/// Same parameters over the residue field, x -> x0.
Params specialize_params(const Params& P, const Scalar& x0, Field K);

/// Residues q^{j-i} Q'_s of the nodes of lambda, as canonical strings with multiplicities.
std::vector<std::pair<Scalar, int>> content_function(const Multipartition& lam, const Params& P);
/// Canonical sorted multiset of residue strings; equal iff the content functions agree.
std::vector<std::string> content_key(const Multipartition& lam, const Params& P);

}  // namespace hecke
