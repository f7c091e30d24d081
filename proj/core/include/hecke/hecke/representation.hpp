#pragma once

#include <map>
#include <vector>

#include "hecke/hecke/algebra.hpp"

namespace hecke {

/// A right H_{r,n}-module on row vectors, given by the matrices of T_0, T_1, ..., T_{n-1}.
struct Representation {
  Field field = nullptr;
  int dim = 0;
  std::vector<Matrix> gens;
};

/// Evaluates basis words and elements in a representation; word matrices are cached.
class RepEvaluator {
 public:
  RepEvaluator(const Algebra& A, const Representation& R);
  const Matrix& word(int idx);
  Matrix element(const Element& h);
  const Matrix& L(int k) { return L_[k]; }

 private:
  const Algebra& A_;
  const Representation& R_;
  std::vector<Matrix> L_;  // 1-based
  std::map<int, Matrix> words_, lpow_, tw_;
};

/// Checks the defining relations of H_{r,n} on the generator matrices.
bool satisfies_relations(const Algebra& A, const Representation& R);

/// Intertwiners F (rho_M(g) F = F rho_N(g) for every generator g) as a basis of matrices.
/// M and N must use the same generator list. Solved by spinning M from the standard basis, so
/// the unknowns are the images of the spin seeds rather than all dim M * dim N entries.
std::vector<Matrix> hom_basis(const Representation& M, const Representation& N);
int hom_dimension(const Representation& M, const Representation& N);

}  // namespace hecke
