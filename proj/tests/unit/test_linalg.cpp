#include <random>

#include "doctest.h"
#include "hecke/errors.hpp"
#include "hecke/linalg/matrix.hpp"

using namespace hecke;

namespace {

Matrix random_matrix(Field f, int r, int c, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-2, 2), z(0, 3);
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Scalar::from_int(f, d(rng)) * Scalar::zeta(f, z(rng));
  return m;
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("inverse and determinant agree on random matrices") {
    Field f = cyclotomic_field(5);
    std::mt19937 rng(1);
    for (int it = 0; it < 10; ++it) {
      Matrix A = random_matrix(f, 4, 4, rng);
      Scalar d = determinant(A);
      if (d.is_zero()) {
        CHECK(rank(A) < 4);
        continue;
      }
      CHECK(rank(A) == 4);
      CHECK((A * inverse(A)).is_identity());
      CHECK(determinant(A * A) == d * d);
    }
  }

  TEST_CASE("kernels and left solves") {
    Field f = function_field(3);
    std::mt19937 rng(2);
    Matrix A = random_matrix(f, 3, 5, rng);
    A = A.stack(A.select_rows({0}).scaled(Scalar::x(f)));
    Matrix K = right_kernel(A);
    CHECK(K.rows() == 5 - rank(A));
    CHECK((A * K.transpose()).is_zero());
    Matrix L = left_kernel(A);
    CHECK((L * A).is_zero());
    CHECK(L.rows() == 4 - rank(A));
    Matrix X0 = random_matrix(f, 2, 4, rng);
    Matrix B = X0 * A;
    Matrix X;
    REQUIRE(solve_left(A, B, X));
    CHECK(X * A == B);
  }

  TEST_CASE("incremental echelon tracks coordinates") {
    Field f = cyclotomic_field(4);
    std::mt19937 rng(3);
    Echelon e(f, 6, true);
    std::vector<SparseVec> inputs;
    for (int k = 0; k < 5; ++k) {
      Matrix m = random_matrix(f, 1, 6, rng);
      SparseVec v = sparse_from_dense(m.row(0));
      if (k == 3) {
        v.clear();
        for (int j = 0; j < 6; ++j) {
          Scalar s = dense_from_sparse(f, 6, inputs[0])[j] + dense_from_sparse(f, 6, inputs[1])[j];
          if (!s.is_zero()) v.emplace_back(j, s);
        }
      }
      inputs.push_back(v);
      e.insert(v);
    }
    CHECK(e.rank() == 4);
    Matrix w = random_matrix(f, 1, 6, rng);
    SparseVec target;
    std::vector<Scalar> acc(6, Scalar::zero(f));
    for (int k = 0; k < 5; ++k) {
      Scalar c = Scalar::from_int(f, k + 1);
      auto d = dense_from_sparse(f, 6, inputs[k]);
      for (int j = 0; j < 6; ++j) acc[j] += c * d[j];
    }
    target = sparse_from_dense(acc);
    SparseVec coords;
    CHECK(e.reduce(target, &coords).empty());
    std::vector<Scalar> back(6, Scalar::zero(f));
    for (auto& [i, c] : coords) {
      auto d = dense_from_sparse(f, 6, inputs[i]);
      for (int j = 0; j < 6; ++j) back[j] += c * d[j];
    }
    CHECK(sparse_from_dense(back).size() == target.size());
    for (int j = 0; j < 6; ++j) CHECK(back[j] == acc[j]);
  }
}
