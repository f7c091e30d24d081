#include "hecke/hecke/representation.hpp"

#include "hecke/errors.hpp"

namespace hecke {

RepEvaluator::RepEvaluator(const Algebra& A, const Representation& R) : A_(A), R_(R), L_(A.n() + 1) {
  if (static_cast<int>(R.gens.size()) != A.n()) fail(ErrorCode::ShapeMismatch, "representation needs n generator matrices");
  const Scalar& q = A.params().q;
  L_[1] = R.gens[0];
  for (int k = 2; k <= A.n(); ++k) L_[k] = (R.gens[k - 1] * L_[k - 1] * R.gens[k - 1]).scaled(q.inv());
}

const Matrix& RepEvaluator::word(int idx) {
  auto it = words_.find(idx);
  if (it != words_.end()) return it->second;
  int cidx = A_.exp_index(idx), v = A_.perm_index(idx);
  auto lp = lpow_.find(cidx);
  if (lp == lpow_.end()) {
    Matrix m = Matrix::identity(R_.field, R_.dim);
    auto c = A_.exponents(idx);
    for (int k = 1; k <= A_.n(); ++k)
      for (int e = 0; e < c[k - 1]; ++e) m = m * L_[k];
    lp = lpow_.emplace(cidx, std::move(m)).first;
  }
  auto tw = tw_.find(v);
  if (tw == tw_.end()) {
    Matrix m = Matrix::identity(R_.field, R_.dim);
    for (int i : A_.perm(idx).reduced_word()) m = m * R_.gens[i];
    tw = tw_.emplace(v, std::move(m)).first;
  }
  return words_.emplace(idx, lp->second * tw->second).first->second;
}

Matrix RepEvaluator::element(const Element& h) {
  Matrix m(R_.field, R_.dim, R_.dim);
  for (const auto& [idx, c] : h) m = m + word(idx).scaled(c);
  return m;
}

bool satisfies_relations(const Algebra& A, const Representation& R) {
  const Params& P = A.params();
  Matrix I = Matrix::identity(R.field, R.dim);
  const auto& g = R.gens;
  Matrix cyc = I;
  for (const auto& Qs : P.expanded()) cyc = cyc * (g[0] - I.scaled(Qs));
  if (!cyc.is_zero()) return false;
  int n = A.n();
  if (n >= 2 && g[0] * g[1] * g[0] * g[1] != g[1] * g[0] * g[1] * g[0]) return false;
  for (int i = 1; i < n; ++i) {
    if (!((g[i] - I.scaled(P.q)) * (g[i] + I)).is_zero()) return false;
    if (i + 1 < n && g[i] * g[i + 1] * g[i] != g[i + 1] * g[i] * g[i + 1]) return false;
    if (i >= 2 && g[0] * g[i] != g[i] * g[0]) return false;
    for (int j = i + 2; j < n; ++j)
      if (g[i] * g[j] != g[j] * g[i]) return false;
  }
  return true;
}

namespace {

SparseVec row_times(const SparseVec& v, const Matrix& A) {
  std::vector<Scalar> out(A.cols(), Scalar::zero(A.field()));
  for (const auto& [i, c] : v)
    for (int j = 0; j < A.cols(); ++j)
      if (!A.at(i, j).is_zero()) out[j] += c * A.at(i, j);
  return sparse_from_dense(out);
}

/// Spin data for Hom(M, N): images[l] has one row per surviving solution and gives the image
/// of spin vector l.
struct HomSolve {
  std::vector<SparseVec> spin;
  std::vector<Matrix> images;
  int k = 0;
};

HomSolve solve_hom(const Representation& M, const Representation& N) {
  if (M.gens.size() != N.gens.size()) fail(ErrorCode::ShapeMismatch, "modules use different generator lists");
  if (M.field != N.field) fail(ErrorCode::FieldMismatch, "modules over different fields");
  Field F = M.field;
  int dM = M.dim, dN = N.dim;
  HomSolve H;
  if (dM == 0 || dN == 0) return H;
  Echelon ech(F, dM, true);
  std::vector<int> queue;
  auto widen = [&](int extra) {
    for (auto& Y : H.images) {
      Matrix Z(F, H.k + extra, dN);
      for (int a = 0; a < H.k; ++a)
        for (int j = 0; j < dN; ++j) Z.at(a, j) = Y.at(a, j);
      Y = std::move(Z);
    }
    H.k += extra;
  };
  for (int j = 0; j < dM; ++j) {
    SparseVec e{{j, Scalar::one(F)}};
    if (ech.contains(e)) continue;
    int old = H.k;
    widen(dN);
    Matrix Y(F, H.k, dN);
    for (int a = 0; a < dN; ++a) Y.at(old + a, a) = Scalar::one(F);
    ech.insert(e);
    H.spin.push_back(e);
    H.images.push_back(std::move(Y));
    queue.push_back(static_cast<int>(H.spin.size()) - 1);
    for (size_t head = 0; head < queue.size(); ++head) {
      int b = queue[head];
      for (size_t g = 0; g < M.gens.size(); ++g) {
        SparseVec w = row_times(H.spin[b], M.gens[g]);
        SparseVec coords;
        Matrix img = H.images[b] * N.gens[g];
        if (!ech.reduce(w, &coords).empty()) {
          ech.insert(w);
          H.spin.push_back(std::move(w));
          H.images.push_back(std::move(img));
          queue.push_back(static_cast<int>(H.spin.size()) - 1);
          continue;
        }
        for (const auto& [l, c] : coords) img = img - H.images[l].scaled(c);
        if (img.is_zero()) continue;
        Matrix Z = left_kernel(img);
        for (auto& Y : H.images) Y = Z * Y;
        H.k = Z.rows();
      }
    }
    queue.clear();
  }
  return H;
}

}  // namespace

std::vector<Matrix> hom_basis(const Representation& M, const Representation& N) {
  HomSolve H = solve_hom(M, N);
  std::vector<Matrix> out;
  if (H.k == 0) return out;
  Field F = M.field;
  int dM = M.dim, dN = N.dim;
  Matrix S(F, dM, dM);
  for (int l = 0; l < dM; ++l)
    for (const auto& [j, c] : H.spin[l]) S.at(l, j) = c;
  Matrix Sinv = inverse(S);
  for (int a = 0; a < H.k; ++a) {
    Matrix Fs(F, dM, dN);
    for (int l = 0; l < dM; ++l)
      for (int j = 0; j < dN; ++j) Fs.at(l, j) = H.images[l].at(a, j);
    out.push_back(Sinv * Fs);
  }
  return out;
}

int hom_dimension(const Representation& M, const Representation& N) { return solve_hom(M, N).k; }

}  // namespace hecke
