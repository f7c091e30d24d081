#include "hecke/clifford/clifford.hpp"

#include <numeric>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

/// A root of unity of the twisting, carried into the field of a module.
Scalar carry(Field f, const Scalar& s) {
  if (s.field() == f) return s;
  Cyclo c;
  if (!s.as_constant(c)) fail(ErrorCode::FieldMismatch, "scale " + s.to_string() + " is not a constant");
  return Scalar::embed(f, c);
}

SparseVec flatten(const Matrix& m) {
  SparseVec v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) v.emplace_back(i * m.cols() + j, m.at(i, j));
  return v;
}

int operator_algebra_dimension(const Representation& R) {
  Echelon span(R.field, R.dim * R.dim);
  std::vector<Matrix> basis{Matrix::identity(R.field, R.dim)};
  span.insert(flatten(basis[0]));
  for (size_t head = 0; head < basis.size(); ++head)
    for (const auto& g : R.gens) {
      Matrix m = basis[head] * g;
      if (span.insert(flatten(m))) basis.push_back(std::move(m));
    }
  return span.rank();
}

std::vector<Scalar> row_times(const std::vector<Scalar>& a, const Matrix& m) {
  std::vector<Scalar> out(m.cols(), Scalar::zero(m.field()));
  for (int i = 0; i < m.rows(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out[j] += a[i] * m.at(i, j);
  }
  return out;
}

Matrix block_diagonal(Field f, const std::vector<Matrix>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix out(f, n, n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) out.at(off + i, off + j) = b.at(i, j);
    off += b.rows();
  }
  return out;
}

/// Theta^h = 1 and Theta rho(g) = rho(theta^{p/h}(g)) Theta.
void verify_crossed(const CrossedModule& M, const Twisting& tw) {
  Field f = M.base.field;
  if (!M.theta.pow(M.h).is_identity()) fail(ErrorCode::VerificationFailed, "theta does not have order dividing h");
  int g = tw.p / M.h;
  for (size_t i = 0; i < M.base.gens.size(); ++i) {
    Scalar c = carry(f, tw.scale[i]).pow(g);
    if (M.theta * M.base.gens[i] != M.base.gens[i].scaled(c) * M.theta)
      fail(ErrorCode::VerificationFailed, "theta fails the crossed relation at generator " + std::to_string(i));
  }
}

}  // namespace

std::vector<Scalar> FDAlgebra::mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
  std::vector<Scalar> out(dim, Scalar::zero(field));
  for (int j = 0; j < dim; ++j) {
    if (b[j].is_zero()) continue;
    auto part = row_times(a, right_mult[j]);
    for (int k = 0; k < dim; ++k)
      if (!part[k].is_zero()) out[k] += b[j] * part[k];
  }
  return out;
}

std::vector<Scalar> FDAlgebra::apply_theta(const std::vector<Scalar>& a, int power) const {
  std::vector<Scalar> out = a;
  for (int k = 0; k < mod(power, p); ++k) out = row_times(out, theta);
  return out;
}

FDAlgebra regular_fd_algebra(const Algebra& A) {
  FDAlgebra R;
  R.field = A.field();
  R.dim = A.dim();
  R.p = A.params().p;
  std::vector<Element> e(R.dim);
  for (int i = 0; i < R.dim; ++i) e[i] = {{i, Scalar::one(R.field)}};
  for (int j = 0; j < R.dim; ++j) {
    Matrix m(R.field, R.dim, R.dim);
    for (int i = 0; i < R.dim; ++i)
      for (const auto& [k, c] : A.mul(e[i], e[j])) m.at(i, k) = c;
    R.right_mult.push_back(std::move(m));
  }
  R.theta = Matrix(R.field, R.dim, R.dim);
  for (int i = 0; i < R.dim; ++i)
    for (const auto& [k, c] : A.sigma(e[i])) R.theta.at(i, k) = c;
  R.one = dense_from_sparse(R.field, R.dim, A.one());
  return R;
}

CrossedProduct::CrossedProduct(const FDAlgebra& A, int h) : A_(A), h_(h) {
  if (h < 1 || A.p % h != 0) fail(ErrorCode::WrongOrder, "h = " + std::to_string(h) + " does not divide p");
  if (!A.theta.pow(A.p).is_identity()) fail(ErrorCode::WrongOrder, "theta^p is not the identity");
  if (A.apply_theta(A.one, 1) != A.one) fail(ErrorCode::NotAutomorphism, "theta moves the identity");
  std::vector<std::vector<Scalar>> img(A.dim);
  for (int i = 0; i < A.dim; ++i) img[i] = A.theta.row(i);
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      std::vector<Scalar> lhs = row_times(A.right_mult[j].row(i), A.theta);
      if (lhs != A.mul(img[i], img[j]))
        fail(ErrorCode::NotAutomorphism, "theta(e_i e_j) != theta(e_i) theta(e_j) at " + std::to_string(i) + "," + std::to_string(j));
    }
}

std::vector<Scalar> CrossedProduct::embed(const std::vector<Scalar>& a, int k) const {
  std::vector<Scalar> out(dim(), Scalar::zero(A_.field));
  int off = mod(k, h_) * A_.dim;
  for (int i = 0; i < A_.dim; ++i) out[off + i] = a[i];
  return out;
}

std::vector<Scalar> CrossedProduct::mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  int N = A_.dim, g = A_.p / h_;
  auto block = [&](const std::vector<Scalar>& v, int k) {
    return std::vector<Scalar>(v.begin() + k * N, v.begin() + (k + 1) * N);
  };
  auto zero = [](const std::vector<Scalar>& v) {
    for (const auto& s : v)
      if (!s.is_zero()) return false;
    return true;
  };
  std::vector<Scalar> out(dim(), Scalar::zero(A_.field));
  for (int k = 0; k < h_; ++k) {
    auto a = block(x, k);
    if (zero(a)) continue;
    for (int m = 0; m < h_; ++m) {
      auto b = block(y, m);
      if (zero(b)) continue;
      auto prod = A_.mul(a, A_.apply_theta(b, k * g));
      int off = ((k + m) % h_) * N;
      for (int i = 0; i < N; ++i) out[off + i] += prod[i];
    }
  }
  return out;
}

Twisting sigma_twisting(const Params& P) {
  Twisting tw;
  tw.field = P.field;
  tw.p = P.p;
  tw.eps = P.eps;
  tw.scale.assign(P.n, Scalar::one(P.field));
  tw.scale[0] = P.eps;
  return tw;
}

Representation twist(const Representation& M, const Twisting& tw, int power) {
  Representation out = M;
  int e = mod(power, tw.p);
  for (size_t i = 0; i < out.gens.size() && i < tw.scale.size(); ++i) {
    Scalar c = carry(M.field, tw.scale[i]).pow(e);
    if (!c.is_one()) out.gens[i] = out.gens[i].scaled(c);
  }
  return out;
}

Representation CrossedModule::as_representation() const {
  Representation R = base;
  R.gens.push_back(theta);
  return R;
}

bool is_absolutely_simple(const Representation& L) {
  return L.dim > 0 && operator_algebra_dimension(L) == L.dim * L.dim;
}

InertiaData inertia_group(const Representation& L, const Twisting& tw) {
  if (L.dim == 0) fail(ErrorCode::NotSimple, "zero module");
  if (hom_dimension(L, L) > 1) fail(ErrorCode::NotAbsolutelyIrreducible, "End(L) has dimension > 1");
  if (!is_absolutely_simple(L)) fail(ErrorCode::NotSimple, "generators do not span the full matrix algebra");
  InertiaData out;
  out.L = L;
  int p = tw.p;
  for (int k = 1; k <= p; ++k) {
    if (p % k != 0) continue;
    if (k == p) {
      out.k = p;
      out.l = 1;
      out.phi = Matrix::identity(L.field, L.dim);
      return out;
    }
    auto H = hom_basis(L, twist(L, tw, -k));
    if (H.empty()) continue;
    out.k = k;
    out.l = p / k;
    Matrix phi0 = H[0];
    Matrix pl = phi0.pow(out.l);
    Scalar c = pl.at(0, 0);
    if (pl != Matrix::identity(L.field, L.dim).scaled(c))
      fail(ErrorCode::NotAbsolutelyIrreducible, "phi^l is not scalar");
    Scalar root;
    if (try_root(c, out.l, root)) {
      out.phi = phi0.scaled(root.inv());
      return out;
    }
    Cyclo cc;
    if (L.field->kind != FieldKind::Cyclotomic || !c.as_constant(cc))
      fail(ErrorCode::NotAbsolutelyIrreducible, "no " + std::to_string(out.l) + "-th root of " + c.to_string());
    Field ext = radical_extension(L.field->conductor(), out.l, cc);
    auto up = [&](const Matrix& m) { return m.map(ext, [&](const Scalar& s) { return Scalar::embed(ext, s.cyclo()); }); };
    out.L.field = ext;
    for (auto& g : out.L.gens) g = up(g);
    out.phi = up(phi0).scaled(Scalar::y(ext).inv());
    out.extension = ext->describe();
    return out;
  }
  fail(ErrorCode::VerificationFailed, "L is not isomorphic to L^{theta^p}");
}

CrossedModule module_Lli(const InertiaData& data, int i, const Twisting& tw) {
  CrossedModule M;
  M.base = data.L;
  M.h = data.l;
  Scalar e = carry(data.L.field, tw.eps).pow(mod(data.k * i, tw.p));
  M.theta = data.phi.scaled(e);
  verify_crossed(M, tw);
  return M;
}

CrossedModule restrict_crossed(const CrossedModule& M, int h_to, const Twisting& tw) {
  if (h_to < 1 || M.h % h_to != 0) fail(ErrorCode::WrongOrder, "restriction needs h' | h");
  CrossedModule out;
  out.base = M.base;
  out.h = h_to;
  out.theta = M.theta.pow(M.h / h_to);
  (void)tw;
  return out;
}

CrossedModule induce_crossed(const CrossedModule& M, int h_to, const Twisting& tw) {
  if (h_to % M.h != 0 || tw.p % h_to != 0) fail(ErrorCode::WrongOrder, "induction needs h | h' | p");
  int c = h_to / M.h, g = tw.p / h_to, d = M.dim();
  Field f = M.base.field;
  CrossedModule out;
  out.h = h_to;
  out.base.field = f;
  out.base.dim = c * d;
  std::vector<Representation> blocks;
  for (int m = 0; m < c; ++m) blocks.push_back(twist(M.base, tw, m * g));
  for (size_t gi = 0; gi < M.base.gens.size(); ++gi) {
    std::vector<Matrix> parts;
    for (const auto& b : blocks) parts.push_back(b.gens[gi]);
    out.base.gens.push_back(block_diagonal(f, parts));
  }
  out.theta = Matrix(f, c * d, c * d);
  for (int m = 0; m < c; ++m) {
    int to = (m + 1) % c;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Scalar& s = m + 1 < c ? (i == j ? Scalar::one(f) : Scalar::zero(f)) : M.theta.at(i, j);
        if (!s.is_zero()) out.theta.at(m * d + i, to * d + j) = s;
      }
  }
  verify_crossed(out, tw);
  return out;
}

std::vector<Scalar> crossed_character(const Algebra& A, const CrossedModule& M, const Twisting& tw) {
  (void)tw;
  RepEvaluator ev(A, M.base);
  std::vector<Matrix> pw{Matrix::identity(M.base.field, M.dim())};
  for (int m = 1; m < M.h; ++m) pw.push_back(pw.back() * M.theta);
  std::vector<Scalar> out;
  out.reserve(static_cast<size_t>(A.dim()) * M.h);
  for (int idx = 0; idx < A.dim(); ++idx) {
    const Matrix& w = ev.word(idx);
    for (int m = 0; m < M.h; ++m) out.push_back((w * pw[m]).trace());
  }
  return out;
}

std::vector<CrossedSimple> simples_of_crossed_product(const std::vector<Representation>& simples, const Twisting& tw) {
  int s = static_cast<int>(simples.size());
  std::vector<int> orbit(s, -1);
  std::vector<CrossedSimple> out;
  for (int a = 0; a < s; ++a) {
    if (orbit[a] >= 0) continue;
    orbit[a] = a;
    Representation cur = simples[a];
    for (int m = 1; m < tw.p; ++m) {
      cur = twist(cur, tw, 1);
      for (int b = a + 1; b < s; ++b)
        if (orbit[b] < 0 && simples[b].dim == cur.dim && hom_dimension(cur, simples[b]) > 0) orbit[b] = a;
    }
    InertiaData data = inertia_group(simples[a], tw);
    for (int i = 0; i < data.l; ++i)
      out.push_back({a, data.l, i, induce_crossed(module_Lli(data, i, tw), tw.p, tw)});
  }
  return out;
}

long formula_main3(const std::vector<SplitTable>& tables, int kappa, int d0, int i, int j) {
  if (kappa < 1 || d0 < 1 || static_cast<int>(tables.size()) != kappa)
    fail(ErrorCode::TableIncomplete, "expected " + std::to_string(kappa) + " tables");
  for (const auto& t : tables) {
    if (static_cast<int>(t.size()) != d0) fail(ErrorCode::TableIncomplete, "table has wrong row count");
    for (const auto& row : t)
      if (static_cast<int>(row.size()) != d0) fail(ErrorCode::TableIncomplete, "table has wrong column count");
  }
  int ii = mod(i, d0), target = mod((kappa - 1) * i + j, d0);
  std::vector<int> js(kappa, 0);
  long total = 0;
  while (true) {
    int sum = std::accumulate(js.begin(), js.end(), 0);
    if (mod(sum, d0) == target) {
      long prod = 1;
      for (int a = 0; a < kappa && prod != 0; ++a) prod *= tables[a][ii][js[a]];
      total += prod;
    }
    int a = 0;
    while (a < kappa && ++js[a] == d0) js[a++] = 0;
    if (a == kappa) break;
  }
  return total;
}

std::vector<SplitRequest> splittable_reduction(int p, int s, int d, int i, int j, bool cyclic) {
  if (!cyclic) fail(ErrorCode::CyclicityNotEstablished, "decomposition numbers have not been shown cyclic");
  if (s < 1 || d < 1 || p % s != 0 || p % d != 0) fail(ErrorCode::WrongOrder, "s and d must divide p");
  int d0 = std::gcd(s, d);
  std::vector<SplitRequest> out;
  int cosets = p / std::lcm(s, d);  // Z_p / G_S G_D; twists inside G_S give repeated terms
  for (int a = 1; a <= cosets; ++a) out.push_back({a, mod(i, d0), mod(j, d0), d0});
  return out;
}

}  // namespace hecke
