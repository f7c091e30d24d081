#include "hecke/decomp/decomp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

/// trace(A B) without forming the product.
Scalar trace_product(const Matrix& A, const Matrix& B) {
  Scalar t = Scalar::zero(A.field());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (!A.at(i, j).is_zero() && !B.at(j, i).is_zero()) t += A.at(i, j) * B.at(j, i);
  return t;
}

bool as_nonneg_integer(const Scalar& s, long& out) {
  Cyclo c;
  if (!s.as_constant(c) || !c.is_rational()) return false;
  mpq_class v = c.coeff(0);
  if (v.get_den() != 1 || v < 0 || !v.get_num().fits_slong_p()) return false;
  out = v.get_num().get_si();
  return true;
}

Matrix specialize_matrix(const Matrix& m, const ModularSystem& sys) {
  if (sys.generic()) return m;
  Field K = sys.K();
  try {
    return m.map(K, [&](const Scalar& s) { return specialize(s, *sys.q0); });
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PoleAtSpecialization) fail(ErrorCode::LatticeFailure, e.what());
    throw;
  }
}

Representation specialize_rep(const Representation& R, const ModularSystem& sys) {
  Representation out{sys.K(), R.dim, {}};
  for (const auto& g : R.gens) out.gens.push_back(specialize_matrix(g, sys));
  return out;
}

/// Components i + p j moved to i + dir + p j (mod p inside each block of p).
Multipartition shift_components(const Multipartition& lam, int p, int dir) {
  Multipartition out = lam;
  for (int s = 0; s < lam.r(); ++s) {
    int i = s % p, j = s / p;
    out.comp[mod(i + dir, p) + p * j] = lam.comp[s];
  }
  return out;
}

/// sigma on labels: reps[i]^sigma ~ reps[result[i]], found by intertwiners. The component shift
/// in either direction is tried first.
std::vector<int> sigma_on_labels(const std::vector<Representation>& reps, const std::vector<Multipartition>& shapes,
                                 const Twisting& tw) {
  int m = static_cast<int>(reps.size());
  std::vector<int> out(m, -1);
  std::map<Multipartition, int> index;
  for (int i = 0; i < m; ++i) index[shapes[i]] = i;
  for (int i = 0; i < m; ++i) {
    Representation T = twist(reps[i], tw, 1);
    std::vector<int> order;
    for (int dir : {1, -1}) {
      auto it = index.find(shift_components(shapes[i], tw.p, dir));
      if (it != index.end()) order.push_back(it->second);
    }
    for (int j = 0; j < m; ++j) order.push_back(j);
    for (int j : order)
      if (reps[j].dim == T.dim && hom_dimension(T, reps[j]) > 0) {
        out[i] = j;
        break;
      }
    if (out[i] < 0) fail(ErrorCode::VerificationFailed, "no simple matches the twist of " + shapes[i].to_string());
  }
  std::vector<int> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < m; ++i)
    if (sorted[i] != i) fail(ErrorCode::VerificationFailed, "sigma does not permute the simples");
  return out;
}

std::vector<std::vector<int>> orbits_of(const std::vector<int>& perm) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(perm.size(), 0);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orb;
    for (int j = static_cast<int>(i); !seen[j]; j = perm[j]) {
      seen[j] = 1;
      orb.push_back(j);
    }
    out.push_back(orb);
  }
  return out;
}

/// (1/l) sum_m (omega^{-1} phi)^m: the projection onto {v : v phi = omega v}.
Matrix eigen_projector(const Matrix& phi, int l, const Scalar& omega) {
  Field f = phi.field();
  Matrix step = phi.scaled(omega.inv());
  Matrix acc = Matrix::identity(f, phi.rows()), term = acc;
  for (int m = 1; m < l; ++m) {
    term = term * step;
    acc = acc + term;
  }
  return acc.scaled(Scalar::from_int(f, l).inv());
}

int projector_rank(const Matrix& P) {
  if (P * P != P) fail(ErrorCode::VerificationFailed, "eigen projector is not idempotent");
  return rank(P);
}

Scalar lift_cyclo(const Scalar& s, int M2) {
  Field K2 = cyclotomic_field(M2);
  const Cyclo& c = s.cyclo();
  int m = M2 / c.ctx().M;
  Scalar out = Scalar::zero(K2);
  auto co = c.coeffs();
  for (size_t k = 0; k < co.size(); ++k)
    if (co[k] != 0) out += Scalar::from_mpq(K2, co[k]) * Scalar::zeta(K2, static_cast<long>(k) * m);
  return out;
}

ModularSystem enlarge(const ModularSystem& sys, int factor) {
  ModularSystem out = sys;
  out.M = sys.M * factor;
  if (sys.q0) out.q0 = lift_cyclo(*sys.q0, out.M);
  for (auto& q : out.Q) q = lift_cyclo(q, out.M);
  return out;
}

std::string join_strings(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

DirectResult direct_once(const ModularSystem& sys);

}  // namespace

// ---------------------------------------------------------------------------------------------

Params ModularSystem::generic_params() const {
  Field f = F();
  std::vector<Scalar> QF;
  for (const auto& c : Q) QF.push_back(Scalar::embed(f, c.cyclo()));
  return make_params(f, r, p, n, Scalar::x(f), QF);
}

Params ModularSystem::special_params() const {
  if (generic()) return generic_params();
  return make_params(K(), r, p, n, *q0, Q);
}

std::string ModularSystem::describe() const {
  std::vector<std::string> qs;
  for (const auto& c : Q) qs.push_back(c.to_string());
  return "r=" + std::to_string(r) + " p=" + std::to_string(p) + " n=" + std::to_string(n) + " M=" + std::to_string(M) +
         " q=" + (q0 ? q0->to_string() : std::string("x")) + " Q=(" + join_strings(qs, ", ") + ")";
}

ModularSystem make_system(int M, int r, int p, int n, std::optional<long> q_power, const std::vector<long>& Q_powers) {
  ModularSystem sys;
  sys.M = M;
  sys.r = r;
  sys.p = p;
  sys.n = n;
  Field K = cyclotomic_field(M);
  if (q_power) sys.q0 = Scalar::zeta(K, *q_power);
  for (long b : Q_powers) sys.Q.push_back(Scalar::zeta(K, b));
  if (p < 1 || r % p != 0 || static_cast<int>(Q_powers.size()) != r / p)
    fail(ErrorCode::InvalidParams, "need r = p t with t parameters");
  if (M % p != 0) fail(ErrorCode::InvalidParams, "p must divide M");
  return sys;
}

std::string SimpleLabel::to_string() const {
  return shape.to_string() + ":" + std::to_string(i) + "/" + std::to_string(l);
}

bool DecompositionMatrix::is_identity() const {
  if (rows.size() != cols.size()) return false;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!(rows[i] == cols[i])) return false;
    for (size_t j = 0; j < cols.size(); ++j)
      if (entries[i][j] != (i == j ? 1 : 0)) return false;
  }
  return true;
}

std::string DecompositionMatrix::to_string() const {
  std::ostringstream os;
  os << "cols:";
  for (const auto& c : cols) os << ' ' << c.to_string();
  os << '\n';
  for (size_t i = 0; i < rows.size(); ++i) {
    os << rows[i].to_string() << ':';
    for (long e : entries[i]) os << ' ' << e;
    os << '\n';
  }
  return os.str();
}

Multipartition canonical_shape(const std::vector<Multipartition>& orbit) {
  if (orbit.empty()) fail(ErrorCode::ShapeMismatch, "empty orbit");
  auto all = enumerate_multipartitions(orbit[0].size(), orbit[0].r());
  size_t best = all.size();
  for (const auto& lam : orbit) {
    size_t pos = std::find(all.begin(), all.end(), lam) - all.begin();
    best = std::min(best, pos);
  }
  if (best == all.size()) fail(ErrorCode::ShapeMismatch, "shape not found");
  return all[best];
}

// ---------------------------------------------------------------------------------------------

namespace {

/// k words on which the characters are independent. Over the function field the choice is made
/// after specializing x to small integers, which is cheaper and still valid generically.
std::vector<int> pivot_words(const Matrix& X) {
  Field f = X.field();
  if (f->kind == FieldKind::Function) {
    Field k = cyclotomic_field(f->conductor());
    for (int x0 = 2; x0 < 12; ++x0) {
      Matrix Y(k, X.rows(), X.cols());
      try {
        for (int a = 0; a < X.rows(); ++a)
          for (int w = 0; w < X.cols(); ++w) Y.at(a, w) = specialize(X.at(a, w), Scalar::from_int(k, x0));
      } catch (const Error&) {
        continue;  // pole at x0
      }
      RowEchelon e = rref(Y);
      if (e.rank() == X.rows()) return e.pivots;
    }
  }
  return rref(X).pivots;
}

}  // namespace

CharacterSolver::CharacterSolver(std::vector<std::vector<Scalar>> traces, std::vector<int> dims)
    : traces_(std::move(traces)), dims_(std::move(dims)) {
  int k = static_cast<int>(traces_.size());
  if (k == 0) return;
  int W = static_cast<int>(traces_.front().size());
  Field f = traces_.front().front().field();
  Matrix X(f, k, W);
  for (int a = 0; a < k; ++a)
    for (int w = 0; w < W; ++w) X.at(a, w) = traces_[a][w];
  pivots_ = pivot_words(X);
  if (static_cast<int>(pivots_.size()) != k)
    fail(ErrorCode::IncompleteSimpleList, "characters of the offered simples are dependent");
  Matrix P(f, k, k);
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c) P.at(a, c) = traces_[a][pivots_[c]];
  inv_ = inverse(P);
}

std::vector<long> CharacterSolver::multiplicities(const std::vector<Scalar>& traces_M, int dim_M) const {
  int k = static_cast<int>(traces_.size());
  if (k == 0) {
    if (dim_M == 0) return {};
    fail(ErrorCode::IncompleteSimpleList, "no simples offered for a nonzero module");
  }
  Field f = traces_M.front().field();
  Matrix b(f, 1, k);
  for (int c = 0; c < k; ++c) b.at(0, c) = traces_M[pivots_[c]];
  Matrix m = b * inv_;
  std::vector<long> out(k);
  long total = 0;
  for (int a = 0; a < k; ++a) {
    if (!as_nonneg_integer(m.at(0, a), out[a]))
      fail(ErrorCode::IncompleteSimpleList, "multiplicity " + m.at(0, a).to_string() + " is not a non-negative integer");
    total += out[a] * dims_[a];
  }
  if (total != dim_M) fail(ErrorCode::IncompleteSimpleList, "dimensions do not add up");
  for (size_t w = 0; w < traces_M.size(); ++w) {
    Scalar sum = Scalar::zero(f);
    for (int a = 0; a < k; ++a)
      if (out[a] != 0) sum += Scalar::from_int(f, out[a]) * traces_[a][w];
    if (sum != traces_M[w])
      fail(ErrorCode::IncompleteSimpleList, "character is not a combination of the offered simples");
  }
  return out;
}

std::vector<long> composition_multiplicities(const std::vector<Scalar>& traces_M, int dim_M,
                                             const std::vector<std::vector<Scalar>>& traces_simples,
                                             const std::vector<int>& dims) {
  return CharacterSolver(traces_simples, dims).multiplicities(traces_M, dim_M);
}

std::vector<Scalar> word_traces(const Algebra& A, const Representation& M, const std::vector<int>& words,
                                const Matrix* proj) {
  RepEvaluator ev(A, M);
  std::vector<Scalar> out;
  out.reserve(words.size());
  for (int w : words) out.push_back(proj ? trace_product(ev.word(w), *proj) : ev.word(w).trace());
  return out;
}

std::vector<long> composition_multiplicities(const Algebra& A, const Representation& M,
                                             const std::vector<Representation>& simples) {
  std::vector<int> words(A.dim());
  std::iota(words.begin(), words.end(), 0);
  std::vector<std::vector<Scalar>> ts;
  std::vector<int> dims;
  for (const auto& D : simples) {
    ts.push_back(word_traces(A, D, words));
    dims.push_back(D.dim);
  }
  return composition_multiplicities(word_traces(A, M, words), M.dim, ts, dims);
}

// ---------------------------------------------------------------------------------------------

HrnFamily::HrnFamily(const ModularSystem& sys) : sys_(sys) {
  AF_ = std::make_unique<Algebra>(sys.generic_params());
  CF_ = std::make_unique<Cellular>(*AF_);
  twF_ = sigma_twisting(AF_->params());
  if (!sys.generic()) {
    AK_ = std::make_unique<Algebra>(sys.special_params());
    CK_ = std::make_unique<Cellular>(*AK_);
  }
  const Cellular& CK = sys.generic() ? *CF_ : *CK_;
  twK_ = sigma_twisting(AK().params());
  shapes_ = CF_->shapes();
  for (const auto& lam : shapes_) {
    const SpechtModule& S = CF_->specht(lam);
    if (rank(S.gram) != S.dim()) fail(ErrorCode::GenericNotSemisimple, "singular Gram matrix for " + lam.to_string());
    SF_.push_back(S.rep);
    if (sys.generic()) {
      SK_.push_back(S.rep);
    } else {
      const Representation& K = CK.specht(lam).rep;
      Representation spec = specialize_rep(S.rep, sys);
      if (spec.gens != K.gens)
        fail(ErrorCode::VerificationFailed, "specialized generic Specht module differs from the K-side one at " + lam.to_string());
      SK_.push_back(K);
    }
    SimpleQuotient D = CK.simple(lam);
    if (D.rank > 0) {
      dshapes_.push_back(lam);
      D_.push_back(D.rep);
    }
  }
  sigma_S_ = sigma_on_labels(SF_, shapes_, twF_);
  sigma_D_ = sigma_on_labels(D_, dshapes_, twK_);

  for (const auto& lam : shapes_) dm_.rows.push_back({lam, 1, 0});
  for (const auto& mu : dshapes_) dm_.cols.push_back({mu, 1, 0});
  std::vector<int> words(AK().dim());
  std::iota(words.begin(), words.end(), 0);
  std::vector<std::vector<Scalar>> dtr;
  std::vector<int> dims;
  for (const auto& D : D_) {
    dtr.push_back(word_traces(AK(), D, words));
    dims.push_back(D.dim);
  }
  CharacterSolver solver(dtr, dims);
  for (size_t i = 0; i < shapes_.size(); ++i)
    dm_.entries.push_back(solver.multiplicities(word_traces(AK(), SK_[i], words), SK_[i].dim));

  Params PK = AK().params();
  for (size_t j = 0; j < dshapes_.size(); ++j) {
    int row = shape_index(dshapes_[j]);
    if (dm_.entries[row][j] != 1)
      checks_.push_back({"unitriangular", false, "[S:D] != 1 at " + dshapes_[j].to_string()});
    for (size_t i = 0; i < shapes_.size(); ++i) {
      if (dm_.entries[i][j] == 0) continue;
      if (!dominance_ge(shapes_[i], dshapes_[j]))
        checks_.push_back({"unitriangular", false, shapes_[i].to_string() + " does not dominate " + dshapes_[j].to_string()});
      if (content_key(shapes_[i], PK) != content_key(dshapes_[j], PK))
        checks_.push_back({"blocks", false, shapes_[i].to_string() + " vs " + dshapes_[j].to_string()});
    }
  }
}

int HrnFamily::shape_index(const Multipartition& lam) const {
  auto it = std::find(shapes_.begin(), shapes_.end(), lam);
  if (it == shapes_.end()) fail(ErrorCode::ShapeMismatch, lam.to_string());
  return static_cast<int>(it - shapes_.begin());
}

int HrnFamily::dshape_index(const Multipartition& mu) const {
  auto it = std::find(dshapes_.begin(), dshapes_.end(), mu);
  if (it == dshapes_.end()) fail(ErrorCode::ShapeMismatch, mu.to_string());
  return static_cast<int>(it - dshapes_.begin());
}

DecompositionMatrix decomposition_matrix_hrn(const ModularSystem& sys) { return HrnFamily(sys).matrix(); }

std::vector<Check> block_compatibility(const HrnFamily& fam) {
  std::vector<Check> out;
  Params PK = fam.AK().params();
  const auto& m = fam.matrix();
  for (size_t i = 0; i < m.rows.size(); ++i)
    for (size_t j = 0; j < m.cols.size(); ++j) {
      if (m.entries[i][j] == 0) continue;
      bool ok = content_key(m.rows[i].shape, PK) == content_key(m.cols[j].shape, PK);
      out.push_back({"content " + m.rows[i].shape.to_string() + " / " + m.cols[j].shape.to_string(), ok, {}});
    }
  return out;
}

// ---------------------------------------------------------------------------------------------

Representation RpnModule::restricted(const Algebra& A) const {
  Matrix B = row_space(proj);
  RepEvaluator ev(A, parent);
  Representation out{parent.field, B.rows(), {}};
  for (const auto& g : A.subalgebra_generators()) {
    Matrix Y;
    if (!solve_left(B, B * ev.element(g), Y)) fail(ErrorCode::NotInvariant, "eigenspace is not H_{r,p,n}-stable");
    out.gens.push_back(Y);
  }
  return out;
}

Representation RpnModule::restricted_tau(const Algebra& A) const {
  Matrix B = row_space(proj);
  RepEvaluator ev(A, parent);
  const Matrix& t0 = parent.gens[0];
  Matrix t0inv = inverse(t0);
  Representation out{parent.field, B.rows(), {}};
  for (const auto& g : A.subalgebra_generators()) {
    Matrix X = t0inv * ev.element(g) * t0;
    Matrix Y;
    if (!solve_left(B, B * X, Y)) fail(ErrorCode::NotInvariant, "eigenspace is not stable under the tau-twist");
    out.gens.push_back(Y);
  }
  return out;
}

namespace {

/// Multiplicity of x - q0 in a nonzero function-field scalar (negative for poles).
int valuation(const Scalar& s, const Poly& pi) {
  auto count = [&](Poly f) {
    int k = 0;
    while (true) {
      Poly q(f.ctx()), r(f.ctx());
      f.divmod(pi, q, r);
      if (!r.is_zero()) return k;
      f = q;
      ++k;
    }
  };
  return count(s.ratfunc().num()) - count(s.ratfunc().den());
}

/// Rows of B span a subspace E of F^f. Returns the reduction mod x - q0 of a basis of E cap O^f:
/// rows are cleared of poles, then a dependency among the reduced rows is lifted and divided by
/// x - q0 until the reduction has full rank.
Matrix reduce_lattice(Matrix B, const ModularSystem& sys) {
  Field F = B.field();
  const CycloCtx& ctx = CycloCtx::get(sys.M);
  Poly pi(ctx, {-sys.q0->cyclo(), Cyclo::from_int(ctx, 1)});
  Scalar piF = Scalar::from_ratfunc(F, RatFunc(pi, Poly::constant(Cyclo::from_int(ctx, 1))));
  Scalar piinv = piF.inv();
  int m = B.rows();
  for (int i = 0; i < m; ++i) {
    int e = 0;
    for (int j = 0; j < B.cols(); ++j)
      if (!B.at(i, j).is_zero()) e = std::max(e, -valuation(B.at(i, j), pi));
    Scalar c = piF.pow(e);
    for (int j = 0; j < B.cols(); ++j) B.at(i, j) *= c;
  }
  for (int iter = 0; iter < 64; ++iter) {
    Matrix Bbar = specialize_matrix(B, sys);
    if (rank(Bbar) == m) return Bbar;
    Matrix dep = left_kernel(Bbar);
    int k = 0;
    while (dep.at(0, k).is_zero()) ++k;
    for (int j = 0; j < B.cols(); ++j) {
      Scalar acc = Scalar::zero(F);
      for (int l = 0; l < m; ++l)
        if (!dep.at(0, l).is_zero()) acc += Scalar::embed(F, dep.at(0, l).cyclo()) * B.at(l, j);
      B.at(k, j) = acc * piinv;
    }
  }
  fail(ErrorCode::LatticeFailure, "saturation did not terminate");
}

/// C with B C = 1, supported on the pivot columns of B.
Matrix right_inverse(const Matrix& B) {
  RowEchelon E = rref(B);
  Matrix inv = inverse(B.select_cols(E.pivots));
  Matrix C(B.field(), B.cols(), B.rows());
  for (int a = 0; a < E.rank(); ++a)
    for (int b = 0; b < B.rows(); ++b) C.at(E.pivots[a], b) = inv.at(a, b);
  return C;
}

/// The eigenspace {v : v phi = omega v} as an H_{r,p,n}^K-module. With `reduce`, phi lives on the
/// generic side and the eigenspace is reduced through its lattice.
RpnModule eigen_module(const SimpleLabel& label, const Representation& parent_K, const Matrix& phi, int l,
                       const Scalar& omega, const ModularSystem* reduce) {
  Matrix P = eigen_projector(phi, l, omega);
  if (!reduce) return {label, parent_K, P, projector_rank(P)};
  Matrix Bbar = reduce_lattice(row_space(P), *reduce);
  return {label, parent_K, right_inverse(Bbar) * Bbar, Bbar.rows()};
}

Scalar eps_power(const Twisting& tw, Field f, int e) {
  Cyclo c;
  tw.eps.as_constant(c);
  return Scalar::embed(f, c).pow(mod(e, tw.p));
}

InertiaData checked_inertia(const Representation& L, const Twisting& tw) {
  InertiaData data = inertia_group(L, tw);
  if (!data.extension.empty()) fail(ErrorCode::NotAbsolutelyIrreducible, "phi needs " + data.extension);
  return data;
}

/// L_0..L_{l-1} with L_i = {v : phi(v) = eps^{-ik} v}.
std::vector<RpnModule> eigen_modules(const Multipartition& label, const Representation& parent_K,
                                     const Representation& source, const Twisting& tw, const ModularSystem* reduce) {
  InertiaData data = checked_inertia(source, tw);
  std::vector<RpnModule> out;
  for (int i = 0; i < data.l; ++i)
    out.push_back(eigen_module({label, data.l, i}, parent_K, data.phi, data.l,
                               eps_power(tw, source.field, -i * data.k), reduce));
  return out;
}

DirectResult direct_once(const ModularSystem& sys) {
  HrnFamily fam(sys);
  const Algebra& AK = fam.AK();
  DirectResult res;
  int p = sys.p;

  for (const auto& orb : orbits_of(fam.sigma_S())) {
    std::vector<Multipartition> shapes;
    for (int i : orb) shapes.push_back(fam.shapes()[i]);
    Multipartition rep = canonical_shape(shapes);
    int ri = fam.shape_index(rep);
    int s = p / static_cast<int>(orb.size());
    if (s == 1) {
      int d = fam.SK(ri).dim;
      res.F_simples.push_back({{rep, 1, 0}, fam.SK(ri), Matrix::identity(AK.field(), d), d});
      continue;
    }
    auto mods = eigen_modules(rep, fam.SK(ri), fam.SF(ri), fam.twF(), sys.generic() ? nullptr : &sys);
    if (static_cast<int>(mods.size()) != s) fail(ErrorCode::VerificationFailed, "inertia order disagrees with the orbit size");
    for (auto& m : mods) res.F_simples.push_back(std::move(m));
  }
  for (const auto& orb : orbits_of(fam.sigma_D())) {
    std::vector<Multipartition> shapes;
    for (int j : orb) shapes.push_back(fam.dshapes()[j]);
    Multipartition rep = canonical_shape(shapes);
    int rj = fam.dshape_index(rep);
    int d = p / static_cast<int>(orb.size());
    if (d == 1) {
      int dim = fam.D(rj).dim;
      res.K_simples.push_back({{rep, 1, 0}, fam.D(rj), Matrix::identity(AK.field(), dim), dim});
      continue;
    }
    auto mods = eigen_modules(rep, fam.D(rj), fam.D(rj), fam.twK(), nullptr);
    if (static_cast<int>(mods.size()) != d) fail(ErrorCode::VerificationFailed, "inertia order disagrees with the orbit size");
    for (auto& m : mods) res.K_simples.push_back(std::move(m));
  }
  auto by_label = [](const RpnModule& a, const RpnModule& b) {
    if (a.label.shape != b.label.shape) return dominance_key(a.label.shape) > dominance_key(b.label.shape);
    return a.label.i < b.label.i;
  };
  std::stable_sort(res.F_simples.begin(), res.F_simples.end(), by_label);
  std::stable_sort(res.K_simples.begin(), res.K_simples.end(), by_label);

  std::vector<int> words = AK.subalgebra_basis();
  std::vector<std::vector<Scalar>> dtr;
  std::vector<int> dims;
  for (const auto& D : res.K_simples) {
    dtr.push_back(word_traces(AK, D.parent, words, &D.proj));
    dims.push_back(D.dim);
  }
  DecompositionMatrix& m = res.matrix;
  for (const auto& S : res.F_simples) m.rows.push_back(S.label);
  for (const auto& D : res.K_simples) m.cols.push_back(D.label);
  CharacterSolver solver(dtr, dims);
  for (const auto& S : res.F_simples)
    m.entries.push_back(solver.multiplicities(word_traces(AK, S.parent, words, &S.proj), S.dim));

  long wed = 0;
  for (const auto& S : res.F_simples) wed += static_cast<long>(S.dim) * S.dim;
  res.checks.push_back({"generic Wedderburn sum", wed * p == AK.dim(), std::to_string(wed)});
  std::vector<Representation> Kres;
  for (const auto& D : res.K_simples) Kres.push_back(D.restricted(AK));
  bool simple_ok = true, distinct_ok = true;
  for (size_t a = 0; a < Kres.size(); ++a) {
    simple_ok = simple_ok && is_absolutely_simple(Kres[a]);
    for (size_t b = a + 1; b < Kres.size(); ++b)
      if (Kres[a].dim == Kres[b].dim && hom_dimension(Kres[a], Kres[b]) > 0) distinct_ok = false;
  }
  res.checks.push_back({"K-side simples absolutely simple", simple_ok, {}});
  res.checks.push_back({"K-side simples pairwise distinct", distinct_ok, {}});
  // L_{i+1} ~ L_i^tau inside each orbit with nontrivial inertia
  for (size_t a = 0; a < res.K_simples.size(); ++a) {
    const RpnModule& D = res.K_simples[a];
    if (D.label.l == 1) continue;
    size_t next = a + 1 < res.K_simples.size() && res.K_simples[a + 1].label.shape == D.label.shape ? a + 1 : a + 1 - D.label.l;
    bool ok = hom_dimension(Kres[next], D.restricted_tau(AK)) > 0;
    res.checks.push_back({"L_{i+1} ~ L_i^tau for " + D.label.to_string(), ok, {}});
  }
  return res;
}

}  // namespace

DirectResult simples_and_decomp_hrpn_direct(const ModularSystem& sys) {
  try {
    return direct_once(sys);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAbsolutelyIrreducible || sys.generic()) throw;
    // restart over a larger cyclotomic field
    for (int factor : {2, 3, 4}) {
      try {
        return direct_once(enlarge(sys, factor));
      } catch (const Error& again) {
        if (again.code() != ErrorCode::NotAbsolutelyIrreducible) throw;
      }
    }
    throw;
  }
}

std::vector<Check> verify_cyclicity(const DecompositionMatrix& m) {
  std::map<std::pair<Multipartition, int>, std::vector<int>> rg, cg;
  for (size_t i = 0; i < m.rows.size(); ++i) rg[{m.rows[i].shape, m.rows[i].l}].push_back(static_cast<int>(i));
  for (size_t j = 0; j < m.cols.size(); ++j) cg[{m.cols[j].shape, m.cols[j].l}].push_back(static_cast<int>(j));
  auto locate = [&](const std::vector<int>& idx, const std::vector<SimpleLabel>& labels, int want) {
    for (int k : idx)
      if (labels[k].i == want) return k;
    fail(ErrorCode::LabelMismatch, "missing inertia index");
  };
  std::vector<Check> out;
  for (const auto& [rk, ri] : rg)
    for (const auto& [ck, ci] : cg) {
      int s = rk.second, d = ck.second;
      bool ok = true;
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < d; ++j) {
          long a = m.entries[locate(ri, m.rows, i)][locate(ci, m.cols, j)];
          long b = m.entries[locate(ri, m.rows, mod(i + 1, s))][locate(ci, m.cols, mod(j + 1, d))];
          ok = ok && a == b;
        }
      if (s > 1 || d > 1) out.push_back({"cyclic " + rk.first.to_string() + " / " + ck.first.to_string(), ok, {}});
    }
  if (out.empty()) out.push_back({"cyclic (all inertia trivial)", true, {}});
  return out;
}

// ---------------------------------------------------------------------------------------------

namespace {

struct FactorKey {
  int t, n;
  std::vector<std::string> Q;
  bool operator<(const FactorKey& o) const { return std::tie(t, n, Q) < std::tie(o.t, o.n, o.Q); }
};

/// One tensor factor of H_b: its family and the tuple coordinate it owns.
struct Factor {
  int alpha = 0;
  std::shared_ptr<HrnFamily> fam;
};

/// [S_{d0,i} : D_{d0,j}] for one factor. Theorem lastthm identifies A x Z_{d0} with
/// H_{r',d0,n'}(Q') up to Morita equivalence, and L_{d0,i} with the eigenspace of phi^{l/d0} for
/// eps^{-(p/d0) i}; the numbers are computed there by the oracle.
SplitTable splittable_table(const HrnFamily& fam, int si, int dj, int d0, std::vector<std::string>& trace) {
  const ModularSystem& sys = fam.system();
  int p = sys.p, g = p / d0;
  const Algebra& AK = fam.AK();
  const Params& P = AK.params();
  std::vector<Scalar> Qprime;
  for (const auto& Qb : P.Q)
    for (int a = 0; a < g; ++a) Qprime.push_back(P.eps.pow(a) * Qb);
  Params Pp = make_params(AK.field(), AK.r(), d0, AK.n(), P.q, Qprime);
  auto key = [](const std::vector<Scalar>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.to_string());
    std::sort(out.begin(), out.end());
    return out;
  };
  if (key(Pp.expanded()) != key(P.expanded()))
    fail(ErrorCode::VerificationFailed, "expanded parameter lists of H(Q) and H(Q') differ");
  Algebra Ap(Pp);
  trace.push_back("  lastthm: H_{" + std::to_string(Ap.r()) + "," + std::to_string(d0) + "," + std::to_string(Ap.n()) +
                  "}(Q'), |Q'| = " + std::to_string(Qprime.size()));

  Twisting tw0 = fam.twK();
  tw0.p = d0;
  tw0.eps = tw0.eps.pow(g);
  for (auto& c : tw0.scale) c = c.pow(g);
  std::vector<int> perm(fam.dshapes().size());
  for (size_t j = 0; j < perm.size(); ++j) {
    int x = static_cast<int>(j);
    for (int k = 0; k < g; ++k) x = fam.sigma_D()[x];
    perm[j] = x;
  }
  std::vector<RpnModule> simples;
  for (const auto& orb : orbits_of(perm)) {
    const Multipartition& lab = fam.dshapes()[orb[0]];
    const Representation& D = fam.D(orb[0]);
    if (static_cast<int>(orb.size()) == d0) {
      simples.push_back({{lab, 1, 0}, D, Matrix::identity(D.field, D.dim), D.dim});
      continue;
    }
    for (auto& m : eigen_modules(lab, D, D, tw0, nullptr)) simples.push_back(std::move(m));
  }
  std::vector<int> words = Ap.subalgebra_basis();
  std::vector<std::vector<Scalar>> tr;
  std::vector<int> dims;
  std::vector<Representation> res;
  for (const auto& m : simples) {
    tr.push_back(word_traces(Ap, m.parent, words, &m.proj));
    dims.push_back(m.dim);
    res.push_back(m.restricted(Ap));
  }

  InertiaData Sd = checked_inertia(fam.SF(si), fam.twF());
  InertiaData Dd = checked_inertia(fam.D(dj), fam.twK());
  if (Sd.l % d0 != 0 || Dd.l % d0 != 0) fail(ErrorCode::VerificationFailed, "G_0 is not inside both inertia groups");
  Matrix phiS = Sd.phi.pow(Sd.l / d0), phiD = Dd.phi.pow(Dd.l / d0);
  std::vector<int> which(d0, -1);
  for (int j = 0; j < d0; ++j) {
    RpnModule Dj = eigen_module({fam.dshapes()[dj], d0, j}, fam.D(dj), phiD, d0,
                                eps_power(fam.twK(), fam.D(dj).field, -g * j), nullptr);
    Representation want = Dj.restricted(Ap);
    for (size_t a = 0; a < simples.size(); ++a)
      if (res[a].dim == want.dim && hom_dimension(want, res[a]) > 0) which[j] = static_cast<int>(a);
    if (which[j] < 0) fail(ErrorCode::IncompleteSimpleList, "D_{d0,j} is not among the simples of the fixed subalgebra");
  }
  SplitTable T(d0, std::vector<long>(d0, 0));
  CharacterSolver solver(tr, dims);
  for (int i = 0; i < d0; ++i) {
    RpnModule Si = eigen_module({fam.shapes()[si], d0, i}, fam.SK(si), phiS, d0,
                                eps_power(fam.twF(), fam.SF(si).field, -g * i), sys.generic() ? nullptr : &sys);
    auto mult = solver.multiplicities(word_traces(Ap, Si.parent, words, &Si.proj), Si.dim);
    for (int j = 0; j < d0; ++j) T[i][j] = mult[which[j]];
  }
  return T;
}

}  // namespace

ReducedResult decomp_hrpn_reduced(const ModularSystem& sys) {
  ReducedResult res;
  Params PK = sys.special_params();
  OrbitPartition part = orbit_partition(PK);
  int p = sys.p, kappa = part.kappa;
  res.trace.push_back("orbit partition: kappa = " + std::to_string(kappa));
  for (int a = 0; a < kappa; ++a) {
    std::vector<std::string> members;
    for (int i : part.groups[a]) members.push_back(sys.Q[i].to_string());
    res.trace.push_back("  Q_" + std::to_string(a + 1) + " = (" + join_strings(members, ", ") + ")");
  }
  std::map<FactorKey, std::shared_ptr<HrnFamily>> memo;
  auto family = [&](int alpha, int m) {
    FactorKey key{part.t[alpha], m, {}};
    for (int i : part.groups[alpha]) key.Q.push_back(sys.Q[i].to_string());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    ModularSystem fs = sys;
    fs.r = p * part.t[alpha];
    fs.n = m;
    fs.Q.clear();
    for (int i : part.groups[alpha]) fs.Q.push_back(sys.Q[i]);
    auto fam = std::make_shared<HrnFamily>(fs);
    res.trace.push_back("  factor H_{" + std::to_string(fs.r) + "," + std::to_string(m) + "}: " +
                        std::to_string(fam->shapes().size()) + " Specht, " + std::to_string(fam->dshapes().size()) + " simple");
    memo[key] = fam;
    return fam;
  };

  // grouped component c = i + p j carries the group-ordered Q_j; send it to the input index
  std::vector<int> comp_to_input(sys.r);
  for (int j = 0; j < sys.r / p; ++j)
    for (int i = 0; i < p; ++i) comp_to_input[i + p * j] = i + p * part.order[j];
  auto to_input = [&](const Multipartition& grouped) {
    Multipartition out = grouped;
    for (int c = 0; c < sys.r; ++c) out.comp[comp_to_input[c]] = grouped.comp[c];
    return out;
  };

  struct Orbit {
    std::vector<int> tuple;  // representative, one index per factor
    int inertia = 1;
    Multipartition label;
  };

  std::vector<std::vector<std::vector<long>>> per_b;
  std::vector<std::vector<SimpleLabel>> per_b_rows, per_b_cols;

  for (const auto& b : enumerate_compositions(sys.n, kappa)) {
    std::vector<Factor> facs;
    for (int a = 0; a < kappa; ++a)
      if (b.parts[a] > 0) facs.push_back({a, family(a, b.parts[a])});
    int nf = static_cast<int>(facs.size());

    auto join = [&](const std::vector<int>& tuple, bool dside) {
      std::vector<Multipartition> parts;
      int f = 0;
      for (int a = 0; a < kappa; ++a) {
        if (b.parts[a] == 0) {
          parts.push_back(Multipartition(std::vector<Partition>(p * part.t[a])));
          continue;
        }
        const auto& fam = *facs[f].fam;
        parts.push_back(dside ? fam.dshapes()[tuple[f]] : fam.shapes()[tuple[f]]);
        ++f;
      }
      return to_input(join_lambda(parts));
    };
    auto theta = [&](std::vector<int> tuple, int power, bool dside) {
      for (int f = 0; f < nf; ++f)
        for (int k = 0; k < power; ++k)
          tuple[f] = dside ? facs[f].fam->sigma_D()[tuple[f]] : facs[f].fam->sigma_S()[tuple[f]];
      return tuple;
    };
    auto orbits = [&](bool dside) {
      std::vector<int> sizes;
      for (const auto& f : facs) sizes.push_back(static_cast<int>(dside ? f.fam->dshapes().size() : f.fam->shapes().size()));
      std::set<std::vector<int>> seen;
      std::vector<Orbit> out;
      std::vector<int> tuple(nf, 0);
      bool empty = std::any_of(sizes.begin(), sizes.end(), [](int s) { return s == 0; });
      while (!empty) {
        if (!seen.count(tuple)) {
          std::vector<Multipartition> labels;
          std::vector<std::vector<int>> members;
          std::vector<int> cur = tuple;
          do {
            seen.insert(cur);
            members.push_back(cur);
            labels.push_back(join(cur, dside));
            cur = theta(cur, 1, dside);
          } while (cur != tuple);
          Orbit o;
          o.label = canonical_shape(labels);
          o.inertia = p / static_cast<int>(members.size());
          for (size_t m = 0; m < members.size(); ++m)
            if (labels[m] == o.label) o.tuple = members[m];
          out.push_back(o);
        }
        int f = 0;
        while (f < nf && ++tuple[f] == sizes[f]) tuple[f++] = 0;
        if (f == nf) break;
      }
      return out;
    };
    std::vector<Orbit> S = orbits(false), D = orbits(true);
    res.trace.push_back("b = " + b.to_string() + ": " + std::to_string(nf) + " factor(s), " + std::to_string(S.size()) +
                        " S-orbits, " + std::to_string(D.size()) + " D-orbits");

    std::vector<SimpleLabel> rows, cols;
    for (const auto& o : S)
      for (int i = 0; i < o.inertia; ++i) rows.push_back({o.label, o.inertia, i});
    for (const auto& o : D)
      for (int j = 0; j < o.inertia; ++j) cols.push_back({o.label, o.inertia, j});
    std::vector<std::vector<long>> E(rows.size(), std::vector<long>(cols.size(), 0));
    size_t r = 0;
    for (const auto& so : S)
      for (int i = 0; i < so.inertia; ++i, ++r) {
        size_t c = 0;
        for (const auto& dor : D)
          for (int j = 0; j < dor.inertia; ++j, ++c) {
            long val = 0;
            for (const auto& req : splittable_reduction(p, so.inertia, dor.inertia, i, j, true)) {
              std::vector<int> Da = theta(dor.tuple, req.a, true);
              std::vector<SplitTable> tables;
              for (int f = 0; f < nf; ++f) {
                const HrnFamily& fam = *facs[f].fam;
                if (req.d0 == 1)
                  tables.push_back({{fam.matrix().entries[so.tuple[f]][Da[f]]}});
                else
                  tables.push_back(splittable_table(fam, so.tuple[f], Da[f], req.d0, res.trace));
              }
              val += formula_main3(tables, nf, req.d0, req.i, req.j);
            }
            E[r][c] = val;
          }
      }
    per_b.push_back(std::move(E));
    per_b_rows.push_back(std::move(rows));
    per_b_cols.push_back(std::move(cols));
  }

  // assemble block diagonally over b
  DecompositionMatrix& m = res.matrix;
  for (auto& rs : per_b_rows) m.rows.insert(m.rows.end(), rs.begin(), rs.end());
  for (auto& cs : per_b_cols) m.cols.insert(m.cols.end(), cs.begin(), cs.end());
  m.entries.assign(m.rows.size(), std::vector<long>(m.cols.size(), 0));
  size_t r0 = 0, c0 = 0;
  for (size_t k = 0; k < per_b.size(); ++k) {
    for (size_t i = 0; i < per_b_rows[k].size(); ++i)
      for (size_t j = 0; j < per_b_cols[k].size(); ++j) m.entries[r0 + i][c0 + j] = per_b[k][i][j];
    r0 += per_b_rows[k].size();
    c0 += per_b_cols[k].size();
  }
  return res;
}

// ---------------------------------------------------------------------------------------------

CompareReport compare_matrices(const DecompositionMatrix& direct, const DecompositionMatrix& reduced) {
  using Key = std::pair<Multipartition, int>;
  auto groups = [](const std::vector<SimpleLabel>& labels) {
    std::map<Key, std::vector<int>> g;
    for (size_t k = 0; k < labels.size(); ++k) g[{labels[k].shape, labels[k].l}].push_back(static_cast<int>(k));
    for (auto& [key, idx] : g) {
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return labels[a].i < labels[b].i; });
      if (static_cast<int>(idx.size()) != key.second) fail(ErrorCode::LabelMismatch, "incomplete inertia indices for " + key.first.to_string());
    }
    return g;
  };
  auto rd = groups(direct.rows), rr = groups(reduced.rows), cd = groups(direct.cols), cr = groups(reduced.cols);
  auto keys = [](const std::map<Key, std::vector<int>>& g) {
    std::vector<Key> k;
    for (const auto& e : g) k.push_back(e.first);
    return k;
  };
  CompareReport rep;
  if (keys(rd) != keys(rr) || keys(cd) != keys(cr)) {
    rep.notes.push_back("direct:\n" + direct.to_string());
    rep.notes.push_back("reduced:\n" + reduced.to_string());
    fail(ErrorCode::LabelMismatch, "orbit label sets differ\n" + rep.notes[0] + rep.notes[1]);
  }
  std::vector<Key> rkeys = keys(rd), ckeys = keys(cd);
  std::vector<int> rshift(rkeys.size(), 0);
  long combos = 1;
  for (const auto& k : rkeys) combos = std::min<long>(combos * k.second, 1L << 20);
  for (long trial = 0; trial < combos; ++trial) {
    long t = trial;
    for (size_t a = 0; a < rkeys.size(); ++a) {
      rshift[a] = static_cast<int>(t % rkeys[a].second);
      t /= rkeys[a].second;
    }
    std::vector<int> cshift;
    bool all = true;
    for (const auto& ck : ckeys) {
      int d = ck.second, found = -1;
      for (int c = 0; c < d && found < 0; ++c) {
        bool ok = true;
        for (size_t a = 0; a < rkeys.size() && ok; ++a) {
          int s = rkeys[a].second;
          for (int i = 0; i < s && ok; ++i)
            for (int j = 0; j < d && ok; ++j)
              ok = direct.entries[rd[rkeys[a]][i]][cd[ck][j]] ==
                   reduced.entries[rr[rkeys[a]][mod(i + rshift[a], s)]][cr[ck][mod(j + c, d)]];
        }
        if (ok) found = c;
      }
      if (found < 0) {
        all = false;
        break;
      }
      cshift.push_back(found);
    }
    if (all) {
      rep.equal = true;
      for (size_t a = 0; a < rkeys.size(); ++a)
        if (rshift[a]) rep.notes.push_back("row orbit " + rkeys[a].first.to_string() + " shifted by " + std::to_string(rshift[a]));
      for (size_t a = 0; a < ckeys.size(); ++a)
        if (cshift[a]) rep.notes.push_back("column orbit " + ckeys[a].first.to_string() + " shifted by " + std::to_string(cshift[a]));
      return rep;
    }
  }
  rep.notes.push_back("direct:\n" + direct.to_string());
  rep.notes.push_back("reduced:\n" + reduced.to_string());
  return rep;
}

}  // namespace hecke
