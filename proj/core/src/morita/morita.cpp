#include "hecke/morita/morita.hpp"

#include <algorithm>
#include <numeric>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

/// Multiplicative order of x when it is a root of unity in its field, else 0.
int root_order(const Scalar& x) {
  int bound = 2 * x.field()->conductor();
  Scalar y = x;
  for (int k = 1; k <= bound; ++k) {
    if (y.is_one()) return k;
    y *= x;
  }
  return 0;
}

bool in_eps_group(const Params& P, const Scalar& c) {
  Scalar e = Scalar::one(P.field);
  for (int a = 0; a < P.p; ++a, e *= P.eps)
    if (e == c) return true;
  return false;
}

SparseVec flatten(const Matrix& m) {
  SparseVec v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) v.emplace_back(i * m.cols() + j, m.at(i, j));
  return v;
}

/// Span of all products of `gens` (and the identity), closed under right multiplication.
std::vector<Matrix> operator_algebra(Field F, int d, const std::vector<Matrix>& gens, Echelon& span) {
  std::vector<Matrix> basis{Matrix::identity(F, d)};
  span.insert(flatten(basis[0]));
  for (size_t head = 0; head < basis.size(); ++head)
    for (const auto& g : gens) {
      Matrix m = basis[head] * g;
      if (span.insert(flatten(m))) basis.push_back(std::move(m));
    }
  return basis;
}

void require(std::vector<Check>& out, const std::string& name, bool ok, const std::string& detail = {}) {
  out.push_back({name, ok, detail});
}

void raise_if_failed(const std::vector<Check>& checks, ErrorCode code) {
  for (const auto& c : checks)
    if (!c.ok) fail(code, c.name + (c.detail.empty() ? "" : ": " + c.detail));
}

long factorial_l(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool commutes_with(const Matrix& X, const Representation& R) {
  for (const auto& g : R.gens)
    if (X * g != g * X) return false;
  return true;
}

}  // namespace

bool OrbitPartition::is_grouped() const {
  for (size_t i = 0; i < order.size(); ++i)
    if (order[i] != static_cast<int>(i)) return false;
  return true;
}

bool same_orbit(const Params& P, const Scalar& a, const Scalar& b) {
  Scalar ratio = a / b;
  int m = root_order(P.q);
  if (m > 0) {
    Scalar qj = Scalar::one(P.field);
    for (int j = 0; j < m; ++j, qj *= P.q)
      if (in_eps_group(P, ratio * qj)) return true;
    return false;
  }
  // q of infinite order: a = eps^i q^j b has at most one j, found in a bounded window
  Scalar qinv = P.q.inv();
  Scalar up = ratio, down = ratio;
  for (int j = 0; j <= 64; ++j) {
    if (in_eps_group(P, up) || in_eps_group(P, down)) return true;
    up *= qinv;
    down *= P.q;
  }
  return false;
}

OrbitPartition orbit_partition(const Params& P) {
  int t = P.t();
  std::vector<int> parent(t);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (find(i) != find(j) && same_orbit(P, P.Q[i], P.Q[j])) parent[find(j)] = find(i);
  OrbitPartition out;
  std::vector<int> root_group(t, -1);
  for (int i = 0; i < t; ++i) {
    int r = find(i);
    if (root_group[r] < 0) {
      root_group[r] = out.kappa++;
      out.groups.emplace_back();
    }
    out.groups[root_group[r]].push_back(i);
  }
  for (const auto& g : out.groups) {
    out.t.push_back(static_cast<int>(g.size()));
    out.order.insert(out.order.end(), g.begin(), g.end());
  }
  return out;
}

Params grouped_params(const Params& P, const OrbitPartition& part) {
  Params R = P;
  for (size_t i = 0; i < part.order.size(); ++i) R.Q[i] = P.Q[part.order[i]];
  return R;
}

Morita::Morita(const Cellular& C) : C_(C), A_(C.algebra()) {
  const Params& P = A_.params();
  part_ = orbit_partition(P);
  if (!part_.is_grouped())
    fail(ErrorCode::InvalidParams, "Q is not grouped by orbits; build the algebra from grouped_params first");
  for (const auto& Q : P.Q) Qp_.push_back(Q.pow(P.p));
}

long Morita::dim_Hb(const Composition& b) const {
  long d = 1;
  int p = A_.params().p;
  for (int a = 0; a < b.kappa(); ++a) d *= ipow(static_cast<long>(p) * part_.t[a], b.parts[a]) * factorial_l(b.parts[a]);
  return d;
}

Element Morita::u_factor(int m, int k) const {
  int p = A_.params().p;
  Element out = A_.one();
  for (int j = 1; j <= m; ++j) out = A_.mul(out, elem_sub(A_.pow(A_.L(j), p), A_.scalar(Qp_.at(k - 1))));
  return out;
}

Element Morita::v_ab_plus(int a, int b, int s) const {
  Element out = A_.one();
  for (int k = 1; k <= s; ++k) out = A_.mul(out, u_factor(a, k));
  return A_.mul(out, A_.Tw(w_ab(A_.n(), a, b)));
}

Element Morita::v_ab(int a, int b, int s) const {
  Element out = v_ab_plus(a, b, s);
  for (int k = s + 1; k <= A_.params().t(); ++k) out = A_.mul(out, u_factor(b, k));
  return out;
}

VbElements Morita::v_b(const Composition& b) const {
  if (b.kappa() != part_.kappa || b.n() != A_.n()) fail(ErrorCode::ShapeMismatch, "b is not in Lambda(n, kappa)");
  auto tsum = [&](int hi) {
    int s = 0;
    for (int a = 0; a < hi; ++a) s += part_.t[a];
    return s;
  };
  VbElements out;
  out.minus = A_.one();
  for (int alpha = b.kappa(); alpha >= 2; --alpha)
    out.minus = A_.mul(out.minus, v_ab_plus(b.parts[alpha - 1], b.sum(1, alpha - 1), tsum(alpha - 1)));
  out.u_plus = A_.one();
  for (int alpha = 1; alpha < b.kappa(); ++alpha)
    for (int k = tsum(alpha) + 1; k <= tsum(alpha + 1); ++k) out.u_plus = A_.mul(out.u_plus, u_factor(b.sum(1, alpha), k));
  if (out.u_plus != C_.m_lambda(omega_b(b, layout())))
    fail(ErrorCode::IdentityFailed, "u^+_omega differs from the Murphy element of omega_b for b = " + b.to_string());
  out.v = A_.mul(out.minus, out.u_plus);
  return out;
}

std::vector<Check> Morita::shift_identities(const Composition& b) const {
  Element v = v_b(b).v;
  Perm w = w_b(b);
  int n = A_.n();
  std::vector<int> excluded;
  for (int alpha = 1; alpha <= b.kappa(); ++alpha) excluded.push_back(b.sum(alpha, b.kappa()));
  std::vector<Check> out;
  for (int i = 1; i < n; ++i) {
    if (std::find(excluded.begin(), excluded.end(), i) != excluded.end()) continue;
    int wi = w(i - 1) + 1;
    bool ok = wi >= 1 && wi < n && w(i) == w(i - 1) + 1 && A_.lmul_T(i, v) == A_.rmul_T(v, wi);
    require(out, "T_" + std::to_string(i) + " v_b = v_b T_" + std::to_string(wi), ok);
  }
  for (int k = 1; k <= n; ++k) {
    int wk = w(k - 1) + 1;
    require(out, "L_" + std::to_string(k) + " v_b = v_b L_" + std::to_string(wk), A_.mul(A_.L(k), v) == A_.rmul_L(v, wk));
  }
  raise_if_failed(out, ErrorCode::IdentityFailed);
  return out;
}

std::vector<Check> Morita::vanishing_identities(const Composition& b) const {
  Element v = v_b(b).v;
  int p = A_.params().p;
  std::vector<Check> out;
  int first = 1;
  for (int alpha = 1; alpha <= b.kappa(); ++alpha) {
    int last = first + part_.t[alpha - 1];
    if (b.parts[alpha - 1] != 0) {
      int jl = 1 + b.sum(alpha + 1, b.kappa()), jr = b.sum(1, alpha - 1) + 1;
      Element left = v, right = v;
      for (int k = first; k < last; ++k) {
        left = A_.mul(elem_sub(A_.pow(A_.L(jl), p), A_.scalar(Qp_[k - 1])), left);
        right = A_.mul(right, elem_sub(A_.pow(A_.L(jr), p), A_.scalar(Qp_[k - 1])));
      }
      std::string a = std::to_string(alpha);
      require(out, "left annihilation, alpha = " + a + " (L_" + std::to_string(jl) + ")", left.empty());
      require(out, "right annihilation, alpha = " + a + " (L_" + std::to_string(jr) + ")", right.empty());
    }
    first = last;
  }
  raise_if_failed(out, ErrorCode::IdentityFailed);
  return out;
}

VbModule Morita::vb_basis(const Composition& b, bool fixed) const {
  const Params& P = A_.params();
  int n = A_.n();
  VbModule V;
  V.b = b;
  V.fixed = fixed;
  V.v = v_b(b).v;
  std::vector<int> bound(n);
  for (int alpha = 1, i = 0; alpha <= b.kappa(); ++alpha)
    for (int c = 0; c < b.parts[alpha - 1]; ++c) bound[i++] = P.p * part_.t[alpha - 1];
  auto ech = std::make_shared<Echelon>(A_.field(), A_.dim(), true);
  std::vector<int> c(n, 0);
  auto perms = all_perms(n);
  while (true) {
    int total = std::accumulate(c.begin(), c.end(), 0);
    if (!fixed || total % P.p == 0) {
      Element head = A_.mul(V.v, A_.word(c, Perm(n)));
      for (const Perm& w : perms) {
        Element e = w.is_identity() ? head : A_.mul(head, A_.Tw(w));
        if (!ech->insert(e))
          fail(ErrorCode::RankDeficient, "spanning set of v_b H is dependent for b = " + b.to_string());
        V.basis.push_back(std::move(e));
        V.labels.emplace_back(c, w);
      }
    }
    int i = n - 1;
    while (i >= 0 && ++c[i] == bound[i]) c[i--] = 0;
    if (i < 0) break;
  }
  V.coords = ech;
  V.rep.field = A_.field();
  V.rep.dim = V.dim();
  try {
    for (const auto& g : fixed ? A_.subalgebra_generators() : A_.generators()) V.rep.gens.push_back(A_.action_matrix(V.basis, g));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInvariant) throw;
    fail(ErrorCode::RankDeficient, "stated basis does not span v_b H for b = " + b.to_string());
  }
  return V;
}

Representation Morita::restricted(const VbModule& V) const {
  Representation R;
  R.field = A_.field();
  R.dim = V.dim();
  for (const auto& g : A_.subalgebra_generators()) R.gens.push_back(A_.action_matrix(V.basis, g));
  return R;
}

Element Morita::theta_b(const Composition& b, const Element& h) const { return A_.mul(v_b(b).minus, h); }

Element Morita::v_st(const Composition& b, const MurphyIndex& idx) const { return theta_b(b, C_.murphy_element(idx)); }

std::vector<Check> Morita::v_st_checks(const Composition& b) const {
  Element minus = v_b(b).minus;
  GroupLayout g = layout();
  Echelon span(A_.field(), A_.dim());
  std::vector<Check> out;
  int killed = 0, survived = 0, dependent = 0;
  for (const auto& lam : C_.shapes()) {
    const auto& tabs = C_.tableaux(lam);
    auto plus = std_b_plus(lam, b, g);
    for (const Tableau& s : std_b(lam, b, g)) {
      int si = static_cast<int>(std::find(tabs.begin(), tabs.end(), s) - tabs.begin());
      bool in_plus = std::find(plus.begin(), plus.end(), s) != plus.end();
      for (int t = 0; t < static_cast<int>(tabs.size()); ++t) {
        Element v = A_.mul(minus, C_.murphy_element({lam, si, t}));
        if (in_plus) {
          if (!span.insert(v)) ++dependent;
        } else {
          ++killed;
          if (!v.empty()) ++survived;
        }
      }
    }
  }
  long expect = 1;
  for (int a = 0; a < b.kappa(); ++a) expect *= ipow(static_cast<long>(A_.params().p) * part_.t[a], b.parts[a]);
  expect *= factorial_l(A_.n());
  require(out, "theta_b kills m_st for s in Std_b \\ Std_b^+ (" + std::to_string(killed) + " elements)", survived == 0);
  require(out, "v_st independent", dependent == 0);
  require(out, "#v_st = dim V^b", span.rank() == expect, std::to_string(span.rank()) + " vs " + std::to_string(expect));
  return out;
}

Matrix Morita::left_operator(const VbModule& V, const Element& x) const {
  int d = V.dim();
  Matrix m(A_.field(), d, d);
  for (int i = 0; i < d; ++i) {
    SparseVec coords;
    if (!V.coords->reduce(A_.mul(x, V.basis[i]), &coords).empty())
      fail(ErrorCode::NotInvariant, "left multiplication leaves v_b H for b = " + V.b.to_string());
    for (const auto& [j, c] : coords) m.at(i, j) = c;
  }
  return m;
}

std::vector<std::vector<Element>> Morita::hb_generators(const Composition& b) const {
  std::vector<std::vector<Element>> out;
  for (int alpha = 1; alpha <= b.kappa(); ++alpha) {
    int ba = b.parts[alpha - 1];
    if (ba == 0) continue;
    int shift = b.sum(alpha + 1, b.kappa());
    std::vector<Element> g{A_.L(1 + shift)};
    for (int i = 1; i < ba; ++i) g.push_back(A_.T(i + shift));
    out.push_back(std::move(g));
  }
  return out;
}

EndoReport Morita::endo_verify_main1(const Composition& b) const {
  const Params& P = A_.params();
  EndoReport R;
  R.b = b;
  R.dim_Hb = dim_Hb(b);
  VbModule V = vb_basis(b, false);
  Representation down = restricted(V);
  R.end_rn = hom_dimension(V.rep, V.rep);
  R.end_rpn = hom_dimension(down, down);
  auto& ck = R.checks;
  require(ck, "dim End_{H_{r,n}}(V^b) = dim H_b", R.end_rn == R.dim_Hb, std::to_string(R.end_rn) + " vs " + std::to_string(R.dim_Hb));
  require(ck, "dim End_{H_{r,p,n}}(V^b) = p dim H_b", R.end_rpn == P.p * R.dim_Hb,
          std::to_string(R.end_rpn) + " vs " + std::to_string(P.p * R.dim_Hb));

  // sigma on V^b is diagonal on v_b L^c T_w with eigenvalue eps^{sum c}
  require(ck, "sigma(v_b) = v_b", A_.sigma(V.v) == V.v);
  Field F = A_.field();
  int d = V.dim();
  Matrix Sig(F, d, d);
  for (int i = 0; i < d; ++i) {
    const auto& c = V.labels[i].first;
    Sig.at(i, i) = P.eps.pow(std::accumulate(c.begin(), c.end(), 0) % P.p);
  }
  require(ck, "sigma is an H_{r,p,n}-endomorphism of V^b", commutes_with(Sig, down));

  std::vector<Matrix> ops;
  bool relations = true, commute = true, twist = true;
  auto Qe = P.expanded();
  int first = 0;
  int gi = 0;
  auto gens = hb_generators(b);
  Matrix I = Matrix::identity(F, d);
  for (int alpha = 1; alpha <= b.kappa(); ++alpha) {
    int tcount = part_.t[alpha - 1];
    if (b.parts[alpha - 1] == 0) {
      first += tcount;
      continue;
    }
    std::vector<Matrix> g;
    for (const auto& x : gens[gi]) {
      g.push_back(left_operator(V, x));
      commute = commute && commutes_with(g.back(), V.rep);
      twist = twist && g.back() * Sig == Sig * left_operator(V, A_.sigma(x));
    }
    ++gi;
    Matrix cyc = I;
    for (int k = first; k < first + tcount; ++k) cyc = cyc * (g[0].pow(P.p) - I.scaled(Qp_[k]));
    relations = relations && cyc.is_zero();
    int m = static_cast<int>(g.size());
    if (m >= 2) relations = relations && g[0] * g[1] * g[0] * g[1] == g[1] * g[0] * g[1] * g[0];
    for (int i = 1; i < m; ++i) {
      relations = relations && ((g[i] - I.scaled(P.q)) * (g[i] + I)).is_zero();
      if (i + 1 < m) relations = relations && g[i] * g[i + 1] * g[i] == g[i + 1] * g[i] * g[i + 1];
      if (i >= 2) relations = relations && g[0] * g[i] == g[i] * g[0];
      for (int j = i + 2; j < m; ++j) relations = relations && g[i] * g[j] == g[j] * g[i];
    }
    for (const auto& o : ops)
      for (const auto& x : g) relations = relations && o * x == x * o;
    ops.insert(ops.end(), g.begin(), g.end());
    first += tcount;
  }
  require(ck, "H_b generators act on V^b and commute with H_{r,n}", commute);
  require(ck, "H_b relations hold on the left operators", relations);
  require(ck, "sigma twists the H_b action", twist);
  Echelon span(F, d * d);
  auto alg = operator_algebra(F, d, ops, span);
  require(ck, "H_b acts faithfully", static_cast<long>(alg.size()) == R.dim_Hb,
          std::to_string(alg.size()) + " vs " + std::to_string(R.dim_Hb));
  require(ck, "sigma is not in the image of H_b", P.p == 1 || !span.contains(flatten(Sig)));
  raise_if_failed(ck, ErrorCode::VerificationFailed);
  return R;
}

HpbReport Morita::hpb_prime(const Composition& b) const {
  const Params& P = A_.params();
  HpbReport R;
  R.b = b;
  long hb = dim_Hb(b);
  R.dim_Hpb_formula = hb / P.p;
  VbModule W = vb_basis(b, true);
  R.end_rpn = hom_dimension(W.rep, W.rep);
  auto& ck = R.checks;
  require(ck, "dim End_{H_{r,p,n}}(v_b H_{r,p,n}) = p^{kappa-1} dim H_{p,b}", R.end_rpn == R.dim_Hpb_formula,
          std::to_string(R.end_rpn) + " vs " + std::to_string(R.dim_Hpb_formula));

  Field F = A_.field();
  int d = W.dim();
  std::vector<Matrix> hpb;
  int k = b.kappa();
  for (int alpha = 1; alpha <= k; ++alpha) {
    int ba = b.parts[alpha - 1];
    if (ba == 0) continue;
    int j = 1 + b.sum(alpha + 1, k);
    hpb.push_back(left_operator(W, A_.pow(A_.L(j), P.p)));
    if (ba >= 2) hpb.push_back(left_operator(W, A_.mul(A_.mul(A_.L_inverse(j), A_.T(j)), A_.L(j))));
    for (int i = 1; i < ba; ++i) hpb.push_back(left_operator(W, A_.T(i + b.sum(alpha + 1, k))));
  }
  Echelon span(F, d * d);
  R.hpb_action_dim = static_cast<int>(operator_algebra(F, d, hpb, span).size());
  long expect = 1;
  for (int alpha = 1; alpha <= k; ++alpha) {
    int ba = b.parts[alpha - 1];
    if (ba > 0) expect *= ipow(static_cast<long>(P.p) * part_.t[alpha - 1], ba) * factorial_l(ba) / P.p;
  }
  require(ck, "H_{p,b} acts faithfully on v_b H_{r,p,n}", R.hpb_action_dim == expect,
          std::to_string(R.hpb_action_dim) + " vs " + std::to_string(expect));

  std::vector<Matrix> rho;
  bool comm = true, fixed_power = true;
  // T_0^{(a0)} (T_0^{(alpha)})^{-1} with a0 the first nonzero part; a0 = 1 unless b_1 = 0
  int a0 = 1;
  while (a0 < k && b.parts[a0 - 1] == 0) ++a0;
  for (int alpha = a0 + 1; alpha <= k; ++alpha) {
    if (b.parts[alpha - 1] == 0) continue;
    Element y = A_.mul(A_.L(b.sum(a0 + 1, k) + 1), A_.L_inverse(b.sum(alpha + 1, k) + 1));
    rho.push_back(left_operator(W, y));
    comm = comm && commutes_with(rho.back(), W.rep);
    fixed_power = fixed_power && span.contains(flatten(rho.back().pow(P.p)));
  }
  bool pairwise = true;
  for (size_t a = 0; a < rho.size(); ++a)
    for (size_t c = a + 1; c < rho.size(); ++c) pairwise = pairwise && rho[a] * rho[c] == rho[c] * rho[a];
  require(ck, "rho_alpha are H_{r,p,n}-endomorphisms", comm);
  require(ck, "rho_alpha commute", pairwise);
  require(ck, "rho_alpha^p lies in the H_{p,b} action", fixed_power);

  VbModule V = vb_basis(b, false);
  int cross = hom_dimension(restricted(V), W.rep);
  require(ck, "Hom(V^b restricted, v_b H_{r,p,n}) = p dim End(v_b H_{r,p,n})", cross == P.p * R.end_rpn,
          std::to_string(cross) + " vs " + std::to_string(P.p * R.end_rpn));
  raise_if_failed(ck, ErrorCode::VerificationFailed);
  return R;
}

}  // namespace hecke
