#include "hecke/cellular/cellular.hpp"

#include <algorithm>

#include "hecke/errors.hpp"

namespace hecke {

Cellular::Cellular(const Algebra& A) : A_(A) {
  shapes_ = enumerate_multipartitions(A.n(), A.r());
  for (const auto& lam : shapes_) tab_.emplace(lam, enumerate_standard_tableaux(lam));
  ech_ = std::make_unique<Echelon>(A.field(), A.dim());
}

const std::vector<Tableau>& Cellular::tableaux(const Multipartition& lam) const {
  auto it = tab_.find(lam);
  if (it == tab_.end()) fail(ErrorCode::ShapeMismatch, lam.to_string() + " is not a multipartition of n with r components");
  return it->second;
}

const Element& Cellular::m_lambda(const Multipartition& lam) const {
  auto it = mlam_.find(lam);
  if (it != mlam_.end()) return it->second;
  tableaux(lam);
  int n = A_.n();
  Tableau top = superstandard(lam);
  // row of each entry in t^lambda; S_lambda permutes entries within rows
  std::vector<int> row_id(n);
  int id = 0;
  for (const auto& comp : top.entries)
    for (const auto& row : comp) {
      for (int v : row) row_id[v - 1] = id;
      ++id;
    }
  Scalar one = Scalar::one(A_.field());
  Accumulator acc(A_.field(), A_.dim());
  for (const Perm& w : all_perms(n)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = row_id[w(i)] == row_id[i];
    if (ok) acc.add(A_.Tw(w), one);
  }
  Element x = acc.take();
  auto Qe = A_.params().expanded();
  Element u = A_.one();
  int before = 0;
  for (int s = 1; s < lam.r(); ++s) {
    before += lam.comp_size(s - 1);
    for (int k = 1; k <= before; ++k) u = A_.mul(u, elem_sub(A_.L(k), A_.scalar(Qe[s])));
  }
  return mlam_.emplace(lam, A_.mul(x, u)).first->second;
}

Element Cellular::murphy_element(const MurphyIndex& idx) const {
  const auto& tabs = tableaux(idx.shape);
  if (idx.s < 0 || idx.t < 0 || idx.s >= static_cast<int>(tabs.size()) || idx.t >= static_cast<int>(tabs.size()))
    fail(ErrorCode::InvalidParams, "tableau index out of range");
  Perm ds = tableau_perm(tabs[idx.s]), dt = tableau_perm(tabs[idx.t]);
  Element m = m_lambda(idx.shape);
  if (!ds.is_identity()) m = A_.mul(A_.Tw(ds.inverse()), m);
  if (!dt.is_identity()) m = A_.mul(m, A_.Tw(dt));
  return m;
}

std::vector<Element> Cellular::murphy_basis() const {
  std::vector<Element> out;
  for (const auto& lam : shapes_) {
    int f = static_cast<int>(tableaux(lam).size());
    for (int s = 0; s < f; ++s)
      for (int t = 0; t < f; ++t) out.push_back(murphy_element({lam, s, t}));
  }
  return out;
}

Matrix Cellular::change_of_basis() const {
  auto basis = murphy_basis();
  if (static_cast<int>(basis.size()) != A_.dim())
    fail(ErrorCode::SingularChangeOfBasis, "Murphy basis has the wrong number of elements");
  Matrix M(A_.field(), A_.dim(), A_.dim());
  Echelon ech(A_.field(), A_.dim());
  for (size_t i = 0; i < basis.size(); ++i) {
    if (!ech.insert(basis[i])) fail(ErrorCode::SingularChangeOfBasis, "Murphy elements are linearly dependent");
    for (const auto& [j, c] : basis[i]) M.at(static_cast<int>(i), j) = c;
  }
  return M;
}

std::vector<Element> Cellular::ideal_above(const Multipartition& lam) const {
  tableaux(lam);
  std::vector<Element> out;
  for (const auto& mu : shapes_) {
    if (mu == lam || !dominance_ge(mu, lam)) continue;
    int f = static_cast<int>(tableaux(mu).size());
    for (int s = 0; s < f; ++s)
      for (int t = 0; t < f; ++t) out.push_back(murphy_element({mu, s, t}));
  }
  return out;
}

void Cellular::advance_to(size_t k) const {
  Field F = A_.field();
  int n = A_.n(), D = A_.dim();
  for (; done_ <= k; ++done_) {
    const Multipartition& lam = shapes_[done_];
    const auto& tabs = tableaux(lam);
    int f = static_cast<int>(tabs.size());
    std::vector<Element> top(f);
    Echelon local(F, D, true);
    for (int v = 0; v < f; ++v) {
      top[v] = murphy_element({lam, 0, v});
      if (!local.insert(ech_->reduce(top[v])))
        fail(ErrorCode::SingularChangeOfBasis, "Murphy elements of " + lam.to_string() + " dependent modulo the ideal above");
    }
    auto coords_of = [&](const Element& y) {
      SparseVec coords;
      if (!local.reduce(ech_->reduce(y), &coords).empty())
        fail(ErrorCode::NotInvariant, "product leaves the cell of " + lam.to_string());
      return coords;
    };
    SpechtModule S;
    S.shape = lam;
    S.tableaux = tabs;
    S.rep.field = F;
    S.rep.dim = f;
    for (int i = 0; i < n; ++i) {
      Matrix m(F, f, f);
      for (int t = 0; t < f; ++t) {
        Element y = i == 0 ? A_.rmul_L(top[t], 1) : A_.rmul_T(top[t], i);
        for (const auto& [j, c] : coords_of(y)) m.at(t, j) = c;
      }
      S.rep.gens.push_back(std::move(m));
    }
    S.gram = Matrix(F, f, f);
    for (int u = 0; u < f; ++u) {
      Element right = murphy_element({lam, u, 0});
      for (int t = 0; t < f; ++t) {
        for (const auto& [j, c] : coords_of(A_.mul(top[t], right))) {
          if (j != 0) fail(ErrorCode::VerificationFailed, "cellular product rule fails for " + lam.to_string());
          S.gram.at(t, u) = c;
        }
      }
    }
    for (int s = 0; s < f; ++s)
      for (int t = 0; t < f; ++t)
        if (!ech_->insert(s == 0 ? top[t] : murphy_element({lam, s, t})))
          fail(ErrorCode::SingularChangeOfBasis, "Murphy elements of " + lam.to_string() + " are dependent");
    specht_.emplace(lam, std::move(S));
  }
}

const SpechtModule& Cellular::specht(const Multipartition& lam) const {
  auto it = specht_.find(lam);
  if (it != specht_.end()) return it->second;
  auto pos = std::find(shapes_.begin(), shapes_.end(), lam);
  if (pos == shapes_.end()) fail(ErrorCode::ShapeMismatch, lam.to_string() + " is not a shape of this algebra");
  advance_to(static_cast<size_t>(pos - shapes_.begin()));
  return specht_.at(lam);
}

SimpleQuotient Cellular::simple(const Multipartition& lam) const { return gram_and_simple(specht(lam)); }

SimpleQuotient gram_and_simple(const SpechtModule& S) {
  SimpleQuotient D;
  D.shape = S.shape;
  Field F = S.rep.field;
  int f = S.dim();
  RowEchelon R = rref(S.gram);
  D.rank = R.rank();
  D.support = R.pivots;
  D.rep.field = F;
  D.rep.dim = D.rank;
  if (D.rank == 0) return D;
  Matrix E(F, D.rank, f);
  for (int a = 0; a < D.rank; ++a) E.at(a, D.support[a]) = Scalar::one(F);
  Matrix B = D.rank < f ? E.stack(right_kernel(S.gram)) : E;
  Matrix Binv = inverse(B);
  std::vector<int> keep(D.rank);
  for (int a = 0; a < D.rank; ++a) keep[a] = a;
  for (const auto& g : S.rep.gens) D.rep.gens.push_back((E * g * Binv).select_cols(keep));
  return D;
}

std::vector<std::vector<Multipartition>> blocks(const Params& P) {
  std::vector<std::vector<Multipartition>> out;
  std::vector<std::vector<std::string>> keys;
  for (const auto& lam : enumerate_multipartitions(P.n, P.r)) {
    auto key = content_key(lam, P);
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      out.push_back({lam});
    } else {
      out[it - keys.begin()].push_back(lam);
    }
  }
  return out;
}

OmegaModule m_omega_module(const Cellular& C, const Composition& b, const GroupLayout& g) {
  const Algebra& A = C.algebra();
  OmegaModule M;
  M.omega = omega_b(b, g);
  M.u_plus = C.m_lambda(M.omega);
  for (const auto& lam : C.shapes()) {
    const auto& tabs = C.tableaux(lam);
    for (const Tableau& s : std_b(lam, b, g)) {
      int si = static_cast<int>(std::find(tabs.begin(), tabs.end(), s) - tabs.begin());
      for (int t = 0; t < static_cast<int>(tabs.size()); ++t) M.basis.push_back(C.murphy_element({lam, si, t}));
    }
  }
  M.rank_of_span = static_cast<int>(spin(A, {M.u_plus}, A.generators()).size());
  return M;
}

}  // namespace hecke
