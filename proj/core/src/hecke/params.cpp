#include "hecke/hecke/params.hpp"

#include <algorithm>

#include "hecke/errors.hpp"

namespace hecke {

std::vector<Scalar> Params::expanded() const {
  std::vector<Scalar> out;
  out.reserve(r);
  for (int j = 0; j < t(); ++j)
    for (int i = 0; i < p; ++i) out.push_back(eps.pow(i) * Q[j]);
  return out;
}

void Params::validate(bool rpn) const {
  if (r < 1 || p < 1 || n < 0 || r % p != 0) fail(ErrorCode::InvalidParams, "need r = p t with positive r, p");
  if (static_cast<int>(Q.size()) != t()) fail(ErrorCode::InvalidParams, "expected t = r/p parameters Q");
  if (q.field() != field || eps.field() != field) fail(ErrorCode::FieldMismatch, "parameters in different fields");
  if (q.is_zero()) fail(ErrorCode::InvalidParams, "q must be invertible");
  for (const auto& x : Q) {
    if (x.field() != field) fail(ErrorCode::FieldMismatch, "parameter Q in another field");
    if (x.is_zero()) fail(ErrorCode::InvalidParams, "Q_i must be invertible");
  }
  if (!eps.pow(p).is_one()) fail(ErrorCode::InvalidParams, "eps is not a p-th root of unity");
  for (int k = 1; k < p; ++k)
    if (eps.pow(k).is_one()) fail(ErrorCode::InvalidParams, "eps is not primitive");
  if (rpn && (p < 2 || n < 3)) fail(ErrorCode::InvalidParams, "G(r,p,n) operations need p > 1 and n >= 3");
}

std::string Params::describe() const {
  std::string s = "r=" + std::to_string(r) + " p=" + std::to_string(p) + " n=" + std::to_string(n) + " q=" + q.to_string() + " Q=(";
  for (size_t i = 0; i < Q.size(); ++i) s += (i ? ", " : "") + Q[i].to_string();
  return s + ") over " + field->describe();
}

Params make_params(Field f, int r, int p, int n, const Scalar& q, const std::vector<Scalar>& Q) {
  Params P;
  P.r = r;
  P.p = p;
  P.n = n;
  P.field = f;
  P.q = q;
  P.Q = Q;
  P.eps = primitive_root(f, p);
  P.validate(false);
  return P;
}

Params specialize_params(const Params& P, const Scalar& x0, Field K) {
  auto down = [&](const Scalar& s) {
    if (P.field->kind == FieldKind::Function) return specialize(s, x0);
    Cyclo c;
    if (!s.as_constant(c)) fail(ErrorCode::FieldMismatch, "cannot move parameter to the residue field");
    return Scalar::embed(K, c);
  };
  Params R = P;
  R.field = K;
  R.q = down(P.q);
  R.eps = down(P.eps);
  for (auto& x : R.Q) x = down(x);
  R.validate(false);
  return R;
}

std::vector<std::pair<Scalar, int>> content_function(const Multipartition& lam, const Params& P) {
  if (lam.r() != P.r) fail(ErrorCode::ShapeMismatch, "multipartition has the wrong number of components");
  auto Qe = P.expanded();
  std::vector<std::pair<Scalar, int>> out;
  for (int s = 0; s < lam.r(); ++s)
    for (size_t i = 0; i < lam.comp[s].size(); ++i)
      for (int j = 0; j < lam.comp[s][i]; ++j) {
        Scalar res = P.q.pow(j - static_cast<long>(i)) * Qe[s];
        bool found = false;
        for (auto& [v, m] : out)
          if (v == res) {
            ++m;
            found = true;
            break;
          }
        if (!found) out.emplace_back(res, 1);
      }
  return out;
}

std::vector<std::string> content_key(const Multipartition& lam, const Params& P) {
  std::vector<std::string> key;
  for (const auto& [v, m] : content_function(lam, P))
    for (int k = 0; k < m; ++k) key.push_back(v.to_string());
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace hecke
