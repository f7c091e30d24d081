#include "hecke/hecke/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

Element elem_add(const Element& a, const Element& b) {
  Element out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Scalar s = a[i].second + b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

Element elem_neg(const Element& a) {
  Element out = a;
  for (auto& [k, c] : out) c = -c;
  return out;
}

Element elem_sub(const Element& a, const Element& b) { return elem_add(a, elem_neg(b)); }

Element elem_scale(const Element& a, const Scalar& s) {
  if (s.is_zero()) return {};
  Element out = a;
  for (auto& [k, c] : out) c *= s;
  return out;
}

Accumulator::Accumulator(Field f, int dim) : f_(f), v_(dim, Scalar::zero(f)), used_(dim, 0) {}

void Accumulator::add(int idx, const Scalar& s) {
  if (s.is_zero()) return;
  if (!used_[idx]) {
    used_[idx] = 1;
    touched_.push_back(idx);
    v_[idx] = s;
  } else {
    v_[idx] += s;
  }
}

void Accumulator::add(const Element& e, const Scalar& s) {
  if (s.is_zero()) return;
  bool unit = s.is_one();
  for (const auto& [k, c] : e) add(k, unit ? c : c * s);
}

void Accumulator::add(const Element& e) {
  for (const auto& [k, c] : e) add(k, c);
}

Element Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  Element out;
  for (int k : touched_) {
    if (!v_[k].is_zero()) out.emplace_back(k, std::move(v_[k]));
    v_[k] = Scalar::zero(f_);
    used_[k] = 0;
  }
  touched_.clear();
  return out;
}

namespace {

// Coefficients a_0..a_{r-1} of prod_s (X - Q'_s) = X^r + sum a_k X^k.
std::vector<Scalar> cyclotomic_coeffs(const Params& P) {
  auto Qe = P.expanded();
  std::vector<Scalar> poly{Scalar::one(P.field)};
  for (const auto& root : Qe) {
    std::vector<Scalar> next(poly.size() + 1, Scalar::zero(P.field));
    for (size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * root;
    }
    poly = std::move(next);
  }
  poly.pop_back();
  return poly;
}

}  // namespace

Algebra::Algebra(Params P) : P_(std::move(P)) {
  P_.validate(false);
  if (P_.n < 1) fail(ErrorCode::InvalidParams, "need n >= 1");
  nfact_ = factorial(P_.n);
  ncexp_ = 1;
  for (int k = 0; k < P_.n; ++k) ncexp_ *= P_.r;
  dim_ = ncexp_ * nfact_;
  perms_ = all_perms(P_.n);
  q_ = P_.q;
  qinv_ = q_.inv();
  qm1_ = q_ - Scalar::one(field());
  int n = P_.n;
  simple_right_.assign(nfact_, std::vector<int>(n, -1));
  simple_left_.assign(nfact_, std::vector<int>(n, -1));
  for (int v = 0; v < nfact_; ++v) {
    words_.push_back(perms_[v].reduced_word());
    for (int i = 1; i < n; ++i) {
      simple_right_[v][i] = (perms_[v] * Perm::simple(n, i)).rank();
      simple_left_[v][i] = (Perm::simple(n, i) * perms_[v]).rank();
    }
  }
  star_cache_.resize(dim_);
  build_tables();
}

int Algebra::cindex(const std::vector<int>& c) const {
  int k = 0;
  for (int i = P_.n - 1; i >= 0; --i) k = k * P_.r + c[i];
  return k;
}

int Algebra::index(const std::vector<int>& c, const Perm& w) const {
  if (static_cast<int>(c.size()) != P_.n || w.size() != P_.n) fail(ErrorCode::ShapeMismatch, "word shape");
  for (int v : c)
    if (v < 0 || v >= P_.r) fail(ErrorCode::InvalidParams, "exponent out of range");
  return cindex(c) * nfact_ + w.rank();
}

std::vector<int> Algebra::exponents(int idx) const {
  int k = idx / nfact_;
  std::vector<int> c(P_.n);
  for (int i = 0; i < P_.n; ++i) {
    c[i] = k % P_.r;
    k /= P_.r;
  }
  return c;
}

Element Algebra::one() const { return scalar(Scalar::one(field())); }

Element Algebra::scalar(const Scalar& s) const {
  if (s.is_zero()) return {};
  return {{0, s}};
}

Element Algebra::word(const std::vector<int>& c, const Perm& w) const { return {{index(c, w), Scalar::one(field())}}; }

Element Algebra::T(int i) const {
  if (i == 0) return L(1);
  if (i < 1 || i >= P_.n) fail(ErrorCode::InvalidParams, "generator index out of range");
  return word(std::vector<int>(P_.n, 0), Perm::simple(P_.n, i));
}

std::vector<Element> Algebra::generators() const {
  std::vector<Element> out;
  for (int i = 0; i < P_.n; ++i) out.push_back(T(i));
  return out;
}

std::vector<Element> Algebra::subalgebra_generators() const {
  std::vector<Element> out{pow(T(0), P_.p)};
  if (P_.n >= 2) out.push_back(tau(T(1)));
  for (int i = 1; i < P_.n; ++i) out.push_back(T(i));
  return out;
}

Element Algebra::Tw(const Perm& w) const { return word(std::vector<int>(P_.n, 0), w); }

Element Algebra::L(int k) const {
  if (k < 1 || k > P_.n) fail(ErrorCode::InvalidParams, "L index out of range");
  return rmul_L(one(), k);
}

Element Algebra::L_inverse(int k) const {
  if (k < 1 || k > P_.n) fail(ErrorCode::InvalidParams, "L index out of range");
  Element inv = t0inv_;
  for (int j = 2; j <= k; ++j) {
    // L_j^{-1} = q T_{j-1}^{-1} L_{j-1}^{-1} T_{j-1}^{-1} with T^{-1} = q^{-1} T - 1 + q^{-1}
    Element ti = elem_add(elem_scale(T(j - 1), qinv_), scalar(qinv_ - Scalar::one(field())));
    inv = elem_scale(mul(mul(ti, inv), ti), q_);
  }
  return inv;
}

Element Algebra::hecke_rmul_word(int cidx, int v, const std::vector<int>& word, const Scalar& coef) const {
  // L^c T_v T_{i_1} ... T_{i_m}, kept as a small list of (rank, coef)
  std::vector<std::pair<int, Scalar>> cur{{v, coef}};
  for (int i : word) {
    std::vector<std::pair<int, Scalar>> next;
    for (auto& [u, c] : cur) {
      int us = simple_right_[u][i];
      if (perms_[u].right_ascent(i)) {
        next.emplace_back(us, c);
      } else {
        next.emplace_back(us, c * q_);
        next.emplace_back(u, c * qm1_);
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    cur.clear();
    for (auto& e : next) {
      if (!cur.empty() && cur.back().first == e.first)
        cur.back().second += e.second;
      else
        cur.push_back(std::move(e));
    }
    cur.erase(std::remove_if(cur.begin(), cur.end(), [](const auto& e) { return e.second.is_zero(); }), cur.end());
  }
  Element out;
  for (auto& [u, c] : cur) out.emplace_back(cidx * nfact_ + u, std::move(c));
  return out;
}

Element Algebra::rmul_T(const Element& a, int i) const {
  if (i == 0) return rmul_L(a, 1);
  Accumulator acc(field(), dim_);
  for (const auto& [idx, c] : a) {
    int v = idx % nfact_, base = idx - v;
    if (perms_[v].right_ascent(i)) {
      acc.add(base + simple_right_[v][i], c);
    } else {
      acc.add(base + simple_right_[v][i], c * q_);
      acc.add(idx, c * qm1_);
    }
  }
  return acc.take();
}

Element Algebra::rmul_L(const Element& a, int k) const {
  Accumulator acc(field(), dim_);
  for (const auto& [idx, c] : a) acc.add(RL_[idx][k], c);
  return acc.take();
}

void Algebra::build_tables() {
  int n = P_.n;
  Field f = field();
  // TL[v][k] = T_v L_k as a sum of L_j T_u; permutations processed by length
  TL_.assign(nfact_, std::vector<TLList>(n + 1));
  std::vector<int> order(nfact_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return perms_[a].length() < perms_[b].length(); });
  auto times_Ti = [&](const TLList& src, int i, const Scalar& scale, std::map<std::pair<int, int>, Scalar>& out) {
    for (const auto& t : src) {
      Scalar c = t.c * scale;
      int us = simple_right_[t.u][i];
      auto put = [&](int u, const Scalar& s) {
        auto key = std::make_pair(t.j, u);
        auto it = out.find(key);
        if (it == out.end())
          out.emplace(key, s);
        else
          it->second += s;
      };
      if (perms_[t.u].right_ascent(i)) {
        put(us, c);
      } else {
        put(us, c * q_);
        put(t.u, c * qm1_);
      }
    }
  };
  auto plain = [&](const TLList& src, const Scalar& scale, std::map<std::pair<int, int>, Scalar>& out) {
    for (const auto& t : src) {
      auto key = std::make_pair(t.j, t.u);
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(key, t.c * scale);
      else
        it->second += t.c * scale;
    }
  };
  Scalar one = Scalar::one(f);
  for (int v : order) {
    if (perms_[v].is_identity()) {
      for (int k = 1; k <= n; ++k) TL_[v][k] = {TLTerm{k, v, one}};
      continue;
    }
    int i = words_[v].back();
    int vp = simple_right_[v][i];
    for (int k = 1; k <= n; ++k) {
      std::map<std::pair<int, int>, Scalar> acc;
      if (k != i && k != i + 1) {
        times_Ti(TL_[vp][k], i, one, acc);
      } else if (k == i) {
        times_Ti(TL_[vp][i + 1], i, one, acc);
        plain(TL_[vp][i + 1], -qm1_, acc);
      } else {
        times_Ti(TL_[vp][i], i, one, acc);
        plain(TL_[vp][i + 1], qm1_, acc);
      }
      TLList lst;
      for (auto& [key, c] : acc)
        if (!c.is_zero()) lst.push_back(TLTerm{key.first, key.second, c});
      TL_[v][k] = std::move(lst);
    }
  }
  build_E();
  RL_.assign(dim_, std::vector<Element>(n + 1));
  for (int idx = 0; idx < dim_; ++idx)
    for (int k = 1; k <= n; ++k) RL_[idx][k] = rmul_L_build({{idx, one}}, k);
  // T_0^{-1} = -(T_0^{r-1} + a_{r-1} T_0^{r-2} + ... + a_1) / a_0
  auto a = cyclotomic_coeffs(P_);
  Scalar inv0 = a[0].inv();
  Accumulator acc(f, dim_);
  for (int k = 1; k <= P_.r; ++k) {
    Scalar coef = (k == P_.r) ? one : a[k];
    std::vector<int> c(n, 0);
    c[0] = k - 1;
    acc.add(index(c, Perm(n)), -(coef * inv0));
  }
  t0inv_ = acc.take();
}

void Algebra::build_E() {
  int n = P_.n, r = P_.r;
  Field f = field();
  E_.assign(n + 1, Element{});
  auto a = cyclotomic_coeffs(P_);
  {
    Accumulator acc(f, dim_);
    for (int k = 0; k < r; ++k) {
      std::vector<int> c(n, 0);
      c[0] = k;
      acc.add(index(c, Perm(n)), -a[k]);
    }
    E_[1] = acc.take();
  }
  for (int j = 2; j <= n; ++j) {
    int i = j - 1;
    Element F = rmul_T(E_[j - 1], i);
    Accumulator acc(f, dim_);
    for (const auto& [idx, coef] : F) {
      std::vector<int> c = exponents(idx);
      int v = idx % nfact_;
      int ea = c[i - 1];
      if (c[i] != 0) fail(ErrorCode::InvalidParams, "internal: unexpected L_j in E_{j-1}");
      Scalar cq = coef * qinv_;
      // L_{i+1}^a T_i T_v
      std::vector<int> c1 = c;
      c1[i - 1] = 0;
      c1[i] = ea;
      int base1 = cindex(c1) * nfact_;
      int sv = simple_left_[v][i];
      if (perms_[v].left_ascent(i)) {
        acc.add(base1 + sv, cq);
      } else {
        acc.add(base1 + sv, cq * q_);
        acc.add(base1 + v, cq * qm1_);
      }
      // -(q-1) sum_d L_i^{a-d} L_{i+1}^d T_v
      for (int d = 1; d <= ea; ++d) {
        std::vector<int> c2 = c;
        c2[i - 1] = ea - d;
        c2[i] = d;
        acc.add(cindex(c2) * nfact_ + v, -(cq * qm1_));
      }
    }
    // (1 - q^{-1}) sum_{d=1}^{r-1} L_{j-1}^{r-d} L_j^d T_{j-1}
    Scalar w = Scalar::one(f) - qinv_;
    int si = Perm::simple(n, i).rank();
    for (int d = 1; d <= r - 1; ++d) {
      std::vector<int> c(n, 0);
      c[i - 1] = r - d;
      c[i] = d;
      acc.add(cindex(c) * nfact_ + si, w);
    }
    E_[j] = acc.take();
  }
}

const Element& Algebra::X(int j, const std::vector<int>& c) {
  auto key = std::make_pair(j, cindex(c));
  auto it = Xmemo_.find(key);
  if (it != Xmemo_.end()) return it->second;
  int r = P_.r;
  Field f = field();
  Element result;
  if (c[j - 1] + 1 < r) {
    std::vector<int> c2 = c;
    ++c2[j - 1];
    result = {{cindex(c2) * nfact_, Scalar::one(f)}};
  } else {
    Accumulator acc(f, dim_);
    for (const auto& [idx, coef] : E_[j]) {
      std::vector<int> e = exponents(idx);
      int u = idx % nfact_;
      std::vector<int> c2 = c;
      c2[j - 1] = e[j - 1];
      Element y{{cindex(c2) * nfact_, Scalar::one(f)}};
      for (int k = j - 1; k >= 1; --k)
        for (int m = 0; m < e[k - 1]; ++m) y = rmul_L_build(y, k);
      for (const auto& [yi, yc] : y) acc.add(hecke_rmul_word(yi / nfact_, yi % nfact_, words_[u], yc), coef);
    }
    result = acc.take();
  }
  return Xmemo_.emplace(key, std::move(result)).first->second;
}

Element Algebra::rmul_L_build(const Element& a, int k) {
  Accumulator acc(field(), dim_);
  for (const auto& [idx, coef] : a) {
    std::vector<int> c = exponents(idx);
    int v = idx % nfact_;
    for (const auto& t : TL_[v][k]) {
      const Element& x = X(t.j, c);
      Scalar cc = coef * t.c;
      for (const auto& [xi, xc] : x) acc.add(hecke_rmul_word(xi / nfact_, xi % nfact_, words_[t.u], xc), cc);
    }
  }
  return acc.take();
}

Element Algebra::mul(const Element& a, const Element& b) const {
  if (a.empty() || b.empty()) return {};
  Accumulator acc(field(), dim_);
  size_t k = 0;
  while (k < b.size()) {
    int cidx = b[k].first / nfact_;
    std::vector<int> c = exponents(b[k].first);
    Element y = a;
    for (int m = 1; m <= P_.n; ++m)
      for (int e = 0; e < c[m - 1]; ++e) y = rmul_L(y, m);
    for (; k < b.size() && b[k].first / nfact_ == cidx; ++k) {
      int v = b[k].first % nfact_;
      if (words_[v].empty()) {
        acc.add(y, b[k].second);
        continue;
      }
      Accumulator inner(field(), dim_);
      for (const auto& [yi, yc] : y) inner.add(hecke_rmul_word(yi / nfact_, yi % nfact_, words_[v], yc));
      acc.add(inner.take(), b[k].second);
    }
  }
  return acc.take();
}

Element Algebra::pow(const Element& a, int e) const {
  if (e < 0) fail(ErrorCode::InvalidParams, "negative power of an element");
  Element acc = one();
  for (int k = 0; k < e; ++k) acc = mul(acc, a);
  return acc;
}

Element Algebra::star(const Element& a) const {
  Accumulator acc(field(), dim_);
  for (const auto& [idx, c] : a) {
    const Element* s;
    {
      std::lock_guard<std::mutex> lock(star_mu_);
      s = star_cache_[idx].get();
    }
    if (!s) {
      Perm w = perms_[idx % nfact_];
      std::vector<int> cc = exponents(idx);
      Element val = mul(Tw(w.inverse()), word(cc, Perm(P_.n)));
      std::lock_guard<std::mutex> lock(star_mu_);
      if (!star_cache_[idx]) star_cache_[idx] = std::make_unique<Element>(std::move(val));
      s = star_cache_[idx].get();
    }
    acc.add(*s, c);
  }
  return acc.take();
}

Element Algebra::lmul_T(int i, const Element& a) const { return star(rmul_T(star(a), i)); }

Element Algebra::sigma(const Element& a, int power) const {
  Element out;
  for (const auto& [idx, c] : a) {
    std::vector<int> e = exponents(idx);
    long s = std::accumulate(e.begin(), e.end(), 0L) * power;
    long m = ((s % P_.p) + P_.p) % P_.p;
    out.emplace_back(idx, m == 0 ? c : c * P_.eps.pow(m));
  }
  return out;
}

Element Algebra::tau(const Element& a) const { return mul(mul(t0inv_, a), T(0)); }

Element Algebra::murphy_S(int m) const {
  if (m < 1 || m > P_.n) fail(ErrorCode::InvalidParams, "Murphy operator index out of range");
  if (m == 1) return pow(T(0), P_.p);
  return mul(t0inv_, L(m));
}

std::vector<int> Algebra::subalgebra_basis() const {
  std::vector<int> out;
  for (int idx = 0; idx < dim_; ++idx) {
    auto e = exponents(idx);
    if (std::accumulate(e.begin(), e.end(), 0) % P_.p == 0) out.push_back(idx);
  }
  return out;
}

bool Algebra::in_subalgebra(const Element& a) const {
  for (const auto& [idx, c] : a) {
    auto e = exponents(idx);
    if (std::accumulate(e.begin(), e.end(), 0) % P_.p != 0) return false;
  }
  return true;
}

Matrix Algebra::action_matrix(const std::vector<Element>& basis, const Element& g) const {
  Echelon ech(field(), dim_, true);
  for (const auto& b : basis)
    if (!ech.insert(b)) fail(ErrorCode::RankDeficient, "basis vectors are dependent");
  int d = static_cast<int>(basis.size());
  Matrix m(field(), d, d);
  for (int i = 0; i < d; ++i) {
    SparseVec coords;
    if (!ech.reduce(mul(basis[i], g), &coords).empty()) fail(ErrorCode::NotInvariant, "subspace not invariant");
    for (const auto& [j, c] : coords) m.at(i, j) = c;
  }
  return m;
}

std::string Algebra::to_string(const Element& a) const {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : a) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ") *";
    auto e = exponents(idx);
    for (int k = 0; k < P_.n; ++k)
      if (e[k] > 0) os << " L" << (k + 1) << "^" << e[k];
    if (std::any_of(e.begin(), e.end(), [](int v) { return v > 0; })) os << " *";
    os << " T" << perms_[idx % nfact_].to_string();
  }
  return os.str();
}

Element Algebra::parse(const std::string& text) const {
  size_t pos = 0;
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::ParseError, why + " at offset " + std::to_string(pos) + " in element text");
  };
  auto skip = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() {
    skip();
    size_t s = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (s == pos) bad("expected integer");
    return std::stoi(text.substr(s, pos - s));
  };
  skip();
  if (text.substr(pos) == "0") return {};
  Accumulator acc(field(), dim_);
  while (true) {
    skip();
    if (pos >= text.size() || text[pos] != '(') bad("expected '('");
    int depth = 0;
    size_t start = pos;
    for (; pos < text.size(); ++pos) {
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')' && --depth == 0) break;
    }
    if (pos >= text.size()) bad("unbalanced parentheses");
    Scalar coef = parse_scalar(field(), text.substr(start + 1, pos - start - 1));
    ++pos;
    skip();
    if (pos >= text.size() || text[pos] != '*') bad("expected '*'");
    ++pos;
    std::vector<int> c(P_.n, 0);
    Perm w;
    while (true) {
      skip();
      if (pos < text.size() && text[pos] == 'L') {
        ++pos;
        int k = number();
        skip();
        if (pos >= text.size() || text[pos] != '^') bad("expected '^'");
        ++pos;
        int e = number();
        if (k < 1 || k > P_.n || e < 0 || e >= P_.r) bad("L exponent out of range");
        c[k - 1] = e;
        continue;
      }
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == 'T') {
        ++pos;
        skip();
        if (pos >= text.size() || text[pos] != '[') bad("expected '['");
        ++pos;
        std::vector<int> img;
        while (true) {
          img.push_back(number() - 1);
          skip();
          if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
          }
          if (pos < text.size() && text[pos] == ']') {
            ++pos;
            break;
          }
          bad("expected ',' or ']'");
        }
        if (static_cast<int>(img.size()) != P_.n) bad("permutation of the wrong size");
        w = Perm(img);
        break;
      }
      bad("expected L, '*' or T");
    }
    acc.add(index(c, w), coef);
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != '+') bad("expected '+'");
    ++pos;
  }
  return acc.take();
}

std::vector<Element> spin(const Algebra& A, const std::vector<Element>& seeds, const std::vector<Element>& gens) {
  Echelon ech(A.field(), A.dim());
  std::vector<Element> basis;
  for (const auto& s : seeds)
    if (ech.insert(s)) basis.push_back(s);
  for (size_t k = 0; k < basis.size(); ++k)
    for (const auto& g : gens) {
      Element y = A.mul(basis[k], g);
      if (ech.insert(y)) basis.push_back(std::move(y));
    }
  return basis;
}

}  // namespace hecke
