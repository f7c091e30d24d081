#include "hecke/exact/scalar.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

std::mutex g_field_mu;

RadElt rad_zero(Field f) { return RadElt{std::vector<Cyclo>(f->rad_degree, Cyclo(*f->base))}; }

RadElt rad_mul(Field f, const RadElt& a, const RadElt& b) {
  int l = f->rad_degree;
  std::vector<Cyclo> r(2 * l - 1, Cyclo(*f->base));
  for (int i = 0; i < l; ++i) {
    if (a.a[i].is_zero()) continue;
    for (int j = 0; j < l; ++j)
      if (!b.a[j].is_zero()) r[i + j] += a.a[i] * b.a[j];
  }
  for (int k = 2 * l - 2; k >= l; --k)
    if (!r[k].is_zero()) r[k - l] += r[k] * f->rad_const;
  r.resize(l, Cyclo(*f->base));
  return RadElt{std::move(r)};
}

RadElt rad_inv(Field f, const RadElt& a) {
  int l = f->rad_degree;
  // column j of the multiplication matrix is a * y^j
  std::vector<std::vector<Cyclo>> m(l, std::vector<Cyclo>(l + 1, Cyclo(*f->base)));
  RadElt yj = rad_zero(f);
  yj.a[0] = Cyclo::from_int(*f->base, 1);
  RadElt y = rad_zero(f);
  if (l > 1) y.a[1] = Cyclo::from_int(*f->base, 1);
  for (int j = 0; j < l; ++j) {
    RadElt col = rad_mul(f, a, yj);
    for (int i = 0; i < l; ++i) m[i][j] = col.a[i];
    if (l > 1) yj = rad_mul(f, yj, y);
  }
  m[0][l] = Cyclo::from_int(*f->base, 1);
  for (int c = 0; c < l; ++c) {
    int piv = -1;
    for (int i = c; i < l; ++i)
      if (!m[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) fail(ErrorCode::DivisionByZero, "element of radical extension is not invertible");
    std::swap(m[c], m[piv]);
    Cyclo inv = m[c][c].inv();
    for (int k = c; k <= l; ++k) m[c][k] *= inv;
    for (int i = 0; i < l; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      Cyclo f2 = m[i][c];
      for (int k = c; k <= l; ++k) m[i][k] -= f2 * m[c][k];
    }
  }
  RadElt r = rad_zero(f);
  for (int i = 0; i < l; ++i) r.a[i] = m[i][l];
  return r;
}

bool rational_root(const mpq_class& v, int l, mpq_class& out) {
  if (sgn(v) < 0) {
    if (l % 2 == 0) return false;
    mpq_class t;
    if (!rational_root(-v, l, t)) return false;
    out = -t;
    return true;
  }
  mpz_class n, d;
  if (mpz_root(n.get_mpz_t(), v.get_num_mpz_t(), l) == 0) return false;
  if (mpz_root(d.get_mpz_t(), v.get_den_mpz_t(), l) == 0) return false;
  out = mpq_class(n, d);
  out.canonicalize();
  return true;
}

// l-th root of c inside Q(zeta_M) when c is rational times a root of unity.
bool cyclo_root(const Cyclo& c, int l, Cyclo& out) {
  if (c.is_zero()) {
    out = c;
    return true;
  }
  mpq_class r;
  int j = c.as_root_times_rational(r);
  if (j < 0) return false;
  const CycloCtx& ctx = c.ctx();
  int M = ctx.M;
  mpq_class rr;
  if (sgn(r) < 0 && l % 2 == 0) {
    if (M % 2 != 0) return false;
    r = -r;
    j = (j + M / 2) % M;
  }
  if (!rational_root(r, l, rr)) return false;
  for (int k = 0; k < M; ++k)
    if ((static_cast<long>(l) * k - j) % M == 0) {
      out = Cyclo::from_mpq(ctx, rr) * Cyclo::zeta_pow(ctx, k);
      return true;
    }
  return false;
}

Poly poly_power(const Poly& g, int l) {
  Poly out = Poly::constant(Cyclo::from_int(g.ctx(), 1));
  for (int k = 0; k < l; ++k) out = out * g;
  return out;
}

// l-th root of a polynomial that is a perfect l-th power: the monic root is fixed by the top
// coefficients, solved one at a time, then confirmed by expanding.
bool poly_root(const Poly& f, int l, Poly& out) {
  if (f.is_zero() || f.degree() % l != 0) return false;
  Cyclo lc;
  if (!cyclo_root(f.lc(), l, lc)) return false;
  Poly F = f.monic();
  int D = F.degree(), m = D / l;
  const CycloCtx& ctx = f.ctx();
  std::vector<Cyclo> g(m + 1, Cyclo::from_int(ctx, 0));
  g[m] = Cyclo::from_int(ctx, 1);
  Cyclo inv_l = Cyclo::from_int(ctx, l).inv();
  for (int k = 1; k <= m; ++k) {
    Poly h = poly_power(Poly(ctx, g), l);
    g[m - k] = (F.coeff(D - k) - h.coeff(D - k)) * inv_l;
  }
  Poly root(ctx, g);
  if (poly_power(root, l) != F) return false;
  out = root.scale(lc);
  return true;
}

}  // namespace

std::string FieldDesc::describe() const {
  std::string m = std::to_string(base->M);
  switch (kind) {
    case FieldKind::Cyclotomic:
      return "Q(z_" + m + ")";
    case FieldKind::Function:
      return "Q(z_" + m + ")(x)";
    case FieldKind::Radical:
      return "Q(z_" + m + ")[y]/(y^" + std::to_string(rad_degree) + " - (" + rad_const.to_string() + "))";
  }
  return "?";
}

Field cyclotomic_field(int M) {
  const CycloCtx& ctx = CycloCtx::get(M);
  std::lock_guard<std::mutex> lock(g_field_mu);
  static std::map<int, std::unique_ptr<FieldDesc>> cache;
  auto& slot = cache[M];
  if (!slot) {
    slot = std::make_unique<FieldDesc>();
    slot->kind = FieldKind::Cyclotomic;
    slot->base = &ctx;
  }
  return slot.get();
}

Field function_field(int M) {
  const CycloCtx& ctx = CycloCtx::get(M);
  std::lock_guard<std::mutex> lock(g_field_mu);
  static std::map<int, std::unique_ptr<FieldDesc>> cache;
  auto& slot = cache[M];
  if (!slot) {
    slot = std::make_unique<FieldDesc>();
    slot->kind = FieldKind::Function;
    slot->base = &ctx;
  }
  return slot.get();
}

Field radical_extension(int M, int l, const Cyclo& c) {
  if (l < 1) fail(ErrorCode::InvalidParams, "radical degree must be positive");
  if (l == 1) return cyclotomic_field(M);
  if (c.ctx().M != M) fail(ErrorCode::FieldMismatch, "radical constant lives in another cyclotomic field");
  if (c.is_zero()) fail(ErrorCode::InvalidParams, "radical constant must be nonzero");
  const CycloCtx& ctx = CycloCtx::get(M);
  std::lock_guard<std::mutex> lock(g_field_mu);
  static std::map<std::tuple<int, int, std::string>, std::unique_ptr<FieldDesc>> cache;
  auto& slot = cache[{M, l, c.to_string()}];
  if (!slot) {
    slot = std::make_unique<FieldDesc>();
    slot->kind = FieldKind::Radical;
    slot->base = &ctx;
    slot->rad_degree = l;
    slot->rad_const = c;
  }
  return slot.get();
}

Scalar Scalar::embed(Field f, const Cyclo& c) {
  if (c.ctx().M != f->base->M) fail(ErrorCode::FieldMismatch, "conductor mismatch on embed");
  switch (f->kind) {
    case FieldKind::Cyclotomic:
      return Scalar(f, c);
    case FieldKind::Function:
      return Scalar(f, RatFunc::from_cyclo(c));
    case FieldKind::Radical: {
      RadElt r = rad_zero(f);
      r.a[0] = c;
      return Scalar(f, std::move(r));
    }
  }
  return Scalar();
}

Scalar Scalar::zero(Field f) { return embed(f, Cyclo(*f->base)); }
Scalar Scalar::one(Field f) { return embed(f, Cyclo::from_int(*f->base, 1)); }
Scalar Scalar::from_int(Field f, long v) { return embed(f, Cyclo::from_int(*f->base, v)); }
Scalar Scalar::from_mpq(Field f, const mpq_class& v) { return embed(f, Cyclo::from_mpq(*f->base, v)); }
Scalar Scalar::zeta(Field f, long k) { return embed(f, Cyclo::zeta_pow(*f->base, k)); }

Scalar Scalar::x(Field f) {
  if (f->kind != FieldKind::Function) fail(ErrorCode::FieldMismatch, "x exists only in a function field");
  return Scalar(f, RatFunc::x(*f->base));
}

Scalar Scalar::y(Field f) {
  if (f->kind != FieldKind::Radical) fail(ErrorCode::FieldMismatch, "y exists only in a radical extension");
  RadElt r = rad_zero(f);
  r.a[1] = Cyclo::from_int(*f->base, 1);
  return Scalar(f, std::move(r));
}

Scalar Scalar::from_ratfunc(Field f, RatFunc r) {
  if (f->kind != FieldKind::Function) fail(ErrorCode::FieldMismatch, "rational function outside a function field");
  return Scalar(f, std::move(r));
}

void Scalar::check(const Scalar& o) const {
  if (f_ != o.f_)
    fail(ErrorCode::FieldMismatch, (f_ ? f_->describe() : "null") + " vs " + (o.f_ ? o.f_->describe() : "null"));
}

bool Scalar::is_zero() const {
  switch (v_.index()) {
    case 0:
      return std::get<0>(v_).is_zero();
    case 1:
      return std::get<1>(v_).is_zero();
    default:
      for (const auto& c : std::get<2>(v_).a)
        if (!c.is_zero()) return false;
      return true;
  }
}

bool Scalar::is_one() const {
  switch (v_.index()) {
    case 0:
      return std::get<0>(v_).is_one();
    case 1:
      return std::get<1>(v_).is_one();
    default: {
      const auto& a = std::get<2>(v_).a;
      if (!a[0].is_one()) return false;
      for (size_t i = 1; i < a.size(); ++i)
        if (!a[i].is_zero()) return false;
      return true;
    }
  }
}

size_t Scalar::complexity() const {
  switch (v_.index()) {
    case 0:
      return std::get<0>(v_).complexity();
    case 1:
      return std::get<1>(v_).complexity();
    default: {
      size_t s = 0;
      for (const auto& c : std::get<2>(v_).a) s += c.complexity();
      return s;
    }
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  switch (v_.index()) {
    case 0:
      return Scalar(f_, std::get<0>(v_) + std::get<0>(o.v_));
    case 1:
      return Scalar(f_, std::get<1>(v_) + std::get<1>(o.v_));
    default: {
      RadElt r = std::get<2>(v_);
      for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += std::get<2>(o.v_).a[i];
      return Scalar(f_, std::move(r));
    }
  }
}

Scalar Scalar::operator-() const {
  switch (v_.index()) {
    case 0:
      return Scalar(f_, -std::get<0>(v_));
    case 1:
      return Scalar(f_, -std::get<1>(v_));
    default: {
      RadElt r = std::get<2>(v_);
      for (auto& c : r.a) c = -c;
      return Scalar(f_, std::move(r));
    }
  }
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  switch (v_.index()) {
    case 0:
      return Scalar(f_, std::get<0>(v_) - std::get<0>(o.v_));
    case 1:
      return Scalar(f_, std::get<1>(v_) - std::get<1>(o.v_));
    default:
      return *this + (-o);
  }
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  switch (v_.index()) {
    case 0:
      return Scalar(f_, std::get<0>(v_) * std::get<0>(o.v_));
    case 1:
      return Scalar(f_, std::get<1>(v_) * std::get<1>(o.v_));
    default:
      return Scalar(f_, rad_mul(f_, std::get<2>(v_), std::get<2>(o.v_)));
  }
}

Scalar Scalar::inv() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  switch (v_.index()) {
    case 0:
      return Scalar(f_, std::get<0>(v_).inv());
    case 1:
      return Scalar(f_, std::get<1>(v_).inv());
    default:
      return Scalar(f_, rad_inv(f_, std::get<2>(v_)));
  }
}

Scalar Scalar::operator/(const Scalar& o) const {
  check(o);
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
  return *this * o.inv();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar base = *this, acc = one(f_);
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  check(o);
  switch (v_.index()) {
    case 0:
      return std::get<0>(v_) == std::get<0>(o.v_);
    case 1:
      return std::get<1>(v_) == std::get<1>(o.v_);
    default: {
      const auto &a = std::get<2>(v_).a, &b = std::get<2>(o.v_).a;
      for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
      return true;
    }
  }
}

const Cyclo& Scalar::cyclo() const {
  if (v_.index() != 0) fail(ErrorCode::FieldMismatch, "not a cyclotomic scalar");
  return std::get<0>(v_);
}

const RatFunc& Scalar::ratfunc() const {
  if (v_.index() != 1) fail(ErrorCode::FieldMismatch, "not a function-field scalar");
  return std::get<1>(v_);
}

const RadElt& Scalar::radical() const {
  if (v_.index() != 2) fail(ErrorCode::FieldMismatch, "not a radical-extension scalar");
  return std::get<2>(v_);
}

bool Scalar::as_constant(Cyclo& out) const {
  switch (v_.index()) {
    case 0:
      out = std::get<0>(v_);
      return true;
    case 1: {
      const RatFunc& r = std::get<1>(v_);
      if (!r.is_constant()) return false;
      out = r.num().is_zero() ? Cyclo(r.ctx()) : r.num().lc();
      return true;
    }
    default: {
      const auto& a = std::get<2>(v_).a;
      for (size_t i = 1; i < a.size(); ++i)
        if (!a[i].is_zero()) return false;
      out = a[0];
      return true;
    }
  }
}

std::string Scalar::to_string() const {
  switch (v_.index()) {
    case 0:
      return std::get<0>(v_).to_string('z');
    case 1:
      return std::get<1>(v_).to_string();
    default: {
      // reuse the polynomial printer with y as the indeterminate
      return Poly(*f_->base, std::get<2>(v_).a).to_string('y', 'z');
    }
  }
}

Scalar primitive_root(Field f, int p) {
  int M = f->base->M;
  if (p < 1 || M % p != 0)
    fail(ErrorCode::OrderUnavailable, "no primitive " + std::to_string(p) + "th root in conductor " + std::to_string(M));
  return Scalar::zeta(f, M / p);
}

Scalar specialize(const Scalar& e, const Scalar& x0) {
  Field f = e.field();
  if (f->kind != FieldKind::Function) fail(ErrorCode::FieldMismatch, "specialize expects a function-field element");
  Field k = x0.field();
  if (k->kind != FieldKind::Cyclotomic || k->base != f->base)
    fail(ErrorCode::FieldMismatch, "specialization point must lie in the base cyclotomic field");
  return Scalar::embed(k, e.ratfunc().specialize(x0.cyclo()));
}

bool try_root(const Scalar& c, int l, Scalar& out) {
  if (l == 1) {
    out = c;
    return true;
  }
  Field f = c.field();
  switch (f->kind) {
    case FieldKind::Cyclotomic: {
      Cyclo r;
      if (!cyclo_root(c.cyclo(), l, r)) return false;
      out = Scalar::embed(f, r);
      return true;
    }
    case FieldKind::Function: {
      const RatFunc& rf = c.ratfunc();
      if (rf.is_zero()) {
        out = c;
        return true;
      }
      Poly a(rf.ctx()), b(rf.ctx());
      if (!poly_root(rf.num(), l, a) || !poly_root(rf.den(), l, b)) return false;
      out = Scalar::from_ratfunc(f, RatFunc(a, b));
      return true;
    }
    case FieldKind::Radical: {
      Cyclo base;
      if (!c.as_constant(base)) return false;
      Cyclo r;
      if (!cyclo_root(base, l, r)) return false;
      out = Scalar::embed(f, r);
      return true;
    }
  }
  return false;
}

namespace {

class Parser {
 public:
  Parser(Field f, const std::string& s) : f_(f), s_(s) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) error("trailing input");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) {
    fail(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        Scalar d = unary();
        v = v / d;
      } else {
        return v;
      }
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Scalar power() {
    Scalar b = atom();
    if (eat('^')) {
      skip();
      bool neg = false;
      if (eat('-')) neg = true;
      bool paren = eat('(');
      if (paren && eat('-')) neg = !neg;
      long e = integer();
      if (paren && !eat(')')) error("expected ')'");
      return b.pow(neg ? -e : e);
    }
    return b;
  }
  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }
  Scalar atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) error("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(s_.substr(start, pos_ - start));
      return Scalar::from_mpq(f_, mpq_class(v));
    }
    ++pos_;
    if (c == 'z') return Scalar::zeta(f_, 1);
    if (c == 'x') {
      if (f_->kind != FieldKind::Function) error("x used outside a function field");
      return Scalar::x(f_);
    }
    if (c == 'y') {
      if (f_->kind != FieldKind::Radical) error("y used outside a radical extension");
      return Scalar::y(f_);
    }
    --pos_;
    error(std::string("unexpected character '") + c + "'");
  }

  Field f_;
  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(Field f, const std::string& text) {
  try {
    return Parser(f, text).run();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(ErrorCode::ParseError, std::string(e.what()) + " while parsing '" + text + "'");
  }
}

}  // namespace hecke
