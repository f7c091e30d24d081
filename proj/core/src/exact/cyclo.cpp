#include "hecke/exact/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

std::vector<int64_t> poly_div_exact(std::vector<int64_t> num, const std::vector<int64_t>& den) {
  // den is monic; num is divisible by den.
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<int64_t> q(dn - dd + 1, 0);
  for (int k = dn - dd; k >= 0; --k) {
    int64_t c = num[k + dd];
    q[k] = c;
    for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  return q;
}

std::vector<int64_t> cyclotomic_poly(int M, std::map<int, std::vector<int64_t>>& memo) {
  auto it = memo.find(M);
  if (it != memo.end()) return it->second;
  std::vector<int64_t> p(M + 1, 0);
  p[0] = -1;
  p[M] = 1;
  for (int d = 1; d < M; ++d)
    if (M % d == 0) p = poly_div_exact(p, cyclotomic_poly(d, memo));
  memo[M] = p;
  return p;
}

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

int bits64(int64_t v) {
  uint64_t u = v < 0 ? static_cast<uint64_t>(-(v + 1)) + 1 : static_cast<uint64_t>(v);
  return u == 0 ? 0 : 64 - __builtin_clzll(u);
}

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 u = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

const CycloCtx& CycloCtx::get(int M) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloCtx>> cache;
  static std::map<int, std::vector<int64_t>> poly_memo;
  if (M < 1) fail(ErrorCode::InvalidParams, "conductor must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(M);
  if (it != cache.end()) return *it->second;
  auto ctx = std::make_unique<CycloCtx>();
  ctx->M = M;
  ctx->phi_poly = cyclotomic_poly(M, poly_memo);
  ctx->phi = static_cast<int>(ctx->phi_poly.size()) - 1;
  int phi = ctx->phi;
  int top = std::max(M, 2 * phi);
  std::vector<std::vector<int64_t>> pw(top, std::vector<int64_t>(phi, 0));
  pw[0][0] = 1;
  for (int k = 1; k < top; ++k) {
    // zeta^k = zeta * zeta^(k-1)
    const auto& prev = pw[k - 1];
    int64_t carry = prev[phi - 1];
    for (int i = phi - 1; i >= 1; --i) pw[k][i] = prev[i - 1];
    pw[k][0] = 0;
    for (int i = 0; i < phi; ++i) pw[k][i] -= carry * ctx->phi_poly[i];
  }
  ctx->power.assign(pw.begin(), pw.begin() + M);
  ctx->reduce.assign(pw.begin(), pw.begin() + 2 * phi);
  int64_t mx = 1;
  for (const auto& row : ctx->reduce)
    for (int64_t v : row) mx = std::max<int64_t>(mx, v < 0 ? -v : v);
  ctx->table_bits = bits64(mx) + 1;
  auto& ref = *ctx;
  cache[M] = std::move(ctx);
  return ref;
}

Cyclo::Cyclo(const CycloCtx& ctx) : ctx_(&ctx) {
  std::fill(sn_, sn_ + kInline, 0);
  if (ctx.phi > kInline) {
    big_ = std::make_unique<Big>();
    big_->num.assign(ctx.phi, 0);
    big_->den = 1;
  }
}

Cyclo::Cyclo(const Cyclo& o) : ctx_(o.ctx_), sd_(o.sd_) {
  std::copy(o.sn_, o.sn_ + kInline, sn_);
  if (o.big_) big_ = std::make_unique<Big>(*o.big_);
}

Cyclo& Cyclo::operator=(const Cyclo& o) {
  if (this == &o) return *this;
  ctx_ = o.ctx_;
  sd_ = o.sd_;
  std::copy(o.sn_, o.sn_ + kInline, sn_);
  big_ = o.big_ ? std::make_unique<Big>(*o.big_) : nullptr;
  return *this;
}

Cyclo Cyclo::from_int(const CycloCtx& ctx, long v) {
  Cyclo c(ctx);
  if (c.big_)
    c.big_->num[0] = v;
  else
    c.sn_[0] = v;
  return c;
}

Cyclo Cyclo::from_mpq(const CycloCtx& ctx, const mpq_class& v) {
  std::vector<mpq_class> cs(ctx.phi, 0);
  cs[0] = v;
  return from_coeffs(ctx, cs);
}

Cyclo Cyclo::from_coeffs(const CycloCtx& ctx, const std::vector<mpq_class>& cs) {
  Big b;
  b.den = 1;
  for (const auto& q : cs) b.den = lcm(b.den, mpz_class(q.get_den()));
  b.num.resize(ctx.phi);
  for (int i = 0; i < ctx.phi; ++i) {
    mpq_class q = i < static_cast<int>(cs.size()) ? cs[i] : mpq_class(0);
    b.num[i] = q.get_num() * (b.den / q.get_den());
  }
  Cyclo c(ctx);
  c.set_from_big(std::move(b));
  return c;
}

Cyclo Cyclo::zeta_pow(const CycloCtx& ctx, long k) {
  long m = ((k % ctx.M) + ctx.M) % ctx.M;
  Cyclo c(ctx);
  const auto& row = ctx.power[m];
  if (c.big_) {
    for (int i = 0; i < ctx.phi; ++i) c.big_->num[i] = static_cast<long>(row[i]);
  } else {
    for (int i = 0; i < ctx.phi; ++i) c.sn_[i] = row[i];
  }
  return c;
}

void Cyclo::set_small_from_i128(const i128* num, i128 den) {
  int phi = ctx_->phi;
  if (den < 0) {
    den = -den;
    for (int i = 0; i < phi; ++i) const_cast<i128*>(num)[i] = -num[i];
  }
  bool zero = true;
  for (int i = 0; i < phi; ++i)
    if (num[i] != 0) zero = false;
  if (zero) {
    big_.reset();
    std::fill(sn_, sn_ + kInline, 0);
    sd_ = 1;
    return;
  }
  u128 g = static_cast<u128>(den);
  if (g != 1) {
    for (int i = 0; i < phi && g != 1; ++i)
      if (num[i] != 0) g = gcd128(g, uabs(num[i]));
  }
  i128 gi = static_cast<i128>(g);
  bool ok = fits64(den / gi);
  for (int i = 0; i < phi && ok; ++i) ok = fits64(num[i] / gi);
  if (ok) {
    big_.reset();
    std::fill(sn_, sn_ + kInline, 0);
    for (int i = 0; i < phi; ++i) sn_[i] = static_cast<int64_t>(num[i] / gi);
    sd_ = static_cast<int64_t>(den / gi);
    return;
  }
  Big b;
  b.num.resize(phi);
  for (int i = 0; i < phi; ++i) b.num[i] = mpz_from_i128(num[i] / gi);
  b.den = mpz_from_i128(den / gi);
  big_ = std::make_unique<Big>(std::move(b));
}

void Cyclo::set_from_big(Big&& b) {
  int phi = ctx_->phi;
  if (sgn(b.den) < 0) {
    b.den = -b.den;
    for (auto& v : b.num) v = -v;
  }
  bool zero = true;
  for (const auto& v : b.num)
    if (sgn(v) != 0) zero = false;
  if (zero) {
    b.den = 1;
  } else {
    mpz_class g = b.den;
    for (const auto& v : b.num)
      if (sgn(v) != 0) g = gcd(g, v);
    if (g != 1) {
      for (auto& v : b.num) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.den.get_mpz_t(), b.den.get_mpz_t(), g.get_mpz_t());
    }
  }
  bool small = phi <= kInline && b.den.fits_slong_p();
  for (int i = 0; i < phi && small; ++i) small = b.num[i].fits_slong_p();
  if (small) {
    big_.reset();
    std::fill(sn_, sn_ + kInline, 0);
    for (int i = 0; i < phi; ++i) sn_[i] = b.num[i].get_si();
    sd_ = b.den.get_si();
  } else {
    big_ = std::make_unique<Big>(std::move(b));
  }
}

Cyclo::Big Cyclo::to_big() const {
  if (big_) return *big_;
  Big b;
  b.num.resize(ctx_->phi);
  for (int i = 0; i < ctx_->phi; ++i) b.num[i] = static_cast<long>(sn_[i]);
  b.den = static_cast<long>(sd_);
  return b;
}

bool Cyclo::is_zero() const {
  if (big_) {
    for (const auto& v : big_->num)
      if (sgn(v) != 0) return false;
    return true;
  }
  for (int i = 0; i < ctx_->phi; ++i)
    if (sn_[i] != 0) return false;
  return true;
}

bool Cyclo::is_one() const {
  if (big_) {
    if (ctx_->phi <= kInline) return false;  // 1 always fits the small form here
    if (big_->den != 1 || big_->num[0] != 1) return false;
    for (int i = 1; i < ctx_->phi; ++i)
      if (sgn(big_->num[i]) != 0) return false;
    return true;
  }
  if (sd_ != 1 || sn_[0] != 1) return false;
  for (int i = 1; i < ctx_->phi; ++i)
    if (sn_[i] != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (int i = 1; i < ctx_->phi; ++i) {
    if (big_ ? sgn(big_->num[i]) != 0 : sn_[i] != 0) return false;
  }
  return true;
}

int Cyclo::nonzero_terms() const {
  int c = 0;
  for (int i = 0; i < ctx_->phi; ++i)
    if (big_ ? sgn(big_->num[i]) != 0 : sn_[i] != 0) ++c;
  return c;
}

mpq_class Cyclo::coeff(int k) const {
  mpq_class q;
  if (big_)
    q = mpq_class(big_->num[k], big_->den);
  else
    q = mpq_class(mpz_class(static_cast<long>(sn_[k])), mpz_class(static_cast<long>(sd_)));
  q.canonicalize();
  return q;
}

std::vector<mpq_class> Cyclo::coeffs() const {
  std::vector<mpq_class> out(ctx_->phi);
  for (int i = 0; i < ctx_->phi; ++i) out[i] = coeff(i);
  return out;
}

size_t Cyclo::complexity() const {
  size_t s = 0;
  if (big_) {
    for (const auto& v : big_->num)
      if (sgn(v) != 0) s += 1 + mpz_sizeinbase(v.get_mpz_t(), 2);
    s += mpz_sizeinbase(big_->den.get_mpz_t(), 2);
    return s;
  }
  for (int i = 0; i < ctx_->phi; ++i)
    if (sn_[i] != 0) s += 1 + bits64(sn_[i]);
  s += bits64(sd_) - 1;
  return s;
}

Cyclo Cyclo::add_big(const Cyclo& a, const Cyclo& b, bool subtract) {
  Big x = a.to_big(), y = b.to_big();
  Big r;
  r.num.resize(a.ctx_->phi);
  if (x.den == y.den) {
    for (int i = 0; i < a.ctx_->phi; ++i) r.num[i] = subtract ? mpz_class(x.num[i] - y.num[i]) : mpz_class(x.num[i] + y.num[i]);
    r.den = x.den;
  } else {
    for (int i = 0; i < a.ctx_->phi; ++i)
      r.num[i] = subtract ? mpz_class(x.num[i] * y.den - y.num[i] * x.den) : mpz_class(x.num[i] * y.den + y.num[i] * x.den);
    r.den = x.den * y.den;
  }
  Cyclo c(*a.ctx_);
  c.set_from_big(std::move(r));
  return c;
}

Cyclo Cyclo::mul_big(const Cyclo& a, const Cyclo& b) {
  const CycloCtx& ctx = *a.ctx_;
  int phi = ctx.phi;
  Big x = a.to_big(), y = b.to_big();
  std::vector<mpz_class> prod(2 * phi - 1, 0);
  for (int i = 0; i < phi; ++i) {
    if (sgn(x.num[i]) == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (sgn(y.num[j]) != 0) prod[i + j] += x.num[i] * y.num[j];
  }
  Big r;
  r.num.assign(prod.begin(), prod.begin() + phi);
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (sgn(prod[k]) == 0) continue;
    for (int m = 0; m < phi; ++m)
      if (ctx.reduce[k][m] != 0) r.num[m] += prod[k] * static_cast<long>(ctx.reduce[k][m]);
  }
  r.den = x.den * y.den;
  Cyclo c(ctx);
  c.set_from_big(std::move(r));
  return c;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  if (ctx_ != o.ctx_) fail(ErrorCode::FieldMismatch, "cyclotomic conductors differ");
  if (big_ || o.big_) return add_big(*this, o, false);
  int phi = ctx_->phi;
  i128 num[kInline];
  i128 den;
  if (sd_ == o.sd_) {
    for (int i = 0; i < phi; ++i) num[i] = static_cast<i128>(sn_[i]) + o.sn_[i];
    den = sd_;
  } else {
    for (int i = 0; i < phi; ++i) num[i] = static_cast<i128>(sn_[i]) * o.sd_ + static_cast<i128>(o.sn_[i]) * sd_;
    den = static_cast<i128>(sd_) * o.sd_;
  }
  Cyclo c(*ctx_);
  c.set_small_from_i128(num, den);
  return c;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
  if (ctx_ != o.ctx_) fail(ErrorCode::FieldMismatch, "cyclotomic conductors differ");
  if (big_ || o.big_) return add_big(*this, o, true);
  int phi = ctx_->phi;
  i128 num[kInline];
  i128 den;
  if (sd_ == o.sd_) {
    for (int i = 0; i < phi; ++i) num[i] = static_cast<i128>(sn_[i]) - o.sn_[i];
    den = sd_;
  } else {
    for (int i = 0; i < phi; ++i) num[i] = static_cast<i128>(sn_[i]) * o.sd_ - static_cast<i128>(o.sn_[i]) * sd_;
    den = static_cast<i128>(sd_) * o.sd_;
  }
  Cyclo c(*ctx_);
  c.set_small_from_i128(num, den);
  return c;
}

Cyclo Cyclo::operator-() const {
  Cyclo c(*this);
  if (c.big_) {
    for (auto& v : c.big_->num) v = -v;
  } else {
    for (int i = 0; i < ctx_->phi; ++i) c.sn_[i] = -c.sn_[i];
  }
  if (!c.big_) {
    // -INT64_MIN does not fit; fall back
    for (int i = 0; i < ctx_->phi; ++i)
      if (sn_[i] == INT64_MIN) return Cyclo::from_int(*ctx_, 0) - *this;
  }
  return c;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  if (ctx_ != o.ctx_) fail(ErrorCode::FieldMismatch, "cyclotomic conductors differ");
  if (big_ || o.big_) return mul_big(*this, o);
  int phi = ctx_->phi;
  int ba = 0, bb = 0;
  for (int i = 0; i < phi; ++i) {
    ba = std::max(ba, bits64(sn_[i]));
    bb = std::max(bb, bits64(o.sn_[i]));
  }
  if (ba == 0 || bb == 0) return Cyclo(*ctx_);
  int logphi = 1;
  while ((1 << logphi) < phi) ++logphi;
  if (ba + bb + 2 * logphi + ctx_->table_bits + 2 > 125 || bits64(sd_) + bits64(o.sd_) > 125)
    return mul_big(*this, o);
  i128 prod[2 * kInline];
  std::fill(prod, prod + 2 * phi - 1, 0);
  for (int i = 0; i < phi; ++i) {
    if (sn_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) prod[i + j] += static_cast<i128>(sn_[i]) * o.sn_[j];
  }
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& row = ctx_->reduce[k];
    for (int m = 0; m < phi; ++m) prod[m] += prod[k] * row[m];
  }
  Cyclo c(*ctx_);
  c.set_small_from_i128(prod, static_cast<i128>(sd_) * o.sd_);
  return c;
}

Cyclo Cyclo::inv() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  const CycloCtx& ctx = *ctx_;
  int phi = ctx.phi;
  if (phi == 1 || is_rational()) {
    mpq_class q = coeff(0);
    return from_mpq(ctx, 1 / q);
  }
  // Solve a * y = 1 through the multiplication matrix of a.
  std::vector<std::vector<mpq_class>> A(phi, std::vector<mpq_class>(phi + 1, 0));
  for (int j = 0; j < phi; ++j) {
    Cyclo col = *this * zeta_pow(ctx, j);
    for (int i = 0; i < phi; ++i) A[i][j] = col.coeff(i);
  }
  A[0][phi] = 1;
  for (int c = 0; c < phi; ++c) {
    int piv = c;
    while (piv < phi && sgn(A[piv][c]) == 0) ++piv;
    std::swap(A[c], A[piv]);
    mpq_class f = A[c][c];
    for (int j = c; j <= phi; ++j) A[c][j] /= f;
    for (int i = 0; i < phi; ++i) {
      if (i == c || sgn(A[i][c]) == 0) continue;
      mpq_class g = A[i][c];
      for (int j = c; j <= phi; ++j) A[i][j] -= g * A[c][j];
    }
  }
  std::vector<mpq_class> y(phi);
  for (int i = 0; i < phi; ++i) y[i] = A[i][phi];
  return from_coeffs(ctx, y);
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Cyclo result = from_int(*ctx_, 1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Cyclo::operator==(const Cyclo& o) const {
  if (ctx_ != o.ctx_) fail(ErrorCode::FieldMismatch, "cyclotomic conductors differ");
  if (static_cast<bool>(big_) != static_cast<bool>(o.big_)) return false;
  if (big_) return big_->den == o.big_->den && big_->num == o.big_->num;
  if (sd_ != o.sd_) return false;
  for (int i = 0; i < ctx_->phi; ++i)
    if (sn_[i] != o.sn_[i]) return false;
  return true;
}

int Cyclo::as_root_times_rational(mpq_class& c) const {
  if (is_zero()) return -1;
  for (int j = 0; j < ctx_->M; ++j) {
    Cyclo t = *this * zeta_pow(*ctx_, -j);
    if (t.is_rational()) {
      c = t.coeff(0);
      return j;
    }
  }
  return -1;
}

std::string Cyclo::to_string(char var) const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < ctx_->phi; ++k) {
    mpq_class c = coeff(k);
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    mpq_class a = neg ? mpq_class(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace hecke
