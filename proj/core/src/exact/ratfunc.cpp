#include "hecke/exact/ratfunc.hpp"

#include "hecke/errors.hpp"

namespace hecke {

namespace {

Poly one_poly(const CycloCtx& ctx) { return Poly::constant(Cyclo::from_int(ctx, 1)); }

}  // namespace

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = one_poly(ctx());
    return;
  }
  if (den_.is_monomial()) {
    int k = std::min(den_.degree(), num_.valuation());
    Cyclo lc = den_.lc();
    num_ = num_.unshift(k);
    den_ = Poly::monomial(Cyclo::from_int(ctx(), 1), den_.degree() - k);
    if (!lc.is_one()) num_ = num_.scale(lc.inv());
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  if (!den_.lc().is_one()) {
    Cyclo inv = den_.lc().inv();
    num_ = num_.scale(inv);
    den_ = den_.scale(inv);
  }
}

RatFunc RatFunc::from_cyclo(const Cyclo& c) {
  return RatFunc(Poly::constant(c), one_poly(c.ctx()), Raw{});
}

RatFunc RatFunc::x(const CycloCtx& ctx) { return RatFunc(Poly::x(ctx), one_poly(ctx), Raw{}); }

bool RatFunc::is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.lc().is_one(); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.degree() == 0 && o.den_.degree() == 0) return RatFunc(num_ + o.num_, den_, Raw{});
  if (is_laurent() && o.is_laurent()) {
    int a = den_.degree(), b = o.den_.degree();
    int m = std::max(a, b);
    Poly n = num_.shift(m - a) + o.num_.shift(m - b);
    return RatFunc(std::move(n), Poly::monomial(Cyclo::from_int(ctx(), 1), m));
  }
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  Poly g = Poly::gcd(den_, o.den_);
  if (g.degree() == 0) return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  Poly d1 = den_.exact_div(g), d2 = o.den_.exact_div(g);
  return RatFunc(num_ * d2 + o.num_ * d1, d1 * o.den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Raw{}); }

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc(ctx());
  if (den_.degree() == 0 && o.den_.degree() == 0) return RatFunc(num_ * o.num_, den_, Raw{});
  if (is_laurent() && o.is_laurent()) return RatFunc(num_ * o.num_, den_ * o.den_);
  // cross-cancel before multiplying to keep degrees down
  Poly g1 = Poly::gcd(num_, o.den_);
  Poly g2 = Poly::gcd(o.num_, den_);
  Poly n1 = num_.exact_div(g1), d2 = o.den_.exact_div(g1);
  Poly n2 = o.num_.exact_div(g2), d1 = den_.exact_div(g2);
  return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::inv() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

Cyclo RatFunc::specialize(const Cyclo& x0) const {
  Cyclo d = den_.eval(x0);
  if (d.is_zero()) fail(ErrorCode::PoleAtSpecialization, "denominator vanishes at " + x0.to_string());
  return num_.eval(x0) * d.inv();
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace hecke
