#include "hecke/exact/poly.hpp"

#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

Poly::Poly(const CycloCtx& ctx, std::vector<Cyclo> c) : ctx_(&ctx), c_(std::move(c)) { trim(); }

Poly Poly::constant(const Cyclo& c) { return Poly(c.ctx(), {c}); }

Poly Poly::monomial(const Cyclo& c, int deg) {
  std::vector<Cyclo> v(deg + 1, Cyclo(c.ctx()));
  v[deg] = c;
  return Poly(c.ctx(), std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Poly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Cyclo Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Cyclo(*ctx_);
  return c_[k];
}

size_t Poly::complexity() const {
  size_t s = 0;
  for (const auto& c : c_)
    if (!c.is_zero()) s += c.complexity() + 4;
  return s;
}

Poly Poly::operator+(const Poly& o) const {
  const Poly& big = c_.size() >= o.c_.size() ? *this : o;
  const Poly& small = c_.size() >= o.c_.size() ? o : *this;
  std::vector<Cyclo> r = big.c_;
  for (size_t i = 0; i < small.c_.size(); ++i)
    if (!small.c_[i].is_zero()) r[i] += small.c_[i];
  return Poly(*ctx_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Cyclo> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(-c);
  return Poly(*ctx_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Cyclo> r = c_;
  if (r.size() < o.c_.size()) r.resize(o.c_.size(), Cyclo(*ctx_));
  for (size_t i = 0; i < o.c_.size(); ++i)
    if (!o.c_[i].is_zero()) r[i] -= o.c_[i];
  return Poly(*ctx_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(*ctx_);
  std::vector<Cyclo> r(c_.size() + o.c_.size() - 1, Cyclo(*ctx_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(*ctx_, std::move(r));
}

Poly Poly::scale(const Cyclo& s) const {
  if (s.is_zero()) return Poly(*ctx_);
  std::vector<Cyclo> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c.is_zero() ? c : c * s);
  return Poly(*ctx_, std::move(r));
}

Poly Poly::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Cyclo> r(k, Cyclo(*ctx_));
  r.insert(r.end(), c_.begin(), c_.end());
  return Poly(*ctx_, std::move(r));
}

Poly Poly::unshift(int k) const {
  if (is_zero() || k == 0) return *this;
  return Poly(*ctx_, std::vector<Cyclo>(c_.begin() + k, c_.end()));
}

void Poly::divmod(const Poly& d, Poly& q, Poly& r) const {
  if (d.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  r = *this;
  int dd = d.degree();
  if (r.degree() < dd) {
    q = Poly(*ctx_);
    return;
  }
  std::vector<Cyclo> qc(r.degree() - dd + 1, Cyclo(*ctx_));
  Cyclo lcinv = d.lc().inv();
  bool monic = d.lc().is_one();
  std::vector<Cyclo> rc = r.c_;
  for (int k = static_cast<int>(rc.size()) - 1 - dd; k >= 0; --k) {
    const Cyclo& top = rc[k + dd];
    if (top.is_zero()) continue;
    Cyclo f = monic ? top : top * lcinv;
    qc[k] = f;
    for (int i = 0; i <= dd; ++i)
      if (!d.c_[i].is_zero()) rc[k + i] -= f * d.c_[i];
  }
  q = Poly(*ctx_, std::move(qc));
  r = Poly(*ctx_, std::move(rc));
}

Poly Poly::exact_div(const Poly& d) const {
  if (d.is_monomial()) {
    int v = d.degree();
    Poly s = unshift(v);
    return d.lc().is_one() ? s : s.scale(d.lc().inv());
  }
  Poly q(*ctx_), r(*ctx_);
  divmod(d, q, r);
  return q;
}

Poly Poly::monic() const {
  if (is_zero() || lc().is_one()) return *this;
  return scale(lc().inv());
}

Cyclo Poly::eval(const Cyclo& x0) const {
  Cyclo acc(*ctx_);
  for (int i = degree(); i >= 0; --i) acc = acc * x0 + c_[i];
  return acc;
}

bool Poly::operator==(const Poly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

Poly Poly::gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // strip common powers of x first: cheap and frequent
  int va = a.valuation(), vb = b.valuation();
  int v = std::min(va, vb);
  a = a.unshift(va);
  b = b.unshift(vb);
  while (!b.is_zero()) {
    if (b.degree() == 0) {
      a = Poly::constant(Cyclo::from_int(a.ctx(), 1));
      break;
    }
    Poly q(a.ctx()), r(a.ctx());
    a.divmod(b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic().shift(v);
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Cyclo& c, int k, char xvar, char zvar) {
  if (c.is_zero()) return;
  if (k == 0) {
    // constant term: spell out each cyclotomic term with its own sign
    std::string s = c.to_string(zvar);
    if (first) {
      os << s;
    } else if (s[0] == '-') {
      os << " - " << s.substr(1);
    } else {
      os << " + " << s;
    }
    first = false;
    return;
  }
  std::string mon(1, xvar);
  if (k > 1) mon += "^" + std::to_string(k);
  bool neg = false;
  std::string coef;
  if (c.nonzero_terms() == 1) {
    int idx = 0;
    while (sgn(c.coeff(idx)) == 0) ++idx;
    neg = sgn(c.coeff(idx)) < 0;
    Cyclo a = neg ? -c : c;
    coef = a.is_one() ? "" : a.to_string(zvar) + "*";
  } else {
    coef = "(" + c.to_string(zvar) + ")*";
  }
  if (first)
    os << (neg ? "-" : "");
  else
    os << (neg ? " - " : " + ");
  first = false;
  os << coef << mon;
}

}  // namespace

std::string Poly::to_string(char xvar, char zvar) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) append_term(os, first, c_[k], k, xvar, zvar);
  return os.str();
}

}  // namespace hecke
