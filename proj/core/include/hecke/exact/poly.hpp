#pragma once

#include <string>
#include <vector>

#include "hecke/exact/cyclo.hpp"

namespace hecke {

/// Univariate polynomial over Q(zeta_M), ascending coefficients, no trailing zeros.
class Poly {
 public:
  explicit Poly(const CycloCtx& ctx) : ctx_(&ctx) {}
  Poly(const CycloCtx& ctx, std::vector<Cyclo> c);
  static Poly constant(const Cyclo& c);
  static Poly monomial(const Cyclo& c, int deg);
  static Poly x(const CycloCtx& ctx) { return monomial(Cyclo::from_int(ctx, 1), 1); }

  const CycloCtx& ctx() const { return *ctx_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Lowest degree with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const;
  bool is_monomial() const { return !c_.empty() && valuation() == degree(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Cyclo& lc() const { return c_.back(); }
  const std::vector<Cyclo>& coeffs() const { return c_; }
  Cyclo coeff(int k) const;
  size_t complexity() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scale(const Cyclo& s) const;
  Poly shift(int k) const;     // multiply by x^k, k >= 0
  Poly unshift(int k) const;   // divide by x^k, requires valuation >= k
  void divmod(const Poly& d, Poly& q, Poly& r) const;
  Poly exact_div(const Poly& d) const;
  Poly monic() const;
  Cyclo eval(const Cyclo& x0) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  static Poly gcd(Poly a, Poly b);

  /// Text form with coefficients in `zvar` and indeterminate `xvar`.
  std::string to_string(char xvar = 'x', char zvar = 'z') const;

 private:
  void trim();
  const CycloCtx* ctx_;
  std::vector<Cyclo> c_;
};

}  // namespace hecke
