#pragma once

#include <string>

#include "hecke/exact/poly.hpp"

namespace hecke {

/// Element of Q(zeta_M)(x): coprime numerator and monic denominator.
class RatFunc {
 public:
  explicit RatFunc(const CycloCtx& ctx) : num_(ctx), den_(Poly::constant(Cyclo::from_int(ctx, 1))) {}
  /// Reduces num/den to lowest terms; throws DivisionByZero for a zero denominator.
  RatFunc(Poly num, Poly den);
  static RatFunc from_cyclo(const Cyclo& c);
  static RatFunc x(const CycloCtx& ctx);

  const CycloCtx& ctx() const { return num_.ctx(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /// True when the denominator is a power of x.
  bool is_laurent() const { return den_.is_monomial(); }
  /// True when this is a constant of Q(zeta_M).
  bool is_constant() const { return num_.is_constant() && den_.degree() == 0; }
  size_t complexity() const { return num_.complexity() + den_.complexity(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc inv() const;
  RatFunc operator/(const RatFunc& o) const { return *this * o.inv(); }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  /// Evaluates at x = x0; throws PoleAtSpecialization when the denominator vanishes.
  Cyclo specialize(const Cyclo& x0) const;

  std::string to_string() const;

 private:
  struct Raw {};
  RatFunc(Poly num, Poly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

}  // namespace hecke
