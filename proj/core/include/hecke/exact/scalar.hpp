#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include "hecke/exact/cyclo.hpp"
#include "hecke/exact/ratfunc.hpp"

namespace hecke {

enum class FieldKind { Cyclotomic, Radical, Function };

/// Interned description of one of the supported fields; compare by pointer.
struct FieldDesc {
  FieldKind kind = FieldKind::Cyclotomic;
  const CycloCtx* base = nullptr;
  int rad_degree = 1;  // Radical only: y^rad_degree = rad_const
  Cyclo rad_const;

  int conductor() const { return base->M; }
  std::string describe() const;
};

using Field = const FieldDesc*;

/// Q(zeta_M).
Field cyclotomic_field(int M);
/// Q(zeta_M)(x) with x standing for a generic q.
Field function_field(int M);
/// Q(zeta_M)[y]/(y^l - c); l = 1 returns the base field itself.
Field radical_extension(int M, int l, const Cyclo& c);

/// Element of y-polynomials of degree < l over Q(zeta_M).
struct RadElt {
  std::vector<Cyclo> a;
};

/// Tagged field element. Binary operations require both operands in the same field.
class Scalar {
 public:
  Scalar() : f_(nullptr), v_(Cyclo()) {}
  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long v);
  static Scalar from_mpq(Field f, const mpq_class& v);
  /// zeta_M^k embedded in f.
  static Scalar zeta(Field f, long k);
  /// The indeterminate x of a function field.
  static Scalar x(Field f);
  /// The adjoined root y of a radical extension.
  static Scalar y(Field f);
  /// Embeds a constant of Q(zeta_M) into f (same conductor).
  static Scalar embed(Field f, const Cyclo& c);
  static Scalar from_ratfunc(Field f, RatFunc r);

  Field field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;
  size_t complexity() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inv() const;
  Scalar pow(long e) const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Access to the underlying representation.
  const Cyclo& cyclo() const;
  const RatFunc& ratfunc() const;
  const RadElt& radical() const;
  /// For a Cyclotomic scalar or a constant function-field scalar, the Q(zeta_M) value.
  bool as_constant(Cyclo& out) const;

  std::string to_string() const;

 private:
  Scalar(Field f, std::variant<Cyclo, RatFunc, RadElt> v) : f_(f), v_(std::move(v)) {}
  void check(const Scalar& o) const;
  Field f_;
  std::variant<Cyclo, RatFunc, RadElt> v_;
};

/// Returns zeta_M^(M/p), of exact order p; OrderUnavailable when p does not divide M.
Scalar primitive_root(Field f, int p);

/// Ring map Q(zeta_M)(x) -> Q(zeta_M), x -> x0.
Scalar specialize(const Scalar& e, const Scalar& x0);

/// Parses the canonical text form (integers, z, x, y, + - * / ^, parentheses) into field f.
Scalar parse_scalar(Field f, const std::string& text);

/// Attempts an l-th root inside the field; returns false when none is found by the
/// root-of-unity-times-rational test (and its function-field analogue).
bool try_root(const Scalar& c, int l, Scalar& out);

}  // namespace hecke
