#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hecke {

/// Data for Q(zeta_M): the cyclotomic polynomial and reduction tables for powers of zeta.
struct CycloCtx {
  int M = 1;
  int phi = 1;
  std::vector<int64_t> phi_poly;             // ascending coefficients, monic, length phi+1
  std::vector<std::vector<int64_t>> power;   // power[k] = zeta^k in the basis 1..zeta^(phi-1), k < M
  std::vector<std::vector<int64_t>> reduce;  // reduce[k] = zeta^k for k < 2*phi
  int table_bits = 1;                        // bound on log2 of reduction entries

  /// Interned context for conductor M; lives for the whole process.
  static const CycloCtx& get(int M);
};

/// Element of Q(zeta_M) stored as numerators over a common positive denominator.
/// Small values use int64 storage; anything larger is promoted to GMP integers.
class Cyclo {
 public:
  static constexpr int kInline = 8;

  Cyclo() : Cyclo(CycloCtx::get(1)) {}
  explicit Cyclo(const CycloCtx& ctx);
  Cyclo(const Cyclo& other);
  Cyclo(Cyclo&&) noexcept = default;
  Cyclo& operator=(const Cyclo& other);
  Cyclo& operator=(Cyclo&&) noexcept = default;
  ~Cyclo() = default;

  static Cyclo from_int(const CycloCtx& ctx, long v);
  static Cyclo from_mpq(const CycloCtx& ctx, const mpq_class& v);
  static Cyclo zeta_pow(const CycloCtx& ctx, long k);
  /// Builds an element from rational coefficients of 1, zeta, ..., zeta^(phi-1).
  static Cyclo from_coeffs(const CycloCtx& ctx, const std::vector<mpq_class>& c);

  const CycloCtx& ctx() const { return *ctx_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  int nonzero_terms() const;
  mpq_class coeff(int k) const;
  std::vector<mpq_class> coeffs() const;
  /// Rough size used for pivot selection.
  size_t complexity() const;

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  Cyclo inv() const;
  Cyclo operator/(const Cyclo& o) const { return *this * o.inv(); }
  Cyclo pow(long e) const;
  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  /// If this equals c * zeta^j with c rational, returns j and sets c; otherwise -1.
  int as_root_times_rational(mpq_class& c) const;

  std::string to_string(char var = 'z') const;

 private:
  struct Big {
    std::vector<mpz_class> num;
    mpz_class den;
  };

  void set_small_from_i128(const __int128* num, __int128 den);
  void set_from_big(Big&& b);
  Big to_big() const;
  static Cyclo add_big(const Cyclo& a, const Cyclo& b, bool subtract);
  static Cyclo mul_big(const Cyclo& a, const Cyclo& b);

  const CycloCtx* ctx_;
  int64_t sn_[kInline];
  int64_t sd_ = 1;
  std::unique_ptr<Big> big_;
};

}  // namespace hecke
