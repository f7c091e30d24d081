#include <random>

#include "doctest.h"
#include "hecke/errors.hpp"
#include "hecke/exact/scalar.hpp"

using namespace hecke;

namespace {

Scalar random_scalar(Field f, std::mt19937& rng, bool allow_x) {
  std::uniform_int_distribution<int> coef(-3, 3), ex(0, 5);
  Scalar s = Scalar::zero(f);
  for (int k = 0; k < 3; ++k) s += Scalar::from_int(f, coef(rng)) * Scalar::zeta(f, ex(rng));
  if (allow_x) {
    Scalar num = s + Scalar::from_int(f, coef(rng)) * Scalar::x(f);
    Scalar den = Scalar::x(f) - Scalar::zeta(f, ex(rng)) + Scalar::from_int(f, 2);
    return num / den;
  }
  return s;
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("gaussian unit squares to minus one") {
    Field f = cyclotomic_field(4);
    Scalar z = Scalar::zeta(f, 1);
    CHECK(z * z == Scalar::from_int(f, -1));
  }

  TEST_CASE("inverse of 1 + zeta_3") {
    Field f = cyclotomic_field(3);
    Scalar a = Scalar::one(f) + Scalar::zeta(f, 1);
    Scalar b = Scalar::one(f) + Scalar::zeta(f, 2);
    CHECK((a * b).is_one());
    CHECK(a.inv() == b);
  }

  TEST_CASE("polynomial quotient in Q(zeta_3)(x)") {
    Field f = function_field(3);
    Scalar x = Scalar::x(f);
    Scalar one = Scalar::one(f);
    CHECK((x * x - one) / (x - one) == x + one);
  }

  TEST_CASE("division by zero and field mismatch are reported") {
    Field f = cyclotomic_field(5);
    CHECK_THROWS_AS(Scalar::zero(f).inv(), Error);
    try {
      (void)(Scalar::one(f) + Scalar::one(cyclotomic_field(4)));
      FAIL("expected mismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::FieldMismatch);
    }
  }

  TEST_CASE("primitive roots") {
    Field f4 = cyclotomic_field(4);
    CHECK(primitive_root(f4, 2) == Scalar::from_int(f4, -1));
    Field f12 = cyclotomic_field(12);
    Scalar w = primitive_root(f12, 3);
    CHECK(w == Scalar::zeta(f12, 4));
    CHECK(w.pow(3).is_one());
    CHECK_FALSE(w.is_one());
    CHECK_FALSE(w.pow(2).is_one());
    try {
      (void)primitive_root(f4, 3);
      FAIL("expected OrderUnavailable");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OrderUnavailable);
    }
  }

  TEST_CASE("specialization") {
    Field F = function_field(3);
    Field K = cyclotomic_field(3);
    Scalar x = Scalar::x(F);
    Scalar z3 = Scalar::zeta(K, 1);
    CHECK(specialize(x + Scalar::one(F), z3) == Scalar::one(K) + z3);
    try {
      (void)specialize((x - Scalar::zeta(F, 1)).inv(), z3);
      FAIL("expected pole");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PoleAtSpecialization);
    }
    Scalar e = (x * x + x + Scalar::one(F)) / (x + Scalar::from_int(F, 2));
    CHECK(specialize(e, Scalar::one(K)).is_one());
  }

  TEST_CASE("specialize is a ring map on random pairs") {
    Field F = function_field(6);
    Field K = cyclotomic_field(6);
    std::mt19937 rng(7);
    int checked = 0;
    for (int it = 0; it < 60; ++it) {
      Scalar a = random_scalar(F, rng, true), b = random_scalar(F, rng, true);
      Scalar x0 = Scalar::zeta(K, it % 6);
      try {
        Scalar sa = specialize(a, x0), sb = specialize(b, x0);
        Scalar sp = specialize(a * b, x0), ss = specialize(a + b, x0);
        CHECK(sp == sa * sb);
        CHECK(ss == sa + sb);
        ++checked;
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PoleAtSpecialization);
      }
    }
    CHECK(checked > 30);
  }

  TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(11);
    std::vector<Field> fields = {cyclotomic_field(1), cyclotomic_field(8), cyclotomic_field(12), function_field(4),
                                 radical_extension(3, 2, Cyclo::zeta_pow(CycloCtx::get(3), 1) + Cyclo::from_int(CycloCtx::get(3), 2))};
    for (Field f : fields) {
      bool fx = f->kind == FieldKind::Function;
      for (int it = 0; it < 40; ++it) {
        Scalar a = random_scalar(f, rng, fx), b = random_scalar(f, rng, fx), c = random_scalar(f, rng, fx);
        if (f->kind == FieldKind::Radical) {
          a += Scalar::y(f) * b;
          c -= Scalar::y(f);
        }
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK((a * a.inv()).is_one());
      }
    }
  }

  TEST_CASE("radical extension of degree one is the base field") {
    CHECK(radical_extension(5, 1, Cyclo::from_int(CycloCtx::get(5), 3)) == cyclotomic_field(5));
    Field f = radical_extension(4, 2, Cyclo::from_int(CycloCtx::get(4), 3));
    Scalar y = Scalar::y(f);
    CHECK(y * y == Scalar::from_int(f, 3));
  }

  TEST_CASE("serialize then parse is the identity") {
    std::mt19937 rng(3);
    std::vector<Field> fields = {cyclotomic_field(7), function_field(8), radical_extension(4, 3, Cyclo::from_int(CycloCtx::get(4), 5))};
    for (Field f : fields) {
      for (int it = 0; it < 40; ++it) {
        Scalar a = random_scalar(f, rng, f->kind == FieldKind::Function);
        if (f->kind == FieldKind::Radical) a += Scalar::y(f).pow(2) * Scalar::from_mpq(f, mpq_class(-2, 3));
        std::string s = a.to_string();
        Scalar b = parse_scalar(f, s);
        CHECK(b == a);
        CHECK(b.to_string() == s);
      }
    }
    Field F = function_field(8);
    CHECK(parse_scalar(F, "(1 - z^3)/(x - z)").to_string() == "(1 - z^3)/(x - z)");
    CHECK(parse_scalar(function_field(4), "(1 - z^3)/(x - z)").to_string() == "(1 + z)/(x - z)");
  }

  TEST_CASE("roots of rational multiples of roots of unity") {
    Field f = cyclotomic_field(8);
    Scalar out;
    REQUIRE(try_root(Scalar::from_int(f, -4), 2, out));
    CHECK(out * out == Scalar::from_int(f, -4));
    REQUIRE(try_root(Scalar::zeta(f, 2), 2, out));
    CHECK(out * out == Scalar::zeta(f, 2));
    CHECK_FALSE(try_root(Scalar::from_int(f, 3), 2, out));
    Field F = function_field(4);
    Scalar x = Scalar::x(F);
    REQUIRE(try_root(x.pow(-2) * Scalar::from_int(F, -1), 2, out));
    CHECK(out * out == x.pow(-2) * Scalar::from_int(F, -1));
    Scalar sq = ((x + Scalar::one(F)) / (x * x - Scalar::from_int(F, 2))).pow(3);
    REQUIRE(try_root(sq, 3, out));
    CHECK(out.pow(3) == sq);
    CHECK_FALSE(try_root(x + Scalar::one(F), 2, out));
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_scalar(cyclotomic_field(3), "x + 1"), Error);
    CHECK_THROWS_AS(parse_scalar(cyclotomic_field(3), "(1 + z"), Error);
    CHECK_THROWS_AS(parse_scalar(cyclotomic_field(3), "1/0"), Error);
  }
}
