#include "doctest.h"
#include "hecke/cellular/cellular.hpp"
#include "hecke/clifford/clifford.hpp"
#include "hecke/errors.hpp"

using namespace hecke;

namespace {

Algebra generic_rpn(int r, int p, int n) {
  Field f = function_field(2);
  std::vector<Scalar> Q;
  for (int k = 0; k < r / p; ++k) Q.push_back(Scalar::x(f).pow(2 * k + 3));
  return Algebra(make_params(f, r, p, n, Scalar::x(f), Q));
}

std::vector<Representation> specht_reps(const Cellular& C) {
  std::vector<Representation> out;
  for (const auto& lam : C.shapes()) out.push_back(C.specht(lam).rep);
  return out;
}

std::vector<Scalar> add(std::vector<Scalar> a, const std::vector<Scalar>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

TEST_SUITE("clifford") {
  TEST_CASE("crossed product H_{2,2} x Z_2") {
    Algebra A = generic_rpn(2, 2, 2);
    FDAlgebra R = regular_fd_algebra(A);
    CrossedProduct X(R, 2);
    CHECK(X.dim() == 16);
    Field f = R.field;
    std::vector<Scalar> t0(R.dim, Scalar::zero(f)), t1 = t0;
    for (const auto& [i, c] : A.T(0)) t0[i] = c;
    for (const auto& [i, c] : A.T(1)) t1[i] = c;
    auto th = X.embed(R.one, 1);
    // theta a = theta(a) theta
    CHECK(X.mul(th, X.embed(t0)) == X.mul(X.embed(R.apply_theta(t0, 1)), th));
    CHECK(X.mul(th, th) == X.embed(R.one));
    auto a = add(X.embed(t0), X.embed(t1, 1)), b = add(X.embed(t1), th), c = add(X.embed(t0, 1), X.embed(R.one));
    CHECK(X.mul(X.mul(a, b), c) == X.mul(a, X.mul(b, c)));
    CHECK_THROWS_AS(CrossedProduct(R, 3), Error);

    FDAlgebra bad = R;
    bad.theta.at(1, 1) = Scalar::from_int(f, 2);
    try {
      CrossedProduct Y(bad, 2);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK((e.code() == ErrorCode::NotAutomorphism || e.code() == ErrorCode::WrongOrder));
    }
  }

  TEST_CASE("twists of Specht modules permute shapes") {
    Algebra A = generic_rpn(2, 2, 3);
    Cellular C(A);
    Twisting tw = sigma_twisting(A.params());
    for (const auto& lam : C.shapes()) {
      const auto& S = C.specht(lam).rep;
      CHECK(twist(twist(S, tw, 1), tw, -1).gens == S.gens);
      Multipartition swapped({lam.comp[1], lam.comp[0]});
      CHECK(hom_dimension(twist(S, tw, 1), C.specht(swapped).rep) == 1);
    }
  }

  TEST_CASE("simples of H_{2,3} x Z_2 at generic q") {
    Algebra A = generic_rpn(2, 2, 3);
    Cellular C(A);
    Twisting tw = sigma_twisting(A.params());
    auto simples = simples_of_crossed_product(specht_reps(C), tw);
    CHECK(simples.size() == 5);
    long total = 0;
    for (const auto& s : simples) {
      CHECK(s.l == 1);
      CHECK(s.module.h == 2);
      total += static_cast<long>(s.module.dim()) * s.module.dim();
      CHECK(is_absolutely_simple(s.module.as_representation()));
    }
    CHECK(total == 2 * A.dim());
    for (size_t i = 0; i < simples.size(); ++i)
      for (size_t j = i + 1; j < simples.size(); ++j)
        if (simples[i].module.dim() == simples[j].module.dim())
          CHECK(hom_dimension(simples[i].module.as_representation(), simples[j].module.as_representation()) == 0);
  }

  TEST_CASE("inertia of a sigma-stable Specht module and Lemma 2lm by characters") {
    Algebra A = generic_rpn(2, 2, 2);
    Cellular C(A);
    Twisting tw = sigma_twisting(A.params());
    const auto& S = C.specht(Multipartition::parse("[[1],[1]]")).rep;
    InertiaData data = inertia_group(S, tw);
    CHECK(data.l == 2);
    CHECK(data.k == 1);
    CHECK(data.phi.pow(2).is_identity());
    CHECK(data.extension.empty());
    CrossedModule L0 = module_Lli(data, 0, tw), L1 = module_Lli(data, 1, tw);
    auto c0 = crossed_character(A, L0, tw), c1 = crossed_character(A, L1, tw);
    CHECK(c0 != c1);
    for (int i = 0; i < 2; ++i) {
      CrossedModule Li = i == 0 ? L0 : L1;
      CrossedModule back = induce_crossed(restrict_crossed(Li, 1, tw), 2, tw);
      CHECK(back.dim() == 2 * Li.dim());
      CHECK(crossed_character(A, back, tw) == add(c0, c1));
    }
    // the induced L_{2,i} to A x Z_2 is L_{2,i} itself; the full list for H_{2,2} x Z_2
    auto simples = simples_of_crossed_product(specht_reps(C), tw);
    long total = 0;
    for (const auto& s : simples) total += static_cast<long>(s.module.dim()) * s.module.dim();
    CHECK(total == 2 * A.dim());
    CHECK(simples.size() == 4);

    const auto& T = C.specht(Multipartition::parse("[[2],[]]")).rep;
    CHECK(inertia_group(T, tw).l == 1);
  }

  TEST_CASE("non-simple modules are rejected") {
    Algebra A = generic_rpn(2, 2, 2);
    Cellular C(A);
    const auto& S = C.specht(Multipartition::parse("[[2],[]]")).rep;
    Representation twice;
    twice.field = S.field;
    twice.dim = 2;
    for (const auto& g : S.gens) {
      Matrix m(S.field, 2, 2);
      m.at(0, 0) = m.at(1, 1) = g.at(0, 0);
      twice.gens.push_back(m);
    }
    CHECK_THROWS_AS(inertia_group(twice, sigma_twisting(A.params())), Error);
  }

  TEST_CASE("formula_main3 degenerate cases") {
    SplitTable t{{2, 0, 1}, {1, 3, 0}, {0, 1, 4}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(formula_main3({t}, 1, 3, i, j) == t[i][j]);
    SplitTable a{{3}}, b{{5}};
    CHECK(formula_main3({a, b}, 2, 1, 0, 0) == 15);
    // kappa = 2, d0 = 2: j1 + j2 = i + j
    SplitTable u{{1, 2}, {3, 4}}, v{{5, 6}, {7, 8}};
    CHECK(formula_main3({u, v}, 2, 2, 0, 0) == 1 * 5 + 2 * 6);
    CHECK(formula_main3({u, v}, 2, 2, 1, 0) == 3 * 8 + 4 * 7);
    CHECK_THROWS_AS(formula_main3({u}, 2, 2, 0, 0), Error);
    CHECK_THROWS_AS(formula_main3({u, SplitTable{{1}}}, 2, 2, 0, 0), Error);
  }

  TEST_CASE("splittable reduction index set") {
    auto req = splittable_reduction(4, 1, 1, 1, 0, true);
    CHECK(req.size() == 4);
    CHECK(req[0].d0 == 1);
    CHECK(splittable_reduction(4, 2, 1, 1, 0, true).size() == 2);
    auto two = splittable_reduction(4, 2, 2, 3, 1, true);
    CHECK(two.size() == 2);
    CHECK(two[1].a == 2);
    CHECK(two[0].i == 1);
    CHECK(two[0].j == 1);
    CHECK(splittable_reduction(4, 4, 2, 3, 1, true).size() == 1);
    CHECK_THROWS_AS(splittable_reduction(4, 2, 2, 0, 0, false), Error);
  }
}
