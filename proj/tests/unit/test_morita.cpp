#include "doctest.h"
#include "hecke/errors.hpp"
#include "hecke/morita/morita.hpp"

using namespace hecke;

namespace {

/// r=4, p=2, t=(1,1), n=3, Q=(1, i) at q=-1: i is outside {+-1}, the orbit of 1.
Algebra split_algebra() {
  Field f = cyclotomic_field(4);
  return Algebra(make_params(f, 4, 2, 3, Scalar::from_int(f, -1), {Scalar::one(f), Scalar::zeta(f, 1)}));
}

Composition comp(const char* text) { return Composition::parse(text); }

bool all_ok(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return !checks.empty();
}

}  // namespace

TEST_SUITE("morita") {
  TEST_CASE("orbit partition") {
    Field g = function_field(2);
    Scalar x = Scalar::x(g);
    auto one_orbit = orbit_partition(make_params(g, 4, 2, 3, x, {Scalar::one(g), x.pow(3)}));
    CHECK(one_orbit.kappa == 1);
    CHECK(orbit_partition(make_params(g, 2, 2, 3, x, {Scalar::one(g)})).kappa == 1);

    Algebra A = split_algebra();
    auto two = orbit_partition(A.params());
    CHECK(two.kappa == 2);
    CHECK(two.t == std::vector<int>{1, 1});
    CHECK(two.is_grouped());

    Field f = cyclotomic_field(4);
    Params P = make_params(f, 6, 2, 3, Scalar::from_int(f, -1), {Scalar::one(f), Scalar::zeta(f, 1), Scalar::from_int(f, -1)});
    auto part = orbit_partition(P);
    CHECK(part.kappa == 2);
    CHECK(part.order == std::vector<int>{0, 2, 1});
    CHECK(!part.is_grouped());
    Params G = grouped_params(P, part);
    CHECK(G.Q[1] == Scalar::from_int(f, -1));
    CHECK(orbit_partition(G).is_grouped());
    Algebra B(P);
    Cellular CB(B);
    CHECK_THROWS_AS(Morita{CB}, Error);
  }

  TEST_CASE("kappa = 1: v_b = 1 and V^b is the whole algebra") {
    Field f = cyclotomic_field(2);
    Algebra A(make_params(f, 2, 2, 3, Scalar::from_int(f, -1), {Scalar::one(f)}));
    Cellular C(A);
    Morita M(C);
    Composition b = comp("[3]");
    CHECK(M.v_b(b).v == A.one());
    CHECK(M.vb_basis(b, false).dim() == 48);
    CHECK(M.vb_basis(b, true).dim() == 24);
    CHECK(all_ok(M.shift_identities(b)));
    CHECK(all_ok(M.vanishing_identities(b)));
  }

  TEST_CASE("v_{a,b}(s) with s = t has an empty right product") {
    Algebra A = split_algebra();
    Cellular C(A);
    Morita M(C);
    CHECK(M.v_ab(1, 2, 2) == M.v_ab_plus(1, 2, 2));
    CHECK(M.v_ab(1, 2, 1) != M.v_ab_plus(1, 2, 1));
    VbElements e = M.v_b(comp("[2,1]"));
    CHECK(!e.v.empty());
    CHECK(e.v == A.mul(e.minus, e.u_plus));
    CHECK(e.v == A.mul(M.v_ab_plus(1, 2, 1), e.u_plus));
  }

  TEST_CASE("shift and vanishing identities for every b") {
    Algebra A = split_algebra();
    Cellular C(A);
    Morita M(C);
    for (const auto& b : M.compositions()) {
      CHECK(all_ok(M.shift_identities(b)));
      CHECK(all_ok(M.vanishing_identities(b)));
    }
    // i = b_2 = 1 is excluded for b = (2,1); the two sides differ there
    Composition b = comp("[2,1]");
    Element v = M.v_b(b).v;
    CHECK(M.shift_identities(b).size() == 1 + 3);
    for (int j = 1; j < 3; ++j) CHECK(A.lmul_T(1, v) != A.rmul_T(v, j));
  }

  TEST_CASE("bases of v_b H_{r,n} and v_b H_{r,p,n}") {
    Algebra A = split_algebra();
    Cellular C(A);
    Morita M(C);
    long total = 0;
    for (const auto& b : M.compositions()) {
      VbModule V = M.vb_basis(b, false), W = M.vb_basis(b, true);
      CHECK(V.dim() == 48);
      CHECK(2 * W.dim() == V.dim());
      CHECK(satisfies_relations(A, V.rep));
      total += static_cast<long>(coset_reps(b).size()) * V.dim();
    }
    CHECK(total == A.dim());
  }

  TEST_CASE("theta_b and the v_st basis") {
    Algebra A = split_algebra();
    Cellular C(A);
    Morita M(C);
    for (const auto& b : M.compositions()) CHECK(all_ok(M.v_st_checks(b)));
    CHECK(M.theta_b(comp("[3,0]"), A.T(1)) == A.T(1));
  }

  TEST_CASE("Hom between distinct V^b vanishes") {
    Algebra A = split_algebra();
    Cellular C(A);
    Morita M(C);
    std::vector<VbModule> full, fixed;
    for (const auto& b : M.compositions()) {
      full.push_back(M.vb_basis(b, false));
      fixed.push_back(M.vb_basis(b, true));
    }
    for (size_t i = 0; i < full.size(); ++i)
      for (size_t j = 0; j < full.size(); ++j) {
        int rn = hom_dimension(full[i].rep, full[j].rep);
        int rpn = hom_dimension(fixed[i].rep, fixed[j].rep);
        if (i == j) {
          CHECK(rn >= 1);
          CHECK(rpn >= 1);
        } else {
          CHECK(rn == 0);
          CHECK(rpn == 0);
        }
      }
  }

  TEST_CASE("endomorphism algebras of Theorem main1") {
    Algebra A = split_algebra();
    Cellular C(A);
    Morita M(C);
    EndoReport R = M.endo_verify_main1(comp("[2,1]"));
    CHECK(R.dim_Hb == 16);
    CHECK(R.end_rn == 16);
    CHECK(R.end_rpn == 32);
    CHECK(all_ok(R.checks));
    EndoReport S = M.endo_verify_main1(comp("[3,0]"));
    CHECK(S.end_rn == 48);
    CHECK(S.end_rpn == 96);
  }

  TEST_CASE("kappa = 1 endomorphisms: End_{H_{2,2,3}}(H_{2,3}) has dimension 96") {
    Field f = cyclotomic_field(2);
    Algebra A(make_params(f, 2, 2, 3, Scalar::from_int(f, -1), {Scalar::one(f)}));
    Cellular C(A);
    Morita M(C);
    EndoReport R = M.endo_verify_main1(comp("[3]"));
    CHECK(R.end_rn == 48);
    CHECK(R.end_rpn == 96);
    HpbReport H = M.hpb_prime(comp("[3]"));
    CHECK(H.end_rpn == 24);
    CHECK(H.hpb_action_dim == 24);
  }

  TEST_CASE("H'_{p,b} and the maps rho_alpha") {
    Algebra A = split_algebra();
    Cellular C(A);
    Morita M(C);
    HpbReport R = M.hpb_prime(comp("[2,1]"));
    CHECK(R.end_rpn == 8);
    CHECK(R.dim_Hpb_formula == 8);
    CHECK(R.hpb_action_dim == 4);
    CHECK(all_ok(R.checks));
    for (const auto& b : {comp("[1,2]"), comp("[0,3]")}) CHECK(all_ok(M.hpb_prime(b).checks));
  }

  TEST_CASE("hom solver on small modules") {
    Algebra A = split_algebra();
    Cellular C(A);
    const SpechtModule& S = C.specht(C.shapes().front());
    CHECK(hom_dimension(S.rep, S.rep) == 1);
    auto H = hom_basis(S.rep, S.rep);
    REQUIRE(H.size() == 1);
    for (const auto& g : S.rep.gens) CHECK(g * H[0] == H[0] * g);
  }
}
