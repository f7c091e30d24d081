#include "doctest.h"
#include "hecke/cellular/cellular.hpp"
#include "hecke/errors.hpp"

using namespace hecke;

namespace {

Algebra generic_algebra(int r, int n, int p = 1, int M = 4) {
  Field f = function_field(M);
  std::vector<Scalar> Q;
  for (int k = 0; k < r / p; ++k) Q.push_back(Scalar::zeta(f, k));
  return Algebra(make_params(f, r, p, n, Scalar::x(f), Q));
}

Algebra special_algebra(int r, int n, int qpow, int M) {
  Field f = cyclotomic_field(M);
  std::vector<Scalar> Q;
  for (int k = 0; k < r; ++k) Q.push_back(Scalar::zeta(f, k * M / (2 * r)) + Scalar::from_int(f, k));
  return Algebra(make_params(f, r, 1, n, Scalar::zeta(f, qpow), Q));
}

bool tableau_dominates(const Tableau& a, const Tableau& b) {
  for (int k = 1; k <= a.n(); ++k)
    if (!dominance_ge(a.shape_k(k), b.shape_k(k))) return false;
  return true;
}

Multipartition mp(const char* text) { return Multipartition::parse(text); }

}  // namespace

TEST_SUITE("cellular") {
  TEST_CASE("small Murphy elements") {
    Algebra A = generic_algebra(2, 1);
    Cellular C(A);
    auto Qe = A.params().expanded();
    CHECK(C.murphy_element({mp("[[],[1]]"), 0, 0}) == A.one());
    CHECK(C.murphy_element({mp("[[1],[]]"), 0, 0}) == elem_sub(A.L(1), A.scalar(Qe[1])));
    Algebra B = generic_algebra(1, 3);
    Cellular CB(B);
    Element sum;
    for (const Perm& w : all_perms(3)) sum = elem_add(sum, B.Tw(w));
    CHECK(CB.murphy_element({mp("[[3]]"), 0, 0}) == sum);
  }

  TEST_CASE("star swaps the tableaux of a Murphy element") {
    Algebra A = generic_algebra(2, 3);
    Cellular C(A);
    for (const auto& lam : C.shapes()) {
      int f = static_cast<int>(C.tableaux(lam).size());
      for (int s = 0; s < f; ++s)
        for (int t = 0; t < f; ++t) CHECK(A.star(C.murphy_element({lam, s, t})) == C.murphy_element({lam, t, s}));
    }
  }

  TEST_CASE("change of basis is invertible") {
    for (auto [r, n] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 2}, std::pair{2, 3}}) {
      Algebra A = generic_algebra(r, n);
      Cellular C(A);
      Matrix M = C.change_of_basis();
      CHECK(M.rows() == A.dim());
      if (A.dim() <= 8) CHECK(!determinant(M).is_zero());
    }
    Algebra A = generic_algebra(2, 2);
    CHECK(Cellular(A).murphy_basis().size() == 8);
  }

  TEST_CASE("ideal above a shape") {
    Algebra A = generic_algebra(1, 2);
    Cellular C(A);
    CHECK(C.ideal_above(mp("[[2]]")).empty());
    CHECK(C.ideal_above(mp("[[1,1]]")).size() == 1);
    Algebra B = generic_algebra(2, 2);
    Cellular CB(B);
    auto I = CB.ideal_above(mp("[[1],[1]]"));
    Echelon ech(B.field(), B.dim());
    for (const auto& e : I) CHECK(ech.insert(e));
    for (const auto& e : I)
      for (int i = 0; i < 2; ++i) {
        CHECK(ech.contains(i == 0 ? B.rmul_L(e, 1) : B.rmul_T(e, i)));
        CHECK(ech.contains(i == 0 ? B.mul(B.T(0), e) : B.lmul_T(i, e)));
      }
  }

  TEST_CASE("Specht modules: dimensions, relations, contravariant form") {
    for (auto [r, n] : {std::pair{1, 3}, std::pair{2, 2}, std::pair{2, 3}}) {
      Algebra A = generic_algebra(r, n);
      Cellular C(A);
      long total = 0;
      for (const auto& lam : C.shapes()) {
        const SpechtModule& S = C.specht(lam);
        CHECK(S.dim() == hook_count(lam));
        total += static_cast<long>(S.dim()) * S.dim();
        CHECK(satisfies_relations(A, S.rep));
        CHECK(S.gram == S.gram.transpose());
        for (const auto& g : S.rep.gens) CHECK(g * S.gram == S.gram * g.transpose());
        CHECK(rank(S.gram) == S.dim());
      }
      CHECK(total == A.dim());
    }
  }

  TEST_CASE("row shape of H_{1,n} is the index representation") {
    Algebra A = generic_algebra(1, 3);
    Cellular C(A);
    const SpechtModule& S = C.specht(mp("[[3]]"));
    CHECK(S.dim() == 1);
    CHECK(S.rep.gens[1].at(0, 0) == A.params().q);
    CHECK(C.specht(mp("[[1,1,1]]")).rep.gens[1].at(0, 0) == Scalar::from_int(A.field(), -1));
  }

  TEST_CASE("cellular product rule exhaustively for r <= 2, n <= 3") {
    for (auto [r, n] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 2}, std::pair{2, 3}}) {
      Algebra A = generic_algebra(r, n);
      Cellular C(A);
      for (const auto& lam : C.shapes()) {
        const SpechtModule& S = C.specht(lam);
        int f = S.dim();
        Echelon above(A.field(), A.dim());
        for (const auto& e : C.ideal_above(lam)) above.insert(e);
        for (int s = 0; s < f; ++s)
          for (int t = 0; t < f; ++t)
            for (int u = 0; u < f; ++u)
              for (int v = 0; v < f; ++v) {
                Element prod = A.mul(C.murphy_element({lam, s, t}), C.murphy_element({lam, u, v}));
                Element expect = elem_scale(C.murphy_element({lam, s, v}), S.gram.at(t, u));
                CHECK(above.contains(elem_sub(prod, expect)));
              }
      }
    }
  }

  TEST_CASE("Jucys-Murphy triangularity exhaustively for r <= 2, n <= 3") {
    for (auto [r, n] : {std::pair{1, 3}, std::pair{2, 2}, std::pair{2, 3}}) {
      for (int p : {1, r}) {
        Algebra A = generic_algebra(r, n);
        Cellular C(A);
        auto Qe = A.params().expanded();
        const Scalar& q = A.params().q;
        for (const auto& lam : C.shapes()) {
          Echelon above(A.field(), A.dim());
          for (const auto& e : C.ideal_above(lam)) above.insert(e);
          const auto& tabs = C.tableaux(lam);
          int f = static_cast<int>(tabs.size());
          for (int s = 0; s < f; ++s)
            for (int t = 0; t < f; ++t) {
              Echelon lower = above;
              for (int v = 0; v < f; ++v)
                if (v != t && tableau_dominates(tabs[v], tabs[t])) lower.insert(C.murphy_element({lam, s, v}));
              Element m = C.murphy_element({lam, s, t});
              for (int k = 1; k <= n; ++k) {
                Node x = tabs[t].pos[k - 1];
                Scalar res = (q.pow(x.col - x.row) * Qe[x.comp]).pow(p);
                Element mk = m;
                for (int e = 0; e < p; ++e) mk = A.rmul_L(mk, k);
                CHECK(lower.contains(elem_sub(mk, elem_scale(m, res))));
              }
            }
        }
      }
    }
  }

  TEST_CASE("Gram rank at q = -1 for r = 1, n = 2") {
    Field f = cyclotomic_field(2);
    Algebra A(make_params(f, 1, 1, 2, Scalar::from_int(f, -1), {Scalar::one(f)}));
    Cellular C(A);
    SimpleQuotient top = C.simple(mp("[[2]]"));
    SimpleQuotient bottom = C.simple(mp("[[1,1]]"));
    // <m, m> = 1 + q for the row shape, so D((2)) vanishes and D((1,1)) survives
    CHECK(top.rank == 0);
    CHECK(top.rep.dim == 0);
    CHECK(bottom.rank == 1);
  }

  TEST_CASE("simple quotients satisfy the relations and have rank bounded by dim") {
    Algebra A = special_algebra(2, 3, 2, 6);
    Cellular C(A);
    int nonzero = 0;
    for (const auto& lam : C.shapes()) {
      SimpleQuotient D = C.simple(lam);
      CHECK(D.rank <= C.specht(lam).dim());
      if (D.rank > 0) {
        ++nonzero;
        CHECK(satisfies_relations(A, D.rep));
      }
      RowEchelon a = rref(C.specht(lam).gram), b = rref(C.specht(lam).gram.transpose());
      CHECK(a.rank() == b.rank());
    }
    CHECK(nonzero > 0);
  }

  TEST_CASE("block classes from content functions") {
    Field f = function_field(2);
    auto gen = blocks(make_params(f, 1, 1, 2, Scalar::x(f), {Scalar::one(f)}));
    CHECK(gen.size() == 2);
    Field k = cyclotomic_field(2);
    auto spec = blocks(make_params(k, 1, 1, 2, Scalar::from_int(k, -1), {Scalar::one(k)}));
    CHECK(spec.size() == 1);
    CHECK(spec[0].size() == 2);
    Params P = make_params(f, 2, 2, 3, Scalar::x(f), {Scalar::one(f)});
    for (const auto& cls : blocks(P))
      for (const auto& lam : cls) {
        int total = 0;
        for (const auto& [v, m] : content_function(lam, P)) total += m;
        CHECK(total == 3);
      }
  }

  TEST_CASE("M^omega_b basis") {
    Field f = function_field(4);
    Algebra A(make_params(f, 4, 2, 3, Scalar::x(f), {Scalar::one(f), Scalar::zeta(f, 1)}));
    Cellular C(A);
    GroupLayout g{2, {1, 1}};
    for (const auto& b : enumerate_compositions(3, 2)) {
      OmegaModule M = m_omega_module(C, b, g);
      long expect = 0;
      for (const auto& lam : C.shapes()) expect += static_cast<long>(std_b(lam, b, g).size()) * hook_count(lam);
      CHECK(static_cast<long>(M.basis.size()) == expect);
      CHECK(M.rank_of_span == expect);
      Echelon span(A.field(), A.dim());
      for (const auto& e : M.basis) CHECK(span.insert(e));
    }
    GroupLayout one{2, {2}};
    OmegaModule full = m_omega_module(C, Composition{{3}}, one);
    CHECK(static_cast<int>(full.basis.size()) == A.dim());
  }
}
