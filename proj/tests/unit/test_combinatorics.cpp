#include <map>
#include <set>

#include "doctest.h"
#include "hecke/combinatorics/composition.hpp"
#include "hecke/errors.hpp"

using namespace hecke;

namespace {

Multipartition mp(const std::string& s) { return Multipartition::parse(s); }

}  // namespace

TEST_SUITE("combinatorics") {
  TEST_CASE("multipartition enumeration order and counts") {
    auto a = enumerate_multipartitions(1, 2);
    REQUIRE(a.size() == 2);
    CHECK(a[0] == mp("[[1],[]]"));
    CHECK(a[1] == mp("[[],[1]]"));
    CHECK(enumerate_multipartitions(2, 2).size() == 5);
    auto c = enumerate_multipartitions(3, 1);
    REQUIRE(c.size() == 3);
    CHECK(c[0].to_string() == "[[3]]");
    CHECK(c[1].to_string() == "[[2,1]]");
    CHECK(c[2].to_string() == "[[1,1,1]]");
    CHECK(enumerate_multipartitions(3, 4).size() == 40);
  }

  TEST_CASE("text forms round-trip") {
    for (int r = 1; r <= 3; ++r)
      for (const auto& m : enumerate_multipartitions(3, r)) CHECK(mp(m.to_string()) == m);
    CHECK(mp("[[2,1],[],[1]]").to_string() == "[[2,1],[],[1]]");
    CHECK(Composition::parse("[2,1]").to_string() == "[2,1]");
    CHECK_THROWS_AS(mp("[[2,,1]]"), Error);
    CHECK_THROWS_AS(mp("[[1,2]]"), Error);
    CHECK_THROWS_AS(Composition::parse("[2,"), Error);
  }

  TEST_CASE("dominance examples") {
    CHECK(dominance_ge(mp("[[2],[]]"), mp("[[1],[1]]")));
    CHECK_FALSE(dominance_ge(mp("[[1],[1]]"), mp("[[2],[]]")));
    CHECK(dominance_ge(mp("[[1],[1]]"), mp("[[1],[1]]")));
    CHECK_THROWS_AS(dominance_ge(mp("[[2]]"), mp("[[1],[1]]")), Error);
  }

  TEST_CASE("dominance is a partial order refined by the enumeration") {
    for (int r = 1; r <= 4; ++r)
      for (int n = 0; n <= 3; ++n) {
        auto all = enumerate_multipartitions(n, r);
        for (size_t i = 0; i < all.size(); ++i) {
          CHECK(dominance_ge(all[i], all[i]));
          for (size_t j = 0; j < all.size(); ++j) {
            if (i != j && dominance_ge(all[i], all[j])) {
              CHECK_FALSE(dominance_ge(all[j], all[i]));
              CHECK(i < j);
            }
            for (size_t k = 0; k < all.size() && n <= 2; ++k)
              if (dominance_ge(all[i], all[j]) && dominance_ge(all[j], all[k])) CHECK(dominance_ge(all[i], all[k]));
          }
        }
      }
  }

  TEST_CASE("standard tableaux counts and d(t)") {
    CHECK(enumerate_standard_tableaux(mp("[[2,1]]")).size() == 2);
    CHECK(enumerate_standard_tableaux(mp("[[1],[1]]")).size() == 2);
    CHECK(enumerate_standard_tableaux(mp("[[4]]")).size() == 1);
    for (int r = 1; r <= 4; ++r)
      for (int n = 1; n <= 4; ++n) {
        long total = 0;
        for (const auto& lam : enumerate_multipartitions(n, r)) {
          auto ts = enumerate_standard_tableaux(lam);
          CHECK(static_cast<long>(ts.size()) == hook_count(lam));
          total += static_cast<long>(ts.size() * ts.size());
          Tableau top = superstandard(lam);
          CHECK(ts.front() == top);
          std::set<std::vector<int>> seen;
          for (const auto& t : ts) {
            CHECK(t.is_standard());
            Perm d = tableau_perm(t);
            CHECK(top.act(d) == t);
            seen.insert(d.images());
          }
          CHECK(seen.size() == ts.size());
        }
        long rn = 1;
        for (int k = 0; k < n; ++k) rn *= r;
        CHECK(total == rn * factorial(n));
      }
  }

  TEST_CASE("tableau statistics") {
    Tableau t = superstandard(mp("[[2,1]]"));
    CHECK(t.comp_of(3) == 0);
    Tableau u = superstandard(mp("[[],[1],[1]]"));
    CHECK(u.comp_of(1) == 1);
    CHECK(u.shape_k(1) == mp("[[],[1],[]]"));
    for (const auto& s : enumerate_standard_tableaux(mp("[[2],[1]]"))) CHECK(s.shape_k(3) == s.shape);
  }

  TEST_CASE("permutations and reduced words") {
    for (int n = 1; n <= 4; ++n)
      for (const Perm& w : all_perms(n)) {
        auto word = w.reduced_word();
        CHECK(static_cast<int>(word.size()) == w.length());
        CHECK(Perm::from_word(n, word) == w);
        CHECK(Perm::unrank(n, w.rank()) == w);
        for (int i = 1; i < n; ++i) {
          CHECK(w.right_ascent(i) == ((w * Perm::simple(n, i)).length() > w.length()));
          CHECK(w.left_ascent(i) == ((Perm::simple(n, i) * w).length() > w.length()));
        }
      }
  }

  TEST_CASE("w_ab matches the two-line display") {
    Perm w = w_ab(3, 2, 1);
    CHECK(w(0) == 1);
    CHECK(w(1) == 2);
    CHECK(w(2) == 0);
    CHECK(w_ab(4, 3, 0).is_identity());
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; a + b <= 4; ++b) {
        Perm v = w_ab(4, a, b);
        for (int i = 0; i < a; ++i) CHECK(v(i) == b + i);
        for (int j = 0; j < b; ++j) CHECK(v(a + j) == j);
        CHECK(v.length() == a * b);
      }
    CHECK(w_b(Composition{{1, 2}}) == w_ab(3, 2, 1));
  }

  TEST_CASE("coset representatives") {
    CHECK(coset_reps(Composition{{3}}).size() == 1);
    auto c2 = coset_reps(Composition{{1, 1}});
    CHECK(c2.size() == 2);
    CHECK(coset_reps(Composition{{1, 2}}).size() == 3);
  }

  TEST_CASE("Std_b sets and the b-standard decomposition") {
    GroupLayout g{2, {1, 1}};
    Multipartition lam = mp("[[2,1],[],[],[]]");
    CHECK(std_b_plus(lam, Composition{{3, 0}}, g).size() == 2);
    CHECK(std_b_plus(lam, Composition{{0, 3}}, g).empty());
    GroupLayout one{2, {2}};
    for (const auto& l : enumerate_multipartitions(3, 4))
      CHECK(std_b(l, Composition{{3}}, one).size() == enumerate_standard_tableaux(l).size());
    for (int r : {1, 2, 4}) {
      std::vector<GroupLayout> layouts;
      if (r == 1) layouts = {GroupLayout{1, {1}}};
      if (r == 2) layouts = {GroupLayout{2, {1}}, GroupLayout{1, {1, 1}}};
      if (r == 4) layouts = {GroupLayout{2, {1, 1}}, GroupLayout{4, {1}}, GroupLayout{1, {1, 1, 2}}};
      for (const auto& gl : layouts)
        for (const auto& b : enumerate_compositions(3, gl.kappa()))
          for (const auto& l : enumerate_multipartitions(3, r)) {
            auto plus = std_b_plus(l, b, gl);
            auto sb = std_b(l, b, gl);
            CHECK(plus.empty() != in_lambda_b(l, b, gl));
            bool prefix_ok = true;
            for (int a = 1; a <= gl.kappa(); ++a) {
              int s = 0;
              for (int c = 0; c < gl.end_comp(a - 1); ++c) s += l.comp_size(c);
              if (s < b.sum(1, a)) prefix_ok = false;
            }
            CHECK(sb.empty() != prefix_ok);
            for (const auto& t : plus) CHECK(std::find(sb.begin(), sb.end(), t) != sb.end());
            if (!in_lambda_b(l, b, gl)) continue;
            std::multiset<std::string> got;
            for (const Perm& d : coset_reps(b))
              for (const auto& t : plus) got.insert(t.act(d).to_string());
            std::multiset<std::string> want;
            for (const auto& t : enumerate_standard_tableaux(l)) want.insert(t.to_string());
            CHECK(got == want);
          }
    }
  }

  TEST_CASE("split_lambda and omega_b") {
    GroupLayout g{2, {1, 1}};
    auto parts = split_lambda(mp("[[2],[],[1],[]]"), Composition{{2, 1}}, g);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == mp("[[2],[]]"));
    CHECK(parts[1] == mp("[[1],[]]"));
    CHECK(join_lambda(parts) == mp("[[2],[],[1],[]]"));
    CHECK(omega_b(Composition{{2, 1}}, g) == mp("[[],[1,1],[],[1]]"));
    GroupLayout one{2, {1}};
    CHECK(split_lambda(mp("[[1],[2]]"), Composition{{3}}, one)[0] == mp("[[1],[2]]"));
    try {
      split_lambda(mp("[[3],[],[],[]]"), Composition{{2, 1}}, g);
      FAIL("expected NotInLambdaB");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotInLambdaB);
    }
  }
}
