#include "doctest.h"
#include "hecke/decomp/decomp.hpp"
#include "hecke/errors.hpp"

using namespace hecke;

namespace {

using Entries = std::vector<std::vector<long>>;

SimpleLabel label(const char* shape, int l = 1, int i = 0) { return {Multipartition::parse(shape), l, i}; }

DecompositionMatrix make_matrix(std::vector<SimpleLabel> rows, std::vector<SimpleLabel> cols, Entries e) {
  return {std::move(rows), std::move(cols), std::move(e)};
}

void check_all(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    INFO(c.name << " " << c.detail);
    CHECK(c.ok);
  }
}

/// Direct and reduced pipelines agree, are cyclic, and the direct matrix is the frozen one.
void check_instance(const ModularSystem& sys, const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                    const Entries& expected) {
  DirectResult d = simples_and_decomp_hrpn_direct(sys);
  check_all(d.checks);
  REQUIRE(d.matrix.rows.size() == rows.size());
  REQUIRE(d.matrix.cols.size() == cols.size());
  for (size_t i = 0; i < rows.size(); ++i) CHECK(d.matrix.rows[i].to_string() == rows[i]);
  for (size_t j = 0; j < cols.size(); ++j) CHECK(d.matrix.cols[j].to_string() == cols[j]);
  CHECK(d.matrix.entries == expected);
  check_all(verify_cyclicity(d.matrix));

  ReducedResult r = decomp_hrpn_reduced(sys);
  CompareReport rep = compare_matrices(d.matrix, r.matrix);
  INFO(d.matrix.to_string() << "\n" << r.matrix.to_string());
  CHECK(rep.equal);
}

}  // namespace

TEST_SUITE("decomp") {
  TEST_CASE("oracle on H_{1,2} at q = -1") {
    HrnFamily fam(make_system(2, 1, 1, 2, 1, {0}));
    const auto& m = fam.matrix();
    CHECK(m.rows.size() == 2);
    REQUIRE(m.cols.size() == 1);
    CHECK(m.entries == Entries{{1}, {1}});
    CHECK(fam.checks().empty());
  }

  TEST_CASE("CharacterSolver rejects incomplete lists") {
    Field f = cyclotomic_field(1);
    auto v = [&](std::vector<long> xs) {
      std::vector<Scalar> out;
      for (long x : xs) out.push_back(Scalar::from_int(f, x));
      return out;
    };
    CharacterSolver solver({v({1, 1, 0}), v({1, 0, 1})}, {1, 1});
    CHECK(solver.multiplicities(v({3, 2, 1}), 3) == std::vector<long>{2, 1});
    CHECK_THROWS_AS(solver.multiplicities(v({1, 2, 0}), 2), Error);  // not a combination
    CHECK_THROWS_AS(solver.multiplicities(v({1, 1, 0}), 2), Error);  // dimensions do not add up
    CHECK_THROWS_AS(CharacterSolver({v({1, 1, 0}), v({2, 2, 0})}, {1, 2}), Error);
  }

  TEST_CASE("H_{2,3} at q = -1: unitriangular and block compatible") {
    HrnFamily fam(make_system(2, 2, 2, 3, 1, {0}));
    CHECK(fam.shapes().size() == 10);
    CHECK(fam.dshapes().size() == 4);
    CHECK(fam.checks().empty());
    check_all(block_compatibility(fam));
    for (size_t i = 0; i < fam.sigma_S().size(); ++i) CHECK(fam.sigma_S()[fam.sigma_S()[i]] == static_cast<int>(i));
  }

  TEST_CASE("H_{2,2,3} at q = -1") {
    check_instance(make_system(2, 2, 2, 3, 1, {0}),
                   {"[[3],[]]:0/1", "[[2,1],[]]:0/1", "[[2],[1]]:0/1", "[[1,1,1],[]]:0/1", "[[1,1],[1]]:0/1"},
                   {"[[1,1],[1]]:0/1", "[[1],[1,1]]:0/1"}, {{0, 1}, {1, 0}, {1, 1}, {0, 1}, {1, 1}});
  }

  TEST_CASE("H_{2,2,3} at q = zeta_3") {
    check_instance(make_system(6, 2, 2, 3, 2, {0}),
                   {"[[3],[]]:0/1", "[[2,1],[]]:0/1", "[[2],[1]]:0/1", "[[1,1,1],[]]:0/1", "[[1,1],[1]]:0/1"},
                   {"[[2,1],[]]:0/1", "[[2],[1]]:0/1", "[[1,1,1],[]]:0/1", "[[1,1],[1]]:0/1"},
                   {{1, 0, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  }

  TEST_CASE("H_{2,2,2} at q = -1: split rows over a free column orbit") {
    check_instance(make_system(2, 2, 2, 2, 1, {0}),
                   {"[[2],[]]:0/1", "[[1,1],[]]:0/1", "[[1],[1]]:0/2", "[[1],[1]]:1/2"}, {"[[1],[1]]:0/1"},
                   {{1}, {1}, {1}, {1}});
  }

  TEST_CASE("H_{2,2,4} at q = -1: split rows") {
    check_instance(make_system(2, 2, 2, 4, 1, {0}),
                   {"[[4],[]]:0/1", "[[3,1],[]]:0/1", "[[3],[1]]:0/1", "[[2,2],[]]:0/1", "[[2,1,1],[]]:0/1", "[[2,1],[1]]:0/1",
                    "[[2],[2]]:0/2", "[[2],[2]]:1/2", "[[2],[1,1]]:0/1", "[[1,1,1,1],[]]:0/1", "[[1,1,1],[1]]:0/1",
                    "[[1,1],[1,1]]:0/2", "[[1,1],[1,1]]:1/2"},
                   {"[[2,1],[1]]:0/1", "[[1,1],[1,1]]:0/1", "[[1],[1,1,1]]:0/1"},
                   {{0, 0, 1}, {0, 1, 1}, {0, 1, 2}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {0, 1, 1}, {0, 1, 1}, {0, 2, 2},
                    {0, 0, 1}, {0, 1, 2}, {0, 1, 1}, {0, 1, 1}});
  }

  TEST_CASE("H_{2,2,4} at q = zeta_3: tables on the d0 = 2 level") {
    check_instance(make_system(6, 2, 2, 4, 2, {0}),
                   {"[[4],[]]:0/1", "[[3,1],[]]:0/1", "[[3],[1]]:0/1", "[[2,2],[]]:0/1", "[[2,1,1],[]]:0/1", "[[2,1],[1]]:0/1",
                    "[[2],[2]]:0/2", "[[2],[2]]:1/2", "[[2],[1,1]]:0/1", "[[1,1,1,1],[]]:0/1", "[[1,1,1],[1]]:0/1",
                    "[[1,1],[1,1]]:0/2", "[[1,1],[1,1]]:1/2"},
                   {"[[3,1],[]]:0/1", "[[2,2],[]]:0/1", "[[2,1,1],[]]:0/1", "[[2,1],[1]]:0/1", "[[2],[2]]:0/2", "[[2],[2]]:1/2",
                    "[[2],[1,1]]:0/1", "[[1,1,1,1],[]]:0/1", "[[1,1,1],[1]]:0/1", "[[1,1],[1,1]]:0/2", "[[1,1],[1,1]]:1/2"},
                   {{0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
                    {0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0},
                    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0},
                    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}});
  }

  TEST_CASE("H_{2,2,2} at q = zeta_3: split rows and columns") {
    ModularSystem sys = make_system(6, 2, 2, 2, 2, {0});
    DirectResult d = simples_and_decomp_hrpn_direct(sys);
    CHECK(d.matrix.is_identity());
    CHECK(compare_matrices(d.matrix, decomp_hrpn_reduced(sys).matrix).equal);
  }

  TEST_CASE("generic q gives identity matrices") {
    ModularSystem sys = make_system(2, 2, 2, 3, std::nullopt, {0});
    DirectResult d = simples_and_decomp_hrpn_direct(sys);
    check_all(d.checks);
    CHECK(d.matrix.is_identity());
    CHECK(d.matrix.rows.size() == 5);
    ReducedResult r = decomp_hrpn_reduced(sys);
    CHECK(r.matrix.is_identity());
    CHECK(compare_matrices(d.matrix, r.matrix).equal);
  }

  TEST_CASE("compare_matrices matches cyclic index shifts and rejects foreign labels") {
    auto a = make_matrix({label("[[1],[1]]", 2, 0), label("[[1],[1]]", 2, 1)}, {label("[[1],[1]]", 2, 0), label("[[1],[1]]", 2, 1)},
                         {{1, 0}, {0, 1}});
    auto b = a;
    b.entries = {{0, 1}, {1, 0}};
    CHECK(compare_matrices(a, b).equal);
    auto c = a;
    c.entries = {{1, 1}, {0, 1}};
    CHECK_FALSE(compare_matrices(a, c).equal);
    auto d = a;
    d.rows = {label("[[2],[]]", 2, 0), label("[[2],[]]", 2, 1)};
    CHECK_THROWS_AS(compare_matrices(a, d), Error);
  }

  TEST_CASE("verify_cyclicity flags broken orbits") {
    auto m = make_matrix({label("[[1],[1]]", 2, 0), label("[[1],[1]]", 2, 1)}, {label("[[2],[]]")}, {{1}, {0}});
    auto checks = verify_cyclicity(m);
    REQUIRE(checks.size() == 1);
    CHECK_FALSE(checks[0].ok);
  }

  TEST_CASE("canonical orbit representative") {
    auto rep = canonical_shape({Multipartition::parse("[[],[2]]"), Multipartition::parse("[[2],[]]")});
    CHECK(rep == Multipartition::parse("[[2],[]]"));
  }
}
