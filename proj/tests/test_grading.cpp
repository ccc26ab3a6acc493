#include <doctest.h>

#include <random>

#include "sdual/grading.hpp"

using namespace sdual;

namespace {

const IntMatrix kIIA{{3, 0, 0}, {1, 6, 0}, {0, 0, 2}};
const IntMatrix kFermat2{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};

}  // namespace

TEST_CASE("canonical weights") {
  CHECK(canonical_weights(kIIA) == WeightSystem{{12, 4, 18}, {36}});
  CHECK(canonical_weights(kFermat2) == WeightSystem{{4, 4, 4}, {8}});
  CHECK(canonical_weights({{2, 0, 0}, {0, 3, 0}, {0, 0, 7}}) == WeightSystem{{21, 14, 6}, {42}});
  CHECK_THROWS_AS(canonical_weights({{1, 1, 0}, {1, 1, 0}, {0, 0, 2}}), SingularMatrix);
}

TEST_CASE("negative determinant is normalised") {
  IntMatrix E{{0, 6, 1}, {3, 0, 0}, {0, 0, 2}};
  auto w = canonical_weights(E);
  CHECK(w.degrees[0] == 36);
  for (auto v : w.weights) CHECK(v > 0);
}

TEST_CASE("reduce weights") {
  auto [r, c] = reduce_weights(WeightSystem{{12, 4, 18}, {36}});
  CHECK(r == WeightSystem{{6, 2, 9}, {18}});
  CHECK(c == 2);
  auto [r2, c2] = reduce_weights(WeightSystem{{1, 1, 1}, {3}});
  CHECK(r2 == WeightSystem{{1, 1, 1}, {3}});
  CHECK(c2 == 1);
  auto [r3, c3] = reduce_weights(WeightSystem{{4, 4, 4}, {8}});
  CHECK(r3 == WeightSystem{{1, 1, 1}, {2}});
  CHECK(c3 == 4);
  CHECK(r3.str() == "(1,1,1;2)");
}

TEST_CASE("gorenstein parameter") {
  CHECK(gorenstein_parameter(WeightSystem{{6, 2, 9}, {18}}) == 1);
  CHECK(gorenstein_parameter(WeightSystem{{1, 1, 1}, {3}}) == 0);
  // IIB (2,2,2k) has reduced weights (k,k,1;2k)
  for (long long k = 2; k <= 6; ++k) {
    IntMatrix E{{2, 0, 0}, {0, 2, 0}, {0, 1, k}};
    auto r = reduce_weights(canonical_weights(E)).first;
    CHECK(gorenstein_parameter(r) < 0);
  }
  CHECK_THROWS(gorenstein_parameter(WeightSystem{{1, 1}, {2}}));
}

TEST_CASE("transpose") {
  CHECK(transpose(kIIA) == IntMatrix{{3, 1, 0}, {0, 6, 0}, {0, 0, 2}});
  CHECK(transpose(transpose(kIIA)) == kIIA);
  CHECK(transpose(kFermat2) == kFermat2);
}

TEST_CASE("smith normal form") {
  auto check = [](const IntMatrix& m, const std::vector<long long>& diag) {
    auto s = smith_normal_form(m);
    CHECK(multiply(multiply(s.U, m), s.V) == s.D);
    CHECK(std::llabs(det(s.U)) == 1);
    CHECK(std::llabs(det(s.V)) == 1);
    for (std::size_t i = 0; i < diag.size(); ++i) CHECK(s.D[i][i] == diag[i]);
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
      if (s.D[i][i] != 0) CHECK(s.D[i + 1][i + 1] % s.D[i][i] == 0);
  };
  check(identity(3), {1, 1, 1});
  check({{2, 0}, {0, 6}}, {2, 6});
  check({{2, 4}, {6, 8}}, {2, 4});
  check({{2, 1}, {0, 3}}, {1, 6});
  check({{0, 0}, {0, 5}}, {5, 0});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(-6, 6);
  for (int t = 0; t < 200; ++t) {
    IntMatrix m(3, std::vector<long long>(3));
    for (auto& row : m)
      for (auto& v : row) v = e(rng);
    auto s = smith_normal_form(m);
    CHECK(multiply(multiply(s.U, m), s.V) == s.D);
    long long prod = 1;
    for (int i = 0; i < 3; ++i) prod *= s.D[i][i];
    CHECK(prod == std::llabs(det(m)));
  }
}

TEST_CASE("symmetry groups") {
  CHECK(symmetry_group(kFermat2).invariant_factors == std::vector<long long>{2, 2, 2});
  CHECK(symmetry_group(kIIA).order() == 36);
  auto chain = symmetry_group({{2, 1}, {0, 3}});
  CHECK(chain.invariant_factors == std::vector<long long>{6});
  CHECK(chain.order() == 6);
  CHECK_THROWS_AS(symmetry_group({{1, 2}, {2, 4}}), SingularMatrix);
}

TEST_CASE("grading index") {
  CHECK(grading_index(kIIA) == 2);
  CHECK(grading_index(kFermat2) == 4);
  CHECK(grading_index({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 1);
  CHECK(grading_index_bruteforce(kIIA) == 2);
  CHECK(grading_index_bruteforce(kFermat2) == 4);
}

TEST_CASE("grading index agrees with c_f and brute force on random invertible shapes") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(2, 7);
  for (int t = 0; t < 60; ++t) {
    int a = e(rng), b = e(rng), c = e(rng);
    std::vector<IntMatrix> shapes{
        {{a, 0, 0}, {0, b, 0}, {0, 0, c}},
        {{a, 0, 0}, {1, b, 0}, {0, 0, c}},
        {{a, 0, 0}, {1, b, 0}, {0, 1, c}},
        {{a, 1, 0}, {1, b, 0}, {0, 0, c}},
        {{a, 1, 0}, {0, b, 1}, {1, 0, c}},
    };
    for (const auto& E : shapes) {
      auto cf = reduce_weights(canonical_weights(E)).second;
      CHECK(grading_index(E) == cf);
      CHECK(symmetry_group(E).order() == std::llabs(det(E)));
      if (std::llabs(det(E)) <= 120) CHECK(grading_index_bruteforce(E) == cf);
      CHECK(dual_sl_count(E) == cf);
    }
  }
}

TEST_CASE("dual group inside SL") {
  CHECK(dual_sl_count(kIIA) == 2);
  CHECK(dual_sl_count(kFermat2) == 4);
  CHECK(dual_sl_count(kIIA, 10) == -1);
}

TEST_CASE("kernel of the transposed extension") {
  CHECK(kernel_primitive({{3, 0, 0}, {1, 6, 0}, {0, 0, 2}, {2, 3, 0}}) ==
        std::vector<long long>{1, 1, 0, -2});
  // IIB# (4,2,6)
  CHECK(kernel_primitive({{2, 0, 3}, {0, 2, 0}, {0, 1, 3}, {2, 1, 0}}) ==
        std::vector<long long>{1, 1, -1, -1});
  CHECK(kernel_primitive({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}) ==
        std::vector<long long>{1, 1, 1, -1});
  CHECK_THROWS(kernel_primitive({{1, 0, 0}, {2, 0, 0}, {0, 0, 1}, {1, 0, 1}}));
}

TEST_CASE("json export") {
  auto j = WeightSystem{{6, 2, 9}, {18}}.to_json();
  CHECK(j["weights"] == nlohmann::json({6, 2, 9}));
  CHECK(j["degrees"] == nlohmann::json({18}));
  auto g = symmetry_group(kFermat2).to_json();
  CHECK(g["order"] == 8);
}
