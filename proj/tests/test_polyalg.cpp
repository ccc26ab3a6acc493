#include <doctest.h>

#include <random>

#include "sdual/newton.hpp"
#include "sdual/poly.hpp"

using namespace sdual;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

SparsePoly P(const std::string& s) { return parse_poly(s, xyz); }

SparsePoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(0, 3), c(-4, 4), n(1, 4);
  SparsePoly p(xyz);
  int terms = n(rng);
  for (int i = 0; i < terms; ++i) {
    int k = c(rng);
    if (k == 0) k = 1;
    p += SparsePoly::monomial(xyz, {e(rng), e(rng), e(rng)}, mpq_class(k, n(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("parse simple sums") {
  auto p = P("x^2+y^3+z^18");
  CHECK(p.size() == 3);
  CHECK(p.coeff({2, 0, 0}) == 1);
  CHECK(p.coeff({0, 0, 18}) == 1);
}

TEST_CASE("parse special polynomial with coefficients") {
  auto p = P("x^3+x*y^6+z^2-2*x^2*y^3");
  CHECK(p.size() == 4);
  CHECK(p.coeff({2, 3, 0}) == -2);
  CHECK(p.coeff({1, 6, 0}) == 1);
}

TEST_CASE("cancellation yields the zero polynomial") {
  auto p = P("x - x");
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  CHECK(P("3/6*x*x + x^2").coeff({2, 0, 0}) == mpq_class(3, 2));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(P("x^"), ParseError);
  CHECK_THROWS_AS(P("q + x"), ParseError);
  CHECK_THROWS_AS(P("x^-2"), ParseError);
  CHECK_THROWS_AS(P("x + + y"), ParseError);
  try {
    P("x + 2*t");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("print and parse round trip") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto p = random_poly(rng);
    CHECK(P(p.str()) == p);
  }
  CHECK(P("-y^4*z+z^2+x^3+x^2*y^3").str() == "x^2*y^3 - y^4*z + x^3 + z^2");
}

TEST_CASE("ring laws on random inputs") {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("substitution examples") {
  auto p = P("x^2*y + z");
  CHECK(substitute(p, "x", P("x")) == p);
  CHECK(substitute(P("y^2"), "y", P("y + x^3")) == P("y^2 + 2*x^3*y + x^6"));
  auto q = P("z^2 + x*(x - y^3)^2 - x*y*z");
  auto r = substitute(q, "x", P("x + y^3"));
  CHECK(r == P("x^3 + x^2*y^3 + z^2 - y^4*z - x*y*z"));
  CHECK_THROWS_AS(substitute(p, "t", P("x")), std::invalid_argument);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    auto a = random_poly(rng), b = random_poly(rng), r = random_poly(rng);
    CHECK(substitute(a * b, "y", r) == substitute(a, "y", r) * substitute(b, "y", r));
  }
}

TEST_CASE("weighted homogeneity and derivatives") {
  auto h = P("-y^4*z+z^2+x^2*y^3");
  long long d = 0;
  CHECK(h.is_weighted_homogeneous({5, 2, 8}, &d));
  CHECK(d == 16);
  CHECK_FALSE(P("x + y^2").is_weighted_homogeneous({1, 1, 1}, nullptr));
  CHECK(h.derivative(1) == P("-4*y^3*z + 3*x^2*y^2"));
}

TEST_CASE("json export") {
  auto j = P("x - 1/2*y^2").to_json();
  CHECK(j["variables"].size() == 3);
  CHECK(j["terms"].size() == 2);
  CHECK(j["terms"][0]["den"] == "2");
}

TEST_CASE("newton polygon of the unit simplex") {
  auto np = newton_polygon_at_infinity(P("x+y+z"));
  CHECK(np.dimension == 3);
  auto top = np.faces_avoiding_origin();
  REQUIRE(top.size() == 1);
  CHECK(top[0].normal == std::vector<long long>{1, 1, 1});
  CHECK(top[0].value == 1);
}

TEST_CASE("newton polygon of a single monomial is a segment") {
  auto np = newton_polygon_at_infinity(P("x^2"));
  CHECK(np.dimension == 1);
  auto top = np.faces_avoiding_origin();
  REQUIRE(top.size() == 1);
  CHECK(top[0].points.size() == 1);
  CHECK(top[0].points[0] == Exps{2, 0, 0});
}

TEST_CASE("newton polygon facets are primitive and supporting") {
  auto h = P("x^3+x^2*y^3+z^2-y^4*z");
  auto np = newton_polygon_at_infinity(h);
  CHECK(np.faces_avoiding_origin().size() == 2);
  for (const auto& f : np.facets) {
    long long g = 0;
    for (auto v : f.normal) g = std::gcd(g, std::llabs(v));
    CHECK(g == 1);
    for (const auto& q : np.points) {
      long long s = 0;
      for (int i = 0; i < 3; ++i) s += f.normal[i] * q[i];
      bool on = std::find(f.points.begin(), f.points.end(), q) != f.points.end();
      if (on)
        CHECK(s == f.value);
      else
        CHECK(s < f.value);
    }
  }
  CHECK_THROWS(newton_polygon_at_infinity(SparsePoly(xyz)));
}

TEST_CASE("top face split") {
  auto h = P("x^3+x^2*y^3+z^2-y^4*z");
  auto [h1, h2] = top_faces_split(h, WeightSystem{{6, 2, 9}, {18}});
  CHECK(h1 == P("-y^4*z+z^2+x^2*y^3"));
  CHECK(h2 == P("z^2+x^3+x^2*y^3"));

  auto w = P("-x^4*z+y^2+y*z^2+x^3*z^2");
  auto [w1, w2] = top_faces_split(w, WeightSystem{{2, 6, 3}, {12}});
  CHECK(w1 == P("-x^4*z+y^2+x^3*z^2"));
  CHECK(w2 == P("y^2+y*z^2+x^3*z^2"));

  CHECK_THROWS_AS(top_faces_split(P("x+y+z")), SplitError);
}
