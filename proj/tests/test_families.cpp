#include <doctest.h>

#include "sdual/families.hpp"
#include "sdual/invariants.hpp"
#include "sdual/fixtures.hpp"
#include "sdual/tables.hpp"

using namespace sdual;

namespace {

FamilyDescriptor fam(const std::string& s) { return FamilyDescriptor::parse(s); }
SparsePoly xyz(const std::string& s) { return parse_poly(s, xyz_vars()); }
SparsePoly XYZW(const std::string& s) { return parse_poly(s, XYZW_vars()); }

}  // namespace

TEST_CASE("type names and descriptor parsing") {
  CHECK(parse_type("IIB#") == FamilyType::IIBs);
  CHECK(parse_type("IIB♯") == FamilyType::IIBs);
  CHECK(parse_type("IV2♯") == FamilyType::IV2s);
  CHECK_THROWS_AS(parse_type("V"), InvalidFamily);
  CHECK(base_type(FamilyType::IV2s) == FamilyType::IV);
  CHECK(base_type(FamilyType::IIBs) == FamilyType::IIB);
  CHECK(is_sharp_type(FamilyType::IIBs));
  CHECK_FALSE(is_virtual_type(FamilyType::I));

  auto a = fam("IIA 2 3 18");
  CHECK(a == fam("IIA(2,3,18)"));
  CHECK(a == fam("IIA 2,3,18"));
  CHECK(a.params == std::array<long long, 3>{2, 3, 18});
  CHECK(a.str() == "IIA (2,3,18)");
  CHECK(FamilyDescriptor::from_json(a.to_json()) == a);
  CHECK_THROWS_AS(fam("IIA 2 3"), InvalidFamily);
  CHECK_THROWS_AS(fam("IIA 2 3 x"), InvalidFamily);
  CHECK_THROWS_AS(FamilyDescriptor::from_json(nlohmann::json{{"type", "I"}}), InvalidFamily);
}

TEST_CASE("validation") {
  CHECK(is_valid(fam("IIA 2 3 18")));
  CHECK(is_valid(fam("IV2# 5 10 20")));
  CHECK(is_valid(fam("I 2 2 3")));
  CHECK_FALSE(is_valid(fam("IIA 2 4 16")));
  CHECK_FALSE(is_valid(fam("IIB 3 2 4")));
  CHECK_FALSE(is_valid(fam("IIB# 4 4 8")));
  CHECK_FALSE(is_valid(fam("IV1 3 6 18")));
  CHECK(is_valid(fam("IV2 3 6 18")));
  CHECK(is_virtual(fam("IIA 2 3 18")));
  CHECK_FALSE(is_virtual(fam("IIA 2 5 10")));
  CHECK(is_valid(fam("IIA 2 5 10")));
  CHECK_FALSE(is_virtual(fam("I 2 2 3")));
}

TEST_CASE("classify invertible polynomials") {
  CHECK(classify_invertible(xyz("x^3+x*y^6+z^2")) == fam("IIA 2 3 18"));
  CHECK(classify_invertible(xyz("x^2+y^2+z^3")) == fam("I 2 2 3"));
  try {
    classify_invertible(xyz("x^2+y^3+z^5"));
    FAIL("expected an error");
  } catch (const ClassifyError& e) {
    CHECK(std::string(e.what()).find("grading index 1") != std::string::npos);
  }
  CHECK_THROWS_AS(classify_invertible(xyz("x^2+y^2+z^2")), ClassifyError);
  CHECK_THROWS_AS(classify_invertible(xyz("x^2*y+x*y^2+z^2")), ClassifyError);
  CHECK_THROWS_AS(classify_invertible(xyz("x^2+y^2")), ClassifyError);
  CHECK(classify_invertible(xyz("z^3+z*y^6+x^2")) == fam("IIA 2 3 18"));
}

TEST_CASE("classification inverts the exponent matrix on the grid") {
  for (const auto& f : family_grid(24)) {
    auto E = exponent_matrix(f);
    auto g = classify_invertible(E);
    if (f.type == FamilyType::I)
      CHECK(g.type == FamilyType::I);
    else
      CHECK(g == f);
  }
}

TEST_CASE("special polynomial F") {
  CHECK(build_special_F(fam("IIA 2 3 18")) == xyz("x^3+x*y^6+z^2-2*x^2*y^3"));
  CHECK(build_special_F(fam("IIB# 4 2 6")) == xyz("-x^2*z^3+y^2+y*z^3-x^2*y"));
  CHECK(build_special_F(fam("I 2 2 2")) == xyz("x^2+y^2+z^2-2*x*y"));
  CHECK_THROWS_AS(build_special_F(fam("IIA 2 3 9")), InvalidFamily);
}

TEST_CASE("extension kernels") {
  for (const auto& f : virtual_grid(30)) {
    auto k = kernel_primitive(extension_matrix(f));
    if (is_sharp_type(f.type))
      CHECK(k == std::vector<long long>{1, 1, -1, -1});
    else
      CHECK(k == std::vector<long long>{1, 1, 0, -2});
  }
}

TEST_CASE("fourth rows of the extensions") {
  CHECK(fourth_row_candidates(fam("IIB 4 2 6")) == std::vector<Exps>{{2, 0, 3}, {2, 1, 0}});
  CHECK(fourth_row_candidates(fam("IIB 6 2 4")) == std::vector<Exps>{{3, 0, 2}, {3, 1, 0}});
  for (const auto& f : family_grid(20)) CHECK(fourth_row_candidates(f) == expected_fourth_rows(f));
}

TEST_CASE("dual pairs") {
  auto a = build_dual_pair(fam("IIA 2 3 18"));
  CHECK(a.f1 == XYZW("X*Y-W^2"));
  CHECK(a.f2 == XYZW("X*W+Y^3+Z^2"));
  CHECK(a.weights == WeightSystem{{10, 6, 9, 8}, {16, 18}});
  CHECK(a.degree_normalised);

  auto b = build_dual_pair(fam("IIB 6 2 4"));
  CHECK(b.f1 == XYZW("X*Y-W^2"));
  CHECK(b.f2 == XYZW("X^3+Y*Z+Z^2"));
  CHECK(b.weights == WeightSystem{{4, 6, 6, 5}, {10, 12}});

  auto c = build_dual_pair(fam("IIB# 4 2 6"));
  CHECK(c.f1 == XYZW("X*Y-Z*W"));
  CHECK(c.f2 == XYZW("X^2+Y*W+Z^3"));
  CHECK(c.kernel == std::vector<long long>{1, 1, -1, -1});

  CHECK(transpose_polynomial({{3, 0, 0}, {1, 6, 0}, {0, 0, 2}, {2, 3, 0}}).str() ==
        "y^6*w^3 + x^3*y*w^2 + z^2");
}

TEST_CASE("dual pairs and weights agree with the closed forms") {
  for (const auto& f : virtual_grid(40)) {
    auto dp = build_dual_pair(f);
    auto pair = closed_dual_pair(f);
    CHECK(dp.f1 == pair.first);
    CHECK(dp.f2 == pair.second);
    if (in_regime(f)) CHECK(dp.weights == closed_pair_weights(f));
  }
}

TEST_CASE("virtual polynomials") {
  CHECK(build_virtual(fam("IIA 2 3 18")) == xyz("-y^4*z+z^2+x^3+x^2*y^3"));
  CHECK(build_virtual(fam("IIB# 4 2 6")) == xyz("-x^3*z+y^2+y*z^3+x^2*y"));
  CHECK_THROWS_AS(build_virtual(fam("I 4 2 6")), NotVirtual);
  CHECK_THROWS_AS(build_virtual(fam("IIA 2 5 10")), NotVirtual);
  for (const auto& f : virtual_grid(40)) {
    auto h = build_virtual(f);
    CHECK(h.size() == 4);
    CHECK(h == closed_virtual(f));
  }
}

TEST_CASE("non-virtual coordinate changes give three monomials") {
  for (const auto& row : change_rows()) {
    if (row.is_virtual) continue;
    int checked = 0;
    for (const auto& f : family_grid(24)) {
      if (type_name(f.type) != row.type) continue;
      ChangeRow r;
      if (!find_change_row(f, &r) || r.is_virtual) continue;
      auto repl = instantiate_poly(row.replacement, f, xyz_vars());
      auto h = transform_special(f, row.var, repl);
      CHECK(h == instantiate_poly(row.h, f, xyz_vars()));
      CHECK(h.size() == 3);
      ++checked;
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("coordinate changes agree with the tabulated ones") {
  for (const auto& f : virtual_grid(30)) {
    auto [var, repl] = coordinate_change(f);
    ChangeRow row;
    REQUIRE(find_change_row(f, &row));
    CHECK(var == row.var);
    CHECK(repl == instantiate_poly(row.replacement, f, xyz_vars()));
  }
}

TEST_CASE("virtual weight systems") {
  auto [a1, a2] = virtual_weight_systems(fam("IIA 2 3 18"));
  CHECK(a1 == WeightSystem{{5, 2, 8}, {16}});
  CHECK(a2 == WeightSystem{{6, 2, 9}, {18}});
  auto [b1, b2] = virtual_weight_systems(fam("IIB 6 2 4"));
  CHECK(b1 == WeightSystem{{2, 5, 2}, {10}});
  CHECK(b2 == WeightSystem{{2, 6, 3}, {12}});
  auto dp = build_dual_pair(fam("IIA 2 3 18"));
  CHECK(dp.weights.degrees == std::vector<long long>{a1.degrees[0], a2.degrees[0]});
}

TEST_CASE("splits and weight systems agree with the closed forms in the regime") {
  for (const auto& f : virtual_grid(40)) {
    if (!in_regime(f)) continue;
    auto vs = virtual_split(f);
    auto closed = closed_split(f);
    CHECK(vs.h1 == closed.first);
    CHECK(vs.h2 == closed.second);
    auto w = closed_weight_systems(f);
    CHECK(vs.w1 == w.first);
    CHECK(vs.w2 == w.second);
    CHECK(vs.w2 == reduced_weights(f));
    CHECK(build_dual_pair(f).weights.degrees ==
          std::vector<long long>{vs.w1.degrees[0], vs.w2.degrees[0]});
  }
}

TEST_CASE("enumeration by Gorenstein parameter") {
  auto one = enumerate_by_gorenstein(1, 24);
  REQUIRE(one.size() == 11);
  std::vector<FamilyDescriptor> listed;
  for (const auto& r : active_fixtures().table("gorenstein_one")) {
    FamilyDescriptor f;
    f.type = parse_type(r.at("type").get<std::string>());
    for (int i = 0; i < 3; ++i) f.params[i] = r.at("params").at(i).get<long long>();
    listed.push_back(f);
  }
  std::sort(listed.begin(), listed.end());
  CHECK(one == listed);
  CHECK(enumerate_by_gorenstein(1, 40) == one);
  CHECK(enumerate_by_gorenstein(0, 60).empty());

  auto neg = enumerate_by_gorenstein(-1, 12);
  std::vector<FamilyDescriptor> expect{fam("IIA 2 3 6")};
  for (long long k = 2; 2 * k <= 12; ++k) {
    expect.push_back(FamilyDescriptor{FamilyType::IIB, {2, 2, 2 * k}, ""});
    expect.push_back(FamilyDescriptor{FamilyType::IIBs, {2, 2, 2 * k}, ""});
  }
  std::sort(expect.begin(), expect.end());
  CHECK(neg == expect);
  CHECK(enumerate_by_gorenstein(-2, 40).empty());
}
