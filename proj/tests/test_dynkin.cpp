#include <doctest.h>

#include <random>

#include "sdual/dynkin.hpp"
#include "sdual/families.hpp"
#include "sdual/fixtures.hpp"
#include "sdual/series.hpp"

using namespace sdual;

namespace {

bool adjacent(const IntersectionMatrix& m, std::size_t i, std::size_t j) { return m.at(i, j) != 0; }

int edge_count(const IntersectionMatrix& m) {
  int n = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) n += adjacent(m, i, j);
  return n;
}

}  // namespace

TEST_CASE("seed diagrams") {
  auto a = seed_diagram('a');
  CHECK(a.entries == IntMatrix{{-2, 1}, {1, -2}});
  auto b = seed_diagram('b');
  CHECK(b.size() == 3);
  CHECK(adjacent(b, 0, 2));
  CHECK(adjacent(b, 2, 1));
  CHECK_FALSE(adjacent(b, 0, 1));
  auto c = seed_diagram('c');
  CHECK(c.size() == 4);
  CHECK(edge_count(c) == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(c.at(i, 3) == 1);
  CHECK_THROWS_AS(seed_diagram('d'), DynkinError);
}

TEST_CASE("Gabrielov expansion") {
  auto a = seed_diagram('a');
  CHECK(gabrielov_expand(a, {1, 1}) == a);
  auto j = gabrielov_expand(a, {8, 7});
  CHECK(j.size() == 15);
  CHECK_NOTHROW(j.check());
  CHECK(j.labels[0] == "e1^1");
  CHECK(j.labels[1] == "e2^1");
  CHECK(j.labels[14] == "e1^8");
  // <e1^1, e1^2> = 1, <e2^1, e1^2> = -<e2, e1>, <e1^1, e2^2> = 0.
  CHECK(j.at(0, 2) == 1);
  CHECK(j.at(1, 2) == -1);
  CHECK(j.at(0, 3) == 0);
  auto u = gabrielov_expand(seed_diagram('c'), {3, 3, 4, 3});
  CHECK(u.size() == 13);
  CHECK_THROWS_AS(gabrielov_expand(a, {1, 2, 3}), DynkinError);
}

TEST_CASE("Gabrielov-shaped graphs") {
  auto s = spqr_graph({2, 3, 10});
  CHECK(s.size() == 15);
  CHECK_NOTHROW(s.check());
  const std::size_t hub = 13, tip = 14;
  CHECK(s.at(0, hub) == -2);
  CHECK(s.at(hub, tip) == 1);
  CHECK(edge_count(s) == 0 + 1 + 8 + 6 + 1 + 1);
  CHECK(spqr_graph({1, 1, 1}).size() == 3);
  CHECK(edge_count(spqr_graph({1, 1, 1})) == 2);
  CHECK(spqr_graph({4, 4, 5}).size() == 13);

  auto p = pi_graph({2, 2, 2, 3});
  CHECK(p.size() == 10);
  CHECK_NOTHROW(p.check());
  auto hubs = pi_graph({1, 1, 1, 1});
  CHECK(hubs.size() == 5);
  CHECK(edge_count(hubs) == 8);
  CHECK(hubs.at(2, 0) == -1);
  CHECK(hubs.at(0, 1) == -2);
  CHECK(hubs.at(4, 3) == -2);
  CHECK(pi_graph({2, 3, 3, 3}).size() == 12);
  for (long long a = 1; a <= 4; ++a)
    for (long long b = 1; b <= 4; ++b) CHECK(pi_graph({a, b, 2, 3}).size() == std::size_t(a + b + 6));
}

TEST_CASE("Coxeter invariants") {
  IntersectionMatrix a1{{"e"}, {{-2}}};
  CHECK(coxeter_charpoly(a1) == std::vector<long long>{1, 1});
  CHECK(coxeter_charpoly(seed_diagram('a')) == std::vector<long long>{1, 1, 1});
  CHECK(integer_poly_str({1, 1, 1}) == "t^2 + t + 1");
  CHECK(integer_poly_str({1, 0, -2, 1}) == "t^3 - 2*t + 1");
  CHECK(gram_determinant(seed_diagram('a')) == 3);
  CHECK(gram_rank(seed_diagram('a')) == 2);
  IntersectionMatrix affine{{"a", "b"}, {{-2, 2}, {2, -2}}};
  CHECK(gram_rank(affine) == 1);
  CHECK(gram_determinant(affine) == 0);
  IntersectionMatrix bad{{"a", "b"}, {{-2, 1}, {0, -2}}};
  CHECK_THROWS_AS(coxeter_charpoly(bad), DynkinError);
}

TEST_CASE("braid moves") {
  auto a = seed_diagram('a');
  auto m = braid_move(a, 1);
  CHECK(m.at(0, 1) == -1);
  CHECK(coxeter_charpoly(m) == std::vector<long long>{1, 1, 1});
  CHECK(braid_move(m, 1, true) == a);
  CHECK_THROWS_AS(braid_move(a, 2), DynkinError);
  CHECK_THROWS_AS(braid_move(a, 0), DynkinError);

  std::mt19937 rng(7);
  IntersectionMatrix r;
  r.labels.assign(6, "v");
  r.entries.assign(6, std::vector<long long>(6, 0));
  for (int i = 0; i < 6; ++i) {
    r.entries[i][i] = -2;
    for (int j = 0; j < i; ++j) r.entries[i][j] = r.entries[j][i] = static_cast<long long>(rng() % 3) - 1;
  }
  auto inv = diagram_invariants(r);
  for (std::size_t i = 1; i < 6; ++i) {
    auto moved = braid_move(r, i);
    CHECK(diagram_invariants(moved) == inv);
    CHECK(braid_move(moved, i, true) == r);
  }
}

TEST_CASE("sign equivalence and braid search") {
  auto a = seed_diagram('b');
  CHECK(equal_up_to_signs(a, negate_basis_vector(a, 2)));
  CHECK_FALSE(equal_up_to_signs(a, seed_diagram('a')));
  auto target = braid_move(braid_move(a, 1), 2);
  auto res = braid_search(a, target, 4);
  CHECK(res.found);
  CHECK(res.moves.size() <= 2);
  auto same = braid_search(a, a, 3);
  CHECK(same.found);
  CHECK(same.moves.empty());
  IntersectionMatrix a1a1{{"x", "y", "z"}, {{-2, 0, 0}, {0, -2, 0}, {0, 0, -2}}};
  CHECK_FALSE(braid_search(a1a1, a, 3).found);
}

TEST_CASE("diagram rows") {
  auto specs = diagram_specs();
  REQUIRE(specs.size() == 8);
  CHECK(frozen_edge_convention() == default_edge_convention());
  std::mt19937 rng(2024);
  for (const auto& s : specs) {
    auto cmp = compare_diagrams(s, frozen_edge_convention());
    CHECK_MESSAGE(cmp.counts_match, s.name);
    CHECK_MESSAGE(cmp.pass(), s.name);
    CHECK(cmp.expanded.size() == static_cast<std::size_t>(s.mu));
    for (int seq = 0; seq < 100; ++seq) {
      auto m = cmp.expanded;
      for (int step = 0; step < 8; ++step) {
        std::size_t i = 1 + rng() % (m.size() - 1);
        m = braid_move(m, i, rng() % 2);
      }
      CHECK(diagram_invariants(m) == cmp.expanded_inv);
    }
  }
  CHECK(diagram_spec("J_{3,-1}").counts() == std::vector<long long>{8, 7});
  CHECK(diagram_spec("J_{3,-1}").gabrielov() == std::array<long long, 3>{2, 3, 10});
  CHECK_THROWS_AS(diagram_spec("X_{9}"), DynkinError);
}

TEST_CASE("Coxeter polynomial matches the zeta function at infinity") {
  for (const auto& row : active_fixtures().table("bimodal_virtual")) {
    FamilyDescriptor f;
    f.type = parse_type(row.at("type").get<std::string>());
    for (int i = 0; i < 3; ++i) f.params[i] = row.at("params").at(i).get<long long>();
    const auto& spec = diagram_spec(row.at("name").get<std::string>());
    auto cmp = compare_diagrams(spec, frozen_edge_convention());
    auto z = zeta_infinity(build_virtual(f), true);
    CHECK_MESSAGE(z.polynomial() == cmp.expanded_inv.charpoly, spec.name);
    CHECK(z.degree() == spec.mu);
  }
}

TEST_CASE("exports") {
  auto s = spqr_graph({1, 1, 1});
  auto j = s.to_json();
  CHECK(j["size"] == 3);
  CHECK(j["edges"].size() == 2);
  auto dot = pi_graph({1, 1, 1, 1}).to_dot("Pi");
  CHECK(dot.rfind("graph \"Pi\" {", 0) == 0);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("black:invis:black") != std::string::npos);
  CHECK(dot.back() == '\n');
}
