#include <set>

#include "helpers.hpp"
#include "qlab/cfrac/cfrac.hpp"
#include "qlab/ring/series.hpp"
#include "qlab/shapes/shapes.hpp"

using namespace qlab;
using namespace qlab::shapes;
using ring::Var;
using th::P;

TEST_CASE("small areas") {
  auto all = enumerate_shapes(3);
  std::vector<SkewShape> a1, a3;
  for (const auto& s : all) {
    if (s.area() == 1) a1.push_back(s);
    if (s.area() == 3) a3.push_back(s);
  }
  REQUIRE(a1.size() == 1);
  CHECK(a1[0].col() == 1);
  CHECK(a1[0].row() == 1);
  CHECK(all.size() == 7);
  std::set<SkewShape> want{SkewShape::from_partitions({3}, {}), SkewShape::from_partitions({1, 1, 1}, {}),
                           SkewShape::from_partitions({2, 1}, {}), SkewShape::from_partitions({2, 2}, {1})};
  CHECK(std::set<SkewShape>(a3.begin(), a3.end()) == want);
}

TEST_CASE("counts by area are the parallelogram polyomino numbers") {
  std::vector<std::size_t> want{1, 2, 4, 9, 20, 46, 105, 242, 557, 1285};
  auto all = enumerate_shapes(10);
  std::vector<std::size_t> got(10, 0);
  for (const auto& s : all) ++got[static_cast<std::size_t>(s.area() - 1)];
  CHECK(got == want);
}

TEST_CASE("Young figure statistics") {
  auto a = SkewShape::from_partitions({4, 4, 2}, {2, 1});
  CHECK(a.col() == 4);
  CHECK(a.row() == 3);
  CHECK(a.area() == 7);
  CHECK(a.to_string() == "(4,4,2)/(2,1)");
}

TEST_CASE("paths and weights") {
  auto none = enumerate_motzkin2(0, 2);
  REQUIRE(none.size() == 1);
  CHECK(path_weight(none[0], shape_generators()) == MultiPoly(1));
  CHECK(path_weight(parse_path("R"), shape_generators()) == P(Var::q) * P(Var::y));
  CHECK(word_to_string(path_weight_word(figure_path())) == "a2^2 b0 b1 b2 c0 c1^2 c2 d1 d2^2 d3");
  CHECK_THROWS(parse_path("D"));
  CHECK_THROWS(parse_path("UX"));
  CHECK(figure_path().height() == 3);
}

TEST_CASE("phi on small paths and on the figure") {
  auto none = enumerate_motzkin2(0, 1)[0];
  CHECK(phi_boundaries(none) == std::make_pair(std::string("NE"), std::string("EN")));
  CHECK(phi(none) == SkewShape::from_partitions({1}, {}));
  CHECK(phi(parse_path("UD")) == SkewShape::from_partitions({2, 2}, {}));
  CHECK(phi_boundaries(figure_path()) == figure_boundaries());
  auto img = phi(figure_path());
  CHECK(img.to_string() == "(8,7,7,7,7,4,3)/(4,3,3)");
  CHECK(img.area() == 33);
  CHECK(img.maxdiag() == 4);
}

TEST_CASE("gen_poly of shapes") {
  MultiPoly x = P(Var::x), y = P(Var::y), q = P(Var::q);
  MultiPoly two = q * x * y + q * q * x * x * y + q * q * x * y * y;
  CHECK(gen_poly_shapes(2) == two);
  CHECK(gen_poly_shapes(3) == two + q.pow(3) * (x.pow(3) * y + MultiPoly(2) * x * x * y * y + x * y.pow(3)));
}

TEST_CASE("paths of height 1 through area 3 match the m = 1 fraction") {
  auto cf = cfrac::shape_cf_series(1, 4);
  auto gp = by_q_degree(gen_poly_paths(1, 3), 4);
  for (std::size_t a = 0; a < 4; ++a) CHECK(cf[a] == ring::RatFun(gp[a]));
}

TEST_CASE("a wrong height bound is detected") {
  // Height <= 1 paths miss the area-10 terms of the m = 2 fraction.
  auto cf = cfrac::shape_cf_series(2, 11);
  auto gp = by_q_degree(gen_poly_paths(1, 10), 11);
  bool differs = false;
  for (std::size_t a = 0; a < 11; ++a) differs = differs || !(cf[a] == ring::RatFun(gp[a]));
  CHECK(differs);
}

TEST_CASE("property: phi is a bijection with its inverse") {
  std::set<SkewShape> seen;
  for (const auto& p : paths_up_to_area(11, 11)) {
    auto s = phi(p);
    CHECK(s.connected());
    CHECK(s.area() == path_area(p));
    CHECK(s.maxdiag() == p.height() + 1);
    CHECK(phi_inverse(s).steps == p.steps);
    CHECK(seen.insert(s).second);
  }
  auto all = enumerate_shapes(11);
  CHECK(seen == std::set<SkewShape>(all.begin(), all.end()));
}

TEST_CASE("shape suites") {
  th::require_clean(check_shapes_basic(9));
  auto b = bijection_audit(4, 10);
  th::require_clean(b);
  th::require_pass(b, "bijection.figure-shape");
  th::require_clean(check_thm_main1(4, 10));
  th::require_clean(check_thm_bm(9));
}
