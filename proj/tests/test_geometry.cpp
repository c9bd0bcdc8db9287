#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cliffgeom/axioms.hpp"
#include "cliffgeom/desargues.hpp"
#include "cliffgeom/geometry.hpp"
#include "cliffgeom/isomorphism.hpp"
#include "cliffgeom/lie_closure.hpp"

using namespace cliffgeom;

namespace {

// The Desargues configuration living in Cl3 (x) Cl3 = Cl6: center e1e2,
// triangles (e1 x e1, e1 x e2, e1 x e3) and (e2 x e1, e2 x e2, e2 x e3),
// axis through the I x (pair) points.
const std::vector<std::uint64_t> kCl6Masks = {3, 9, 10, 17, 18, 24, 33, 34, 40, 48};

Geometry cl6_configuration() {
  Geometry g;
  g.name = "cl3-cl3-desargues";
  g.m = 6;
  for (auto mask : kCl6Masks) g.points.emplace_back(mask);
  auto idx = [&](std::uint64_t mask) {
    return static_cast<std::uint32_t>(
        std::find(kCl6Masks.begin(), kCl6Masks.end(), mask) - kCl6Masks.begin());
  };
  const std::uint64_t D = 3, A = 9, B = 17, C = 33, Ap = 10, Bp = 18, Cp = 34, F = 24, G = 48,
                      H = 40;
  for (auto tri : {std::array<std::uint64_t, 3>{D, A, Ap}, {D, B, Bp}, {D, C, Cp}, {A, B, F},
                   {Ap, Bp, F}, {B, C, G}, {Bp, Cp, G}, {A, C, H}, {Ap, Cp, H}, {F, G, H}})
    g.add_line({idx(tri[0]), idx(tri[1]), idx(tri[2])});
  return g;
}

Geometry drop_line(const Geometry& g, std::size_t dropped) {
  Geometry out;
  out.name = g.name;
  out.m = g.m;
  out.points = g.points;
  for (std::size_t li = 0; li < g.line_count(); ++li) {
    if (li == dropped) continue;
    const auto line = g.line(li);
    out.add_line({line.begin(), line.end()});
  }
  return out;
}

}  // namespace

TEST_CASE("build_pg point and line counts") {
  const Geometry fano = build_pg(3);
  CHECK(fano.point_count() == 7);
  CHECK(fano.line_count() == 7);

  const Geometry trivial = build_pg(1);
  CHECK(trivial.point_count() == 1);
  CHECK(trivial.line_count() == 0);

  const Geometry pg3 = build_pg(4);
  CHECK(pg3.point_count() == 15);
  CHECK(pg3.line_count() == 35);
}

TEST_CASE("enumerated counts match the closed formulas up to the line guard") {
  for (int m = 2; m <= 12; ++m) {
    const PgCounts counts = pg_counts(m);
    REQUIRE(counts.enumerated);
    REQUIRE(counts.points == (std::uint64_t{1} << m) - 1);
    REQUIRE(counts.lines == pg_line_count(m));
    REQUIRE(counts.lines_per_point.has_value());
    // Uniform incidence degree 2^{m-1} - 1.
    REQUIRE(*counts.lines_per_point == (std::uint64_t{1} << (m - 1)) - 1);
  }
  const PgCounts big = pg_counts(16);
  CHECK_FALSE(big.enumerated);
  CHECK(big.points == 65535);
  CHECK(big.lines == pg_line_count(16));
}

TEST_CASE("build_pg honors its guards") {
  CHECK_THROWS_AS(build_pg(17), GuardExceeded);
  CHECK_THROWS_AS(build_pg(13), GuardExceeded);
  CHECK_NOTHROW(build_pg(13, /*with_lines=*/false));
  CHECK_THROWS_AS(build_pg(0), DimensionMismatch);
}

TEST_CASE("line_through on the stated examples") {
  const Line l1 = line_through(GF2Vector{0b001, 3}, GF2Vector{0b010, 3});
  CHECK(l1.pts[0].bits == 0b001);
  CHECK(l1.pts[1].bits == 0b010);
  CHECK(l1.pts[2].bits == 0b011);

  const Line l2 = line_through(GF2Vector{0b011, 3}, GF2Vector{0b101, 3});
  CHECK(l2.pts[0].bits == 0b011);
  CHECK(l2.pts[1].bits == 0b101);
  CHECK(l2.pts[2].bits == 0b110);

  CHECK_THROWS_AS(line_through(GF2Vector{0b001, 3}, GF2Vector{0b001, 3}),
                  DegenerateConfiguration);
}

TEST_CASE("projective axioms hold on generated spaces") {
  for (int m = 2; m <= 5; ++m) {
    const AxiomReport report = check_axioms(build_pg(m));
    INFO("m=" << m);
    REQUIRE(report.all_pass());
    REQUIRE_FALSE(report.axiom_ii.sampled);
  }
  AxiomCheckOptions opt;
  opt.samples = 100'000;
  opt.seed = 5;
  const AxiomReport big = check_axioms(build_pg(6), opt);
  REQUIRE(big.all_pass());
  REQUIRE(big.axiom_ii.sampled);
}

TEST_CASE("axiom checking is deterministic across worker counts") {
  AxiomCheckOptions one;
  one.samples = 50'000;
  one.seed = 9;
  one.jobs = 1;
  AxiomCheckOptions four = one;
  four.jobs = 4;
  const Geometry g = build_pg(6);
  const IncidenceIndex idx(g);
  const AxiomReport a = check_axioms(g, idx, one);
  const AxiomReport b = check_axioms(g, idx, four);
  REQUIRE(a.axiom_ii.checked == b.axiom_ii.checked);
  REQUIRE(a.axiom_ii.skipped_vacuous == b.axiom_ii.skipped_vacuous);
  REQUIRE(a.axiom_ii.violations == b.axiom_ii.violations);
}

TEST_CASE("a removed line is caught by axiom (i) with witnesses") {
  const Geometry broken = drop_line(build_pg(3), 0);  // line {0,1,2}
  const AxiomReport report = check_axioms(broken);
  REQUIRE_FALSE(report.axiom_i.pass);
  CHECK(report.axiom_i.violations == 3);  // the three pairs of the dropped line
  REQUIRE_FALSE(report.axiom_i.witnesses.empty());
  const auto& w = report.axiom_i.witnesses.front();
  CHECK(w.points == std::vector<std::uint32_t>{0, 1});
  CHECK(w.lines.empty());
}

TEST_CASE("a short line is caught by axiom (iii)") {
  Geometry g = build_pg(2);
  g.add_line({0, 1});
  const AxiomReport report = check_axioms(g);
  CHECK_FALSE(report.axiom_iii.pass);
  // The duplicate join of points 0,1 also breaks uniqueness in axiom (i).
  CHECK_FALSE(report.axiom_i.pass);
}

TEST_CASE("desargues_check on the Cl3(x)Cl3 configuration") {
  const Geometry g = cl6_configuration();
  const IncidenceIndex idx(g);
  // Indices: 0=D, 1=A, 2=A', 3=B, 4=B', 6=C, 7=C'.
  const DesarguesCheckResult res = desargues_check(g, idx, 0, {1, 3, 6}, {2, 4, 7});
  REQUIRE(res.ok);
  CHECK(res.meets == std::array<std::uint32_t, 3>{5, 9, 8});  // F={4,5}, G={5,6}, H={4,6}
  REQUIRE(res.axis_line.has_value());
  CHECK(g.line_contains(*res.axis_line, 5));
  CHECK(g.line_contains(*res.axis_line, 8));
  CHECK(g.line_contains(*res.axis_line, 9));
}

TEST_CASE("desargues_check in PG(5,2) by blade masks") {
  const Geometry g = build_pg(6);
  const IncidenceIndex idx(g);
  auto p = [](std::uint64_t mask) { return static_cast<std::uint32_t>(mask - 1); };
  const DesarguesCheckResult res =
      desargues_check(g, idx, p(3), {p(9), p(17), p(33)}, {p(10), p(18), p(34)});
  REQUIRE(res.ok);
  CHECK(res.meets == std::array<std::uint32_t, 3>{p(24), p(48), p(40)});
}

TEST_CASE("desargues_check names the violated precondition") {
  const Geometry g = build_pg(4);
  const IncidenceIndex idx(g);
  auto p = [](std::uint64_t mask) { return static_cast<std::uint32_t>(mask - 1); };

  // A = A'
  CHECK_THROWS_MATCHES(desargues_check(g, idx, p(8), {p(1), p(2), p(4)}, {p(1), p(10), p(12)}),
                       DegenerateConfiguration,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("corresponding vertices equal")));
  // collinear "triangle" {1,2,3}
  CHECK_THROWS_MATCHES(desargues_check(g, idx, p(8), {p(1), p(2), p(3)}, {p(9), p(10), p(11)}),
                       DegenerateConfiguration,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("collinear")));
  // center equals a vertex
  CHECK_THROWS_MATCHES(desargues_check(g, idx, p(1), {p(1), p(2), p(4)}, {p(3), p(6), p(5)}),
                       DegenerateConfiguration,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("center equals a vertex")));
  // coincident corresponding sides: center 3 lies on the side line {1,2,3}
  CHECK_THROWS_MATCHES(desargues_check(g, idx, p(3), {p(1), p(2), p(8)}, {p(2), p(1), p(11)}),
                       DegenerateConfiguration,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("sides coincide")));
}

TEST_CASE("exhaustive desargues search in the plane is vacuous") {
  // A 7-point plane cannot host ten distinct configuration points, so every
  // centrally-perspective pair is degenerate.
  const DesarguesExhaustiveReport report = desargues_exhaustive(build_pg(3));
  CHECK(report.pass);
  CHECK(report.checked == 0);
  CHECK(report.degenerate_skipped == 112);  // 28 triangles x 4 centers
  CHECK(report.failures == 0);
}

TEST_CASE("exhaustive desargues search in PG(3,2)") {
  const DesarguesExhaustiveReport report = desargues_exhaustive(build_pg(4));
  CHECK(report.pass);
  // 420 triangles x 8 centers off the triangle's plane, halved for the
  // unordered pair: 1680 genuine configurations; the 4 in-plane centers per
  // triangle are degenerate.
  CHECK(report.checked == 1680);
  CHECK(report.degenerate_skipped == 1680);
  CHECK(report.failures == 0);
}

TEST_CASE("exhaustive desargues search is deterministic across worker counts") {
  DesarguesOptions one;
  one.jobs = 1;
  DesarguesOptions four;
  four.jobs = 4;
  const Geometry g = build_pg(4);
  const IncidenceIndex idx(g);
  const auto a = desargues_exhaustive(g, idx, one);
  const auto b = desargues_exhaustive(g, idx, four);
  REQUIRE(a.checked == b.checked);
  REQUIRE(a.degenerate_skipped == b.degenerate_skipped);
  REQUIRE(a.configurations.size() == b.configurations.size());
  for (std::size_t i = 0; i < a.configurations.size(); ++i) {
    REQUIRE(a.configurations[i].center == b.configurations[i].center);
    REQUIRE(a.configurations[i].tri == b.configurations[i].tri);
    REQUIRE(a.configurations[i].tri_prime == b.configurations[i].tri_prime);
  }
}

TEST_CASE("the Cl6 fixture passes the exhaustive search with ten configurations") {
  const DesarguesExhaustiveReport report = desargues_exhaustive(cl6_configuration());
  CHECK(report.pass);
  CHECK(report.checked == 10);  // each of the ten points serves as a center once
  CHECK(report.failures == 0);
}

TEST_CASE("the search guard is enforced") {
  DesarguesOptions opt;
  opt.point_guard = 10;
  CHECK_THROWS_AS(desargues_exhaustive(build_pg(4), opt), GuardExceeded);
}

TEST_CASE("is_projective_subspace on the stated examples") {
  const Geometry fano = build_pg(3);
  const IncidenceIndex idx(fano);
  CHECK(is_projective_subspace({0, 1, 2}, fano, idx));        // a full line
  CHECK_FALSE(is_projective_subspace({0, 1}, fano, idx));     // third point missing
  CHECK(is_projective_subspace({0, 1, 2, 3, 4, 5, 6}, fano, idx));
}

TEST_CASE("every subspace is projective and Lie-closed, m <= 5") {
  for (int m = 2; m <= 5; ++m) {
    const Geometry g = build_pg(m);
    const IncidenceIndex idx(g);
    for (int k = 1; k <= m; ++k) {
      for (const auto& sub : enumerate_subspaces(m, k)) {
        std::vector<std::uint32_t> pts;
        std::vector<BladeIndex> blades;
        for (const auto& v : sub.nonzero_elements()) {
          pts.push_back(static_cast<std::uint32_t>(v.bits - 1));
          blades.push_back(blade_index_of(v));
        }
        REQUIRE(is_projective_subspace(pts, g, idx));
        REQUIRE(lie_closure_check(blades, m).pass);
      }
    }
  }
}

TEST_CASE("every single line is Lie-closed, m <= 5") {
  for (int m = 2; m <= 5; ++m) {
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    for (std::uint64_t a = 1; a <= n; ++a) {
      for (std::uint64_t b = a + 1; b <= n; ++b) {
        if ((a ^ b) < b) continue;
        const std::vector<BladeIndex> line{BladeIndex{a, m}, BladeIndex{b, m},
                                           BladeIndex{a ^ b, m}};
        REQUIRE(lie_closure_check(line, m).pass);
      }
    }
  }
}

TEST_CASE("lie_closure_check on the stated examples") {
  std::vector<BladeIndex> fig;
  for (auto mask : kCl6Masks) fig.push_back(BladeIndex{mask, 6});
  CHECK(lie_closure_check(fig, 6).pass);

  const LieClosureReport bad =
      lie_closure_check({blade_index(3, {1}), blade_index(3, {2})}, 3);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.violation.has_value());
  CHECK(bad.violation->first == blade_index(3, {1}));
  CHECK(bad.violation->second == blade_index(3, {2}));

  CHECK_THROWS_AS(lie_closure_check({}, 3), DimensionMismatch);
  CHECK_THROWS_AS(lie_closure_check({BladeIndex{0, 3}}, 3), DimensionMismatch);
}

TEST_CASE("blade geometry is isomorphic to the projective space") {
  for (int m = 1; m <= 8; ++m) {
    const IsoReport report = blade_geometry_isomorphism(m);
    INFO("m=" << m << " detail=" << report.detail);
    REQUIRE(report.ok);
    REQUIRE(report.blade_points == (std::uint64_t{1} << m) - 1);
    REQUIRE(report.blade_points == report.vector_points);
    REQUIRE(report.blade_lines == report.vector_lines);
    REQUIRE(report.blade_lines == pg_line_count(m));
  }
  const IsoReport fano = blade_geometry_isomorphism(3);
  CHECK(fano.blade_points == 7);
  CHECK(fano.blade_lines == 7);
  const IsoReport pg3 = blade_geometry_isomorphism(4);
  CHECK(pg3.blade_points == 15);
  CHECK(pg3.blade_lines == 35);
}
