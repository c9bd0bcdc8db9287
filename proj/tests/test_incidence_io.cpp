#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "cliffgeom/exporters.hpp"
#include "cliffgeom/incidence_doc.hpp"

using namespace cliffgeom;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture(const std::string& name) {
  return slurp(std::string(CLIFFGEOM_FIXTURE_DIR) + "/" + name);
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("parsing the shipped fano document") {
  const IncidenceDocument doc = parse_incidence(fixture("fano.json"));
  CHECK(doc.name == "fano");
  REQUIRE(doc.m.has_value());
  CHECK(*doc.m == 3);
  REQUIRE(doc.points.size() == 7);
  REQUIRE(doc.lines.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) {
    REQUIRE(is_mask_label(doc.points[i]));
    CHECK(mask_of(doc.points[i]) == i + 1);  // canonical order is mask order
  }
  for (const auto& line : doc.lines) {
    REQUIRE(line.size() == 3);
    const std::uint64_t x = mask_of(doc.points[line[0]]) ^ mask_of(doc.points[line[1]]) ^
                            mask_of(doc.points[line[2]]);
    CHECK(x == 0);
  }
}

TEST_CASE("the minimal empty document is valid") {
  const IncidenceDocument doc = parse_incidence(R"({"points":[],"lines":[]})");
  CHECK(doc.name.empty());
  CHECK_FALSE(doc.m.has_value());
  CHECK(doc.points.empty());
  CHECK(doc.lines.empty());
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_incidence("{\n  \"points\": [[1], \n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 1);
  }
}

TEST_CASE("schema violations are named") {
  CHECK_THROWS_AS(parse_incidence(R"([1,2,3])"), ValidationError);
  CHECK_THROWS_AS(parse_incidence(R"({"points": [], "lines": [], "bogus": 1})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_incidence(R"({"name": 7, "points": [], "lines": []})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_incidence(R"({"m": 0, "points": [], "lines": []})"), ValidationError);
  CHECK_THROWS_AS(parse_incidence(R"({"points": [[0]], "lines": []})"), ValidationError);
  CHECK_THROWS_AS(parse_incidence(R"({"points": [[]], "lines": []})"), ValidationError);
  CHECK_THROWS_AS(parse_incidence(R"({"points": [[1,1]], "lines": []})"), ValidationError);
  CHECK_THROWS_AS(parse_incidence(R"({"m": 2, "points": [[3]], "lines": []})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_incidence(R"({"points": [[1]], "lines": [[]]})"), ValidationError);
  CHECK_THROWS_AS(parse_incidence(R"({"points": [[1]], "lines": [[0,0]]})"), ValidationError);
  CHECK_THROWS_AS(parse_incidence(R"({"points": [[1]], "lines": [], "metadata": {"k": 1}})"),
                  ValidationError);
}

TEST_CASE("semantic errors list the offenders") {
  // Index out of range: a line referencing point 99 of a 3-point document.
  try {
    parse_incidence(fixture("bad/bad_index.json"));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("99") != std::string::npos);
  }
  // Duplicate point label.
  CHECK_THROWS_AS(parse_incidence(R"({"points": [[1], [1]], "lines": []})"), ValidationError);
  // Duplicate line after canonical sorting.
  try {
    parse_incidence(R"({"points": [[1],[2],[1,2]], "lines": [[0,1,2],[2,1,0]]})");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("duplicate line") != std::string::npos);
  }
}

TEST_CASE("canonicalization reorders points and remaps lines") {
  // Points out of order; the parse must sort by mask and rewrite the line.
  const IncidenceDocument doc =
      parse_incidence(R"({"m": 3, "points": [[3], [1], [1,3]], "lines": [[1, 0, 2]]})");
  REQUIRE(doc.points.size() == 3);
  CHECK(mask_of(doc.points[0]) == 1);  // {1}
  CHECK(mask_of(doc.points[1]) == 4);  // {3}
  CHECK(mask_of(doc.points[2]) == 5);  // {1,3}
  REQUIRE(doc.lines.size() == 1);
  CHECK(doc.lines[0] == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("string-labeled points sort lexicographically after subsets") {
  const IncidenceDocument doc =
      parse_incidence(R"({"points": ["b", [2], "a"], "lines": [[0, 1, 2]]})");
  CHECK(mask_of(doc.points[0]) == 2);
  CHECK(std::get<std::string>(doc.points[1]) == "a");
  CHECK(std::get<std::string>(doc.points[2]) == "b");
  CHECK(doc.lines[0] == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("round-trip is byte-identical on every shipped fixture") {
  for (const std::string name :
       {"fano.json", "desargues_cl6.json", "empty.json", "broken_axiom_i.json"}) {
    const std::string bytes = fixture(name);
    INFO(name);
    REQUIRE(serialize_incidence(parse_incidence(bytes)) == bytes);
  }
}

TEST_CASE("parse after serialize is the identity on documents") {
  IncidenceDocument doc;
  doc.name = "tiny";
  doc.m = 2;
  doc.points = {PointLabel{std::uint64_t{1}}, PointLabel{std::uint64_t{2}},
                PointLabel{std::uint64_t{3}}, PointLabel{std::string("extra")}};
  doc.lines = {{0, 1, 2}};
  doc.metadata = {{"alpha", "1"}, {"beta", "two"}};
  CHECK(parse_incidence(serialize_incidence(doc)) == doc);
}

TEST_CASE("serialization is deterministic") {
  const IncidenceDocument doc = parse_incidence(fixture("desargues_cl6.json"));
  CHECK(serialize_incidence(doc) == serialize_incidence(doc));
}

TEST_CASE("geometry/document conversions preserve structure") {
  const Geometry pg = build_pg(3);
  const IncidenceDocument doc = document_from_geometry(pg);
  CHECK(doc.points.size() == 7);
  CHECK(doc.lines.size() == 7);
  const Geometry back = geometry_from_document(doc);
  REQUIRE(back.point_count() == pg.point_count());
  REQUIRE(back.line_count() == pg.line_count());
  for (std::size_t li = 0; li < pg.line_count(); ++li) {
    const auto a = pg.line(li), b = back.line(li);
    REQUIRE(std::vector<std::uint32_t>(a.begin(), a.end()) ==
            std::vector<std::uint32_t>(b.begin(), b.end()));
  }
  // The generated plane, as a document, matches the shipped fano fixture up
  // to its name.
  IncidenceDocument fano = parse_incidence(fixture("fano.json"));
  fano.name = doc.name;
  CHECK(fano.points == doc.points);
  CHECK(fano.lines == doc.lines);
}

TEST_CASE("dot export of the fano plane: 14 nodes, 21 edges") {
  const std::string dot = export_dot(build_pg(3));
  CHECK(count_occurrences(dot, "\n  p") == 7 + 21);  // 7 declarations + 21 edge tails
  CHECK(count_occurrences(dot, " -- ") == 21);
  CHECK(count_occurrences(dot, "[label=\"l") == 7);
  CHECK(dot == export_dot(build_pg(3)));  // byte-stable
  CHECK(dot.find("p0 -- l0;") != std::string::npos);
}

TEST_CASE("dot export of the empty geometry") {
  const Geometry g = geometry_from_document(parse_incidence(R"({"points":[],"lines":[]})"));
  const std::string dot = export_dot(g);
  CHECK(dot == "graph incidence {\n  node [shape=circle];\n  node [shape=box];\n}\n");
}

TEST_CASE("dot export of the Cl6 configuration: 10+10 nodes, 30 edges") {
  const Geometry g =
      geometry_from_document(parse_incidence(fixture("desargues_cl6.json")));
  const std::string dot = export_dot(g);
  CHECK(count_occurrences(dot, "[label=\"l") == 10);
  CHECK(count_occurrences(dot, " -- ") == 30);
}

TEST_CASE("tikz export: fano uses the triangle-plus-incircle layout") {
  const std::string tikz = export_tikz(build_pg(3));
  CHECK(tikz.find("circle (1.155)") != std::string::npos);
  CHECK(count_occurrences(tikz, "\\node") == 7);
  CHECK(count_occurrences(tikz, "\\draw") == 7);
  CHECK(tikz.find("$e_{1}$") != std::string::npos);
  CHECK(tikz == export_tikz(build_pg(3)));
}

TEST_CASE("tikz export: larger structures use the generic layout with labels") {
  const Geometry g =
      geometry_from_document(parse_incidence(fixture("desargues_cl6.json")));
  const std::string tikz = export_tikz(g);
  CHECK(count_occurrences(tikz, "\\node") == 10);
  CHECK(count_occurrences(tikz, "\\draw") == 10);
  CHECK(tikz.find("\\sigma_1\\sigma_2 \\otimes I") != std::string::npos);
  CHECK(tikz == export_tikz(g));
}
