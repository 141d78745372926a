#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdsa/error.hpp"
#include "gdsa/projection.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace gdsa;
using testutil::Fixture;

namespace {

PropertyGraph mixed_graph() {
    PropertyGraph g;
    g.add_node({"A"}, {{"name", PropertyValue{std::string("n0")}},
                       {"zone", PropertyValue{std::int64_t{1}}},
                       {"score", PropertyValue{0.5}}});
    g.add_node({"A", "B"}, {{"name", PropertyValue{std::string("n1")}},
                            {"zone", PropertyValue{std::int64_t{2}}}});
    g.add_node({"B"}, {{"name", PropertyValue{std::string("n2")}}});
    g.add_relationship(0, 1, "R1", {{"w", PropertyValue{1.0}}});
    g.add_relationship(1, 2, "R1", {{"w", PropertyValue{2.0}}});
    g.add_relationship(0, 2, "R2", {{"w", PropertyValue{3.0}}});
    g.add_relationship(2, 0, "R2", {});
    g.add_relationship(1, 1, "R2", {{"w", PropertyValue{4.0}}});
    return g;
}

}  // namespace

TEST_CASE("default projection keeps counts and drops strings") {
    const auto g = mixed_graph();
    const auto pg = project(g, ProjectionSpec::default_spec(g, Orientation::Directed));
    CHECK(pg.node_count() == g.node_count());
    CHECK(pg.relationship_count() == g.relationship_count());
    for (const auto& [key, is_array] : pg.node_property_catalog()) {
        CHECK(key != "name");  // string property never projected
        CHECK_FALSE(is_array);
    }
    CHECK(pg.has_node_property("zone"));
    CHECK(pg.has_node_property("score"));
    // int coerced to float
    CHECK(pg.node_scalar_column("zone")[1] == 2.0);
    // absent numeric projects as the absent sentinel
    CHECK(is_absent(pg.node_scalar_column("score")[2]));
    CHECK(is_absent(pg.relationship_column("w")[3]));
}

TEST_CASE("projection of an empty graph") {
    PropertyGraph g;
    const auto pg = project(g, ProjectionSpec::default_spec(g, Orientation::Directed));
    CHECK(pg.node_count() == 0);
    CHECK(pg.relationship_count() == 0);
}

TEST_CASE("relationship type filter") {
    const auto g = mixed_graph();
    ProjectionSpec spec = ProjectionSpec::default_spec(g, Orientation::Directed);
    spec.relationship_types = {{"R1"}};
    const auto pg = project(g, spec);
    CHECK(pg.relationship_count() == 2);  // exactly the R1 rows
    for (const auto& rel : pg.rels()) CHECK(pg.rel_type_name(rel.type_id) == "R1");
}

TEST_CASE("label filter compacts ids and keeps the id map consistent") {
    const auto g = mixed_graph();
    ProjectionSpec spec = ProjectionSpec::default_spec(g, Orientation::Directed);
    spec.node_labels = {{"B"}};
    const auto pg = project(g, spec);
    CHECK(pg.node_count() == 2);  // nodes 1 and 2
    CHECK(pg.original_id(0) == 1);
    CHECK(pg.original_id(1) == 2);
    CHECK(pg.projected_id(0) == -1);
    CHECK(pg.projected_id(1) == 0);
    // only relationships with both endpoints surviving
    CHECK(pg.relationship_count() == 2);  // 1->2 (R1) and 1->1 (R2)
    for (std::int64_t v = 0; v < pg.node_count(); ++v) {
        CHECK(pg.projected_id(pg.original_id(v)) == v);
    }
}

TEST_CASE("projection errors") {
    const auto g = mixed_graph();
    ProjectionSpec spec = ProjectionSpec::default_spec(g, Orientation::Directed);
    SUBCASE("unknown label") {
        spec.node_labels = {{"Nope"}};
        CHECK_THROWS_WITH_AS(project(g, spec), "unknown node label: Nope", Error);
    }
    SUBCASE("unknown type") {
        spec.relationship_types = {{"R9"}};
        CHECK_THROWS_WITH_AS(project(g, spec), "unknown relationship type: R9", Error);
    }
    SUBCASE("unknown node key") {
        spec.node_properties.push_back({"missing", "missing", Coercion::None});
        CHECK_THROWS_AS(project(g, spec), Error);
    }
    SUBCASE("string key rejected") {
        spec.node_properties.push_back({"name", "name", Coercion::ToFloat});
        CHECK_THROWS_WITH_AS(project(g, spec), "string property 'name' cannot be projected",
                             Error);
    }
    SUBCASE("duplicate projected key") {
        spec.node_properties.push_back({"zone", "score", Coercion::None});
        CHECK_THROWS_AS(project(g, spec), Error);
    }
}

TEST_CASE("undirected orientation symmetrizes the adjacency") {
    const auto f = oracle::random_graph(7, 12, 0.2);
    const auto pg = testutil::project_fixture(f, Orientation::Undirected);
    CHECK(pg.arc_count() == 2 * pg.relationship_count());
    // adjacency(u,v) iff adjacency(v,u)
    std::set<std::pair<std::int64_t, std::int64_t>> arcs;
    for (std::int64_t v = 0; v < pg.node_count(); ++v) {
        for (std::int64_t arc : pg.out_arc_range(v)) arcs.emplace(v, pg.arc_target(arc));
    }
    for (const auto& [u, v] : arcs) CHECK(arcs.count({v, u}) == 1);
    // each relationship contributes exactly one adjacency entry per endpoint
    for (std::int64_t v = 0; v < pg.node_count(); ++v) {
        std::int64_t incident = 0;
        for (const auto& e : f.edges) {
            if (e.u == v) ++incident;
            if (e.v == v) ++incident;
        }
        CHECK(pg.out_degree(v) == incident);
    }
}

TEST_CASE("CSR structure invariants") {
    const auto f = oracle::random_graph(11, 15, 0.15);
    for (auto orientation : {Orientation::Directed, Orientation::Undirected}) {
        const auto pg = testutil::project_fixture(f, orientation);
        std::int64_t total = 0;
        for (std::int64_t v = 0; v < pg.node_count(); ++v) {
            std::int64_t prev_target = -1, prev_rel = -1;
            for (std::int64_t arc : pg.out_arc_range(v)) {
                CHECK(pg.arc_source(arc) == v);
                CHECK(pg.arc_target(arc) >= 0);
                CHECK(pg.arc_target(arc) < pg.node_count());
                // deterministic (target, rel) order
                const bool ordered = pg.arc_target(arc) > prev_target ||
                                     (pg.arc_target(arc) == prev_target &&
                                      pg.arc_rel(arc) > prev_rel);
                CHECK(ordered);
                prev_target = pg.arc_target(arc);
                prev_rel = pg.arc_rel(arc);
                ++total;
            }
        }
        CHECK(total == pg.arc_count());
    }
}

TEST_CASE("projection is pure: identical inputs give identical graphs") {
    const auto g = mixed_graph();
    const auto spec = ProjectionSpec::default_spec(g, Orientation::Undirected);
    const auto a = project(g, spec);
    const auto b = project(g, spec);
    CHECK(a.node_count() == b.node_count());
    CHECK(a.arc_count() == b.arc_count());
    for (std::int64_t arc = 0; arc < a.arc_count(); ++arc) {
        CHECK(a.arc_source(arc) == b.arc_source(arc));
        CHECK(a.arc_target(arc) == b.arc_target(arc));
        CHECK(a.arc_rel(arc) == b.arc_rel(arc));
    }
    CHECK(a.node_property_catalog() == b.node_property_catalog());
}

TEST_CASE("mutate_node_property") {
    const auto f = testutil::fx_path();
    const auto pg = testutil::project_fixture(f, Orientation::Undirected);

    SUBCASE("adds a readable column and keeps the original untouched") {
        const auto mutated = pg.mutate_node_property("score", {1.0, 2.0, 3.0});
        CHECK(mutated.node_scalar_column("score") == std::vector<double>{1.0, 2.0, 3.0});
        CHECK_FALSE(pg.has_node_property("score"));
        CHECK(mutated.has_node_property("w") == pg.has_node_property("w"));
    }
    SUBCASE("duplicate key") {
        const auto mutated = pg.mutate_node_property("score", {1.0, 2.0, 3.0});
        CHECK_THROWS_WITH_AS(mutated.mutate_node_property("score", {0.0, 0.0, 0.0}),
                             "node property already exists: score", Error);
    }
    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(pg.mutate_node_property("score", {1.0}), Error);
    }
    SUBCASE("written values round-trip through a reader") {
        const auto mutated = pg.mutate_node_property("score", {0.25, 0.5, 0.75});
        const auto& column = mutated.node_scalar_column("score");
        for (std::size_t i = 0; i < column.size(); ++i) {
            CHECK(column[i] == 0.25 * static_cast<double>(i + 1));
        }
    }
}

TEST_CASE("ProjectionSpec JSON round trip uses the documented field names") {
    ProjectionSpec spec;
    spec.name = "demo";
    spec.node_labels = {{"Station"}};
    spec.relationship_types = {{"LINK"}};
    spec.node_properties = {{"zone", "zone", Coercion::ToFloat}};
    spec.relationship_properties = {"time"};
    spec.orientation = Orientation::Undirected;

    const auto j = spec.to_json();
    CHECK(j.at("name") == "demo");
    CHECK(j.at("node_labels") == nlohmann::json::array({"Station"}));
    CHECK(j.at("relationship_types") == nlohmann::json::array({"LINK"}));
    CHECK(j.at("orientation") == "undirected");
    CHECK(j.at("node_properties")[0].at("source_key") == "zone");
    CHECK(j.at("node_properties")[0].at("coercion") == "to_float");
    CHECK(j.at("relationship_properties") == nlohmann::json::array({"time"}));

    const auto parsed = ProjectionSpec::from_json(j);
    CHECK(parsed.name == spec.name);
    CHECK(parsed.node_labels == spec.node_labels);
    CHECK(parsed.relationship_types == spec.relationship_types);
    CHECK(parsed.orientation == spec.orientation);
    CHECK(parsed.relationship_properties == spec.relationship_properties);
    REQUIRE(parsed.node_properties.size() == 1);
    CHECK(parsed.node_properties[0].source_key == "zone");
    CHECK(parsed.node_properties[0].coercion == Coercion::ToFloat);

    // shorthand: a bare string names the source key
    const auto shorthand = ProjectionSpec::from_json(
        nlohmann::json{{"node_properties", {"zone"}}, {"orientation", "directed"}});
    REQUIRE(shorthand.node_properties.size() == 1);
    CHECK(shorthand.node_properties[0].projected_key == "zone");
}
