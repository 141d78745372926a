#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "gdsa/error.hpp"
#include "gdsa/similarity.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace gdsa;
using testutil::Fixture;

namespace {

NodeSimilarityConfig config_for(SimilarityMetric metric, std::int64_t top_k = 1 << 20) {
    NodeSimilarityConfig c;
    c.metric = metric;
    c.top_k = top_k;
    return c;
}

}  // namespace

TEST_CASE("identical neighbor sets score 1.0 under every metric") {
    // both 0 and 1 connect exactly to {2, 3}
    const Fixture f{4, {{0, 2, 1.0}, {0, 3, 1.0}, {1, 2, 1.0}, {1, 3, 1.0}}};
    const auto pg = testutil::project_fixture(f, Orientation::Undirected);
    for (auto metric :
         {SimilarityMetric::Jaccard, SimilarityMetric::Overlap, SimilarityMetric::Cosine}) {
        const auto rows = node_similarity(pg, config_for(metric), 1);
        bool found = false;
        for (const auto& r : rows) {
            if (r.node1 == 0 && r.node2 == 1) {
                CHECK(r.similarity == doctest::Approx(1.0));
                found = true;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("disjoint neighborhoods fall below the cutoff") {
    const Fixture f{6, {{0, 2, 1.0}, {1, 3, 1.0}, {4, 5, 1.0}}};
    const auto pg = testutil::project_fixture(f, Orientation::Undirected);
    const auto rows = node_similarity(pg, config_for(SimilarityMetric::Jaccard), 1);
    for (const auto& r : rows) {
        CHECK(r.similarity > 0.0);
        CHECK_FALSE((r.node1 == 0 && r.node2 == 1));
    }
}

TEST_CASE("empty neighborhoods are excluded entirely") {
    const Fixture f{3, {{0, 1, 1.0}}};  // node 2 isolated
    const auto pg = testutil::project_fixture(f, Orientation::Undirected);
    for (const auto& r : node_similarity(pg, config_for(SimilarityMetric::Jaccard), 1)) {
        CHECK(r.node1 != 2);
        CHECK(r.node2 != 2);
    }
}

TEST_CASE("node_similarity matches the double-loop oracle and is symmetric") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto f = oracle::random_connected(seed, 40, 0.08);
        const auto pg = testutil::project_fixture(f, Orientation::Undirected);
        for (int metric = 0; metric < 3; ++metric) {
            const auto metric_enum = metric == 0   ? SimilarityMetric::Jaccard
                                     : metric == 1 ? SimilarityMetric::Overlap
                                                   : SimilarityMetric::Cosine;
            const auto rows = node_similarity(pg, config_for(metric_enum), 2);
            const auto expected = oracle::similarity_oracle(f, metric, 1e-42);
            REQUIRE(rows.size() == expected.size());
            std::map<std::pair<std::int64_t, std::int64_t>, double> got;
            for (const auto& r : rows) {
                got[{r.node1, r.node2}] = r.similarity;
                CHECK(r.similarity >= 0.0);
                CHECK(r.similarity <= 1.0 + 1e-12);
            }
            for (const auto& e : expected) {
                REQUIRE(got.count({e.a, e.b}) == 1);
                CHECK(got.at({e.a, e.b}) == doctest::Approx(e.s).epsilon(1e-12));
            }
            // full result set is symmetric
            for (const auto& r : rows) CHECK(got.count({r.node2, r.node1}) == 1);
        }
    }
}

TEST_CASE("ordering and truncation") {
    const Fixture f{6, {{0, 2, 1.0}, {0, 3, 1.0}, {1, 2, 1.0}, {1, 3, 1.0}, {4, 2, 1.0},
                        {5, 2, 1.0}, {4, 3, 1.0}}};
    const auto pg = testutil::project_fixture(f, Orientation::Undirected);
    SUBCASE("rows sorted by (similarity desc, node1, node2)") {
        const auto rows = node_similarity(pg, config_for(SimilarityMetric::Jaccard), 1);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const bool ordered =
                rows[i - 1].similarity > rows[i].similarity ||
                (rows[i - 1].similarity == rows[i].similarity &&
                 (rows[i - 1].node1 < rows[i].node1 ||
                  (rows[i - 1].node1 == rows[i].node1 && rows[i - 1].node2 < rows[i].node2)));
            CHECK(ordered);
        }
    }
    SUBCASE("topN keeps the globally best rows deterministically") {
        auto c = config_for(SimilarityMetric::Jaccard);
        const auto all = node_similarity(pg, c, 1);
        c.top_n = 3;
        const auto top = node_similarity(pg, c, 1);
        REQUIRE(top.size() == 3);
        for (std::size_t i = 0; i < top.size(); ++i) {
            CHECK(top[i].node1 == all[i].node1);
            CHECK(top[i].node2 == all[i].node2);
            CHECK(top[i].similarity == all[i].similarity);
        }
    }
    SUBCASE("topK caps per-source rows") {
        auto c = config_for(SimilarityMetric::Jaccard, 1);
        const auto rows = node_similarity(pg, c, 1);
        std::map<std::int64_t, std::int64_t> per_source;
        for (const auto& r : rows) ++per_source[r.node1];
        for (const auto& [node, count] : per_source) CHECK(count <= 1);
    }
    SUBCASE("similarity cutoff filters") {
        auto c = config_for(SimilarityMetric::Jaccard);
        c.similarity_cutoff = 0.9;
        for (const auto& r : node_similarity(pg, c, 1)) CHECK(r.similarity >= 0.9);
    }
}

TEST_CASE("weighted cosine uses the weighted neighbor vectors") {
    PropertyGraph g;
    for (int i = 0; i < 4; ++i) g.add_node({}, {});
    // 0 and 1 both point at {2, 3} but with different weight profiles
    g.add_relationship(0, 2, "R", {{"w", PropertyValue{1.0}}});
    g.add_relationship(0, 3, "R", {{"w", PropertyValue{2.0}}});
    g.add_relationship(1, 2, "R", {{"w", PropertyValue{2.0}}});
    g.add_relationship(1, 3, "R", {{"w", PropertyValue{1.0}}});
    const auto pg = project(g, ProjectionSpec::default_spec(g, Orientation::Directed));
    NodeSimilarityConfig c = config_for(SimilarityMetric::Cosine);
    c.weight.relationship_weight_property = "w";
    const auto rows = node_similarity(pg, c, 1);
    // cos = (1*2 + 2*1) / (sqrt(5) * sqrt(5)) = 4/5
    bool found = false;
    for (const auto& r : rows) {
        if (r.node1 == 0 && r.node2 == 1) {
            CHECK(r.similarity == doctest::Approx(0.8));
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("knn") {
    auto graph_with_values = [](const std::vector<double>& xs) {
        PropertyGraph g;
        for (double x : xs) g.add_node({}, {{"x", PropertyValue{x}}});
        return project(g, ProjectionSpec::default_spec(g, Orientation::Undirected));
    };

    SUBCASE("three collinear points 0, 1, 10 with k=1") {
        const auto pg = graph_with_values({0.0, 1.0, 10.0});
        KnnConfig c;
        c.node_properties = {"x"};
        c.k = 1;
        const auto rows = knn(pg, c, 1);
        std::map<std::int64_t, std::int64_t> nearest;
        for (const auto& r : rows) nearest[r.node1] = r.node2;
        CHECK(nearest.at(0) == 1);
        CHECK(nearest.at(1) == 0);
        CHECK(nearest.at(2) == 1);
        // euclidean similarity 1/(1+d)
        for (const auto& r : rows) {
            if (r.node1 == 0 && r.node2 == 1) CHECK(r.similarity == doctest::Approx(0.5));
        }
    }
    SUBCASE("k >= n-1 equals complete brute-force lists") {
        const auto pg = graph_with_values({0.0, 1.0, 3.0, 7.0, 20.0});
        KnnConfig c;
        c.node_properties = {"x"};
        c.k = 10;
        const auto rows = knn(pg, c, 1);
        CHECK(rows.size() == 5 * 4);
        for (const auto& r : rows) {
            CHECK(r.similarity ==
                  doctest::Approx(1.0 / (1.0 + std::abs(
                                             pg.node_scalar_column("x")[static_cast<std::size_t>(
                                                 r.node1)] -
                                             pg.node_scalar_column("x")[static_cast<std::size_t>(
                                                 r.node2)]))));
        }
    }
    SUBCASE("single node: empty result") {
        const auto pg = graph_with_values({1.0});
        KnnConfig c;
        c.node_properties = {"x"};
        CHECK(knn(pg, c, 1).empty());
    }
    SUBCASE("cosine metric stays within [0,1]") {
        PropertyGraph g;
        g.add_node({}, {{"v", PropertyValue{std::vector<double>{1.0, 0.0}}}});
        g.add_node({}, {{"v", PropertyValue{std::vector<double>{-1.0, 0.0}}}});
        g.add_node({}, {{"v", PropertyValue{std::vector<double>{0.0, 1.0}}}});
        const auto pg = project(g, ProjectionSpec::default_spec(g, Orientation::Undirected));
        KnnConfig c;
        c.node_properties = {"v"};
        c.metric = KnnMetric::Cosine;
        c.k = 2;
        const auto rows = knn(pg, c, 1);
        for (const auto& r : rows) {
            CHECK(r.similarity >= 0.0);
            CHECK(r.similarity <= 1.0);
        }
        // opposite vectors score 0, orthogonal 0.5
        for (const auto& r : rows) {
            if (r.node1 == 0 && r.node2 == 1) CHECK(r.similarity == doctest::Approx(0.0));
            if (r.node1 == 0 && r.node2 == 2) CHECK(r.similarity == doctest::Approx(0.5));
        }
    }
    SUBCASE("deterministic given the seed") {
        std::vector<double> xs;
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> unit(0.0, 100.0);
        for (int i = 0; i < 50; ++i) xs.push_back(unit(rng));
        const auto pg = graph_with_values(xs);
        KnnConfig c;
        c.node_properties = {"x"};
        c.k = 3;
        c.sampling_seed = 12345;
        const auto a = knn(pg, c, 1);
        const auto b = knn(pg, c, 4);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].node1 == b[i].node1);
            CHECK(a[i].node2 == b[i].node2);
            CHECK(a[i].similarity == b[i].similarity);
        }
    }
}
