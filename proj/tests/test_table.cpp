#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gdsa/table.hpp"

using namespace gdsa;

TEST_CASE("float formatting is fixed to 6 decimals") {
    CHECK(format_float(0.235156) == "0.235156");
    CHECK(format_float(8.0) == "8.000000");
    CHECK(format_float(-1.5) == "-1.500000");
    CHECK(format_float(2.0 / std::sqrt(6.0)) == "0.816497");
}

TEST_CASE("empty table renders header, Empty line and row count") {
    Table t;
    t.columns = {"nodeId", "score", "nodeName"};
    CHECK(render_table(t) == "  nodeId  score  nodeName\nEmpty\n[0 rows]");
}

TEST_CASE("two rows under a generous cap show no marker") {
    Table t;
    t.columns = {"nodeId", "score"};
    t.rows = {{std::int64_t{0}, 0.5}, {std::int64_t{1}, 1.0}};
    const auto text = render_table(t, 500);
    CHECK(text.find("more rows") == std::string::npos);
    CHECK(text.find("[2 rows]") != std::string::npos);
}

TEST_CASE("truncation appends the marker as the final line") {
    Table t;
    t.columns = {"v"};
    for (std::int64_t i = 0; i < 1000; ++i) t.rows.push_back({i});
    const auto text = render_table(t, 500);
    CHECK(text.find("[1000 rows total]") != std::string::npos);
    const std::string marker = "... +500 more rows";
    REQUIRE(text.size() >= marker.size());
    CHECK(text.substr(text.size() - marker.size()) == marker);
    // exactly 500 data rows rendered: header + 500 + total + marker
    std::int64_t lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    CHECK(lines == 1 + 500 + 1);
}

TEST_CASE("alignment is right-justified with two-space separators") {
    Table t;
    t.columns = {"nodeId", "score", "nodeName"};
    t.rows = {{std::int64_t{0}, 0.346293, std::string("Acton Town")},
              {std::int64_t{58}, 0.311866, std::string("Ealing Common")}};
    CHECK(render_table(t) ==
          "   nodeId     score       nodeName\n"
          "0       0  0.346293     Acton Town\n"
          "1      58  0.311866  Ealing Common\n"
          "[2 rows]");
}

TEST_CASE("explicit indices survive filtering") {
    Table t;
    t.columns = {"v"};
    t.rows = {{std::int64_t{10}}, {std::int64_t{20}}};
    t.index = {5, 16};
    const auto text = render_table(t);
    CHECK(text.find("\n 5  10\n") != std::string::npos);
    CHECK(text.find("16  20") != std::string::npos);
}

TEST_CASE("list formatting") {
    CHECK(format_float_list({0.0, 2.0}) == "[0.000000, 2.000000]");
    CHECK(format_int_list({0, 2, 4}) == "[0, 2, 4]");
    CHECK(format_string_list({"Bank", "Waterloo"}) == "['Bank', 'Waterloo']");
    CHECK(format_float_list({}) == "[]");
}
