#include "doctest.h"

#include <sstream>
#include <string>

#include "vnge/io.hpp"
#include "test_util.hpp"

using namespace vnge;
using namespace vnge::testutil;

TEST_CASE("edge list parsing") {
    SUBCASE("labels, default weights, comments, isolated nodes") {
        std::istringstream in(
            "# a comment\n"
            "\n"
            "alpha beta 2.5\n"
            "beta gamma\n"
            "lonely\n");
        const LabeledGraph lg = parse_edge_list(in);
        CHECK(lg.graph.node_count() == 4);
        CHECK(lg.graph.edge_count() == 2);
        CHECK(lg.graph.edge_weight(lg.ids.at("alpha"), lg.ids.at("beta")) == 2.5);
        CHECK(lg.graph.edge_weight(lg.ids.at("beta"), lg.ids.at("gamma")) == 1.0);
        CHECK(lg.ids.at("alpha") == 0); // first-appearance interning
        CHECK(lg.ids.at("lonely") == 3);
    }
    SUBCASE("parse errors carry line numbers") {
        auto expect_line = [](const std::string& text, std::size_t line) {
            std::istringstream in(text);
            try {
                parse_edge_list(in);
                FAIL("expected ParseError for: " << text);
            } catch (const ParseError& e) {
                CHECK(e.line() == line);
                CHECK(e.category() == ErrorCategory::parse);
            }
        };
        expect_line("a b 1\na b 2\n", 2);         // duplicate edge
        expect_line("a a 1\n", 1);                // self-loop
        expect_line("# ok\na b frog\n", 2);       // bad weight
        expect_line("a b 0\n", 1);                // nonpositive weight
        expect_line("a b -2\n", 1);               // negative weight
        expect_line("a b 1 extra\n", 1);          // too many tokens
    }
}

TEST_CASE("serialization is canonical and round-trips") {
    SUBCASE("edges sorted by label pair, isolated nodes trail") {
        LabeledGraph lg;
        const NodeId c = lg.intern("c");
        const NodeId a = lg.intern("a");
        const NodeId b = lg.intern("b");
        lg.intern("isolated");
        lg.graph.add_edge(a, b, 0.5);
        lg.graph.add_edge(c, b, 1.25);
        CHECK(serialize_edge_list(lg) ==
              "a b 0.5\n"
              "b c 1.25\n"
              "isolated\n");
    }
    SUBCASE("random graphs survive parse(serialize(g))") {
        for (std::size_t i = 0; i < 12; ++i) {
            Graph g = random_mixed_graph(i, 45, 4000 + i);
            g.add_node(4000); // isolated node with a large id
            const LabeledGraph lg = LabeledGraph::from_graph(g);
            std::istringstream in(serialize_edge_list(lg));
            const LabeledGraph back = parse_edge_list(in);
            CHECK(back.same_labeled_structure(lg));
            // And the canonical form is a fixed point.
            CHECK(serialize_edge_list(back) == serialize_edge_list(lg));
        }
    }
    SUBCASE("17-digit weights survive exactly") {
        LabeledGraph lg;
        const NodeId a = lg.intern("a");
        const NodeId b = lg.intern("b");
        lg.graph.add_edge(a, b, 0.1 + 0.2); // not representable prettily
        std::istringstream in(serialize_edge_list(lg));
        const LabeledGraph back = parse_edge_list(in);
        CHECK(back.graph.edge_weight(back.ids.at("a"), back.ids.at("b")) == 0.1 + 0.2);
    }
}

TEST_CASE("change stream parsing") {
    SUBCASE("ops grouped per step against the evolving graph") {
        std::istringstream graph_in("a b 1\nb c 2\n");
        LabeledGraph base = parse_edge_list(graph_in);
        const Graph initial = base.graph;

        std::istringstream in(
            "# step op u v w\n"
            "1 A a c 1.0\n"
            "1 M b c -1.0\n"
            "2 D a b\n"
            "4 A a d 3.0\n");
        const auto steps = parse_change_stream(base, in);
        REQUIRE(steps.size() == 3);
        CHECK(steps[0].step_id == 1);
        CHECK(steps[0].delta.delta_m() == 2);
        CHECK(steps[1].step_id == 2);
        CHECK(steps[2].step_id == 4);

        // Replaying the deltas over the initial graph lands on the
        // reader's final evolved graph.
        Graph replay = initial;
        for (const auto& s : steps)
            replay = apply_delta(replay, s.delta);
        CHECK(replay == base.graph);

        CHECK(base.graph.edge_weight(base.ids.at("a"), base.ids.at("d")) == 3.0);
        CHECK_FALSE(base.graph.has_edge(base.ids.at("a"), base.ids.at("b")));
        CHECK(base.graph.has_node(base.ids.at("a"))); // nodes retained
    }
    SUBCASE("delete resolves the current weight, even mid-step") {
        std::istringstream graph_in("a b 1\nx y 1\n");
        LabeledGraph base = parse_edge_list(graph_in);
        std::istringstream in(
            "1 A a b 2.0\n"
            "1 D a b\n");
        const auto steps = parse_change_stream(base, in);
        REQUIRE(steps.size() == 1);
        // Net effect: the original weight 1 is gone.
        CHECK(steps[0].delta.edge_deltas().at(edge_key(base.ids.at("a"), base.ids.at("b"))) ==
              doctest::Approx(-1.0));
        CHECK_FALSE(base.graph.has_edge(base.ids.at("a"), base.ids.at("b")));
    }
    SUBCASE("violations are parse errors with line numbers") {
        auto expect_line = [](const std::string& graph_text, const std::string& stream_text,
                              std::size_t line) {
            std::istringstream gin(graph_text);
            LabeledGraph base = parse_edge_list(gin);
            std::istringstream sin(stream_text);
            try {
                parse_change_stream(base, sin);
                FAIL("expected ParseError for: " << stream_text);
            } catch (const ParseError& e) {
                CHECK(e.line() == line);
            }
        };
        expect_line("a b 1\n", "1 D a c\n", 1);            // absent edge
        expect_line("a b 1\n", "1 M a b -2\n", 1);         // negative result
        expect_line("a b 1\n", "2 A a c 1\n1 A b c 1\n", 2); // decreasing step
        expect_line("a b 1\n", "1 X a b 1\n", 1);          // unknown op
        expect_line("a b 1\n", "1 A a b\n", 1);            // A without weight
        expect_line("a b 1\n", "1 D a b 1\n", 1);          // D with weight
        expect_line("a b 1\n", "1 A a a 1\n", 1);          // self-loop
    }
}

TEST_CASE("csv writer emits fixed columns and 17-digit floats") {
    std::ostringstream out;
    {
        CsvWriter csv(out, {"kind", "value", "count"});
        csv.row().cell(std::string("exact")).cell(1.0 / 3.0).cell(std::uint64_t{42});
        csv.row().cell(std::string("hat")).cell(0.5).cell(std::uint64_t{7});
    }
    CHECK(out.str() ==
          "kind,value,count\n"
          "exact,0.33333333333333331,42\n"
          "hat,0.5,7\n");

    // format_double round-trips arbitrary doubles.
    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
        const double x = (rng.unit() - 0.5) * std::pow(10.0, double(rng.below(12)) - 6.0);
        CHECK(std::stod(format_double(x)) == x);
    }
}
