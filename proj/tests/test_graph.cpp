#include <doctest.h>

#include <random>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rotor/graph.hpp"

using namespace rotor;

namespace {

GraphSpec g5_spec() {
    GraphSpec spec;
    spec.vertices = {"1", "2", "3", "4", "5"};
    spec.source = "1";
    spec.targets = {"4", "5"};
    spec.rotors = {{"1", {"3", "4", "5"}}, {"2", {"3"}}, {"3", {"4", "2"}}};
    return spec;
}

ErrorCode code_of(const GraphSpec& spec) {
    try {
        Multigraph::build(spec);
    } catch (const Error& error) {
        return error.code();
    }
    FAIL("expected the build to throw");
    return ErrorCode::ValidationError;
}

}  // namespace

TEST_CASE("five-vertex example builds with the expected shape") {
    const Multigraph g = Multigraph::build(g5_spec());

    CHECK(g.vertex_count() == 5);
    CHECK(g.non_target_count() == 3);
    CHECK(g.label(g.source()) == "1");

    const VertexId v1 = g.vertex_by_label("1");
    const VertexId v2 = g.vertex_by_label("2");
    const VertexId v3 = g.vertex_by_label("3");
    const VertexId v4 = g.vertex_by_label("4");
    const VertexId v5 = g.vertex_by_label("5");

    CHECK(g.out_degree(v1) == 3);
    CHECK(g.out_degree(v2) == 1);
    CHECK(g.out_degree(v3) == 2);
    CHECK(g.out_degree(v4) == 0);
    CHECK(g.out_degree(v5) == 0);
    CHECK(g.total_out_degree() == 6);

    CHECK(g.targets() == std::vector<VertexId>{v4, v5});
    CHECK(g.non_targets() == std::vector<VertexId>{v1, v2, v3});
    CHECK(g.is_target(v4));
    CHECK(!g.is_target(v1));
    CHECK(g.v0_index(v1) == 0);
    CHECK(g.v0_index(v3) == 2);
    CHECK(g.v0_index(v4) == -1);
    CHECK(g.v0_vertex(2) == v3);

    // Out-arc order is the declaration order of the rotor line.
    CHECK(g.head(v1, 1) == v3);
    CHECK(g.head(v1, 2) == v4);
    CHECK(g.head(v1, 3) == v5);
    CHECK(g.out_heads(v3) == std::vector<VertexId>{v4, v2});
    CHECK(g.arc_multiplicity(v1, v3) == 1);
    CHECK(g.arc_multiplicity(v1, v2) == 0);

    CHECK(is_strongly_connected(g));
    CHECK(!find_unreachable_pair(g).has_value());
}

TEST_CASE("smallest legal instance: one non-target, one arc") {
    GraphSpec spec;
    spec.vertices = {"1", "2"};
    spec.source = "1";
    spec.targets = {"2"};
    spec.rotors = {{"1", {"2"}}};
    const Multigraph g = Multigraph::build(spec);
    CHECK(g.vertex_count() == 2);
    CHECK(g.out_degree(g.vertex_by_label("1")) == 1);
    CHECK(is_strongly_connected(g));
}

TEST_CASE("parallel arcs count multiplicity and keep their slots") {
    GraphSpec spec;
    spec.vertices = {"1", "2", "3", "4"};
    spec.source = "1";
    spec.targets = {"3", "4"};
    spec.rotors = {{"1", {"3", "3", "2", "2"}}, {"2", {"1", "1", "4", "4"}}};
    const Multigraph g = Multigraph::build(spec);

    const VertexId v1 = g.vertex_by_label("1");
    CHECK(g.out_degree(v1) == 4);
    CHECK(g.arc_multiplicity(v1, g.vertex_by_label("3")) == 2);
    CHECK(g.arc_multiplicity(v1, g.vertex_by_label("2")) == 2);
    CHECK(g.head(v1, 2) == g.vertex_by_label("3"));
    CHECK(g.head(v1, 3) == g.vertex_by_label("2"));
}

TEST_CASE("targets may list the source as a redundant rotor line") {
    // The implicit return arcs exist anyway; writing them out is tolerated,
    // anything else at a target is a mechanism error.
    GraphSpec spec;
    spec.vertices = {"1", "2", "3", "4"};
    spec.source = "1";
    spec.targets = {"3", "4"};
    spec.rotors = {{"1", {"3", "3", "2", "2"}},
                   {"2", {"1", "1", "4", "4"}},
                   {"3", {"1"}},
                   {"4", {"1"}}};
    const Multigraph g = Multigraph::build(spec);
    CHECK(g.out_degree(g.vertex_by_label("3")) == 0);

    spec.rotors[2].second = {"2"};
    CHECK(code_of(spec) == ErrorCode::InvalidMechanism);
}

TEST_CASE("construction rejects malformed specs with specific codes") {
    SUBCASE("no targets") {
        GraphSpec spec = g5_spec();
        spec.targets.clear();
        CHECK(code_of(spec) == ErrorCode::EmptyTargets);
    }
    SUBCASE("source listed as target") {
        GraphSpec spec = g5_spec();
        spec.targets = {"1", "5"};
        CHECK(code_of(spec) == ErrorCode::SourceIsTarget);
    }
    SUBCASE("unknown source") {
        GraphSpec spec = g5_spec();
        spec.source = "9";
        CHECK(code_of(spec) == ErrorCode::UnknownVertex);
    }
    SUBCASE("unknown target") {
        GraphSpec spec = g5_spec();
        spec.targets = {"4", "9"};
        CHECK(code_of(spec) == ErrorCode::UnknownVertex);
    }
    SUBCASE("unknown rotor head") {
        GraphSpec spec = g5_spec();
        spec.rotors[1].second = {"9"};
        CHECK(code_of(spec) == ErrorCode::UnknownVertex);
    }
    SUBCASE("non-target without out-arcs") {
        GraphSpec spec = g5_spec();
        spec.rotors.erase(spec.rotors.begin() + 1);  // drop vertex 2's arcs
        CHECK(code_of(spec) == ErrorCode::DanglingVertex);
    }
    SUBCASE("duplicate vertex declaration") {
        GraphSpec spec = g5_spec();
        spec.vertices.push_back("3");
        CHECK(code_of(spec) == ErrorCode::ValidationError);
    }
    SUBCASE("two rotor lines for one vertex") {
        GraphSpec spec = g5_spec();
        spec.rotors.push_back({"2", {"3"}});
        CHECK(code_of(spec) == ErrorCode::ValidationError);
    }
    SUBCASE("empty rotor list at a non-target") {
        GraphSpec spec = g5_spec();
        spec.rotors[1].second.clear();
        CHECK(code_of(spec) == ErrorCode::DanglingVertex);
    }
}

TEST_CASE("connectivity failures name the missing path") {
    GraphSpec spec;
    spec.vertices = {"1", "2", "3"};
    spec.source = "1";
    spec.targets = {"3"};
    spec.rotors = {{"1", {"2"}}, {"2", {"1"}}};  // nothing enters 3

    CHECK(code_of(spec) == ErrorCode::NotStronglyConnected);
    try {
        Multigraph::build(spec);
    } catch (const Error& error) {
        CHECK(std::string(error.what()).find("'1'") != std::string::npos);
        CHECK(std::string(error.what()).find("'3'") != std::string::npos);
    }

    const Multigraph g = Multigraph::build_unchecked(spec);
    CHECK(!is_strongly_connected(g));
    const auto pair = find_unreachable_pair(g);
    REQUIRE(pair.has_value());
    CHECK(g.label(pair->first) == "1");
    CHECK(g.label(pair->second) == "3");
}

TEST_CASE("unknown labels raise UnknownVertex on lookup") {
    const RotorSystem sys = fixtures::g5();
    CHECK_THROWS_WITH_AS(sys.graph().vertex_by_label("7"), "unknown vertex '7'",
                         Error);
}

TEST_CASE("strong connectivity matches a transitive-closure reference") {
    // Random tournaments on five vertices with the last as target; each pair
    // of distinct vertices gets one arc of random orientation. Tournaments
    // that leave a non-target without out-arcs are not buildable and skipped.
    std::mt19937_64 engine(20240811);
    int built = 0;
    int connected = 0;
    for (int round = 0; round < 200; ++round) {
        GraphSpec spec;
        spec.vertices = {"1", "2", "3", "4", "5"};
        spec.source = "1";
        spec.targets = {"5"};
        std::vector<std::vector<std::string>> heads(5);
        for (int a = 0; a < 5; ++a) {
            for (int b = a + 1; b < 5; ++b) {
                if (engine() % 2 == 0) {
                    heads[a].push_back(spec.vertices[static_cast<size_t>(b)]);
                } else {
                    heads[b].push_back(spec.vertices[static_cast<size_t>(a)]);
                }
            }
        }
        bool dangling = false;
        for (int a = 0; a < 4; ++a) {
            if (heads[a].empty()) dangling = true;
            spec.rotors.push_back({spec.vertices[static_cast<size_t>(a)],
                                   heads[static_cast<size_t>(a)]});
        }
        if (dangling) continue;

        const Multigraph g = Multigraph::build_unchecked(spec);
        const auto reach = oracles::reach_closure(g);
        bool all = true;
        for (int a = 0; a < g.vertex_count(); ++a) {
            for (int b = 0; b < g.vertex_count(); ++b) {
                all = all && reach[static_cast<size_t>(a)][static_cast<size_t>(b)];
            }
        }
        CHECK(is_strongly_connected(g) == all);
        CHECK(find_unreachable_pair(g).has_value() == !all);
        built += 1;
        connected += all ? 1 : 0;
    }
    // The sample must exercise both answers for the comparison to mean much.
    CHECK(built > 100);
    CHECK(connected > 0);
    CHECK(connected < built);
}
