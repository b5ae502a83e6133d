#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fixtures.hpp"
#include "rotor/cli.hpp"
#include "rotor/dot_export.hpp"
#include "rotor/instance_io.hpp"

using namespace rotor;

namespace {

std::string fixture_path(const char* name) {
    return std::string(ROTOR_FIXTURE_DIR) + "/" + name;
}

std::string write_temp(const char* name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path.string();
}

Error capture_error(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const Error& error) {
        return error;
    }
    FAIL("expected parsing to throw");
    return Error(ErrorCode::ParseError, "unreachable");
}

struct CliRun {
    int status = 0;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = run_command(args, out, err);
    return {status, out.str(), err.str()};
}

const std::string kG5Text =
    "vertices 1 2 3 4 5\n"
    "source 1\n"
    "targets 4 5\n"
    "rotor 1: 3 4 5\n"
    "rotor 2: 3\n"
    "rotor 3: 4 2\n";

}  // namespace

TEST_CASE("instance files parse into the system they describe") {
    const Instance inst = parse_instance(kG5Text);
    CHECK(inst.system == fixtures::g5());
    CHECK(inst.state == fixtures::config({3, 1, 2}));  // defaults: last slot
    CHECK(!inst.seed.has_value());
    CHECK(!inst.step_budget.has_value());

    SUBCASE("the shipped fixture file matches the built-in instance") {
        const Instance shipped = load_instance(fixture_path("g5.rotor"));
        CHECK(shipped == inst);
        const Instance doubled = load_instance(fixture_path("repetitive2.rotor"));
        CHECK(doubled.system == fixtures::repetitive2());
    }

    SUBCASE("state lines override single rotors") {
        const Instance turned = parse_instance(kG5Text + "state 1: 2\n");
        CHECK(turned.state == fixtures::config({2, 1, 2}));
    }

    SUBCASE("comments, blank lines, and spacing are free-form") {
        const Instance spaced = parse_instance(
            "# header\n\n   vertices   1   2 # trailing\n source 1\n"
            "targets 2\n\trotor 1:\t2 2\n# done\n");
        CHECK(spaced.system.graph().vertex_count() == 2);
        CHECK(spaced.system.graph().out_degree(0) == 2);
    }

    SUBCASE("settings carry seeds and budgets") {
        const Instance tuned = parse_instance(
            "vertices 1 2\nsource 1\ntargets 2\nrotor 1: 2 2\nstate 1: 2\n"
            "seed 99\nbudget steps 50\nbudget pushes 60\nbudget orbit 70\n");
        CHECK(tuned.seed == uint64_t{99});
        CHECK(tuned.step_budget == 50);
        CHECK(tuned.push_budget == 60);
        CHECK(tuned.orbit_budget == 70);
    }
}

TEST_CASE("rendering writes the canonical text form") {
    const std::string tuned_text =
        "vertices 1 2\nsource 1\ntargets 2\nrotor 1: 2 2\nstate 1: 2\n"
        "seed 99\nbudget steps 50\nbudget pushes 60\nbudget orbit 70\n";
    const Instance tuned = parse_instance(tuned_text);
    CHECK(render_instance(tuned) == tuned_text);
    CHECK(parse_instance(render_instance(tuned)) == tuned);

    // The default-state render spells every state line out.
    const Instance g5 = parse_instance(kG5Text);
    CHECK(render_instance(g5) ==
          kG5Text + "state 1: 3\nstate 2: 1\nstate 3: 2\n");
    CHECK(parse_instance(render_instance(g5)) == g5);
}

TEST_CASE("parser errors carry their position") {
    SUBCASE("unknown directive") {
        const Error error = capture_error(kG5Text + "flavor x\n");
        CHECK(error.code() == ErrorCode::ParseError);
        CHECK(std::string(error.what()) == "unknown directive 'flavor'");
        CHECK(error.line() == 7);
        CHECK(error.column() == 1);
    }
    SUBCASE("malformed slot value") {
        const Error error = capture_error(kG5Text + "state 1: x\n");
        CHECK(error.code() == ErrorCode::ParseError);
        CHECK(std::string(error.what()) == "expected a slot index, got 'x'");
        CHECK(error.line() == 7);
        CHECK(error.column() == 10);
    }
    SUBCASE("slot out of range") {
        const Error error = capture_error(kG5Text + "state 2: 2\n");
        CHECK(error.code() == ErrorCode::ValidationError);
        CHECK(std::string(error.what()) == "slot 2 out of range 1..1 for '2'");
        CHECK(error.line() == 7);
        CHECK(error.column() == 10);
    }
    SUBCASE("slot zero is rejected like any other out-of-range slot") {
        const Error error = capture_error(kG5Text + "state 1: 0\n");
        CHECK(error.code() == ErrorCode::ValidationError);
        CHECK(std::string(error.what()) == "slot 0 out of range 1..3 for '1'");
    }
    SUBCASE("duplicate section") {
        const Error error = capture_error(kG5Text + "vertices 7\n");
        CHECK(error.code() == ErrorCode::ParseError);
        CHECK(std::string(error.what()) == "duplicate vertices line");
        CHECK(error.line() == 7);
    }
    SUBCASE("missing sections") {
        const Error error = capture_error("vertices 1 2\ntargets 2\nrotor 1: 2\n");
        CHECK(error.code() == ErrorCode::ValidationError);
        CHECK(std::string(error.what()) == "missing source line");
        CHECK(error.line() == -1);
    }
    SUBCASE("undeclared vertex in a rotor line") {
        const Error error =
            capture_error("vertices 1 2\nsource 1\ntargets 2\nrotor 1: 3\n");
        CHECK(error.code() == ErrorCode::ValidationError);
        CHECK(std::string(error.what()) == "unknown vertex '3'");
        CHECK(error.line() == 4);
        CHECK(error.column() == 10);
    }
    SUBCASE("state at a target") {
        const Error error = capture_error(kG5Text + "state 4: 1\n");
        CHECK(error.code() == ErrorCode::ValidationError);
        CHECK(std::string(error.what()) == "target '4' carries no rotor state");
        CHECK(error.line() == 7);
        CHECK(error.column() == 7);
    }
    SUBCASE("duplicate state line") {
        const Error error =
            capture_error(kG5Text + "state 1: 2\nstate 1: 3\n");
        CHECK(error.code() == ErrorCode::ValidationError);
        CHECK(std::string(error.what()) == "duplicate state line for '1'");
        CHECK(error.line() == 8);
    }
    SUBCASE("vertex label with a colon") {
        const Error error = capture_error("vertices a:b c\nsource c\ntargets c\n");
        CHECK(error.code() == ErrorCode::ValidationError);
        CHECK(std::string(error.what()) == "vertex label may not contain ':'");
        CHECK(error.line() == 1);
        CHECK(error.column() == 10);
    }
    SUBCASE("non-positive budget") {
        const Error error = capture_error(kG5Text + "budget steps 0\n");
        CHECK(error.code() == ErrorCode::ValidationError);
        CHECK(std::string(error.what()) == "budget must be positive");
        CHECK(error.column() == 14);
    }
    SUBCASE("graph construction failures keep their original code visible") {
        const Error error = capture_error(
            "vertices 1 2 3\nsource 1\ntargets 3\nrotor 1: 2\nrotor 2: 1\n");
        CHECK(error.code() == ErrorCode::ValidationError);
        CHECK(std::string(error.what()).find("NotStronglyConnected") !=
              std::string::npos);
    }
    SUBCASE("unreadable files") {
        try {
            load_instance("/nonexistent/missing.rotor");
            FAIL("expected load to throw");
        } catch (const Error& error) {
            CHECK(error.code() == ErrorCode::ParseError);
        }
    }
}

TEST_CASE("dot export is a stable, fully styled drawing") {
    const RotorSystem sys = fixtures::g5();
    const RotorConfiguration rho0 = initial_configuration(sys);

    const std::string expected =
        "digraph rotor_walk {\n"
        "  rankdir=LR;\n"
        "  node [shape=circle];\n"
        "  \"1\" [shape=doublecircle];\n"
        "  \"2\";\n"
        "  \"3\";\n"
        "  \"4\" [style=filled, fillcolor=lightgray];\n"
        "  \"5\" [style=filled, fillcolor=lightgray];\n"
        "  \"1\" -> \"3\" [label=\"1\", color=gray60];\n"
        "  \"1\" -> \"4\" [label=\"2\", color=gray60];\n"
        "  \"1\" -> \"5\" [label=\"3\", penwidth=2.4];\n"
        "  \"2\" -> \"3\" [label=\"1\", penwidth=2.4];\n"
        "  \"3\" -> \"4\" [label=\"1\", color=gray60];\n"
        "  \"3\" -> \"2\" [label=\"2\", penwidth=2.4];\n"
        "}\n";
    CHECK(export_dot(sys, rho0) == expected);
    CHECK(export_dot(sys, rho0) == export_dot(sys, rho0));

    SUBCASE("highlighting paints the cycle arcs and nothing else") {
        const auto cycle = find_cycle(sys, rho0);
        REQUIRE(cycle.has_value());
        const std::string painted = export_dot(sys, rho0, cycle);
        CHECK(painted.find("\"2\" -> \"3\" [label=\"1\", penwidth=2.4, color=red];") !=
              std::string::npos);
        CHECK(painted.find("\"3\" -> \"2\" [label=\"2\", penwidth=2.4, color=red];") !=
              std::string::npos);
        size_t reds = 0;
        for (size_t at = painted.find("color=red"); at != std::string::npos;
             at = painted.find("color=red", at + 1)) {
            ++reds;
        }
        CHECK(reds == 2);
    }

    SUBCASE("acyclic states highlight nothing") {
        const RotorConfiguration flat = fixtures::config({3, 1, 1});
        const std::string plain =
            export_dot(sys, flat, find_cycle(sys, flat));
        CHECK(plain.find("color=red") == std::string::npos);
    }
}

TEST_CASE("the command line reproduces the worked example") {
    const std::string g5 = fixture_path("g5.rotor");

    SUBCASE("hitting sequence, pinned output") {
        const CliRun run = cli({"hit", g5, "--n", "9"});
        CHECK(run.status == 0);
        CHECK(run.out == "4 4 5 4 4 5 4 4 5\n");
        CHECK(run.err.empty());
    }
    SUBCASE("the default hit count is three periods") {
        CHECK(cli({"hit", g5}).out == "4 4 5 4 4 5 4 4 5\n");
    }
    SUBCASE("period line, pinned output") {
        const CliRun run = cli({"period", g5});
        CHECK(run.status == 0);
        CHECK(run.out == "D=3 p=3 word=4,4,5\n");
    }
    SUBCASE("walks with their gamma blocks") {
        const CliRun run = cli({"walk", g5, "--n", "4"});
        CHECK(run.status == 0);
        CHECK(run.out ==
              "walk: 1 3 4 1 4 1 5 1 3 2 3 4\n"
              "gamma 1: 1 3\n"
              "gamma 2: 1\n"
              "gamma 3: 1\n"
              "gamma 4: 1 3 2 3\n"
              "hits: 4 4 5 4\n");
    }
    SUBCASE("canonical state lines") {
        const CliRun run = cli({"canonical", g5});
        CHECK(run.status == 0);
        CHECK(run.out == "state 1: 3\nstate 2: 1\nstate 3: 1\n");
    }
    SUBCASE("class listing") {
        const CliRun run = cli({"classes", g5});
        CHECK(run.status == 0);
        CHECK(run.out.rfind("classes: 3\n", 0) == 0);
        CHECK(run.out.find("class 1 size 2 canonical 1=1 2=1 3=1") !=
              std::string::npos);
        CHECK(run.out.find("  member 1=1 2=1 3=2") != std::string::npos);
    }
    SUBCASE("sandpile identity and source order") {
        CHECK(cli({"identity", g5}).out == "identity: 1=0 2=0 3=1\n");
        CHECK(cli({"order", g5}).out == "g_s: 1=1 2=0 3=1\norder: 3\n");
    }
    SUBCASE("dot drawing on stdout") {
        const CliRun run = cli({"export-dot", g5, "--highlight"});
        CHECK(run.status == 0);
        CHECK(run.out.rfind("digraph rotor_walk {", 0) == 0);
        CHECK(run.out.find("color=red") != std::string::npos);
    }
}

TEST_CASE("the command line speaks machine-readable JSON on demand") {
    const std::string g5 = fixture_path("g5.rotor");
    using nlohmann::json;

    SUBCASE("walk document") {
        const CliRun run = cli({"walk", g5, "--n", "2", "--json"});
        CHECK(run.status == 0);
        const json doc = json::parse(run.out);
        CHECK(doc["walk"] == json::parse(R"(["1","3","4","1","4"])"));
        CHECK(doc["gammas"] == json::parse(R"([["1","3"],["1"]])"));
        CHECK(doc["hits"] == json::parse(R"(["4","4"])"));
    }
    SUBCASE("hit and period documents") {
        const json hits = json::parse(cli({"hit", g5, "--n", "3", "--json"}).out);
        CHECK(hits["hits"] == json::parse(R"(["4","4","5"])"));
        const json period = json::parse(cli({"period", g5, "--json"}).out);
        CHECK(period["D"] == 3);
        CHECK(period["p"] == 3);
        CHECK(period["word"] == json::parse(R"(["4","4","5"])"));
    }
    SUBCASE("canonical, classes, identity, order documents") {
        const json canon = json::parse(cli({"canonical", g5, "--json"}).out);
        CHECK(canon["canonical"]["1"] == 3);
        CHECK(canon["canonical"]["3"] == 1);
        const json classes = json::parse(cli({"classes", g5, "--json"}).out);
        CHECK(classes["count"] == 3);
        CHECK(classes["classes"].size() == 3);
        const json identity = json::parse(cli({"identity", g5, "--json"}).out);
        CHECK(identity["identity"]["3"] == 1);
        const json order = json::parse(cli({"order", g5, "--json"}).out);
        CHECK(order["g_s"]["1"] == 1);
        CHECK(order["order"] == 3);
    }
    SUBCASE("verify document") {
        const json doc =
            json::parse(cli({"verify", "periodic", "--random", "5", "--seed",
                             "3", "--json"})
                            .out);
        CHECK(doc["suite"] == "periodic");
        CHECK(doc["total"] == 5);
        CHECK(doc["passed"] == 5);
        CHECK(doc["failures"].empty());
    }
}

TEST_CASE("the verify command prints one PASS line per batch") {
    const CliRun run = cli({"verify", "reversal", "--random", "50", "--seed", "7"});
    CHECK(run.status == 0);
    CHECK(run.out == "PASS 50/50\n");
    CHECK(run.err.empty());

    const CliRun unknown = cli({"verify", "sideways"});
    CHECK(unknown.status == 1);
    CHECK(unknown.err.find("ValidationError") != std::string::npos);
    CHECK(unknown.err.find("sideways") != std::string::npos);
}

TEST_CASE("command failures report structured errors and exit nonzero") {
    SUBCASE("missing instance file") {
        const CliRun run = cli({"period", "/nonexistent/missing.rotor"});
        CHECK(run.status == 1);
        CHECK(run.out.empty());
        const auto doc = nlohmann::json::parse(run.err);
        CHECK(doc["error"] == "ParseError");
        CHECK(doc["message"] == "cannot open '/nonexistent/missing.rotor'");
    }
    SUBCASE("parse errors surface their position") {
        const std::string path =
            write_temp("rotor_bad_slot.rotor", kG5Text + "state 2: 2\n");
        const CliRun run = cli({"period", path});
        CHECK(run.status == 1);
        const auto doc = nlohmann::json::parse(run.err);
        CHECK(doc["error"] == "ValidationError");
        CHECK(doc["line"] == 7);
        CHECK(doc["column"] == 10);
    }
    SUBCASE("usage errors come from the argument parser") {
        CHECK(cli({}).status != 0);
        CHECK(cli({"walk"}).status != 0);           // missing instance path
        CHECK(cli({"nonsense", "x"}).status != 0);  // no such subcommand
    }
}

TEST_CASE("budget flags override budgets stored in the file") {
    // An orbit budget of 2 cannot cover the period-3 orbit; the flag can.
    const std::string path = write_temp("rotor_tight_budget.rotor",
                                        kG5Text + "budget orbit 2\n");
    const CliRun starved = cli({"period", path});
    CHECK(starved.status == 1);
    CHECK(nlohmann::json::parse(starved.err)["error"] == "OrbitBudgetExceeded");

    const CliRun rescued = cli({"period", path, "--orbit-budget", "10"});
    CHECK(rescued.status == 0);
    CHECK(rescued.out == "D=3 p=3 word=4,4,5\n");
}
