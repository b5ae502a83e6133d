#include "rotor/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rotor/analysis.hpp"
#include "rotor/dot_export.hpp"
#include "rotor/instance_io.hpp"
#include "rotor/verify_suites.hpp"

namespace rotor {

namespace {

using nlohmann::ordered_json;

std::string join_labels(const Multigraph& g, const std::vector<VertexId>& seq,
                        const char* sep) {
    std::string out;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i > 0) out += sep;
        out += g.label(seq[i]);
    }
    return out;
}

ordered_json labels_json(const Multigraph& g, const std::vector<VertexId>& seq) {
    ordered_json arr = ordered_json::array();
    for (VertexId v : seq) arr.push_back(g.label(v));
    return arr;
}

std::string format_config(const Multigraph& g, const RotorConfiguration& rho) {
    std::string out;
    for (VertexId v : g.non_targets()) {
        if (!out.empty()) out += ' ';
        out += g.label(v) + "=" +
               std::to_string(rho.slots[static_cast<size_t>(g.v0_index(v))]);
    }
    return out;
}

ordered_json config_json(const Multigraph& g, const RotorConfiguration& rho) {
    ordered_json obj = ordered_json::object();
    for (VertexId v : g.non_targets()) {
        obj[g.label(v)] = rho.slots[static_cast<size_t>(g.v0_index(v))];
    }
    return obj;
}

std::string format_counts(const Multigraph& g, const std::vector<long long>& counts) {
    std::string out;
    for (VertexId v : g.non_targets()) {
        if (!out.empty()) out += ' ';
        out += g.label(v) + "=" +
               std::to_string(counts[static_cast<size_t>(g.v0_index(v))]);
    }
    return out;
}

ordered_json counts_json(const Multigraph& g, const std::vector<long long>& counts) {
    ordered_json obj = ordered_json::object();
    for (VertexId v : g.non_targets()) {
        obj[g.label(v)] = counts[static_cast<size_t>(g.v0_index(v))];
    }
    return obj;
}

struct Options {
    std::string instance_path;
    bool json = false;
    long long n = 0;  // 0 = auto (3D when computable, else 30)
    long long step_budget = 0;
    long long push_budget = 0;
    long long orbit_budget = 0;
    long long cap = 100000;
    bool highlight = false;
    std::string suite;
    int random_count = 50;
    uint64_t seed = 1;
};

// Flag beats file setting beats module default (0 downstream).
long long resolve(long long flag, const std::optional<long long>& file_setting) {
    if (flag > 0) return flag;
    return file_setting.value_or(0);
}

long long auto_hit_count(const RotorSystem& sys, const RotorConfiguration& rho0,
                         long long orbit_budget) {
    try {
        return 3 * class_orbit_period(sys, rho0, orbit_budget);
    } catch (const Error&) {
        return 30;
    }
}

int cmd_walk(const Options& opt, std::ostream& out) {
    const Instance inst = load_instance(opt.instance_path);
    const Multigraph& g = inst.system.graph();
    const long long steps = resolve(opt.step_budget, inst.step_budget);
    const long long n =
        opt.n > 0 ? opt.n
                  : auto_hit_count(inst.system, inst.state,
                                   resolve(opt.orbit_budget, inst.orbit_budget));

    std::vector<VertexId> raw;
    std::vector<std::vector<VertexId>> gammas;
    std::vector<VertexId> hits;
    RotorConfiguration rho = inst.state;
    for (long long i = 0; i < n; ++i) {
        WalkTrace trace =
            walk_to_target(inst.system, rho, g.source(), WalkMode::particle, steps);
        rho = trace.rotors;
        raw.insert(raw.end(), trace.path.begin(), trace.path.end());
        gammas.emplace_back(trace.path.begin(), trace.path.end() - 1);
        hits.push_back(trace.target);
    }

    if (opt.json) {
        ordered_json gamma_arr = ordered_json::array();
        for (const auto& gamma : gammas) gamma_arr.push_back(labels_json(g, gamma));
        const ordered_json doc{{"walk", labels_json(g, raw)},
                               {"gammas", std::move(gamma_arr)},
                               {"hits", labels_json(g, hits)}};
        out << doc.dump() << '\n';
        return 0;
    }
    out << "walk: " << join_labels(g, raw, " ") << '\n';
    for (size_t i = 0; i < gammas.size(); ++i) {
        out << "gamma " << (i + 1) << ": " << join_labels(g, gammas[i], " ") << '\n';
    }
    out << "hits: " << join_labels(g, hits, " ") << '\n';
    return 0;
}

int cmd_hit(const Options& opt, std::ostream& out) {
    const Instance inst = load_instance(opt.instance_path);
    const Multigraph& g = inst.system.graph();
    const long long n =
        opt.n > 0 ? opt.n
                  : auto_hit_count(inst.system, inst.state,
                                   resolve(opt.orbit_budget, inst.orbit_budget));
    const auto hits = hitting_stream(inst.system, inst.state, n,
                                     resolve(opt.step_budget, inst.step_budget))
                          .targets;
    if (opt.json) {
        out << ordered_json{{"hits", labels_json(g, hits)}}.dump() << '\n';
        return 0;
    }
    out << join_labels(g, hits, " ") << '\n';
    return 0;
}

int cmd_period(const Options& opt, std::ostream& out) {
    const Instance inst = load_instance(opt.instance_path);
    const Multigraph& g = inst.system.graph();
    const HittingReport report = analyze_hitting(
        inst.system, inst.state, resolve(opt.orbit_budget, inst.orbit_budget));
    if (opt.json) {
        const ordered_json doc{{"D", report.class_period},
                               {"p", report.minimal_period},
                               {"word", labels_json(g, report.word)}};
        out << doc.dump() << '\n';
        return 0;
    }
    out << "D=" << report.class_period << " p=" << report.minimal_period
        << " word=" << join_labels(g, report.word, ",") << '\n';
    return 0;
}

int cmd_canonical(const Options& opt, std::ostream& out) {
    const Instance inst = load_instance(opt.instance_path);
    const Multigraph& g = inst.system.graph();
    const RotorConfiguration canon = complete_cycle_pushing(
        inst.system, inst.state, resolve(opt.push_budget, inst.push_budget));
    if (opt.json) {
        out << ordered_json{{"canonical", config_json(g, canon)}}.dump() << '\n';
        return 0;
    }
    for (VertexId v : g.non_targets()) {
        out << "state " << g.label(v) << ": "
            << canon.slots[static_cast<size_t>(g.v0_index(v))] << '\n';
    }
    return 0;
}

int cmd_classes(const Options& opt, std::ostream& out) {
    const Instance inst = load_instance(opt.instance_path);
    const Multigraph& g = inst.system.graph();
    const long long push = resolve(opt.push_budget, inst.push_budget);
    std::map<RotorConfiguration, std::vector<RotorConfiguration>> classes;
    for (auto& rho : enumerate_configurations(inst.system, opt.cap)) {
        RotorConfiguration canon = complete_cycle_pushing(inst.system, rho, push);
        classes[std::move(canon)].push_back(std::move(rho));
    }
    if (opt.json) {
        ordered_json arr = ordered_json::array();
        for (const auto& [canon, members] : classes) {
            ordered_json member_arr = ordered_json::array();
            for (const auto& member : members) member_arr.push_back(config_json(g, member));
            arr.push_back(ordered_json{{"canonical", config_json(g, canon)},
                                       {"members", std::move(member_arr)}});
        }
        const ordered_json doc{{"count", classes.size()}, {"classes", std::move(arr)}};
        out << doc.dump() << '\n';
        return 0;
    }
    out << "classes: " << classes.size() << '\n';
    size_t index = 1;
    for (const auto& [canon, members] : classes) {
        out << "class " << index++ << " size " << members.size() << " canonical "
            << format_config(g, canon) << '\n';
        for (const auto& member : members) {
            out << "  member " << format_config(g, member) << '\n';
        }
    }
    return 0;
}

int cmd_identity(const Options& opt, std::ostream& out) {
    const Instance inst = load_instance(opt.instance_path);
    const Multigraph& g = inst.system.graph();
    const GroupElement e = identity_element(g);
    if (opt.json) {
        out << ordered_json{{"identity", counts_json(g, e.counts)}}.dump() << '\n';
        return 0;
    }
    out << "identity: " << format_counts(g, e.counts) << '\n';
    return 0;
}

int cmd_order(const Options& opt, std::ostream& out) {
    const Instance inst = load_instance(opt.instance_path);
    const Multigraph& g = inst.system.graph();
    const GroupElement e = identity_element(g);
    const GroupElement gs = source_group_element(g, &e);
    const long long order = order_of(g, gs, &e);
    if (opt.json) {
        const ordered_json doc{{"g_s", counts_json(g, gs.counts)}, {"order", order}};
        out << doc.dump() << '\n';
        return 0;
    }
    out << "g_s: " << format_counts(g, gs.counts) << '\n';
    out << "order: " << order << '\n';
    return 0;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto kind = suite_from_name(opt.suite);
    if (!kind) {
        throw Error(ErrorCode::ValidationError,
                    "unknown suite '" + opt.suite +
                        "'; expected periodic|reversal|palindrome|repetitive|abelian|eqclass");
    }
    const SuiteResult result = run_suite(*kind, opt.random_count, opt.seed);
    if (opt.json) {
        ordered_json failures = ordered_json::array();
        for (const auto& failure : result.failures) failures.push_back(failure);
        const ordered_json doc{{"suite", result.name},
                               {"total", result.total},
                               {"passed", result.passed},
                               {"failures", std::move(failures)}};
        out << doc.dump() << '\n';
    } else {
        out << (result.ok() ? "PASS " : "FAIL ") << result.passed << "/" << result.total
            << '\n';
        for (const auto& failure : result.failures) err << failure << '\n';
    }
    return result.ok() ? 0 : 1;
}

int cmd_export_dot(const Options& opt, std::ostream& out) {
    const Instance inst = load_instance(opt.instance_path);
    std::optional<RotorCycle> highlight;
    if (opt.highlight) highlight = find_cycle(inst.system, inst.state);
    out << export_dot(inst.system, inst.state, highlight);
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"rotor walks, sandpile algebra, and hitting-sequence analysis"};
    app.require_subcommand(1);
    Options opt;

    auto add_instance = [&](CLI::App* cmd) {
        cmd->add_option("instance", opt.instance_path, "instance file")->required();
        cmd->add_flag("--json", opt.json, "emit JSON instead of text");
    };

    CLI::App* walk = app.add_subcommand("walk", "raw walk, gamma blocks, and hits");
    add_instance(walk);
    walk->add_option("--n", opt.n, "target hits to take (default 3*D, else 30)");
    walk->add_option("--step-budget", opt.step_budget, "cap per single walk");
    walk->add_option("--orbit-budget", opt.orbit_budget, "cap for the default-n orbit scan");

    CLI::App* hit = app.add_subcommand("hit", "hitting sequence t_1..t_n");
    add_instance(hit);
    hit->add_option("--n", opt.n, "target hits to take (default 3*D, else 30)");
    hit->add_option("--step-budget", opt.step_budget, "cap per single walk");
    hit->add_option("--orbit-budget", opt.orbit_budget, "cap for the default-n orbit scan");

    CLI::App* period = app.add_subcommand("period", "class period D, minimal period, word");
    add_instance(period);
    period->add_option("--orbit-budget", opt.orbit_budget, "cap on the class orbit scan");

    CLI::App* canonical = app.add_subcommand("canonical", "canonical acyclic form of the state");
    add_instance(canonical);
    canonical->add_option("--push-budget", opt.push_budget, "cap on cycle pushes");

    CLI::App* classes = app.add_subcommand("classes", "equivalence classes of all configurations");
    add_instance(classes);
    classes->add_option("--cap", opt.cap, "configuration enumeration cap");
    classes->add_option("--push-budget", opt.push_budget, "cap on cycle pushes");

    CLI::App* identity = app.add_subcommand("identity", "sandpile group identity");
    add_instance(identity);

    CLI::App* order = app.add_subcommand("order", "g_s and its order in the sandpile group");
    add_instance(order);

    CLI::App* verify = app.add_subcommand("verify", "run a random-instance property suite");
    verify->add_option("suite", opt.suite,
                       "periodic|reversal|palindrome|repetitive|abelian|eqclass")
        ->required();
    verify->add_option("--random", opt.random_count, "number of random instances");
    verify->add_option("--seed", opt.seed, "master seed for the batch");
    verify->add_flag("--json", opt.json, "emit JSON instead of text");

    CLI::App* export_dot_cmd = app.add_subcommand("export-dot", "Graphviz view of the state");
    add_instance(export_dot_cmd);
    export_dot_cmd->add_flag("--highlight", opt.highlight, "color the detected rotor cycle");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (walk->parsed()) return cmd_walk(opt, out);
        if (hit->parsed()) return cmd_hit(opt, out);
        if (period->parsed()) return cmd_period(opt, out);
        if (canonical->parsed()) return cmd_canonical(opt, out);
        if (classes->parsed()) return cmd_classes(opt, out);
        if (identity->parsed()) return cmd_identity(opt, out);
        if (order->parsed()) return cmd_order(opt, out);
        if (verify->parsed()) return cmd_verify(opt, out, err);
        if (export_dot_cmd->parsed()) return cmd_export_dot(opt, out);
    } catch (const Error& e) {
        ordered_json detail{{"error", std::string(to_string(e.code()))},
                            {"message", e.what()}};
        if (e.line() >= 0) detail["line"] = e.line();
        if (e.column() >= 0) detail["column"] = e.column();
        err << detail.dump() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace rotor
