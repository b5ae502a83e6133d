#include "rotor/instance_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace rotor {

namespace {

struct Token {
    std::string text;
    int column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        const size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#') {
            ++i;
        }
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

[[noreturn]] void parse_fail(const std::string& message, int line, int column) {
    throw Error(ErrorCode::ParseError, message, line, column);
}

[[noreturn]] void validate_fail(const std::string& message, int line = -1,
                                int column = -1) {
    throw Error(ErrorCode::ValidationError, message, line, column);
}

template <typename Int>
Int parse_int(const Token& token, int line, const char* what) {
    Int value{};
    const char* begin = token.text.data();
    const char* end = begin + token.text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        parse_fail(std::string("expected ") + what + ", got '" + token.text + "'",
                   line, token.column);
    }
    return value;
}

struct Positioned {
    std::string text;
    int line = 0;
    int column = 0;
};

}  // namespace

Instance parse_instance(const std::string& text) {
    std::vector<Positioned> vertex_labels;
    std::optional<Positioned> source;
    std::vector<Positioned> target_labels;
    // label -> (heads, line)
    std::vector<std::pair<Positioned, std::vector<Positioned>>> rotor_lines;
    std::vector<std::pair<Positioned, std::pair<long long, Token>>> state_lines;
    std::optional<uint64_t> seed;
    std::optional<long long> step_budget, push_budget, orbit_budget;

    std::istringstream in(text);
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const Token& key = tokens[0];

        if (key.text == "vertices") {
            if (!vertex_labels.empty()) parse_fail("duplicate vertices line", ln, key.column);
            if (tokens.size() < 2) parse_fail("vertices line needs at least one label", ln, key.column);
            for (size_t i = 1; i < tokens.size(); ++i) {
                if (tokens[i].text.find(':') != std::string::npos) {
                    validate_fail("vertex label may not contain ':'", ln, tokens[i].column);
                }
                vertex_labels.push_back({tokens[i].text, ln, tokens[i].column});
            }
        } else if (key.text == "source") {
            if (source) parse_fail("duplicate source line", ln, key.column);
            if (tokens.size() != 2) parse_fail("source line needs exactly one label", ln, key.column);
            source = Positioned{tokens[1].text, ln, tokens[1].column};
        } else if (key.text == "targets") {
            if (!target_labels.empty()) parse_fail("duplicate targets line", ln, key.column);
            if (tokens.size() < 2) parse_fail("targets line needs at least one label", ln, key.column);
            for (size_t i = 1; i < tokens.size(); ++i) {
                target_labels.push_back({tokens[i].text, ln, tokens[i].column});
            }
        } else if (key.text == "rotor") {
            if (tokens.size() < 2 || tokens[1].text.size() < 2 || tokens[1].text.back() != ':') {
                parse_fail("expected 'rotor <vertex>: <heads...>'", ln, key.column);
            }
            Positioned vertex{tokens[1].text.substr(0, tokens[1].text.size() - 1), ln,
                              tokens[1].column};
            std::vector<Positioned> heads;
            for (size_t i = 2; i < tokens.size(); ++i) {
                heads.push_back({tokens[i].text, ln, tokens[i].column});
            }
            rotor_lines.emplace_back(std::move(vertex), std::move(heads));
        } else if (key.text == "state") {
            if (tokens.size() != 3 || tokens[1].text.size() < 2 || tokens[1].text.back() != ':') {
                parse_fail("expected 'state <vertex>: <slot>'", ln, key.column);
            }
            Positioned vertex{tokens[1].text.substr(0, tokens[1].text.size() - 1), ln,
                              tokens[1].column};
            const long long slot = parse_int<long long>(tokens[2], ln, "a slot index");
            state_lines.emplace_back(std::move(vertex), std::make_pair(slot, tokens[2]));
        } else if (key.text == "seed") {
            if (seed) parse_fail("duplicate seed line", ln, key.column);
            if (tokens.size() != 2) parse_fail("expected 'seed <value>'", ln, key.column);
            seed = parse_int<uint64_t>(tokens[1], ln, "an unsigned seed");
        } else if (key.text == "budget") {
            if (tokens.size() != 3) parse_fail("expected 'budget steps|pushes|orbit <value>'", ln, key.column);
            const long long value = parse_int<long long>(tokens[2], ln, "a positive budget");
            if (value <= 0) validate_fail("budget must be positive", ln, tokens[2].column);
            auto set = [&](std::optional<long long>& slot) {
                if (slot) parse_fail("duplicate budget " + tokens[1].text + " line", ln, key.column);
                slot = value;
            };
            if (tokens[1].text == "steps") {
                set(step_budget);
            } else if (tokens[1].text == "pushes") {
                set(push_budget);
            } else if (tokens[1].text == "orbit") {
                set(orbit_budget);
            } else {
                parse_fail("unknown budget kind '" + tokens[1].text + "'", ln, tokens[1].column);
            }
        } else {
            parse_fail("unknown directive '" + key.text + "'", ln, key.column);
        }
    }

    if (vertex_labels.empty()) validate_fail("missing vertices line");
    if (!source) validate_fail("missing source line");
    if (target_labels.empty()) validate_fail("missing targets line");

    std::map<std::string, int> declared;
    for (const auto& label : vertex_labels) {
        if (!declared.emplace(label.text, 0).second) {
            validate_fail("duplicate vertex '" + label.text + "'", label.line, label.column);
        }
    }
    auto require_declared = [&](const Positioned& label) {
        if (!declared.count(label.text)) {
            validate_fail("unknown vertex '" + label.text + "'", label.line, label.column);
        }
    };
    require_declared(*source);
    for (const auto& label : target_labels) require_declared(label);
    for (const auto& [vertex, heads] : rotor_lines) {
        require_declared(vertex);
        for (const auto& head : heads) require_declared(head);
    }

    GraphSpec spec;
    for (const auto& label : vertex_labels) spec.vertices.push_back(label.text);
    spec.source = source->text;
    for (const auto& label : target_labels) spec.targets.push_back(label.text);
    std::map<std::string, int> rotor_seen;
    for (const auto& [vertex, heads] : rotor_lines) {
        if (!rotor_seen.emplace(vertex.text, 0).second) {
            validate_fail("duplicate rotor line for '" + vertex.text + "'", vertex.line,
                          vertex.column);
        }
        std::vector<std::string> head_labels;
        for (const auto& head : heads) head_labels.push_back(head.text);
        spec.rotors.emplace_back(vertex.text, std::move(head_labels));
    }

    std::shared_ptr<const Multigraph> graph;
    try {
        graph = std::make_shared<const Multigraph>(Multigraph::build(spec));
    } catch (const Error& error) {
        validate_fail(std::string(to_string(error.code())) + ": " + error.what());
    }

    RotorSystem system(graph);
    RotorConfiguration state = initial_configuration(system);
    std::map<std::string, int> state_seen;
    for (const auto& [vertex, slot_token] : state_lines) {
        require_declared(vertex);
        const VertexId v = graph->vertex_by_label(vertex.text);
        if (graph->is_target(v)) {
            validate_fail("target '" + vertex.text + "' carries no rotor state",
                          vertex.line, vertex.column);
        }
        if (!state_seen.emplace(vertex.text, 0).second) {
            validate_fail("duplicate state line for '" + vertex.text + "'", vertex.line,
                          vertex.column);
        }
        const auto [slot, token] = slot_token;
        if (slot < 1 || slot > graph->out_degree(v)) {
            validate_fail("slot " + std::to_string(slot) + " out of range 1.." +
                              std::to_string(graph->out_degree(v)) + " for '" +
                              vertex.text + "'",
                          vertex.line, token.column);
        }
        state.slots[static_cast<size_t>(graph->v0_index(v))] = static_cast<int>(slot);
    }

    return Instance{std::move(system), std::move(state),
                    seed,  step_budget, push_budget, orbit_budget};
}

std::string render_instance(const Instance& instance) {
    const Multigraph& g = instance.system.graph();
    std::ostringstream out;
    out << "vertices";
    for (const auto& label : g.labels()) out << ' ' << label;
    out << '\n';
    out << "source " << g.label(g.source()) << '\n';
    out << "targets";
    for (VertexId t : g.targets()) out << ' ' << g.label(t);
    out << '\n';
    for (VertexId v : g.non_targets()) {
        out << "rotor " << g.label(v) << ':';
        for (VertexId head : instance.system.mechanism(v)) out << ' ' << g.label(head);
        out << '\n';
    }
    for (VertexId v : g.non_targets()) {
        out << "state " << g.label(v) << ": "
            << instance.state.slots[static_cast<size_t>(g.v0_index(v))] << '\n';
    }
    if (instance.seed) out << "seed " << *instance.seed << '\n';
    if (instance.step_budget) out << "budget steps " << *instance.step_budget << '\n';
    if (instance.push_budget) out << "budget pushes " << *instance.push_budget << '\n';
    if (instance.orbit_budget) out << "budget orbit " << *instance.orbit_budget << '\n';
    return out.str();
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

}  // namespace rotor
