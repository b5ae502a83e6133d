#include "rotor/graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace rotor {

namespace {

std::vector<std::vector<VertexId>> successor_sets(const Multigraph& g) {
    // Deduplicated successors, including the implicit t -> s arcs.
    std::vector<std::vector<VertexId>> succ(static_cast<size_t>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.is_target(v)) {
            succ[static_cast<size_t>(v)].push_back(g.source());
            continue;
        }
        auto heads = g.out_heads(v);
        std::sort(heads.begin(), heads.end());
        heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
        succ[static_cast<size_t>(v)] = std::move(heads);
    }
    return succ;
}

}  // namespace

Multigraph Multigraph::from_spec(const GraphSpec& spec) {
    Multigraph g;
    std::unordered_map<std::string, VertexId> id_of;
    for (const auto& name : spec.vertices) {
        if (id_of.count(name)) {
            throw Error(ErrorCode::ValidationError, "duplicate vertex '" + name + "'");
        }
        id_of.emplace(name, static_cast<VertexId>(g.labels_.size()));
        g.labels_.push_back(name);
    }
    auto lookup = [&](const std::string& name) {
        auto it = id_of.find(name);
        if (it == id_of.end()) {
            throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + name + "'");
        }
        return it->second;
    };

    const int n = g.vertex_count();
    g.is_target_.assign(static_cast<size_t>(n), false);
    if (spec.targets.empty()) {
        throw Error(ErrorCode::EmptyTargets, "target set must be non-empty");
    }
    for (const auto& name : spec.targets) {
        g.is_target_[static_cast<size_t>(lookup(name))] = true;
    }
    g.source_ = lookup(spec.source);
    if (g.is_target_[static_cast<size_t>(g.source_)]) {
        throw Error(ErrorCode::SourceIsTarget,
                    "source '" + spec.source + "' must not be a target");
    }

    g.v0_pos_.assign(static_cast<size_t>(n), -1);
    for (VertexId v = 0; v < n; ++v) {
        if (g.is_target_[static_cast<size_t>(v)]) {
            g.targets_.push_back(v);
        } else {
            g.v0_pos_[static_cast<size_t>(v)] = static_cast<int>(g.v0_.size());
            g.v0_.push_back(v);
        }
    }

    g.heads_.assign(static_cast<size_t>(n), {});
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (const auto& [name, head_names] : spec.rotors) {
        const VertexId v = lookup(name);
        if (seen[static_cast<size_t>(v)]) {
            throw Error(ErrorCode::ValidationError,
                        "duplicate rotor list for vertex '" + name + "'");
        }
        seen[static_cast<size_t>(v)] = true;
        std::vector<VertexId> heads;
        heads.reserve(head_names.size());
        for (const auto& h : head_names) heads.push_back(lookup(h));
        if (g.is_target_[static_cast<size_t>(v)]) {
            // A target's only admissible list is the implicit return arc made
            // explicit: exactly [source]. Anything else contradicts the model.
            if (!heads.empty() && heads != std::vector<VertexId>{g.source_}) {
                throw Error(ErrorCode::InvalidMechanism,
                            "target '" + name + "' may only list the source");
            }
            continue;
        }
        g.heads_[static_cast<size_t>(v)] = std::move(heads);
    }
    for (VertexId v : g.v0_) {
        if (g.heads_[static_cast<size_t>(v)].empty()) {
            throw Error(ErrorCode::DanglingVertex,
                        "non-target vertex '" + g.label(v) + "' has no out-arcs");
        }
    }
    return g;
}

Multigraph Multigraph::build_unchecked(const GraphSpec& spec) {
    return from_spec(spec);
}

Multigraph Multigraph::build(const GraphSpec& spec) {
    Multigraph g = from_spec(spec);
    if (auto pair = find_unreachable_pair(g)) {
        throw Error(ErrorCode::NotStronglyConnected,
                    "no directed path from '" + g.label(pair->first) + "' to '" +
                        g.label(pair->second) + "'");
    }
    return g;
}

int Multigraph::arc_multiplicity(VertexId v, VertexId w) const {
    int count = 0;
    for (VertexId h : heads_[static_cast<size_t>(v)]) {
        if (h == w) ++count;
    }
    return count;
}

long long Multigraph::total_out_degree() const {
    long long sum = 0;
    for (VertexId v : v0_) sum += out_degree(v);
    return sum;
}

VertexId Multigraph::vertex_by_label(const std::string& label) const {
    for (VertexId v = 0; v < vertex_count(); ++v) {
        if (labels_[static_cast<size_t>(v)] == label) return v;
    }
    throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + label + "'");
}

std::optional<std::pair<VertexId, VertexId>> find_unreachable_pair(const Multigraph& g) {
    const int n = g.vertex_count();
    const auto succ = successor_sets(g);
    for (VertexId from = 0; from < n; ++from) {
        std::vector<bool> reached(static_cast<size_t>(n), false);
        std::vector<VertexId> stack{from};
        reached[static_cast<size_t>(from)] = true;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : succ[static_cast<size_t>(v)]) {
                if (!reached[static_cast<size_t>(w)]) {
                    reached[static_cast<size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        for (VertexId to = 0; to < n; ++to) {
            if (!reached[static_cast<size_t>(to)]) return std::make_pair(from, to);
        }
    }
    return std::nullopt;
}

bool is_strongly_connected(const Multigraph& g) {
    return !find_unreachable_pair(g).has_value();
}

}  // namespace rotor
