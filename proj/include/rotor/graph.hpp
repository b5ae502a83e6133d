#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rotor/error.hpp"

namespace rotor {

using VertexId = int;

// An arc is identified by (tail, slot): slot i in 1..d(tail) is the i-th
// position of the tail's mechanism ordering. Parallel arcs differ in slot.
struct Arc {
    VertexId tail = -1;
    int slot = 0;
    VertexId head = -1;

    auto operator<=>(const Arc&) const = default;
};

// Construction input: per-vertex ordered head lists keyed by user-facing
// labels. Declaration order of `vertices` fixes the dense internal ids.
struct GraphSpec {
    std::vector<std::string> vertices;
    std::string source;
    std::vector<std::string> targets;
    std::vector<std::pair<std::string, std::vector<std::string>>> rotors;
};

// Finite directed multigraph with a designated source and non-empty target
// set. The out-arc list of each non-target vertex IS its mechanism ordering,
// so the mechanism has period exactly d(v) by construction. Target vertices
// carry no explicit out-arcs; an implicit arc t -> s exists at every target
// for connectivity checking only and is never traversed.
//
// Immutable after construction; safe to share across threads.
class Multigraph {
public:
    // Full validation: shape errors, then strong connectivity (with the
    // implicit t -> s arcs). Throws Error on violation.
    static Multigraph build(const GraphSpec& spec);

    // Validates shape only; connectivity may be queried afterwards with
    // is_strongly_connected. Intended for connectivity testing.
    static Multigraph build_unchecked(const GraphSpec& spec);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int non_target_count() const { return static_cast<int>(v0_.size()); }
    VertexId source() const { return source_; }
    const std::vector<VertexId>& targets() const { return targets_; }
    const std::vector<VertexId>& non_targets() const { return v0_; }

    bool is_target(VertexId v) const { return is_target_[static_cast<size_t>(v)]; }

    // Dense index of v within the ascending non-target list; -1 for targets.
    int v0_index(VertexId v) const { return v0_pos_[static_cast<size_t>(v)]; }
    VertexId v0_vertex(int index) const { return v0_[static_cast<size_t>(index)]; }

    // d(v); 0 for targets.
    int out_degree(VertexId v) const {
        return static_cast<int>(heads_[static_cast<size_t>(v)].size());
    }
    // d(v, w)
    int arc_multiplicity(VertexId v, VertexId w) const;
    // Sum of d(v) over v in V0.
    long long total_out_degree() const;

    // Head of the arc at (v, slot), slot 1-based.
    VertexId head(VertexId v, int slot) const {
        return heads_[static_cast<size_t>(v)][static_cast<size_t>(slot - 1)];
    }
    const std::vector<VertexId>& out_heads(VertexId v) const {
        return heads_[static_cast<size_t>(v)];
    }

    const std::string& label(VertexId v) const { return labels_[static_cast<size_t>(v)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    // Throws Error(UnknownVertex) when the label was never declared.
    VertexId vertex_by_label(const std::string& label) const;

    bool operator==(const Multigraph& other) const = default;

private:
    Multigraph() = default;
    static Multigraph from_spec(const GraphSpec& spec);

    std::vector<std::string> labels_;           // id -> label
    std::vector<std::vector<VertexId>> heads_;  // mechanism-order out-heads; empty at targets
    std::vector<bool> is_target_;
    std::vector<int> v0_pos_;                   // id -> dense V0 index, -1 at targets
    std::vector<VertexId> v0_;                  // ascending non-target ids
    std::vector<VertexId> targets_;             // ascending target ids
    VertexId source_ = -1;
};

// True iff every vertex reaches every other using explicit arcs plus the
// implicit t -> s arcs.
bool is_strongly_connected(const Multigraph& g);

// First (in id order) ordered pair (from, to) with no directed path, if any.
std::optional<std::pair<VertexId, VertexId>> find_unreachable_pair(const Multigraph& g);

}  // namespace rotor
