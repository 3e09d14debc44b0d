#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qp {

using VertexId = int;
using ArrowId = int;
using PathId = int;

constexpr PathId kNoPath = -1;

/// "Natural" label order: pure decimal labels compare numerically, everything
/// else lexicographically, numbers before non-numbers. Breaks every tie in
/// the library (path enumeration, tree choice, bypass order).
bool natural_label_less(const std::string& a, const std::string& b);

struct Arrow {
    ArrowId id;
    std::string label;
    VertexId src;
    VertexId tgt;
};

/// A finite quiver (directed multigraph) with distinct vertex and arrow
/// labels. Vertices and arrows are stored in natural label order, so ids are
/// deterministic for a given label set.
class Quiver {
public:
    Quiver(std::vector<std::string> vertex_labels,
           std::vector<std::tuple<std::string, std::string, std::string>> arrows);

    int vertex_count() const { return static_cast<int>(vertex_labels_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const std::string& vertex_label(VertexId v) const { return vertex_labels_[v]; }
    const Arrow& arrow(ArrowId a) const { return arrows_[a]; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::optional<VertexId> vertex_by_label(const std::string& label) const;
    std::optional<ArrowId> arrow_by_label(const std::string& label) const;

    const std::vector<ArrowId>& arrows_from(VertexId v) const { return out_[v]; }
    const std::vector<ArrowId>& arrows_into(VertexId v) const { return in_[v]; }

    bool is_connected() const;  // underlying undirected graph
    bool is_acyclic() const { return !find_cycle().has_value(); }
    /// Returns one oriented cycle as an arrow sequence (application order),
    /// or nullopt when the quiver is acyclic.
    std::optional<std::vector<ArrowId>> find_cycle() const;

private:
    std::vector<std::string> vertex_labels_;
    std::vector<Arrow> arrows_;
    std::map<std::string, VertexId> vertex_index_;
    std::map<std::string, ArrowId> arrow_index_;
    std::vector<std::vector<ArrowId>> out_, in_;
};

/// One oriented path. Arrows are stored in application order (first applied
/// first); the display form joins labels right to left, so a path applying
/// b, then c, then d prints as "d*c*b". Length 0 paths are the stationary
/// paths e_x.
struct PathData {
    PathId id;
    VertexId src;
    VertexId tgt;
    std::vector<ArrowId> arrows;  // application order
    int length() const { return static_cast<int>(arrows.size()); }
};

/// All oriented paths of an acyclic quiver, enumerated once and indexed in
/// the canonical order: stationary paths by vertex order, then by (length,
/// label sequence read right-to-left). PathIds respect this order, so
/// ascending ids are the deterministic path order used everywhere.
class PathTable {
public:
    explicit PathTable(const Quiver& q);  // throws QuiverError on a cycle

    const Quiver& quiver() const { return *q_; }
    int count() const { return static_cast<int>(paths_.size()); }
    const PathData& path(PathId p) const { return paths_[p]; }
    int longest_length() const { return longest_; }

    PathId stationary(VertexId v) const { return stationary_[v]; }
    PathId arrow_path(ArrowId a) const { return arrow_path_[a]; }
    std::optional<PathId> by_arrows(std::span<const ArrowId> arrows) const;

    /// later ∘ first (apply `first`, then `later`); kNoPath if not composable.
    PathId compose(PathId later, PathId first) const;

    /// Paths from s to t (the parallel class), in canonical order.
    const std::vector<PathId>& parallel_class(VertexId s, VertexId t) const;
    /// Nonempty parallel classes in deterministic order.
    const std::vector<std::pair<std::pair<VertexId, VertexId>, std::vector<PathId>>>& classes() const {
        return classes_;
    }
    const std::vector<PathId>& paths_from(VertexId v) const { return from_[v]; }
    const std::vector<PathId>& paths_into(VertexId v) const { return into_[v]; }

    std::string display(PathId p) const;  // "d*c*b", "e_1"

private:
    const Quiver* q_;
    std::vector<PathData> paths_;
    std::vector<PathId> stationary_;
    std::vector<PathId> arrow_path_;
    std::map<std::vector<ArrowId>, PathId> by_arrows_;
    std::vector<std::pair<std::pair<VertexId, VertexId>, std::vector<PathId>>> classes_;
    std::map<std::pair<VertexId, VertexId>, std::size_t> class_index_;
    std::vector<std::vector<PathId>> from_, into_;
    int longest_ = 0;
};

/// enumerate_paths: every oriented path of length >= min_len, grouped by
/// parallel class, canonical order within each group.
std::vector<std::pair<std::pair<VertexId, VertexId>, std::vector<PathId>>> enumerate_paths(
    const PathTable& paths, int min_len);

/// An arrow together with a distinct parallel oriented path.
struct Bypass {
    ArrowId arrow;
    PathId detour;
    bool operator==(const Bypass&) const = default;
};

/// Two bypasses (alpha, u), (beta, v) with beta an arrow of u. Parallel
/// arrows alpha != beta show up as (alpha, beta, beta, alpha).
struct DoubleBypass {
    Bypass first;
    Bypass second;
};

std::vector<Bypass> enumerate_bypasses(const PathTable& paths);
std::vector<DoubleBypass> detect_double_bypasses(const PathTable& paths);

/// One step of a walk: an arrow traversed forward or against its direction.
struct Step {
    ArrowId arrow;
    bool forward;
    bool operator==(const Step&) const = default;
};

/// An unoriented path: a composable sequence of forward/inverse arrow steps.
/// The reduced form cancels adjacent mutually-inverse steps and is unique.
class Walk {
public:
    Walk() = default;
    Walk(VertexId at) : from_(at), to_(at) {}  // stationary walk e_at
    Walk(VertexId from, VertexId to, std::vector<Step> steps)
        : from_(from), to_(to), steps_(std::move(steps)) {}

    static Walk of_path(const PathTable& paths, PathId p);

    VertexId from() const { return from_; }
    VertexId to() const { return to_; }
    const std::vector<Step>& steps() const { return steps_; }
    int length() const { return static_cast<int>(steps_.size()); }

    Walk reversed() const;
    Walk reduced() const;
    /// Concatenation: traverse *this, then `next` (next.from() == to()).
    Walk then(const Walk& next) const;

    std::string display(const Quiver& q) const;

    bool operator==(const Walk&) const = default;

private:
    VertexId from_ = 0;
    VertexId to_ = 0;
    std::vector<Step> steps_;
};

/// Breadth-first spanning tree of the underlying graph, ties broken by
/// natural arrow order. Chords (non-tree arrows) freely generate the
/// fundamental group of the underlying graph.
class SpanningTree {
public:
    SpanningTree(const Quiver& q, VertexId basepoint);  // throws if disconnected

    VertexId basepoint() const { return basepoint_; }
    const std::vector<ArrowId>& tree_arrows() const { return tree_; }
    const std::vector<ArrowId>& chords() const { return chords_; }
    bool in_tree(ArrowId a) const { return is_tree_[a]; }
    /// Index of a chord among chords(), -1 for tree arrows.
    int chord_index(ArrowId a) const { return chord_index_[a]; }
    /// The unique reduced tree walk basepoint -> v.
    const Walk& tree_walk(VertexId v) const { return walk_[v]; }

private:
    VertexId basepoint_;
    std::vector<ArrowId> tree_, chords_;
    std::vector<bool> is_tree_;
    std::vector<int> chord_index_;
    std::vector<Walk> walk_;
};

}  // namespace qp
