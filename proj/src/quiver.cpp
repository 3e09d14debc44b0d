#include "qp/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

#include "qp/errors.hpp"

namespace qp {

bool natural_label_less(const std::string& a, const std::string& b) {
    auto is_number = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    bool na = is_number(a), nb = is_number(b);
    if (na && nb) {
        if (a.size() != b.size()) return a.size() < b.size();  // no leading zeros assumed
        return a < b;
    }
    if (na != nb) return na;
    return a < b;
}

Quiver::Quiver(std::vector<std::string> vertex_labels,
               std::vector<std::tuple<std::string, std::string, std::string>> arrows) {
    if (vertex_labels.empty()) throw QuiverError("a quiver needs at least one vertex");
    std::sort(vertex_labels.begin(), vertex_labels.end(), natural_label_less);
    for (std::size_t i = 0; i + 1 < vertex_labels.size(); ++i)
        if (vertex_labels[i] == vertex_labels[i + 1])
            throw QuiverError("duplicate vertex label '" + vertex_labels[i] + "'");
    vertex_labels_ = std::move(vertex_labels);
    for (VertexId v = 0; v < vertex_count(); ++v) vertex_index_[vertex_labels_[v]] = v;

    std::sort(arrows.begin(), arrows.end(), [](const auto& x, const auto& y) {
        return natural_label_less(std::get<0>(x), std::get<0>(y));
    });
    out_.resize(vertex_count());
    in_.resize(vertex_count());
    for (const auto& [label, src_label, tgt_label] : arrows) {
        if (arrow_index_.count(label)) throw QuiverError("duplicate arrow label '" + label + "'");
        auto s = vertex_by_label(src_label);
        auto t = vertex_by_label(tgt_label);
        if (!s) throw QuiverError("arrow '" + label + "': unknown vertex '" + src_label + "'");
        if (!t) throw QuiverError("arrow '" + label + "': unknown vertex '" + tgt_label + "'");
        ArrowId id = static_cast<ArrowId>(arrows_.size());
        arrows_.push_back(Arrow{id, label, *s, *t});
        arrow_index_[label] = id;
        out_[*s].push_back(id);
        in_[*t].push_back(id);
    }
}

std::optional<VertexId> Quiver::vertex_by_label(const std::string& label) const {
    auto it = vertex_index_.find(label);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<ArrowId> Quiver::arrow_by_label(const std::string& label) const {
    auto it = arrow_index_.find(label);
    if (it == arrow_index_.end()) return std::nullopt;
    return it->second;
}

bool Quiver::is_connected() const {
    std::vector<bool> seen(vertex_count(), false);
    std::deque<VertexId> queue{0};
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        auto visit = [&](VertexId w) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                queue.push_back(w);
            }
        };
        for (ArrowId a : out_[v]) visit(arrows_[a].tgt);
        for (ArrowId a : in_[v]) visit(arrows_[a].src);
    }
    return reached == vertex_count();
}

std::optional<std::vector<ArrowId>> Quiver::find_cycle() const {
    // Iterative DFS; a back edge to a vertex on the current stack closes a cycle.
    enum { White, Gray, Black };
    std::vector<int> color(vertex_count(), White);
    std::vector<ArrowId> via(vertex_count(), -1);  // arrow that entered the vertex

    for (VertexId root = 0; root < vertex_count(); ++root) {
        if (color[root] != White) continue;
        std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
        color[root] = Gray;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < out_[v].size()) {
                ArrowId a = out_[v][next++];
                VertexId w = arrows_[a].tgt;
                if (color[w] == White) {
                    color[w] = Gray;
                    via[w] = a;
                    stack.emplace_back(w, 0);
                } else if (color[w] == Gray) {
                    // Walk back from v to w along `via`, then append a.
                    std::vector<ArrowId> cycle{a};
                    VertexId x = v;
                    while (x != w) {
                        cycle.push_back(via[x]);
                        x = arrows_[via[x]].src;
                    }
                    std::reverse(cycle.begin(), cycle.end());
                    return cycle;
                }
            } else {
                color[v] = Black;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

namespace {

// Right-to-left label sequence, for the canonical path order.
std::vector<std::string> display_labels(const Quiver& q, const std::vector<ArrowId>& arrows) {
    std::vector<std::string> labels;
    labels.reserve(arrows.size());
    for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) labels.push_back(q.arrow(*it).label);
    return labels;
}

}  // namespace

PathTable::PathTable(const Quiver& q) : q_(&q) {
    if (auto cycle = q.find_cycle()) {
        std::string text;
        for (ArrowId a : *cycle) text += (text.empty() ? "" : ",") + q.arrow(a).label;
        throw QuiverError("quiver has an oriented cycle: " + text);
    }

    std::vector<PathData> all;
    for (VertexId v = 0; v < q.vertex_count(); ++v)
        all.push_back(PathData{0, v, v, {}});
    // Grow by one arrow at a time; finite because the quiver is acyclic.
    std::size_t begin = 0;
    while (begin < all.size()) {
        std::size_t end = all.size();
        for (std::size_t i = begin; i < end; ++i) {
            PathData p = all[i];
            for (ArrowId a : q.arrows_from(p.tgt)) {
                PathData ext = p;
                ext.arrows.push_back(a);
                ext.tgt = q.arrow(a).tgt;
                all.push_back(std::move(ext));
            }
        }
        begin = end;
    }

    std::sort(all.begin(), all.end(), [&](const PathData& x, const PathData& y) {
        if (x.length() != y.length()) return x.length() < y.length();
        if (x.length() == 0) return x.src < y.src;
        auto lx = display_labels(q, x.arrows), ly = display_labels(q, y.arrows);
        return std::lexicographical_compare(lx.begin(), lx.end(), ly.begin(), ly.end(),
                                            natural_label_less);
    });

    stationary_.assign(q.vertex_count(), kNoPath);
    arrow_path_.assign(q.arrow_count(), kNoPath);
    from_.resize(q.vertex_count());
    into_.resize(q.vertex_count());
    paths_ = std::move(all);
    std::map<std::pair<VertexId, VertexId>, std::vector<PathId>> grouped;
    for (PathId i = 0; i < count(); ++i) {
        PathData& p = paths_[i];
        p.id = i;
        by_arrows_[p.arrows] = i;
        if (p.length() == 0) stationary_[p.src] = i;
        if (p.length() == 1) arrow_path_[p.arrows[0]] = i;
        longest_ = std::max(longest_, p.length());
        grouped[{p.src, p.tgt}].push_back(i);
        from_[p.src].push_back(i);
        into_[p.tgt].push_back(i);
    }
    for (auto& [key, ids] : grouped) {
        class_index_[key] = classes_.size();
        classes_.emplace_back(key, std::move(ids));
    }
}

std::optional<PathId> PathTable::by_arrows(std::span<const ArrowId> arrows) const {
    std::vector<ArrowId> key(arrows.begin(), arrows.end());
    auto it = by_arrows_.find(key);
    if (it == by_arrows_.end()) return std::nullopt;
    return it->second;
}

PathId PathTable::compose(PathId later, PathId first) const {
    const PathData& f = paths_[first];
    const PathData& l = paths_[later];
    if (f.tgt != l.src) return kNoPath;
    std::vector<ArrowId> arrows = f.arrows;
    arrows.insert(arrows.end(), l.arrows.begin(), l.arrows.end());
    auto it = by_arrows_.find(arrows);
    return it == by_arrows_.end() ? kNoPath : it->second;
}

const std::vector<PathId>& PathTable::parallel_class(VertexId s, VertexId t) const {
    static const std::vector<PathId> empty;
    auto it = class_index_.find({s, t});
    return it == class_index_.end() ? empty : classes_[it->second].second;
}

std::string PathTable::display(PathId p) const {
    const PathData& d = paths_[p];
    if (d.length() == 0) return "e_" + q_->vertex_label(d.src);
    std::string out;
    for (auto it = d.arrows.rbegin(); it != d.arrows.rend(); ++it) {
        if (!out.empty()) out += "*";
        out += q_->arrow(*it).label;
    }
    return out;
}

std::vector<std::pair<std::pair<VertexId, VertexId>, std::vector<PathId>>> enumerate_paths(
    const PathTable& paths, int min_len) {
    std::vector<std::pair<std::pair<VertexId, VertexId>, std::vector<PathId>>> out;
    for (const auto& [key, ids] : paths.classes()) {
        std::vector<PathId> keep;
        for (PathId p : ids)
            if (paths.path(p).length() >= min_len) keep.push_back(p);
        if (!keep.empty()) out.emplace_back(key, std::move(keep));
    }
    return out;
}

std::vector<Bypass> enumerate_bypasses(const PathTable& paths) {
    std::vector<Bypass> out;
    const Quiver& q = paths.quiver();
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        for (PathId p : paths.parallel_class(ar.src, ar.tgt)) {
            if (p == paths.arrow_path(a)) continue;
            if (paths.path(p).length() == 0) continue;  // only when src == tgt, impossible here
            out.push_back(Bypass{a, p});
        }
    }
    return out;
}

std::vector<DoubleBypass> detect_double_bypasses(const PathTable& paths) {
    std::vector<Bypass> bypasses = enumerate_bypasses(paths);
    std::vector<std::vector<Bypass>> by_arrow(paths.quiver().arrow_count());
    for (const Bypass& b : bypasses) by_arrow[b.arrow].push_back(b);
    std::vector<DoubleBypass> out;
    for (const Bypass& first : bypasses)
        for (ArrowId beta : paths.path(first.detour).arrows)
            for (const Bypass& second : by_arrow[beta]) out.push_back(DoubleBypass{first, second});
    return out;
}

Walk Walk::of_path(const PathTable& paths, PathId p) {
    const PathData& d = paths.path(p);
    std::vector<Step> steps;
    steps.reserve(d.arrows.size());
    for (ArrowId a : d.arrows) steps.push_back(Step{a, true});
    return Walk(d.src, d.tgt, std::move(steps));
}

Walk Walk::reversed() const {
    std::vector<Step> steps;
    steps.reserve(steps_.size());
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it)
        steps.push_back(Step{it->arrow, !it->forward});
    return Walk(to_, from_, std::move(steps));
}

Walk Walk::reduced() const {
    std::vector<Step> out;
    for (const Step& s : steps_) {
        if (!out.empty() && out.back().arrow == s.arrow && out.back().forward != s.forward)
            out.pop_back();
        else
            out.push_back(s);
    }
    return Walk(from_, to_, std::move(out));
}

Walk Walk::then(const Walk& next) const {
    if (to_ != next.from_) throw QuiverError("walk concatenation: endpoints do not match");
    std::vector<Step> steps = steps_;
    steps.insert(steps.end(), next.steps_.begin(), next.steps_.end());
    return Walk(from_, next.to_, std::move(steps));
}

std::string Walk::display(const Quiver& q) const {
    if (steps_.empty()) return "e_" + q.vertex_label(from_);
    std::string out;
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        if (!out.empty()) out += "*";
        out += q.arrow(it->arrow).label;
        if (!it->forward) out += "^-1";
    }
    return out;
}

SpanningTree::SpanningTree(const Quiver& q, VertexId basepoint) : basepoint_(basepoint) {
    is_tree_.assign(q.arrow_count(), false);
    chord_index_.assign(q.arrow_count(), -1);
    walk_.resize(q.vertex_count());

    std::vector<bool> seen(q.vertex_count(), false);
    std::deque<VertexId> queue{basepoint};
    seen[basepoint] = true;
    walk_[basepoint] = Walk(basepoint);
    int reached = 1;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        // Incident arrows in natural order; both orientations.
        std::vector<std::pair<ArrowId, bool>> incident;
        for (ArrowId a : q.arrows_from(v)) incident.emplace_back(a, true);
        for (ArrowId a : q.arrows_into(v)) incident.emplace_back(a, false);
        std::sort(incident.begin(), incident.end(), [&](auto x, auto y) {
            return natural_label_less(q.arrow(x.first).label, q.arrow(y.first).label);
        });
        for (auto [a, forward] : incident) {
            VertexId w = forward ? q.arrow(a).tgt : q.arrow(a).src;
            if (seen[w]) continue;
            seen[w] = true;
            ++reached;
            is_tree_[a] = true;
            tree_.push_back(a);
            walk_[w] = walk_[v].then(Walk(v, w, {Step{a, forward}}));
            queue.push_back(w);
        }
    }
    if (reached != q.vertex_count()) throw QuiverError("spanning tree: quiver is not connected");
    std::sort(tree_.begin(), tree_.end());
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        if (!is_tree_[a]) {
            chord_index_[a] = static_cast<int>(chords_.size());
            chords_.push_back(a);
        }
    }
}

}  // namespace qp
