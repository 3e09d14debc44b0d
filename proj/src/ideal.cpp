#include "qp/ideal.hpp"

#include <algorithm>
#include <deque>

#include "qp/errors.hpp"

namespace qp {

std::vector<std::pair<PathId, PathId>> MinimalRelationPartition::generator_pairs() const {
    std::vector<std::pair<PathId, PathId>> out;
    for (const auto& [key, blocks] : classes)
        for (const Block& b : blocks)
            if (b.kind == BlockKind::Linked)
                for (std::size_t i = 1; i < b.paths.size(); ++i)
                    out.emplace_back(b.paths[0], b.paths[i]);
    return out;
}

namespace {

// One parallel class subspace kept in reduced row echelon form throughout.
struct ClassSubspace {
    std::vector<std::vector<Scalar>> rows;  // pivot columns strictly increasing
    std::vector<int> pivots;

    static int leading(const std::vector<Scalar>& v) {
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) return static_cast<int>(j);
        return -1;
    }

    // Reduces v against the basis in place; returns the leading column of
    // the remainder, or -1 when v lies in the span.
    int reduce(std::vector<Scalar>& v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Scalar& c = v[pivots[r]];
            if (c.is_zero()) continue;
            Scalar f = c;  // pivot entries are 1
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
        }
        return leading(v);
    }

    // Inserts v if independent; keeps full RREF. Returns true when the
    // dimension grew, leaving the inserted (normalized) row in v.
    bool insert(std::vector<Scalar>& v) {
        int lead = reduce(v);
        if (lead < 0) return false;
        Scalar inv = v[lead].inverse();
        for (auto& c : v) c *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Scalar f = rows[r][lead];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < v.size(); ++j) rows[r][j] -= f * v[j];
        }
        auto at = std::upper_bound(pivots.begin(), pivots.end(), lead);
        std::size_t idx = static_cast<std::size_t>(at - pivots.begin());
        pivots.insert(at, lead);
        rows.insert(rows.begin() + idx, v);
        return true;
    }
};

std::vector<Scalar> to_coordinates(const PathAlgebra& algebra, const AlgebraElement& e,
                                   const std::vector<PathId>& columns) {
    std::vector<Scalar> v(columns.size(), Scalar(algebra.field(), 0));
    for (const auto& [p, c] : e.terms()) {
        auto it = std::lower_bound(columns.begin(), columns.end(), p);
        v[it - columns.begin()] = c;
    }
    return v;
}

AlgebraElement from_coordinates(const PathAlgebra& algebra, const std::vector<Scalar>& v,
                                const std::vector<PathId>& columns) {
    AlgebraElement e(algebra);
    for (std::size_t j = 0; j < columns.size(); ++j)
        if (!v[j].is_zero()) e = e + AlgebraElement::term(algebra, v[j], columns[j]);
    return e;
}

}  // namespace

AdmissibleIdeal AdmissibleIdeal::from_generators(const PathAlgebra& algebra,
                                                 std::vector<AlgebraElement> gens) {
    const PathTable& paths = algebra.paths();
    const Quiver& q = algebra.quiver();
    AdmissibleIdeal I(algebra);

    std::map<std::pair<VertexId, VertexId>, ClassSubspace> spaces;
    std::deque<AlgebraElement> work;  // class-homogeneous new basis vectors

    auto insert_component = [&](const AlgebraElement& e) {
        if (e.is_zero()) return;
        const PathData& d = paths.path(e.terms().front().first);
        auto key = std::make_pair(d.src, d.tgt);
        const std::vector<PathId>& columns = paths.parallel_class(d.src, d.tgt);
        std::vector<Scalar> v = to_coordinates(algebra, e, columns);
        if (spaces[key].insert(v)) work.push_back(from_coordinates(algebra, v, columns));
    };

    for (const AlgebraElement& g : gens)
        for (const AlgebraElement& component : g.class_components()) insert_component(component);

    // Breadth-first closure under one-arrow products; each insertion grows
    // the (finite) total dimension, so this terminates.
    while (!work.empty()) {
        AlgebraElement e = std::move(work.front());
        work.pop_front();
        const PathData& d = paths.path(e.terms().front().first);
        for (ArrowId a : q.arrows_from(d.tgt))
            insert_component(AlgebraElement::path(algebra, paths.arrow_path(a)) * e);
        for (ArrowId a : q.arrows_into(d.src))
            insert_component(e * AlgebraElement::path(algebra, paths.arrow_path(a)));
    }

    for (auto& [key, space] : spaces) {
        if (space.rows.empty()) continue;
        const std::vector<PathId>& columns = paths.parallel_class(key.first, key.second);
        for (const auto& row : space.rows) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (!row[j].is_zero() && paths.path(columns[j]).length() < 2) {
                    AlgebraElement bad = from_coordinates(algebra, row, columns);
                    throw AdmissibilityError(
                        "ideal closure contains an element supported on the length-" +
                            std::to_string(paths.path(columns[j]).length()) + " path " +
                            paths.display(columns[j]) + ": " + bad.display(),
                        bad.display());
                }
            }
        }
        I.dimension_ += static_cast<int>(space.rows.size());
        I.subspaces_[key] = std::move(space.rows);
    }
    I.generators_ = std::move(gens);
    return I;
}

bool AdmissibleIdeal::contains(const AlgebraElement& x) const {
    const PathTable& paths = algebra_->paths();
    for (const AlgebraElement& component : x.class_components()) {
        const PathData& d = paths.path(component.terms().front().first);
        auto it = subspaces_.find({d.src, d.tgt});
        if (it == subspaces_.end()) return false;
        const std::vector<PathId>& columns = paths.parallel_class(d.src, d.tgt);
        ClassSubspace space;
        space.rows = it->second;
        for (const auto& row : space.rows) space.pivots.push_back(ClassSubspace::leading(row));
        std::vector<Scalar> v = to_coordinates(*algebra_, component, columns);
        if (space.reduce(v) >= 0) return false;
    }
    return true;
}

bool AdmissibleIdeal::equals(const AdmissibleIdeal& other) const {
    if (algebra_ != other.algebra_)
        throw FieldError("comparing ideals from different ambient algebras");
    return subspaces_ == other.subspaces_;
}

AdmissibleIdeal AdmissibleIdeal::image(const Automorphism& phi) const {
    std::vector<AlgebraElement> mapped;
    mapped.reserve(generators_.size());
    for (const AlgebraElement& g : generators_) mapped.push_back(phi.apply(g));
    AdmissibleIdeal J = from_generators(*algebra_, std::move(mapped));
    if (J.dimension_ != dimension_)
        throw InternalError("automorphism image changed the ideal dimension");
    return J;
}

std::vector<AlgebraElement> AdmissibleIdeal::basis_elements() const {
    const PathTable& paths = algebra_->paths();
    std::vector<AlgebraElement> out;
    for (const auto& [key, rows] : subspaces_) {
        const std::vector<PathId>& columns = paths.parallel_class(key.first, key.second);
        for (const auto& row : rows) out.push_back(from_coordinates(*algebra_, row, columns));
    }
    return out;
}

int AdmissibleIdeal::class_dimension(VertexId s, VertexId t) const {
    auto it = subspaces_.find({s, t});
    return it == subspaces_.end() ? 0 : static_cast<int>(it->second.size());
}

std::string AdmissibleIdeal::canonical_key() const {
    std::string key;
    for (const auto& [cls, rows] : subspaces_) {
        key += "[" + std::to_string(cls.first) + ">" + std::to_string(cls.second) + "]";
        for (const auto& row : rows) {
            key += "(";
            for (const auto& c : row) key += c.to_string() + ",";
            key += ")";
        }
    }
    return key;
}

// Connected components of the RREF row supports. This is the finest
// partition P of the class paths such that every coordinate projection onto
// a block of P maps the subspace into itself: each block is a union of row
// supports (so projections keep basis vectors), and conversely a projection
// cutting a row r at its pivot would leave a nonzero member of the subspace
// supported on non-pivot columns only, which reduction against the RREF
// rules out. The oracle test in tests/ checks this against exhaustive
// enumeration of set partitions.
MinimalRelationPartition AdmissibleIdeal::minimal_relation_partition() const {
    const PathTable& paths = algebra_->paths();
    MinimalRelationPartition out;
    for (const auto& [cls, members] : paths.classes()) {
        std::vector<MinimalRelationPartition::Block> blocks;
        auto it = subspaces_.find(cls);
        if (it == subspaces_.end()) {
            for (PathId p : members)
                blocks.push_back({{p}, MinimalRelationPartition::BlockKind::UntouchedSingleton});
            out.classes.emplace_back(cls, std::move(blocks));
            continue;
        }
        const auto& rows = it->second;
        std::vector<std::size_t> parent(members.size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& row : rows) {
            std::size_t first = row.size();
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (row[j].is_zero()) continue;
                if (first == row.size())
                    first = j;
                else
                    parent[find(j)] = find(first);
            }
        }
        std::map<std::size_t, std::vector<PathId>> groups;
        for (std::size_t j = 0; j < members.size(); ++j) groups[find(j)].push_back(members[j]);
        // is members[j] itself in the ideal? true iff some RREF row is e_j
        auto path_in_ideal = [&](std::size_t j) {
            for (const auto& row : rows) {
                bool hit = true;
                for (std::size_t c = 0; c < row.size(); ++c) {
                    bool want_one = c == j;
                    if (want_one != !row[c].is_zero() && !(want_one && row[c].is_one())) {
                        hit = false;
                        break;
                    }
                    if (want_one && !row[c].is_one()) {
                        hit = false;
                        break;
                    }
                }
                if (hit) return true;
            }
            return false;
        };
        for (auto& [root, group] : groups) {
            MinimalRelationPartition::BlockKind kind;
            if (group.size() >= 2)
                kind = MinimalRelationPartition::BlockKind::Linked;
            else if (path_in_ideal(static_cast<std::size_t>(
                         std::lower_bound(members.begin(), members.end(), group[0]) -
                         members.begin())))
                kind = MinimalRelationPartition::BlockKind::ZeroRelation;
            else
                kind = MinimalRelationPartition::BlockKind::UntouchedSingleton;
            blocks.push_back({std::move(group), kind});
        }
        std::sort(blocks.begin(), blocks.end(),
                  [](const auto& a, const auto& b) { return a.paths[0] < b.paths[0]; });
        out.classes.emplace_back(cls, std::move(blocks));
    }
    return out;
}

}  // namespace qp
