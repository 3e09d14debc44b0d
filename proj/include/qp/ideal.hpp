#pragma once

#include <map>
#include <string>
#include <vector>

#include "qp/algebra.hpp"

namespace qp {

/// The finest support-disjoint decomposition of each parallel-class
/// subspace of an ideal, realized as connected components of the supports
/// of the canonical RREF basis. Linked blocks (size >= 2) carry the homotopy
/// generator pairs; zero-relation singletons are paths lying in the ideal.
struct MinimalRelationPartition {
    enum class BlockKind { UntouchedSingleton, ZeroRelation, Linked };
    struct Block {
        std::vector<PathId> paths;  // ascending
        BlockKind kind;
    };
    // one entry per parallel class of the quiver, in class order
    std::vector<std::pair<std::pair<VertexId, VertexId>, std::vector<Block>>> classes;

    /// (first, other) for every linked block, in canonical order.
    std::vector<std::pair<PathId, PathId>> generator_pairs() const;
};

/// A two-sided admissible ideal of kQ, stored per parallel class as a
/// subspace in reduced row echelon form over the canonical path basis.
/// The RREF matrices are unique per subspace, so equality of ideals is
/// exact matrix comparison and canonical_key() is a faithful identity.
class AdmissibleIdeal {
public:
    /// Two-sided closure of the generators, split by parallel class and
    /// row-reduced. Throws AdmissibilityError if the closure touches a path
    /// of length < 2. An empty generator list gives the zero ideal.
    static AdmissibleIdeal from_generators(const PathAlgebra& algebra,
                                           std::vector<AlgebraElement> gens);

    const PathAlgebra& algebra() const { return *algebra_; }
    int dimension() const { return dimension_; }
    const std::vector<AlgebraElement>& generators() const { return generators_; }

    bool contains(const AlgebraElement& x) const;
    bool equals(const AdmissibleIdeal& other) const;
    /// Ideal generated by the phi-images of the generators. Automorphisms
    /// fixing the vertices preserve dimension and admissibility (asserted).
    AdmissibleIdeal image(const Automorphism& phi) const;

    MinimalRelationPartition minimal_relation_partition() const;

    /// RREF basis vectors across all classes, canonical order.
    std::vector<AlgebraElement> basis_elements() const;
    int class_dimension(VertexId s, VertexId t) const;

    std::string canonical_key() const;

private:
    explicit AdmissibleIdeal(const PathAlgebra& algebra) : algebra_(&algebra) {}

    const PathAlgebra* algebra_;
    std::vector<AlgebraElement> generators_;
    // class key -> RREF rows over the class path basis (columns follow the
    // canonical order of parallel_class(s, t)); only nonzero subspaces kept
    std::map<std::pair<VertexId, VertexId>, std::vector<std::vector<Scalar>>> subspaces_;
    int dimension_ = 0;

    friend class IdealBuilder;
};

}  // namespace qp
