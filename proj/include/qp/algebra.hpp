#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qp/quiver.hpp"
#include "qp/scalar.hpp"

namespace qp {

/// The ambient algebra kQ: a quiver, its path table, and the coefficient
/// field. Immutable; elements, ideals and automorphisms keep a pointer to it.
class PathAlgebra {
public:
    PathAlgebra(Quiver q, FieldSpec k)
        : quiver_(std::make_unique<Quiver>(std::move(q))),
          paths_(std::make_unique<PathTable>(*quiver_)),
          field_(k) {}

    const Quiver& quiver() const { return *quiver_; }
    const PathTable& paths() const { return *paths_; }
    const FieldSpec& field() const { return field_; }

    Scalar scalar(long n) const { return Scalar(field_, n); }

private:
    std::unique_ptr<Quiver> quiver_;
    std::unique_ptr<PathTable> paths_;
    FieldSpec field_;
};

/// An exact linear combination of paths: finite map PathId -> nonzero
/// Scalar, kept sorted by PathId (which is the canonical path order).
class AlgebraElement {
public:
    explicit AlgebraElement(const PathAlgebra& algebra) : algebra_(&algebra) {}
    static AlgebraElement path(const PathAlgebra& algebra, PathId p);
    static AlgebraElement term(const PathAlgebra& algebra, const Scalar& c, PathId p);

    const PathAlgebra& algebra() const { return *algebra_; }
    bool is_zero() const { return terms_.empty(); }
    int support_size() const { return static_cast<int>(terms_.size()); }
    const std::vector<std::pair<PathId, Scalar>>& terms() const { return terms_; }
    Scalar coefficient(PathId p) const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;  // this ∘ o: apply o first
    AlgebraElement scaled(const Scalar& c) const;
    AlgebraElement operator-() const;

    bool operator==(const AlgebraElement& o) const;

    /// Class-homogeneous components, ordered by class; splitting an element
    /// this way never leaves a two-sided ideal.
    std::vector<AlgebraElement> class_components() const;

    std::string display() const;  // "d*a - 1/2 d*c*b", "0"

private:
    void add_term(PathId p, const Scalar& c);  // merges, prunes zeros
    const PathAlgebra* algebra_;
    std::vector<std::pair<PathId, Scalar>> terms_;
};

/// phi(alpha) = c_alpha * alpha for every arrow; arrows not listed scale by 1.
struct Dilatation {
    std::vector<std::pair<ArrowId, Scalar>> scale;  // sorted by arrow, nonzero scalars
};

/// phi(alpha) = alpha + tau * u for the bypass (alpha, u); fixes every other
/// arrow. Inverse: same bypass, -tau.
struct Transvection {
    Bypass bypass;
    Scalar tau;
};

using AutomorphismAtom = std::variant<Dilatation, Transvection>;

/// A composite automorphism of kQ fixing the vertices, stored as the atom
/// sequence in application order (atoms_[0] acts first).
class Automorphism {
public:
    explicit Automorphism(const PathAlgebra& algebra) : algebra_(&algebra) {}
    Automorphism(const PathAlgebra& algebra, std::vector<AutomorphismAtom> atoms);

    static Automorphism transvection(const PathAlgebra& a, const Bypass& b, const Scalar& tau);
    static Automorphism dilatation(const PathAlgebra& a,
                                   std::vector<std::pair<ArrowId, Scalar>> scale);

    const PathAlgebra& algebra() const { return *algebra_; }
    const std::vector<AutomorphismAtom>& atoms() const { return atoms_; }
    bool is_identity() const { return atoms_.empty(); }

    AlgebraElement apply(const AlgebraElement& x) const;
    AlgebraElement apply_to_path(PathId p) const;
    Automorphism inverted() const;
    /// this, then next (composition next ∘ this).
    Automorphism then(const Automorphism& next) const;

    std::string display() const;  // "phi(a,c*b;-1) . dil(a:2)"

private:
    const PathAlgebra* algebra_;
    std::vector<AutomorphismAtom> atoms_;
};

}  // namespace qp
