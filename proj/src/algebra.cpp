#include "qp/algebra.hpp"

#include <algorithm>

#include "qp/errors.hpp"

namespace qp {

AlgebraElement AlgebraElement::path(const PathAlgebra& algebra, PathId p) {
    return term(algebra, Scalar(algebra.field(), 1), p);
}

AlgebraElement AlgebraElement::term(const PathAlgebra& algebra, const Scalar& c, PathId p) {
    AlgebraElement e(algebra);
    if (!c.is_zero()) e.terms_.emplace_back(p, c);
    return e;
}

Scalar AlgebraElement::coefficient(PathId p) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                               [](const auto& t, PathId q) { return t.first < q; });
    if (it != terms_.end() && it->first == p) return it->second;
    return Scalar(algebra_->field(), 0);
}

void AlgebraElement::add_term(PathId p, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                               [](const auto& t, PathId q) { return t.first < q; });
    if (it != terms_.end() && it->first == p) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {p, c});
    }
}

namespace {
void check_same_algebra(const AlgebraElement& x, const AlgebraElement& y) {
    if (&x.algebra() != &y.algebra())
        throw FieldError("algebra elements from different ambient algebras");
}
}  // namespace

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_same_algebra(*this, o);
    AlgebraElement out = *this;
    for (const auto& [p, c] : o.terms_) out.add_term(p, c);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out = *this;
    for (auto& [p, c] : out.terms_) c = -c;
    return out;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement out(*algebra_);
    if (c.is_zero()) return out;
    out.terms_ = terms_;
    for (auto& [p, coeff] : out.terms_) coeff *= c;
    return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    check_same_algebra(*this, o);
    const PathTable& paths = algebra_->paths();
    AlgebraElement out(*algebra_);
    for (const auto& [p, cp] : terms_) {
        for (const auto& [q, cq] : o.terms_) {
            PathId pq = paths.compose(p, q);  // apply q first
            if (pq != kNoPath) out.add_term(pq, cp * cq);
        }
    }
    return out;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return algebra_ == o.algebra_ && terms_ == o.terms_;
}

std::vector<AlgebraElement> AlgebraElement::class_components() const {
    std::map<std::pair<VertexId, VertexId>, AlgebraElement> parts;
    const PathTable& paths = algebra_->paths();
    for (const auto& [p, c] : terms_) {
        const PathData& d = paths.path(p);
        auto key = std::make_pair(d.src, d.tgt);
        auto it = parts.find(key);
        if (it == parts.end()) it = parts.emplace(key, AlgebraElement(*algebra_)).first;
        it->second.add_term(p, c);
    }
    std::vector<AlgebraElement> out;
    out.reserve(parts.size());
    for (auto& [key, e] : parts) out.push_back(std::move(e));
    return out;
}

std::string AlgebraElement::display() const {
    if (terms_.empty()) return "0";
    const PathTable& paths = algebra_->paths();
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        std::string coeff = c.to_string();
        bool neg = !coeff.empty() && coeff[0] == '-';
        std::string mag = neg ? coeff.substr(1) : coeff;
        if (first) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != "1") out += mag + " ";
        out += paths.display(p);
        first = false;
    }
    return out;
}

Automorphism::Automorphism(const PathAlgebra& algebra, std::vector<AutomorphismAtom> atoms)
    : algebra_(&algebra), atoms_(std::move(atoms)) {
    for (const auto& atom : atoms_) {
        if (const auto* d = std::get_if<Dilatation>(&atom)) {
            for (const auto& [a, c] : d->scale)
                if (c.is_zero()) throw FieldError("dilatation with zero scale is not invertible");
        }
    }
}

Automorphism Automorphism::transvection(const PathAlgebra& a, const Bypass& b, const Scalar& tau) {
    return Automorphism(a, {Transvection{b, tau}});
}

Automorphism Automorphism::dilatation(const PathAlgebra& a,
                                      std::vector<std::pair<ArrowId, Scalar>> scale) {
    std::sort(scale.begin(), scale.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return Automorphism(a, {Dilatation{std::move(scale)}});
}

namespace {

// Image of one path under one atom. A transvection phi_{alpha,u,tau} sends a
// path containing alpha (at most once, by acyclicity) to p + tau * (p with
// alpha replaced by the arrows of u).
AlgebraElement apply_atom_to_path(const PathAlgebra& algebra, const AutomorphismAtom& atom,
                                  PathId p) {
    const PathTable& paths = algebra.paths();
    const PathData& d = paths.path(p);
    if (const auto* dil = std::get_if<Dilatation>(&atom)) {
        Scalar c(algebra.field(), 1);
        for (ArrowId a : d.arrows) {
            auto it = std::lower_bound(dil->scale.begin(), dil->scale.end(), a,
                                       [](const auto& t, ArrowId x) { return t.first < x; });
            if (it != dil->scale.end() && it->first == a) c *= it->second;
        }
        return AlgebraElement::term(algebra, c, p);
    }
    const auto& tv = std::get<Transvection>(atom);
    auto pos = std::find(d.arrows.begin(), d.arrows.end(), tv.bypass.arrow);
    if (pos == d.arrows.end() || tv.tau.is_zero()) return AlgebraElement::path(algebra, p);
    std::vector<ArrowId> subst(d.arrows.begin(), pos);
    const PathData& u = paths.path(tv.bypass.detour);
    subst.insert(subst.end(), u.arrows.begin(), u.arrows.end());
    subst.insert(subst.end(), pos + 1, d.arrows.end());
    auto q = paths.by_arrows(subst);
    if (!q) throw InternalError("transvection image is not a path of the quiver");
    return AlgebraElement::path(algebra, p) + AlgebraElement::term(algebra, tv.tau, *q);
}

AutomorphismAtom invert_atom(const AutomorphismAtom& atom) {
    if (const auto* dil = std::get_if<Dilatation>(&atom)) {
        Dilatation inv;
        inv.scale.reserve(dil->scale.size());
        for (const auto& [a, c] : dil->scale) inv.scale.emplace_back(a, c.inverse());
        return inv;
    }
    const auto& tv = std::get<Transvection>(atom);
    return Transvection{tv.bypass, -tv.tau};
}

}  // namespace

AlgebraElement Automorphism::apply(const AlgebraElement& x) const {
    if (&x.algebra() != algebra_) throw FieldError("automorphism applied across algebras");
    AlgebraElement cur = x;
    for (const auto& atom : atoms_) {
        AlgebraElement next(*algebra_);
        for (const auto& [p, c] : cur.terms())
            next = next + apply_atom_to_path(*algebra_, atom, p).scaled(c);
        cur = std::move(next);
    }
    return cur;
}

AlgebraElement Automorphism::apply_to_path(PathId p) const {
    return apply(AlgebraElement::path(*algebra_, p));
}

Automorphism Automorphism::inverted() const {
    std::vector<AutomorphismAtom> atoms;
    atoms.reserve(atoms_.size());
    for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) atoms.push_back(invert_atom(*it));
    return Automorphism(*algebra_, std::move(atoms));
}

Automorphism Automorphism::then(const Automorphism& next) const {
    std::vector<AutomorphismAtom> atoms = atoms_;
    atoms.insert(atoms.end(), next.atoms_.begin(), next.atoms_.end());
    return Automorphism(*algebra_, std::move(atoms));
}

std::string Automorphism::display() const {
    if (atoms_.empty()) return "id";
    const Quiver& q = algebra_->quiver();
    const PathTable& paths = algebra_->paths();
    std::string out;
    for (const auto& atom : atoms_) {
        if (!out.empty()) out += " . ";
        if (const auto* dil = std::get_if<Dilatation>(&atom)) {
            out += "dil(";
            bool first = true;
            for (const auto& [a, c] : dil->scale) {
                if (!first) out += ",";
                out += q.arrow(a).label + ":" + c.to_string();
                first = false;
            }
            out += ")";
        } else {
            const auto& tv = std::get<Transvection>(atom);
            out += "phi(" + q.arrow(tv.bypass.arrow).label + "," + paths.display(tv.bypass.detour) +
                   ";" + tv.tau.to_string() + ")";
        }
    }
    return out;
}

}  // namespace qp
