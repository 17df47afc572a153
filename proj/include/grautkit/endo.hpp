#pragma once

#include <optional>
#include <vector>

#include "grautkit/grading.hpp"
#include "grautkit/poly.hpp"

namespace grautkit {

/// A polynomial endomorphism of affine 2- or 3-space, given by one image per
/// variable. Whether it is an automorphism is a property established by
/// operations, never an assumption.
class PolyMap {
public:
    explicit PolyMap(std::vector<Poly> images);

    static PolyMap identity(int arity);

    int arity() const { return arity_; }
    const Poly& image(int var) const { return images_.at(static_cast<std::size_t>(var)); }
    const std::vector<Poly>& images() const { return images_; }

    bool is_identity() const;
    bool fixes_origin() const;

    friend bool operator==(const PolyMap& a, const PolyMap& b) {
        return a.arity_ == b.arity_ && a.images_ == b.images_;
    }

private:
    int arity_;
    std::vector<Poly> images_;
};

/// Composition of maps of affine space: result_i = outer_i evaluated at the
/// images of inner, so the inner map is applied first.
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

/// True iff every image is homogeneous of the same weighted degree as its
/// variable (zero images count as homogeneous).
bool is_graded(const PolyMap& phi, const WeightVector& w);

/// Gradedness over the induced cyclic grading on the plane: the image of u
/// must be homogeneous of residue a mod c, the image of v of residue b mod c.
bool is_graded(const PolyMap& phi, const CyclicGrading& g);

/// Homogeneity of a plane polynomial over a cyclic grading.
DegreeQuery cyclic_degree(const Poly& p, const CyclicGrading& g);

/// An elementary automorphism: one variable is replaced by
/// scale * (that variable) + shift, where the shift does not involve it.
class ElemAuto {
public:
    ElemAuto(int axis, const Rational& scale, Poly shift);

    static ElemAuto identity(int arity) {
        return ElemAuto(0, 1, Poly::zero(arity));
    }

    int arity() const { return shift_.arity(); }
    int axis() const { return axis_; }
    const Rational& scale() const { return scale_; }
    const Poly& shift() const { return shift_; }

    PolyMap to_map() const;
    bool is_identity() const;

    friend bool operator==(const ElemAuto& a, const ElemAuto& b) {
        return a.axis_ == b.axis_ && a.scale_ == b.scale_ && a.shift_ == b.shift_;
    }

private:
    int axis_;
    Rational scale_;
    Poly shift_;
};

/// Exact inverse: axis i, scale 1/s, shift -F/s.
ElemAuto elementary_inverse(const ElemAuto& e);

/// An ordered word of elementary automorphisms. The leftmost factor is the
/// outermost (applied last).
class ElemSeq {
public:
    explicit ElemSeq(int arity) : arity_(arity) {}
    ElemSeq(int arity, std::vector<ElemAuto> factors);

    int arity() const { return arity_; }
    const std::vector<ElemAuto>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }

    void push_back(const ElemAuto& e);

    /// Left-to-right composition of the word.
    PolyMap to_map() const;

private:
    int arity_;
    std::vector<ElemAuto> factors_;
};

/// Decomposes a plane automorphism into elementary factors by degree
/// reduction (Jung-van der Kulk): while nonlinear, the higher-degree
/// component is reduced by a power of the lower one; the terminal affine map
/// is split by exact Gaussian elimination. Throws DomainError
/// (NotAutomorphism) when any reduction step is impossible.
///
/// When a cyclic grading is supplied, every emitted factor is asserted graded
/// under it; a failure is an InternalError, not a rejection.
ElemSeq jvdk_decompose(const PolyMap& phi,
                       const std::optional<CyclicGrading>& assert_grading = std::nullopt);

/// Rewrites a graded, origin-fixing elementary word into one with identical
/// composition in which no u-axis factor carries a v-linear term in its
/// shift. Requires the composed map's first component to have linear part
/// lambda*u; violations are UsageErrors.
ElemSeq normalize_linear_parts(const ElemSeq& seq, const CyclicGrading& grading);

}  // namespace grautkit
