#pragma once

#include <utility>

#include "grautkit/endo.hpp"
#include "grautkit/grading.hpp"

namespace grautkit {

/// The scaling (x, y, lambda*z).
struct TorusFactor {
    Rational lambda;

    explicit TorusFactor(Rational l) : lambda(std::move(l)) {
        if (lambda.is_zero()) throw UsageError("torus factor must be nonzero");
    }

    PolyMap to_map() const;

    friend bool operator==(const TorusFactor&, const TorusFactor&) = default;
};

/// A graded space map fixing z exactly. Both invariants are checked at
/// construction.
class EMember {
public:
    EMember(PolyMap map, const NormalizedGrading& grading);

    const PolyMap& map() const { return map_; }
    const NormalizedGrading& grading() const { return grading_; }

    friend bool operator==(const EMember& a, const EMember& b) {
        return a.map_ == b.map_ && a.grading_ == b.grading_;
    }

private:
    PolyMap map_;
    NormalizedGrading grading_;
};

/// Splits a graded map with third image lambda*z as phi = e_part . (x,y,lambda*z).
/// Anything else is NotSplittable, which signals either a non-automorphism or
/// a non-graded input.
std::pair<EMember, TorusFactor> split_torus(const PolyMap& phi, const NormalizedGrading& g);

/// Evaluation at the plane z = 1: substitutes z := 1 and renames x,y to u,v.
/// The result is graded under the induced cyclic grading.
PolyMap restrict_to_plane(const EMember& phi);

/// Whether a cyclically graded plane map is the restriction of a graded space
/// map: false iff the first image has a pure-v monomial v^q with b*q < a, or
/// the second image has a nonzero constant term.
bool liftable(const PolyMap& plane_map, const NormalizedGrading& g);

/// The unique graded preimage under restriction: u^p v^q rehomogenizes with
/// the z power that restores the weighted degree of the target variable.
/// Throws DomainError (NotLiftable) when the liftability predicate fails.
EMember lift(const PolyMap& plane_map, const NormalizedGrading& g);

}  // namespace grautkit
