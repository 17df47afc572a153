#pragma once

#include <variant>
#include <vector>

#include "grautkit/endo.hpp"
#include "grautkit/grading.hpp"
#include "grautkit/lift.hpp"

namespace grautkit {

/// Second-type monomial shear (u, lambda*v + mu*u^k). Requires
/// k*a = b (mod c) unless mu = 0, in which case the element is the diagonal
/// (u, lambda*v) and k is immaterial.
class DElement {
public:
    DElement(const Rational& lambda, const Rational& mu, long k, const NormalizedGrading& g);

    const Rational& lambda() const { return lambda_; }
    const Rational& mu() const { return mu_; }
    long k() const { return k_; }

    PolyMap plane_map() const;

    friend bool operator==(const DElement&, const DElement&) = default;

private:
    Rational lambda_;
    Rational mu_;
    long k_;
};

/// Liftable first-type element (lambda*u + f(v), v): f is zero or graded of
/// the u-residue with every exponent q satisfying q*b >= a.
class UElement {
public:
    UElement(const Rational& lambda, Poly f, const NormalizedGrading& g);

    const Rational& lambda() const { return lambda_; }
    const Poly& f() const { return f_; }

    PolyMap plane_map() const;
    bool is_identity() const { return lambda_.is_one() && f_.is_zero(); }

    friend bool operator==(const UElement&, const UElement&) = default;

private:
    Rational lambda_;
    Poly f_;
};

/// Low-degree first-type element (lambda*u + f(v), v): f is zero or graded of
/// the u-residue with deg(f)*b < a. Nonzero shifts are never liftable.
class WElement {
public:
    WElement(const Rational& lambda, Poly f, const NormalizedGrading& g);

    static WElement identity(const NormalizedGrading& g) { return WElement(1, Poly::zero(2), g); }

    const Rational& lambda() const { return lambda_; }
    const Poly& f() const { return f_; }

    PolyMap plane_map() const;
    PolyMap inverse_plane_map() const;
    bool is_identity() const { return lambda_.is_one() && f_.is_zero(); }

    friend bool operator==(const WElement&, const WElement&) = default;

private:
    Rational lambda_;
    Poly f_;
};

/// A liftable conjugate s . tau^-1 . theta . tau with tau in W, theta in D,
/// and the correction s in W. tau_theta = s . tau^-1.
class SElement {
public:
    /// Validates that the composed plane map is liftable; the given s is not
    /// recomputed. Use make_s_element to construct the correction.
    SElement(WElement tau, DElement theta, WElement s, const NormalizedGrading& g);

    const WElement& tau() const { return tau_; }
    const DElement& theta() const { return theta_; }
    const WElement& s() const { return s_; }
    const WElement& tau_theta() const { return tau_theta_; }

    /// The composed plane map s . tau^-1 . theta . tau.
    const PolyMap& plane_map() const { return plane_; }
    /// Its recorded graded space preimage.
    const EMember& lifted() const { return lifted_; }

    friend bool operator==(const SElement& a, const SElement& b) {
        return a.tau_ == b.tau_ && a.theta_ == b.theta_ && a.s_ == b.s_;
    }

private:
    WElement tau_;
    DElement theta_;
    WElement s_;
    WElement tau_theta_;
    PolyMap plane_;
    EMember lifted_;
};

/// One tagged generator of the graded automorphism group.
using GenFactor = std::variant<TorusFactor, UElement, SElement>;

/// An ordered word of generators; the leftmost factor is outermost.
class GenWord {
public:
    GenWord(NormalizedGrading grading, std::vector<GenFactor> factors)
        : grading_(grading), factors_(std::move(factors)) {}

    const NormalizedGrading& grading() const { return grading_; }
    const std::vector<GenFactor>& factors() const { return factors_; }

private:
    NormalizedGrading grading_;
    std::vector<GenFactor> factors_;
};

/// Classification of one graded origin-fixing elementary plane factor:
/// second-type factors split into D elements, first-type factors are handed
/// back as (lambda, f) for splitting into W and U parts.
struct FirstTypeFactor {
    Rational lambda;
    Poly f;
};
using ElemClass = std::variant<std::vector<DElement>, FirstTypeFactor>;

ElemClass classify_elementary(const ElemAuto& xi, const NormalizedGrading& g);

/// Splits (lambda*u + f(v), v) as tau . tau_1 with tau in W collecting the
/// exponents below a/b (at scale 1) and tau_1 in U carrying the scale and the
/// rest.
std::pair<WElement, UElement> split_first_type(const Rational& lambda, const Poly& f,
                                               const NormalizedGrading& g);

/// The correction s with s . tau^-1 . theta . tau liftable: repeatedly
/// subtracts the lowest offending pure-v monomial nu*v^m of the conjugate's
/// first image, scaled by 1/lambda^m where lambda is the v-coefficient of the
/// second image. Terminates within ceil(a/b) rounds.
WElement correction(const WElement& tau, const DElement& theta, const NormalizedGrading& g);

SElement make_s_element(const WElement& tau, const DElement& theta, const NormalizedGrading& g);

/// Master decomposition: splits off the torus factor, restricts to the
/// plane, decomposes into graded elementary factors, normalizes linear
/// parts, and reassembles the word from U and S generators. The result
/// recomposes to the input exactly (verified before returning).
GenWord decompose_graded(const PolyMap& phi, const NormalizedGrading& g);

/// Lifts every plane generator and composes the word left to right.
PolyMap recompose(const GenWord& word);

}  // namespace grautkit
