#include "grautkit/lift.hpp"

#include <string>

namespace grautkit {

namespace {

/// Pure-v monomials v^q of the first image with b*q < a, smallest q first.
std::optional<std::pair<long, Rational>> first_low_pure_v(const Poly& first_image,
                                                          const NormalizedGrading& g) {
    std::optional<std::pair<long, Rational>> found;
    for (const auto& [m, c] : first_image.terms()) {
        if (m.exponent(0) != 0) continue;
        long q = m.exponent(1);
        if (g.b * q >= g.a) continue;
        if (!found || q < found->first) found = {q, c};
    }
    return found;
}

void check_plane_graded(const PolyMap& plane_map, const NormalizedGrading& g,
                        const char* who) {
    if (plane_map.arity() != 2) throw UsageError(std::string(who) + ": needs a plane map");
    if (!is_graded(plane_map, induced_cyclic(g)))
        throw UsageError(std::string(who) + ": plane map is not graded under the induced cyclic grading");
}

}  // namespace

PolyMap TorusFactor::to_map() const {
    return PolyMap({Poly::variable(3, 0), Poly::variable(3, 1),
                    lambda * Poly::variable(3, 2)});
}

EMember::EMember(PolyMap map, const NormalizedGrading& grading)
    : map_(std::move(map)), grading_(grading) {
    if (map_.arity() != 3) throw UsageError("E member must be an arity-3 map");
    if (!(map_.image(2) == Poly::variable(3, 2)))
        throw DomainError(DomainError::Kind::NotSplittable, "third image is not z");
    if (!is_graded(map_, grading_.weights()))
        throw DomainError(DomainError::Kind::NotGraded, "E member must be graded");
}

std::pair<EMember, TorusFactor> split_torus(const PolyMap& phi, const NormalizedGrading& g) {
    if (phi.arity() != 3) throw UsageError("split_torus needs an arity-3 map");
    const Poly& third = phi.image(2);
    Monomial z_mono = Monomial(3).with_exponent(2, 1);
    if (third.terms().size() != 1 || third.coefficient(z_mono).is_zero())
        throw DomainError(DomainError::Kind::NotSplittable,
                          "third image is not a nonzero scalar multiple of z");
    if (!is_graded(phi, g.weights()))
        throw DomainError(DomainError::Kind::NotSplittable, "map is not graded");

    Rational lambda = third.coefficient(z_mono);
    // phi = e_part . (x, y, lambda z), so e_part rescales z by 1/lambda.
    std::vector<Poly> rescale_images{Poly::variable(3, 0), Poly::variable(3, 1),
                                     lambda.inverse() * Poly::variable(3, 2)};
    PolyMap e_map = compose(phi, PolyMap(std::move(rescale_images)));
    EMember e(std::move(e_map), g);
    TorusFactor t(lambda);
    if (!(compose(e.map(), t.to_map()) == phi))
        throw InternalError("torus split does not recompose");
    return {std::move(e), std::move(t)};
}

PolyMap restrict_to_plane(const EMember& phi) {
    std::vector<Poly> images;
    for (int i = 0; i < 2; ++i) {
        Poly out(2);
        for (const auto& [m, c] : phi.map().image(i).terms())
            out.add_term(Monomial(2, {m.exponent(0), m.exponent(1)}), c);
        images.push_back(std::move(out));
    }
    return PolyMap(std::move(images));
}

bool liftable(const PolyMap& plane_map, const NormalizedGrading& g) {
    check_plane_graded(plane_map, g, "liftable");
    if (first_low_pure_v(plane_map.image(0), g)) return false;
    if (plane_map.image(1).has_constant_term()) return false;
    return true;
}

EMember lift(const PolyMap& plane_map, const NormalizedGrading& g) {
    check_plane_graded(plane_map, g, "lift");
    if (auto low = first_low_pure_v(plane_map.image(0), g))
        throw DomainError(DomainError::Kind::NotLiftable,
                          "not liftable: monomial v^" + std::to_string(low->first) +
                              " with b*q=" + std::to_string(g.b * low->first) +
                              " < a=" + std::to_string(g.a));
    if (plane_map.image(1).has_constant_term())
        throw DomainError(DomainError::Kind::NotLiftable,
                          "not liftable: second image has a nonzero constant term");

    std::vector<Poly> images;
    for (int i = 0; i < 2; ++i) {
        long target = i == 0 ? g.a : g.b;
        Poly out(3);
        for (const auto& [m, c] : plane_map.image(i).terms()) {
            long p = m.exponent(0), q = m.exponent(1);
            long weighted = p * g.a + q * g.b - target;
            if (weighted % g.c != 0 || weighted < 0)
                throw InternalError("lift: z exponent not a nonnegative integer despite "
                                    "the liftability predicate");
            out.add_term(Monomial(3, {p, q, weighted / g.c}), c);
        }
        images.push_back(std::move(out));
    }
    images.push_back(Poly::variable(3, 2));
    EMember result(PolyMap(std::move(images)), g);
    if (!(restrict_to_plane(result) == plane_map))
        throw InternalError("lift does not restrict back to its input");
    return result;
}

}  // namespace grautkit
