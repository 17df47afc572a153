#include "grautkit/gens.hpp"

#include <algorithm>
#include <map>

namespace grautkit {

namespace {

Poly plane_u() { return Poly::variable(2, 0); }
Poly plane_v() { return Poly::variable(2, 1); }

/// f must be a polynomial in v alone, zero or graded of the u-residue.
void check_first_type_shift(const Poly& f, const NormalizedGrading& g, const char* who) {
    if (f.arity() != 2) throw UsageError(std::string(who) + ": shift must be a plane polynomial");
    if (!f.independent_of(0)) throw UsageError(std::string(who) + ": shift must involve v only");
    if (f.is_zero()) return;
    CyclicGrading cg = induced_cyclic(g);
    if (!cyclic_degree(f, cg).matches(cg.u_residue))
        throw UsageError(std::string(who) + ": shift is not graded of the u-residue");
}

PolyMap first_type_map(const Rational& lambda, const Poly& f) {
    return PolyMap({lambda * plane_u() + f, plane_v()});
}

}  // namespace

DElement::DElement(const Rational& lambda, const Rational& mu, long k,
                   const NormalizedGrading& g)
    : lambda_(lambda), mu_(mu), k_(k) {
    if (lambda_.is_zero()) throw UsageError("D element needs a nonzero scale");
    if (k_ < 1) throw UsageError("D element needs a positive exponent");
    if (!mu_.is_zero() && ((k_ * g.a - g.b) % g.c != 0))
        throw UsageError("D element violates k*a = b (mod c)");
}

PolyMap DElement::plane_map() const {
    return PolyMap({plane_u(), lambda_ * plane_v() + mu_ * plane_u().pow(k_)});
}

UElement::UElement(const Rational& lambda, Poly f, const NormalizedGrading& g)
    : lambda_(lambda), f_(std::move(f)) {
    if (lambda_.is_zero()) throw UsageError("U element needs a nonzero scale");
    check_first_type_shift(f_, g, "U element");
    if (auto span = univariate_degree_span(f_)) {
        if (span->first * g.b < g.a)
            throw UsageError("U element shift has an exponent below a/b");
    }
}

PolyMap UElement::plane_map() const { return first_type_map(lambda_, f_); }

WElement::WElement(const Rational& lambda, Poly f, const NormalizedGrading& g)
    : lambda_(lambda), f_(std::move(f)) {
    if (lambda_.is_zero()) throw UsageError("W element needs a nonzero scale");
    check_first_type_shift(f_, g, "W element");
    if (auto span = univariate_degree_span(f_)) {
        if (span->second * g.b >= g.a)
            throw UsageError("W element shift has an exponent at or above a/b");
    }
}

PolyMap WElement::plane_map() const { return first_type_map(lambda_, f_); }

PolyMap WElement::inverse_plane_map() const {
    Rational inv = lambda_.inverse();
    return first_type_map(inv, (-inv) * f_);
}

SElement::SElement(WElement tau, DElement theta, WElement s, const NormalizedGrading& g)
    : tau_(std::move(tau)),
      theta_(std::move(theta)),
      s_(std::move(s)),
      tau_theta_([&] {
          // tau_theta = s . tau^-1, a W element since W is a subgroup.
          Rational lam = s_.lambda() / tau_.lambda();
          Poly f = s_.f() - lam * tau_.f();
          return WElement(lam, std::move(f), g);
      }()),
      plane_(PolyMap::identity(2)),
      lifted_([&] {
          PolyMap conj = compose(compose(tau_.inverse_plane_map(), theta_.plane_map()),
                                 tau_.plane_map());
          PolyMap composed = compose(s_.plane_map(), conj);
          if (!liftable(composed, g))
              throw UsageError("S element: s . tau^-1 . theta . tau is not liftable");
          return lift(composed, g);
      }()) {
    plane_ = restrict_to_plane(lifted_);
    if (!(compose(tau_theta_.plane_map(),
                  compose(theta_.plane_map(), tau_.plane_map())) == plane_))
        throw InternalError("tau_theta . theta . tau does not match the S element plane map");
}

ElemClass classify_elementary(const ElemAuto& xi, const NormalizedGrading& g) {
    if (xi.arity() != 2) throw UsageError("classify_elementary needs a plane factor");
    CyclicGrading cg = induced_cyclic(g);
    if (!is_graded(xi.to_map(), cg))
        throw UsageError("classify_elementary: factor is not graded");
    if (xi.shift().has_constant_term())
        throw UsageError("classify_elementary: factor moves the origin");

    if (xi.axis() == 0) return FirstTypeFactor{xi.scale(), xi.shift()};

    // Second-type (u, lambda*v + F(u)): one D element per monomial of F,
    // ascending in k, with the diagonal scale carried by the last.
    std::map<long, Rational> monomials;
    for (const auto& [m, c] : xi.shift().terms()) monomials[m.exponent(0)] = c;
    std::vector<DElement> out;
    if (monomials.empty()) {
        out.emplace_back(xi.scale(), 0, 1, g);
        return out;
    }
    std::size_t index = 0;
    for (const auto& [k, mu] : monomials) {
        bool last = ++index == monomials.size();
        out.emplace_back(last ? xi.scale() : Rational(1), mu, k, g);
    }
    return out;
}

std::pair<WElement, UElement> split_first_type(const Rational& lambda, const Poly& f,
                                               const NormalizedGrading& g) {
    check_first_type_shift(f, g, "split_first_type");
    Poly low(2), high(2);
    for (const auto& [m, c] : f.terms()) {
        if (m.exponent(1) * g.b < g.a)
            low.add_term(m, c);
        else
            high.add_term(m, c);
    }
    WElement tau(1, std::move(low), g);
    UElement tau1(lambda, std::move(high), g);
    if (!(compose(tau.plane_map(), tau1.plane_map()) == first_type_map(lambda, f)))
        throw InternalError("split_first_type does not recompose");
    return {std::move(tau), std::move(tau1)};
}

WElement correction(const WElement& tau, const DElement& theta, const NormalizedGrading& g) {
    PolyMap psi = compose(compose(tau.inverse_plane_map(), theta.plane_map()),
                          tau.plane_map());
    const Rational lambda = psi.image(1).coefficient(Monomial(2, {0, 1}));
    if (lambda.is_zero())
        throw InternalError("correction: second image has no linear v term");

    CyclicGrading cg = induced_cyclic(g);
    Poly s_shift(2);
    long iterations = 0;
    const long max_iterations = (g.a + g.b - 1) / g.b;  // ceil(a/b)
    long last_m = 0;
    while (true) {
        std::optional<std::pair<long, Rational>> low;
        for (const auto& [m, c] : psi.image(0).terms()) {
            if (m.exponent(0) != 0) continue;
            long q = m.exponent(1);
            if (q * g.b >= g.a) continue;
            if (!low || q < low->first) low = {q, c};
        }
        if (!low) break;
        auto [m1, nu] = *low;
        if (m1 < 1) throw InternalError("correction: conjugate moved the origin");
        if (iterations > 0 && m1 <= last_m)
            throw InternalError("correction: offending degree did not increase");
        if (++iterations > max_iterations)
            throw InternalError("correction: exceeded the ceil(a/b) iteration bound");
        if (((m1 * g.b - g.a) % g.c) != 0)
            throw InternalError("correction: step is not graded (m*b != a mod c)");
        last_m = m1;

        Rational coeff = -(nu / lambda.pow(m1));
        Poly step_shift = coeff * plane_v().pow(m1);
        ElemAuto step(0, 1, step_shift);
        if (!is_graded(step.to_map(), cg))
            throw InternalError("correction: emitted step is not graded");
        psi = compose(step.to_map(), psi);
        s_shift = s_shift + step_shift;
    }

    WElement s(1, std::move(s_shift), g);
    if (!liftable(compose(s.plane_map(),
                          compose(compose(tau.inverse_plane_map(), theta.plane_map()),
                                  tau.plane_map())),
                  g))
        throw InternalError("correction result is not liftable");
    return s;
}

SElement make_s_element(const WElement& tau, const DElement& theta,
                        const NormalizedGrading& g) {
    return SElement(tau, theta, correction(tau, theta, g), g);
}

GenWord decompose_graded(const PolyMap& phi, const NormalizedGrading& g) {
    if (phi.arity() != 3) throw UsageError("decompose_graded needs an arity-3 map");
    if (!(g.a > g.b))
        throw DomainError(DomainError::Kind::UnsupportedGrading,
                          "decomposition requires a > b (holds for every wild-admitting grading)");
    if (!is_graded(phi, g.weights()))
        throw DomainError(DomainError::Kind::NotGraded, "map is not graded");

    std::pair<EMember, TorusFactor> split = [&] {
        try {
            return split_torus(phi, g);
        } catch (const DomainError& e) {
            if (e.kind() == DomainError::Kind::NotSplittable)
                throw DomainError(DomainError::Kind::NotAutomorphism,
                                  "not an automorphism: " + std::string(e.what()), "torus split");
            throw;
        }
    }();

    PolyMap plane = restrict_to_plane(split.first);
    CyclicGrading cg = induced_cyclic(g);
    ElemSeq word = normalize_linear_parts(jvdk_decompose(plane, cg), cg);

    // Tagged factors, outermost first.
    struct Tagged {
        std::optional<DElement> d;
        std::optional<FirstTypeFactor> ft;
    };
    std::vector<Tagged> tagged;
    for (const ElemAuto& factor : word.factors()) {
        ElemClass c = classify_elementary(factor, g);
        if (auto* ds = std::get_if<std::vector<DElement>>(&c)) {
            for (const DElement& d : *ds) tagged.push_back({d, std::nullopt});
        } else {
            tagged.push_back({std::nullopt, std::get<FirstTypeFactor>(std::move(c))});
        }
    }

    // Right-to-left scan. The accumulated first-type suffix (lambda, f) is
    // split at each D element: the U part and the S element are peeled onto
    // the output, and tau . s^-1 continues as the new suffix.
    std::vector<GenFactor> inner_first;
    Rational acc_lambda = 1;
    Poly acc_f(2);
    auto scan_d = [&](const DElement& theta) {
        auto [tau, tau1] = split_first_type(acc_lambda, acc_f, g);
        if (!tau1.is_identity()) inner_first.emplace_back(tau1);
        SElement s_elem = make_s_element(tau, theta, g);
        const WElement& s = s_elem.s();
        acc_lambda = 1;
        acc_f = tau.f() - s.f();
        inner_first.emplace_back(std::move(s_elem));
    };
    for (auto it = tagged.rbegin(); it != tagged.rend(); ++it) {
        if (it->d) {
            scan_d(*it->d);
        } else {
            // Prepend the first-type factor: (nu*u + h(v), v) . (lambda*u + f(v), v).
            const auto& [nu, h] = *it->ft;
            acc_f = nu * acc_f + h;
            acc_lambda = nu * acc_lambda;
        }
    }
    UElement final_prefix = [&] {
        try {
            return UElement(acc_lambda, acc_f, g);
        } catch (const UsageError& e) {
            throw InternalError(std::string("final first-type prefix is not a U element: ") +
                                e.what());
        }
    }();
    if (!final_prefix.is_identity()) inner_first.emplace_back(std::move(final_prefix));

    std::vector<GenFactor> factors(inner_first.rbegin(), inner_first.rend());
    if (!split.second.lambda.is_one()) factors.emplace_back(split.second);

    GenWord result(g, std::move(factors));
    if (!(recompose(result) == phi))
        throw InternalError("decomposition does not recompose to its input");
    return result;
}

PolyMap recompose(const GenWord& word) {
    PolyMap acc = PolyMap::identity(3);
    for (const GenFactor& factor : word.factors()) {
        PolyMap next = std::visit(
            [&](const auto& f) -> PolyMap {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, TorusFactor>) {
                    return f.to_map();
                } else if constexpr (std::is_same_v<T, UElement>) {
                    return lift(f.plane_map(), word.grading()).map();
                } else {
                    return f.lifted().map();
                }
            },
            factor);
        acc = compose(acc, next);
    }
    return acc;
}

}  // namespace grautkit
