#include "grautkit/endo.hpp"

#include <algorithm>

#include "grautkit/errors.hpp"

namespace grautkit {

namespace {

Poly plane_u(int arity = 2) { return Poly::variable(arity, 0); }
Poly plane_v(int arity = 2) { return Poly::variable(arity, 1); }

[[noreturn]] void not_automorphism(const std::string& stage) {
    throw DomainError(DomainError::Kind::NotAutomorphism, "not an automorphism: " + stage, stage);
}

}  // namespace

PolyMap::PolyMap(std::vector<Poly> images) : images_(std::move(images)) {
    if (images_.empty()) throw UsageError("map needs at least one image");
    arity_ = images_[0].arity();
    if (static_cast<int>(images_.size()) != arity_)
        throw UsageError("map must have one image per variable");
    for (const Poly& p : images_)
        if (p.arity() != arity_) throw UsageError("map images with mixed arity");
}

PolyMap PolyMap::identity(int arity) {
    std::vector<Poly> images;
    for (int i = 0; i < arity; ++i) images.push_back(Poly::variable(arity, i));
    return PolyMap(std::move(images));
}

bool PolyMap::is_identity() const { return *this == identity(arity_); }

bool PolyMap::fixes_origin() const {
    return std::none_of(images_.begin(), images_.end(),
                        [](const Poly& p) { return p.has_constant_term(); });
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
    if (outer.arity() != inner.arity()) throw UsageError("compose: arity mismatch");
    std::vector<Poly> images;
    images.reserve(static_cast<std::size_t>(outer.arity()));
    for (int i = 0; i < outer.arity(); ++i)
        images.push_back(substitute(outer.image(i), inner.images()));
    return PolyMap(std::move(images));
}

bool is_graded(const PolyMap& phi, const WeightVector& w) {
    if (phi.arity() != w.arity()) throw UsageError("is_graded: arity mismatch");
    for (int i = 0; i < phi.arity(); ++i)
        if (!gamma_degree(phi.image(i), w).matches(w.weight(i))) return false;
    return true;
}

DegreeQuery cyclic_degree(const Poly& p, const CyclicGrading& g) {
    if (p.arity() != 2) throw UsageError("cyclic gradings apply to plane polynomials");
    if (p.is_zero()) return DegreeQuery::every();
    auto mod = [&](long x) { return ((x % g.modulus) + g.modulus) % g.modulus; };
    std::optional<long> residue;
    for (const auto& [m, c] : p.terms()) {
        long r = mod(m.exponent(0) * g.u_residue + m.exponent(1) * g.v_residue);
        if (!residue)
            residue = r;
        else if (*residue != r)
            return DegreeQuery::none();
    }
    return DegreeQuery::of(*residue);
}

bool is_graded(const PolyMap& phi, const CyclicGrading& g) {
    if (phi.arity() != 2) throw UsageError("cyclic gradings apply to plane maps");
    auto mod = [&](long x) { return ((x % g.modulus) + g.modulus) % g.modulus; };
    return cyclic_degree(phi.image(0), g).matches(mod(g.u_residue)) &&
           cyclic_degree(phi.image(1), g).matches(mod(g.v_residue));
}

ElemAuto::ElemAuto(int axis, const Rational& scale, Poly shift)
    : axis_(axis), scale_(scale), shift_(std::move(shift)) {
    if (axis_ < 0 || axis_ >= shift_.arity()) throw UsageError("elementary axis out of range");
    if (scale_.is_zero()) throw UsageError("elementary scale must be nonzero");
    if (!shift_.independent_of(axis_))
        throw UsageError("elementary shift must not involve its own axis");
}

PolyMap ElemAuto::to_map() const {
    std::vector<Poly> images;
    for (int i = 0; i < arity(); ++i) {
        if (i == axis_)
            images.push_back(scale_ * Poly::variable(arity(), i) + shift_);
        else
            images.push_back(Poly::variable(arity(), i));
    }
    return PolyMap(std::move(images));
}

bool ElemAuto::is_identity() const { return scale_.is_one() && shift_.is_zero(); }

ElemAuto elementary_inverse(const ElemAuto& e) {
    Rational inv = e.scale().inverse();
    return ElemAuto(e.axis(), inv, (-inv) * e.shift());
}

ElemSeq::ElemSeq(int arity, std::vector<ElemAuto> factors)
    : arity_(arity), factors_(std::move(factors)) {
    for (const ElemAuto& e : factors_)
        if (e.arity() != arity_) throw UsageError("mixed-arity elementary word");
}

void ElemSeq::push_back(const ElemAuto& e) {
    if (e.arity() != arity_) throw UsageError("mixed-arity elementary word");
    factors_.push_back(e);
}

PolyMap ElemSeq::to_map() const {
    PolyMap acc = PolyMap::identity(arity_);
    // factors_[0] is outermost, so fold from the right.
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
        acc = compose(it->to_map(), acc);
    return acc;
}

namespace {

/// Proportionality factor rho with target == rho * base, if one exists.
std::optional<Rational> proportional(const Poly& target, const Poly& base) {
    if (base.is_zero() || target.is_zero()) return std::nullopt;
    const auto& [m0, c0] = *base.terms().begin();
    Rational rho = target.coefficient(m0) / c0;
    if (rho.is_zero()) return std::nullopt;
    if (target == rho * base) return rho;
    return std::nullopt;
}

void assert_factor_graded(const ElemAuto& e, const std::optional<CyclicGrading>& g) {
    if (g && !is_graded(e.to_map(), *g))
        throw InternalError("decomposition emitted a non-graded elementary factor");
}

}  // namespace

ElemSeq jvdk_decompose(const PolyMap& phi, const std::optional<CyclicGrading>& assert_grading) {
    if (phi.arity() != 2) throw UsageError("plane decomposition needs an arity-2 map");

    const bool origin_fixing = phi.fixes_origin();
    ElemSeq factors(2);
    auto emit = [&](const ElemAuto& e) {
        assert_factor_graded(e, assert_grading);
        factors.push_back(e);
    };

    PolyMap cur = phi;

    // Degree reduction: cancel the leading form of the higher-degree
    // component against a power of the lower one.
    while (true) {
        auto d0 = cur.image(0).total_degree();
        auto d1 = cur.image(1).total_degree();
        if (!d0 || !d1) not_automorphism("zero component");
        if (*d0 <= 1 && *d1 <= 1) break;

        int hi = *d0 >= *d1 ? 0 : 1;
        int lo = 1 - hi;
        long dh = hi == 0 ? *d0 : *d1;
        long dl = hi == 0 ? *d1 : *d0;
        if (dl == 0) not_automorphism("constant component");
        if (dh % dl != 0) not_automorphism("non-divisible component degrees");
        long k = dh / dl;

        Poly hform = cur.image(hi).leading_form();
        Poly lpow = cur.image(lo).leading_form().pow(k);
        auto rho = proportional(hform, lpow);
        if (!rho) not_automorphism("leading forms not proportional");

        Poly reduced = cur.image(hi) - *rho * cur.image(lo).pow(k);
        auto dr = reduced.total_degree();
        if (dr && *dr >= dh) throw InternalError("degree did not decrease in reduction step");

        Poly shift = *rho * Poly::variable(2, lo).pow(k);
        emit(ElemAuto(hi, 1, shift));

        std::vector<Poly> next = cur.images();
        next[static_cast<std::size_t>(hi)] = reduced;
        cur = PolyMap(std::move(next));
    }

    // Terminal affine stage: reduce to the identity by row operations, each
    // realized as a left-composed elementary map whose inverse is emitted.
    auto coeff = [&](int row, int var) {
        return cur.image(row).coefficient(Monomial(2).with_exponent(var, 1));
    };
    auto apply = [&](const ElemAuto& op) {
        emit(elementary_inverse(op));
        cur = compose(op.to_map(), cur);
    };

    {
        Rational a00 = coeff(0, 0), a01 = coeff(0, 1), a10 = coeff(1, 0), a11 = coeff(1, 1);
        if ((a00 * a11 - a01 * a10).is_zero()) not_automorphism("singular linear part");
        if (a00.is_zero()) {
            // Pivot sits on v in the first row: swap the rows as three shears
            // and one -1 scale.
            apply(ElemAuto(0, 1, plane_v()));
            apply(ElemAuto(1, 1, -plane_u()));
            apply(ElemAuto(0, 1, plane_v()));
            apply(ElemAuto(1, -1, Poly::zero(2)));
        }
    }

    if (!coeff(1, 0).is_zero())
        apply(ElemAuto(1, 1, (-(coeff(1, 0) / coeff(0, 0))) * plane_u()));
    if (!coeff(0, 1).is_zero())
        apply(ElemAuto(0, 1, (-(coeff(0, 1) / coeff(1, 1))) * plane_v()));
    if (!coeff(0, 0).is_one()) apply(ElemAuto(0, coeff(0, 0).inverse(), Poly::zero(2)));
    if (!coeff(1, 1).is_one()) apply(ElemAuto(1, coeff(1, 1).inverse(), Poly::zero(2)));

    Rational c0 = cur.image(0).constant_term(), c1 = cur.image(1).constant_term();
    if (origin_fixing && (!c0.is_zero() || !c1.is_zero()))
        throw InternalError("origin-fixing input produced translation factors");
    if (!c0.is_zero()) apply(ElemAuto(0, 1, Poly::constant(2, -c0)));
    if (!c1.is_zero()) apply(ElemAuto(1, 1, Poly::constant(2, -c1)));

    if (!cur.is_identity()) not_automorphism("affine stage did not terminate at the identity");
    return factors;
}

namespace {

/// Invertible linear plane map, used as the carry while linear parts are
/// pushed through an elementary word. Row i holds the coefficients of the
/// i-th image: (m00*u + m01*v, m10*u + m11*v).
struct Lin2 {
    Rational m00 = 1, m01 = 0, m10 = 0, m11 = 1;

    static Lin2 of(const ElemAuto& e) {
        Lin2 l;
        Rational sv = e.shift().coefficient(Monomial(2).with_exponent(1 - e.axis(), 1));
        if (e.axis() == 0) {
            l.m00 = e.scale();
            l.m01 = sv;
        } else {
            l.m11 = e.scale();
            l.m10 = sv;
        }
        return l;
    }

    Rational det() const { return m00 * m11 - m01 * m10; }
    bool is_identity() const {
        return m00.is_one() && m01.is_zero() && m10.is_zero() && m11.is_one();
    }

    /// Composition as maps: linear parts multiply row-by-column.
    friend Lin2 operator*(const Lin2& a, const Lin2& b) {
        Lin2 r;
        r.m00 = a.m00 * b.m00 + a.m01 * b.m10;
        r.m01 = a.m00 * b.m01 + a.m01 * b.m11;
        r.m10 = a.m10 * b.m00 + a.m11 * b.m10;
        r.m11 = a.m10 * b.m01 + a.m11 * b.m11;
        return r;
    }
};

Poly rescale_variable(const Poly& f, int var, const Rational& factor) {
    // f(..., factor * t, ...) expanded exactly.
    Poly r(f.arity());
    for (const auto& [m, c] : f.terms()) r.add_term(m, c * factor.pow(m.exponent(var)));
    return r;
}

Poly swap_plane_variables(const Poly& f) {
    Poly r(2);
    for (const auto& [m, c] : f.terms())
        r.add_term(Monomial(2, {m.exponent(1), m.exponent(0)}), c);
    return r;
}

}  // namespace

ElemSeq normalize_linear_parts(const ElemSeq& seq, const CyclicGrading& grading) {
    if (seq.arity() != 2) throw UsageError("normalize_linear_parts needs a plane word");
    for (const ElemAuto& e : seq.factors()) {
        if (!is_graded(e.to_map(), grading))
            throw UsageError("normalize_linear_parts: factor is not graded");
        if (e.shift().has_constant_term())
            throw UsageError("normalize_linear_parts: factor moves the origin");
    }
    const PolyMap composed = seq.to_map();
    const Monomial unit_u = Monomial(2, {1, 0});
    const Monomial unit_v = Monomial(2, {0, 1});
    if (!composed.image(0).coefficient(unit_v).is_zero() ||
        composed.image(0).coefficient(unit_u).is_zero())
        throw UsageError("normalize_linear_parts: composed first component must have linear part lambda*u");

    ElemSeq out(2);
    auto emit = [&](const ElemAuto& e) {
        if (e.is_identity()) return;
        if (e.axis() == 0 && !e.shift().coefficient(unit_v).is_zero())
            throw InternalError("normalization emitted a u-factor with a v-linear term");
        if (!is_graded(e.to_map(), grading))
            throw InternalError("normalization emitted a non-graded factor");
        if (e.shift().has_constant_term())
            throw InternalError("normalization emitted an origin-moving factor");
        out.push_back(e);
    };

    // Scan outermost to innermost, keeping a linear carry C so that at every
    // step: original = (emitted word) . C . (remaining factors). Each factor
    // is rewritten as compliant elementaries times a new carry.
    Lin2 c;
    for (const ElemAuto& xi : seq.factors()) {
        if (xi.axis() == 0) {
            const Rational nu = xi.scale();
            const Rational lam = xi.shift().coefficient(unit_v);
            Poly f = xi.shift();
            f.add_term(unit_v, -lam);  // shift minus its v-linear term
            if (f.is_zero()) {
                c = c * Lin2::of(xi);
                continue;
            }
            if (c.m10.is_zero()) {
                // (u + p*f(v/s), v) peels off; the linear remainder joins the carry.
                emit(ElemAuto(0, 1, rescale_variable(c.m00 * f, 1, c.m11.inverse())));
                Lin2 next;
                next.m00 = c.m00 * nu;
                next.m01 = c.m00 * lam + c.m01;
                next.m10 = 0;
                next.m11 = c.m11;
                c = next;
            } else if (!c.m00.is_zero()) {
                emit(ElemAuto(1, c.det() / c.m00, (c.m10 / c.m00) * plane_u()));
                emit(ElemAuto(0, 1, c.m00 * f));
                Lin2 next;
                next.m00 = c.m00 * nu;
                next.m01 = c.m00 * lam + c.m01;
                next.m10 = 0;
                next.m11 = 1;
                c = next;
            } else {
                emit(ElemAuto(1, 1,
                              rescale_variable(swap_plane_variables(c.m10 * f), 0,
                                               c.m01.inverse())));
                Lin2 next;
                next.m00 = 0;
                next.m01 = c.m01;
                next.m10 = c.m10 * nu;
                next.m11 = c.m10 * lam + c.m11;
                c = next;
            }
        } else {
            const Rational delta = xi.scale();
            const Poly& g = xi.shift();  // polynomial in u, no constant term
            if (c.m01.is_zero()) {
                emit(ElemAuto(0, c.m00, Poly::zero(2)));
                emit(ElemAuto(1, c.m11 * delta, c.m10 * plane_u() + c.m11 * g));
                c = Lin2{};
            } else {
                // Three-factor rewrite: a compliant linear head, an elementary
                // middle, and a linear tail that becomes the next carry.
                const Rational g_lin = g.coefficient(unit_u);
                Poly g_rest = g;
                g_rest.add_term(unit_u, -g_lin);
                emit(ElemAuto(1, -(c.det() / c.m01), (c.m11 / c.m01) * plane_u()));
                emit(ElemAuto(0, 1, swap_plane_variables(c.m01 * g_rest)));
                Lin2 next;
                next.m00 = c.m00 + c.m01 * g_lin;
                next.m01 = c.m01 * delta;
                next.m10 = 1;
                next.m11 = 0;
                c = next;
            }
        }
    }

    if (!c.m01.is_zero())
        throw InternalError("leftover v-linear carry after normalization");
    emit(ElemAuto(0, c.m00, Poly::zero(2)));
    if (!c.m10.is_zero() || !c.m11.is_one())
        emit(ElemAuto(1, c.m11, c.m10 * plane_u()));

    if (!(out.to_map() == composed))
        throw InternalError("normalization changed the composed map");
    return out;
}

}  // namespace grautkit
