#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grautkit/rational.hpp"

namespace grautkit {

/// A power product in 2 variables (u, v) or 3 variables (x, y, z).
/// The arity is fixed at construction.
class Monomial {
public:
    explicit Monomial(int arity);
    Monomial(int arity, std::initializer_list<long> exponents);

    int arity() const { return arity_; }
    long exponent(int var) const;
    Monomial with_exponent(int var, long e) const;

    long total_degree() const;
    bool is_unit() const { return total_degree() == 0; }

    /// Product of power products: exponent-wise sum.
    friend Monomial operator*(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.arity_ == b.arity_ && a.e_ == b.e_;
    }

    /// Graded-lexicographic comparison with x > y > z (u > v): higher total
    /// degree first, ties broken by lexicographically larger exponent vector.
    /// This is the canonical term order for printing.
    static bool graded_lex_before(const Monomial& a, const Monomial& b);

private:
    int arity_;
    std::array<std::int64_t, 3> e_{};
};

/// Comparator placing monomials in canonical print order.
struct GradedLexBefore {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::graded_lex_before(a, b);
    }
};

/// One integer degree per variable.
class WeightVector {
public:
    WeightVector(std::initializer_list<long> ws);
    explicit WeightVector(std::vector<long> ws);

    int arity() const { return static_cast<int>(w_.size()); }
    long weight(int var) const { return w_.at(static_cast<std::size_t>(var)); }

private:
    std::vector<long> w_;
};

/// Result of a homogeneity/degree query. A nonzero homogeneous polynomial has
/// one degree; the zero polynomial is homogeneous of every degree; anything
/// else is not homogeneous.
class DegreeQuery {
public:
    static DegreeQuery none() { return DegreeQuery(Kind::None, 0); }
    static DegreeQuery every() { return DegreeQuery(Kind::Every, 0); }
    static DegreeQuery of(long d) { return DegreeQuery(Kind::Fixed, d); }

    bool is_homogeneous() const { return kind_ != Kind::None; }
    bool is_every_degree() const { return kind_ == Kind::Every; }
    std::optional<long> value() const {
        if (kind_ == Kind::Fixed) return degree_;
        return std::nullopt;
    }
    /// True when the polynomial is homogeneous of degree d (zero matches all).
    bool matches(long d) const {
        return kind_ == Kind::Every || (kind_ == Kind::Fixed && degree_ == d);
    }

    friend bool operator==(const DegreeQuery&, const DegreeQuery&) = default;

private:
    enum class Kind { None, Every, Fixed };
    DegreeQuery(Kind k, long d) : kind_(k), degree_(d) {}
    Kind kind_;
    long degree_;
};

/// Sparse exact-rational polynomial in 2 (u, v) or 3 (x, y, z) variables.
/// Terms are kept in canonical order; no zero coefficient is ever stored.
/// Values are immutable in practice: all operations return new polynomials.
class Poly {
public:
    using Terms = std::map<Monomial, Rational, GradedLexBefore>;

    explicit Poly(int arity);

    static Poly zero(int arity) { return Poly(arity); }
    static Poly constant(int arity, const Rational& c);
    static Poly variable(int arity, int var);
    static Poly monomial(const Monomial& m, const Rational& c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    /// Adds c * m into this polynomial, merging and dropping zeros.
    void add_term(const Monomial& m, const Rational& c);

    Rational coefficient(const Monomial& m) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    friend Poly operator*(const Rational& c, const Poly& p);

    Poly pow(long k) const;

    friend bool operator==(const Poly& p, const Poly& q) {
        return p.arity_ == q.arity_ && p.terms_ == q.terms_;
    }

    /// Largest total degree among terms; nullopt for the zero polynomial.
    std::optional<long> total_degree() const;

    /// Sum of the terms of maximal total degree. Zero for the zero polynomial.
    Poly leading_form() const;

    /// True if no term involves the given variable.
    bool independent_of(int var) const;

    bool has_constant_term() const;
    Rational constant_term() const;

    /// Checks the representation invariants; throws InternalError on failure.
    void assert_valid() const;

private:
    int arity_;
    Terms terms_;
};

/// Coefficient of m in p, or 0.
Rational coefficient_of(const Poly& p, const Monomial& m);

/// Ring-homomorphic substitution: every variable of p is replaced by its
/// image. All images must share one arity, which becomes the result arity.
Poly substitute(const Poly& p, std::span<const Poly> images);

/// Weighted-degree homogeneity query: if every term of p has the same
/// weighted degree, that degree; the zero polynomial matches every degree.
DegreeQuery gamma_degree(const Poly& p, const WeightVector& w);

/// (smallest, largest) exponent among terms of a polynomial involving at most
/// one variable. For the zero polynomial returns nullopt, standing for the
/// conventional pair (+inf, -inf).
std::optional<std::pair<long, long>> univariate_degree_span(const Poly& f);

}  // namespace grautkit
