#include "grautkit/poly.hpp"

#include <algorithm>

#include "grautkit/errors.hpp"

namespace grautkit {

namespace {

void check_arity(int arity) {
    if (arity != 2 && arity != 3) throw UsageError("arity must be 2 or 3");
}

void check_same_arity(int a, int b) {
    if (a != b) throw UsageError("arity mismatch");
}

/// Representation check after each operation; compiled out of release builds.
const Poly& debug_checked(const Poly& p) {
#ifndef NDEBUG
    p.assert_valid();
#endif
    return p;
}

}  // namespace

Monomial::Monomial(int arity) : arity_(arity) { check_arity(arity); }

Monomial::Monomial(int arity, std::initializer_list<long> exponents) : arity_(arity) {
    check_arity(arity);
    if (static_cast<int>(exponents.size()) != arity)
        throw UsageError("exponent count does not match arity");
    int i = 0;
    for (long e : exponents) {
        if (e < 0) throw UsageError("negative exponent");
        e_[static_cast<std::size_t>(i++)] = e;
    }
}

long Monomial::exponent(int var) const {
    if (var < 0 || var >= arity_) throw UsageError("variable index out of range");
    return e_[static_cast<std::size_t>(var)];
}

Monomial Monomial::with_exponent(int var, long e) const {
    if (var < 0 || var >= arity_) throw UsageError("variable index out of range");
    if (e < 0) throw UsageError("negative exponent");
    Monomial m = *this;
    m.e_[static_cast<std::size_t>(var)] = e;
    return m;
}

long Monomial::total_degree() const {
    long d = 0;
    for (int i = 0; i < arity_; ++i) d += e_[static_cast<std::size_t>(i)];
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same_arity(a.arity_, b.arity_);
    Monomial m = a;
    for (int i = 0; i < a.arity_; ++i) m.e_[static_cast<std::size_t>(i)] += b.e_[static_cast<std::size_t>(i)];
    return m;
}

bool Monomial::graded_lex_before(const Monomial& a, const Monomial& b) {
    check_same_arity(a.arity_, b.arity_);
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    for (int i = 0; i < a.arity_; ++i) {
        auto ea = a.e_[static_cast<std::size_t>(i)], eb = b.e_[static_cast<std::size_t>(i)];
        if (ea != eb) return ea > eb;
    }
    return false;
}

WeightVector::WeightVector(std::initializer_list<long> ws) : w_(ws) {
    check_arity(static_cast<int>(w_.size()));
}

WeightVector::WeightVector(std::vector<long> ws) : w_(std::move(ws)) {
    check_arity(static_cast<int>(w_.size()));
}

Poly::Poly(int arity) : arity_(arity) { check_arity(arity); }

Poly Poly::constant(int arity, const Rational& c) {
    Poly p(arity);
    p.add_term(Monomial(arity), c);
    return p;
}

Poly Poly::variable(int arity, int var) {
    Poly p(arity);
    p.add_term(Monomial(arity).with_exponent(var, 1), 1);
    return p;
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
    Poly p(m.arity());
    p.add_term(m, c);
    return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    check_same_arity(arity_, m.arity());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational Poly::coefficient(const Monomial& m) const {
    check_same_arity(arity_, m.arity());
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::operator-() const {
    Poly r(arity_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly operator+(const Poly& p, const Poly& q) {
    check_same_arity(p.arity_, q.arity_);
    Poly r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    debug_checked(r);
    return r;
}

Poly operator-(const Poly& p, const Poly& q) {
    check_same_arity(p.arity_, q.arity_);
    Poly r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
    debug_checked(r);
    return r;
}

Poly operator*(const Poly& p, const Poly& q) {
    check_same_arity(p.arity_, q.arity_);
    Poly r(p.arity_);
    for (const auto& [mp, cp] : p.terms_)
        for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
    debug_checked(r);
    return r;
}

Poly operator*(const Rational& c, const Poly& p) {
    Poly r(p.arity_);
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

Poly Poly::pow(long k) const {
    if (k < 0) throw UsageError("negative polynomial power");
    Poly acc = Poly::constant(arity_, 1);
    Poly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

std::optional<long> Poly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    // First term in graded-lex order has maximal total degree.
    return terms_.begin()->first.total_degree();
}

Poly Poly::leading_form() const {
    Poly r(arity_);
    auto d = total_degree();
    if (!d) return r;
    for (const auto& [m, c] : terms_) {
        if (m.total_degree() != *d) break;
        r.terms_.emplace(m, c);
    }
    return r;
}

bool Poly::independent_of(int var) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [var](const auto& t) { return t.first.exponent(var) == 0; });
}

bool Poly::has_constant_term() const {
    return terms_.count(Monomial(arity_)) != 0;
}

Rational Poly::constant_term() const { return coefficient(Monomial(arity_)); }

void Poly::assert_valid() const {
    for (const auto& [m, c] : terms_) {
        if (c.is_zero()) throw InternalError("stored zero coefficient");
        if (m.arity() != arity_) throw InternalError("mixed-arity polynomial");
    }
}

Rational coefficient_of(const Poly& p, const Monomial& m) { return p.coefficient(m); }

Poly substitute(const Poly& p, std::span<const Poly> images) {
    if (static_cast<int>(images.size()) != p.arity())
        throw UsageError("substitute: image count does not match arity");
    int out_arity = images[0].arity();
    for (const Poly& im : images) check_same_arity(out_arity, im.arity());

    // Power tables per variable, filled on demand.
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](int var, long e) -> const Poly& {
        auto& table = powers[static_cast<std::size_t>(var)];
        if (table.empty()) table.push_back(Poly::constant(out_arity, 1));
        while (static_cast<long>(table.size()) <= e)
            table.push_back(table.back() * images[static_cast<std::size_t>(var)]);
        return table[static_cast<std::size_t>(e)];
    };

    Poly result(out_arity);
    for (const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(out_arity, c);
        for (int var = 0; var < p.arity(); ++var) {
            long e = m.exponent(var);
            if (e > 0) term = term * power(var, e);
        }
        result = result + term;
    }
    debug_checked(result);
    return result;
}

DegreeQuery gamma_degree(const Poly& p, const WeightVector& w) {
    if (w.arity() != p.arity()) throw UsageError("weight vector arity mismatch");
    if (p.is_zero()) return DegreeQuery::every();
    std::optional<long> degree;
    for (const auto& [m, c] : p.terms()) {
        long d = 0;
        for (int var = 0; var < p.arity(); ++var) d += m.exponent(var) * w.weight(var);
        if (!degree)
            degree = d;
        else if (*degree != d)
            return DegreeQuery::none();
    }
    return DegreeQuery::of(*degree);
}

std::optional<std::pair<long, long>> univariate_degree_span(const Poly& f) {
    int used_var = -1;
    for (const auto& [m, c] : f.terms()) {
        for (int var = 0; var < f.arity(); ++var) {
            if (m.exponent(var) == 0) continue;
            if (used_var == -1) used_var = var;
            if (used_var != var)
                throw UsageError("univariate_degree_span: polynomial involves several variables");
        }
    }
    if (f.is_zero()) return std::nullopt;
    long lo = -1, hi = -1;
    for (const auto& [m, c] : f.terms()) {
        long e = used_var == -1 ? 0 : m.exponent(used_var);
        if (lo == -1 || e < lo) lo = e;
        if (e > hi) hi = e;
    }
    return std::make_pair(lo, hi);
}

}  // namespace grautkit
