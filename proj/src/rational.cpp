#include "grautkit/rational.hpp"

#include <cctype>
#include <ostream>

namespace grautkit {

Rational Rational::from_string(std::string_view text) {
    auto fail = [&] { throw UsageError("malformed rational: \"" + std::string(text) + "\""); };
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) fail();
    std::string num(text.substr(0, i));
    std::string den = "1";
    if (i < text.size()) {
        if (text[i] != '/') fail();
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != text.size()) fail();
        den = std::string(text.substr(den_begin));
    }
    mpz_class numerator(num, 10);
    mpz_class denominator(den, 10);
    if (sgn(denominator) == 0) throw UsageError("rational with zero denominator");
    mpq_class v{numerator, denominator};
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::pow(long k) const {
    if (k < 0) throw UsageError("negative exponent in Rational::pow");
    Rational base = *this;
    Rational acc = 1;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace grautkit
