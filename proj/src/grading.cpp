#include "grautkit/grading.hpp"

#include <numeric>
#include <sstream>

#include "grautkit/errors.hpp"

namespace grautkit {

std::string to_string(GradingClass c) {
    switch (c) {
        case GradingClass::Trivial: return "trivial";
        case GradingClass::HasZero: return "has-zero";
        case GradingClass::SameSign: return "same-sign";
        case GradingClass::Mixed: return "mixed";
    }
    throw InternalError("unknown grading class");
}

GradingClass classify(const RawGrading& raw) {
    int zeros = 0, pos = 0, neg = 0;
    for (long d : raw.degrees) {
        if (d == 0) ++zeros;
        else if (d > 0) ++pos;
        else ++neg;
    }
    if (zeros == 3) return GradingClass::Trivial;
    if (zeros > 0) return GradingClass::HasZero;
    if (pos == 3 || neg == 3) return GradingClass::SameSign;
    return GradingClass::Mixed;
}

RawGrading NormalizedGrading::reconstruct_raw() const {
    std::array<long, 3> normalized{a, b, -c};
    RawGrading raw;
    for (int i = 0; i < 3; ++i) {
        raw.degrees[static_cast<std::size_t>(i)] =
            applied_sign * applied_scale *
            normalized[static_cast<std::size_t>(applied_permutation[static_cast<std::size_t>(i)])];
    }
    return raw;
}

NormalizedGrading normalize(const RawGrading& raw) {
    GradingClass klass = classify(raw);
    if (klass != GradingClass::Mixed)
        throw UsageError("normalize requires a mixed grading, got " + to_string(klass));

    long g = 0;
    for (long d : raw.degrees) g = std::gcd(g, d);
    std::array<long, 3> scaled;
    for (int i = 0; i < 3; ++i) scaled[static_cast<std::size_t>(i)] = raw.degrees[static_cast<std::size_t>(i)] / g;

    // Flip the global sign so exactly one degree is negative.
    int negatives = 0;
    for (long d : scaled) negatives += d < 0;
    int sign = negatives == 1 ? 1 : -1;
    if (sign == -1)
        for (long& d : scaled) d = -d;

    // Send the negative degree to the z slot; order the positives so a >= b,
    // keeping the original x/y order on ties.
    int neg_idx = 0;
    while (scaled[static_cast<std::size_t>(neg_idx)] > 0) ++neg_idx;
    std::array<int, 2> pos_idx{};
    for (int i = 0, j = 0; i < 3; ++i)
        if (i != neg_idx) pos_idx[static_cast<std::size_t>(j++)] = i;
    if (scaled[static_cast<std::size_t>(pos_idx[0])] < scaled[static_cast<std::size_t>(pos_idx[1])])
        std::swap(pos_idx[0], pos_idx[1]);

    NormalizedGrading n;
    n.a = scaled[static_cast<std::size_t>(pos_idx[0])];
    n.b = scaled[static_cast<std::size_t>(pos_idx[1])];
    n.c = -scaled[static_cast<std::size_t>(neg_idx)];
    n.applied_sign = sign;
    n.applied_scale = g;
    n.applied_permutation[static_cast<std::size_t>(pos_idx[0])] = 0;
    n.applied_permutation[static_cast<std::size_t>(pos_idx[1])] = 1;
    n.applied_permutation[static_cast<std::size_t>(neg_idx)] = 2;

    if (n.reconstruct_raw() != raw) throw InternalError("normalization bookkeeping broken");
    return n;
}

CyclicGrading induced_cyclic(const NormalizedGrading& g) {
    auto mod = [&](long x) { return ((x % g.c) + g.c) % g.c; };
    return CyclicGrading{g.c, mod(g.a), mod(g.b)};
}

std::optional<WildCertificate> admits_wild(const NormalizedGrading& g) {
    for (long q = 2; g.b * q + g.c * wild_certificate_min_p() <= g.a; ++q) {
        long rest = g.a - g.b * q;
        if (rest % g.c != 0) continue;
        long p = rest / g.c;
        if (p < wild_certificate_min_p()) continue;
        WildCertificate cert{p, q};
        if (g.c * cert.p + g.b * cert.q != g.a) throw InternalError("bad wild certificate");
        if (!(g.a > g.b)) throw InternalError("wild certificate with a <= b");
        return cert;
    }
    return std::nullopt;
}

RawGrading parse_raw_grading(const std::string& text) {
    std::istringstream in(text);
    RawGrading raw;
    for (int i = 0; i < 3; ++i) {
        if (!(in >> raw.degrees[static_cast<std::size_t>(i)]))
            throw UsageError("grading must be three space-separated integers, got \"" + text + "\"");
    }
    std::string rest;
    if (in >> rest)
        throw UsageError("grading must be three space-separated integers, got \"" + text + "\"");
    return raw;
}

}  // namespace grautkit
