#pragma once

#include <array>
#include <optional>
#include <string>

#include "grautkit/poly.hpp"

namespace grautkit {

/// A Z-grading of K[x,y,z] given by the degrees of the three variables.
/// Any integer triple is accepted; classification sorts out the cases.
struct RawGrading {
    std::array<long, 3> degrees{};

    friend bool operator==(const RawGrading&, const RawGrading&) = default;
};

enum class GradingClass { Trivial, HasZero, SameSign, Mixed };

std::string to_string(GradingClass c);

/// Trivial iff all degrees are zero; HasZero iff some but not all are zero;
/// SameSign iff all strictly positive or all strictly negative; Mixed
/// otherwise.
GradingClass classify(const RawGrading& raw);

/// A mixed grading brought to the standard form (a, b, -c) with
/// a >= b >= 1, c >= 1 and gcd(a, b, c) = 1. The recorded sign, variable
/// permutation and scale reconstruct the raw input exactly.
struct NormalizedGrading {
    long a = 0;
    long b = 0;
    long c = 0;
    int applied_sign = 1;
    /// Original variable slot i landed on normalized slot applied_permutation[i].
    std::array<int, 3> applied_permutation{0, 1, 2};
    /// Positive gcd divided out of the raw degrees.
    long applied_scale = 1;

    /// Degrees (a, b, -c) as a weight vector on x, y, z.
    WeightVector weights() const { return WeightVector{a, b, -c}; }

    RawGrading reconstruct_raw() const;

    bool trivial_bookkeeping() const {
        return applied_sign == 1 && applied_scale == 1 &&
               applied_permutation == std::array<int, 3>{0, 1, 2};
    }

    friend bool operator==(const NormalizedGrading&, const NormalizedGrading&) = default;
};

/// Normalizes a mixed grading; any other classification is a UsageError.
NormalizedGrading normalize(const RawGrading& raw);

/// The induced grading of the plane K[u,v] by Z_c, with deg u = a mod c and
/// deg v = b mod c.
struct CyclicGrading {
    long modulus = 1;
    long u_residue = 0;
    long v_residue = 0;

    friend bool operator==(const CyclicGrading&, const CyclicGrading&) = default;
};

CyclicGrading induced_cyclic(const NormalizedGrading& g);

/// Witness that the grading admits graded wild automorphisms:
/// a = c*P + b*Q with P >= 1 and Q >= 2.
struct WildCertificate {
    long p = 0;
    long q = 0;

    friend bool operator==(const WildCertificate&, const WildCertificate&) = default;
};

/// Smallest admissible P in a wildness certificate. Kept in one place so the
/// P >= 1 reading can be revisited without touching the search.
constexpr long wild_certificate_min_p() { return 1; }

/// Exhaustive search for the certificate with smallest Q (ties by smallest
/// P); nullopt when none exists. Every returned certificate satisfies
/// a = c*P + b*Q, Q >= 2, and forces a > b.
std::optional<WildCertificate> admits_wild(const NormalizedGrading& g);

/// Parses "d1 d2 d3" (three space-separated integers).
RawGrading parse_raw_grading(const std::string& text);

}  // namespace grautkit
