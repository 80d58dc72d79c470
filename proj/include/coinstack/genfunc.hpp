#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "coinstack/denominations.hpp"
#include "coinstack/recurrence.hpp"

namespace coinstack {

/// Dense signed polynomial, ascending powers (index = exponent). The zero
/// polynomial is the empty list; otherwise the trailing coefficient is
/// non-zero.
struct IntPolynomial {
    std::vector<mpz_class> coeffs;

    /// Strips trailing zeros so the invariant holds.
    static IntPolynomial from_coeffs(std::vector<mpz_class> coeffs);

    bool is_zero() const noexcept { return coeffs.empty(); }

    /// Degree, with the zero polynomial reported as -1.
    std::int64_t degree() const noexcept {
        return static_cast<std::int64_t>(coeffs.size()) - 1;
    }

    /// Ascending sparse rendering, e.g. "-1 + x^2 + x^5"; "0" for zero.
    std::string to_text() const;

    /// Dense coefficients as decimal strings (exact at any magnitude).
    std::vector<std::string> coeff_strings() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

/// Rational generating function P(x)/Q(x) whose power series at 0 lists the
/// stack counts E_i. Q always has constant term -1 and degree L.
struct RationalGF {
    IntPolynomial numerator;
    IntPolynomial denominator;
};

/// Q(x) = B_L x^L + B_{L-1} x^{L-1} + ... + B_1 x - 1.
IntPolynomial build_denominator(const DenominationSet& ds);

/// The numerator assembled term by term: coefficient of x^k is
/// B_k + B_{k-1} E_1 + ... + B_1 E_{k-1} - E_k for 1 <= k <= L-1, constant
/// term -1. Each bracket is the recurrence rearranged, so the whole thing
/// collapses to the constant polynomial -1; building it this way keeps that
/// collapse as a checked property rather than an assumption.
IntPolynomial build_numerator_literal(const DenominationSet& ds,
                                      const WorkBudget& budget = {});

/// P/Q with the term-by-term numerator.
RationalGF literal_gf(const DenominationSet& ds, const WorkBudget& budget = {});

/// P/Q with the collapsed numerator: G(x) = -1 / Q(x).
RationalGF simplified_gf(const DenominationSet& ds);

/// First n+1 power-series coefficients of gf, by the convolution recurrence
///   c_i = (p_i - sum_{j=1..i} q_j c_{i-j}) / q_0.
/// Requires |q_0| = 1 (always -1 here), so the division is a sign flip.
std::vector<mpz_class> series_expand(const RationalGF& gf, std::uint64_t n);

/// Display-only rendering with both signs flipped so the denominator reads
/// 1 - sum B_j x^j, e.g. "1 / (1 - x^2 - x^5)". Never used in arithmetic.
std::string to_display_normalized(const RationalGF& gf);

}  // namespace coinstack
