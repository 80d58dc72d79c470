#include "coinstack/genfunc.hpp"

#include <utility>

#include "coinstack/errors.hpp"

namespace coinstack {

IntPolynomial IntPolynomial::from_coeffs(std::vector<mpz_class> coeffs) {
    while (!coeffs.empty() && sgn(coeffs.back()) == 0) {
        coeffs.pop_back();
    }
    return IntPolynomial{std::move(coeffs)};
}

std::string IntPolynomial::to_text() const {
    if (coeffs.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        const mpz_class& c = coeffs[e];
        if (sgn(c) == 0) {
            continue;
        }
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) {
                out += '-';
            }
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const mpz_class magnitude = abs(c);
        if (e == 0) {
            out += magnitude.get_str();
        } else {
            if (magnitude != 1) {
                out += magnitude.get_str();
            }
            out += 'x';
            if (e > 1) {
                out += '^';
                out += std::to_string(e);
            }
        }
    }
    return out;
}

std::vector<std::string> IntPolynomial::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs.size());
    for (const mpz_class& c : coeffs) {
        out.push_back(c.get_str());
    }
    return out;
}

IntPolynomial build_denominator(const DenominationSet& ds) {
    const auto& mask = ds.mask();
    std::vector<mpz_class> coeffs(mask.size() + 1);
    coeffs[0] = -1;
    for (std::size_t j = 1; j <= mask.size(); ++j) {
        coeffs[j] = mask[j - 1] != 0 ? 1 : 0;
    }
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

IntPolynomial build_numerator_literal(const DenominationSet& ds, const WorkBudget& budget) {
    const auto& mask = ds.mask();
    const std::size_t L = mask.size();
    const auto terms = e_sequence_from_mask(mask, L - 1, budget);

    std::vector<mpz_class> coeffs(L);
    coeffs[0] = -1;
    for (std::size_t k = 1; k < L; ++k) {
        mpz_class bracket(mask[k - 1] != 0 ? 1 : 0);  // B_k
        for (std::size_t j = 1; j < k; ++j) {
            if (mask[k - j - 1] != 0) {  // B_{k-j} * E_j
                bracket += terms[j];
            }
        }
        bracket -= terms[k];
        coeffs[k] = std::move(bracket);
    }
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

RationalGF literal_gf(const DenominationSet& ds, const WorkBudget& budget) {
    return {build_numerator_literal(ds, budget), build_denominator(ds)};
}

RationalGF simplified_gf(const DenominationSet& ds) {
    return {IntPolynomial::from_coeffs({mpz_class(-1)}), build_denominator(ds)};
}

std::vector<mpz_class> series_expand(const RationalGF& gf, std::uint64_t n) {
    const auto& q = gf.denominator.coeffs;
    if (q.empty() || (q[0] != 1 && q[0] != -1)) {
        throw NonUnitConstantTermError(
            "series expansion requires a denominator constant term of +1 or -1, got " +
            (q.empty() ? std::string("0") : q[0].get_str()));
    }
    const bool flip = q[0] == -1;
    const auto& p = gf.numerator.coeffs;

    std::vector<mpz_class> c(n + 1);
    for (std::uint64_t i = 0; i <= n; ++i) {
        mpz_class acc = i < p.size() ? p[i] : mpz_class(0);
        const std::uint64_t window = std::min<std::uint64_t>(i, q.size() - 1);
        for (std::uint64_t j = 1; j <= window; ++j) {
            if (sgn(q[j]) != 0) {
                mpz_submul(acc.get_mpz_t(), q[j].get_mpz_t(), c[i - j].get_mpz_t());
            }
        }
        c[i] = flip ? mpz_class(-acc) : std::move(acc);
    }
    return c;
}

std::string to_display_normalized(const RationalGF& gf) {
    const auto negate = [](const IntPolynomial& poly) {
        std::vector<mpz_class> coeffs;
        coeffs.reserve(poly.coeffs.size());
        for (const mpz_class& c : poly.coeffs) {
            coeffs.emplace_back(-c);
        }
        return IntPolynomial{std::move(coeffs)};
    };
    return negate(gf.numerator).to_text() + " / (" + negate(gf.denominator).to_text() + ")";
}

}  // namespace coinstack
