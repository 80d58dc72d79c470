// Test-only reference implementations, kept deliberately independent of the
// library paths they certify.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "coinstack/denominations.hpp"

namespace testref {

// Boolean reachability by plain DP over a bool table. Shares no code with the
// E recurrence or the F accumulation.
inline bool naive_representable(const std::vector<std::uint32_t>& values, std::uint64_t target) {
    std::vector<char> reach(target + 1, 0);
    reach[0] = 1;
    for (std::uint64_t s = 1; s <= target; ++s) {
        for (std::uint32_t v : values) {
            if (v <= s && reach[s - v]) {
                reach[s] = 1;
                break;
            }
        }
    }
    return reach[target] != 0;
}

// Largest non-reachable value up to bound, or -1 if none.
inline std::int64_t frobenius_sweep(const std::vector<std::uint32_t>& values,
                                    std::uint64_t bound) {
    std::int64_t last = -1;
    for (std::uint64_t s = 0; s <= bound; ++s) {
        if (!naive_representable(values, s)) {
            last = static_cast<std::int64_t>(s);
        }
    }
    return last;
}

// E_n mod m by powering the L x L companion matrix: first row B_1..B_L,
// ones on the subdiagonal. Cubic per step, test scale only.
inline std::uint64_t companion_term_mod(const coinstack::DenominationSet& ds, std::uint64_t n,
                                        std::uint64_t m) {
    using u128 = unsigned __int128;
    const auto& mask = ds.mask();
    const std::size_t L = mask.size();

    // seed E_0..E_{L-1} via the recurrence definition, reduced mod m
    std::vector<std::uint64_t> seed(L);
    seed[0] = 1 % m;
    for (std::size_t i = 1; i < L; ++i) {
        u128 acc = 0;
        for (std::size_t j = 1; j <= i; ++j) {
            if (mask[j - 1]) {
                acc += seed[i - j];
            }
        }
        seed[i] = static_cast<std::uint64_t>(acc % m);
    }
    if (n < L) {
        return seed[n];
    }

    using Matrix = std::vector<std::vector<std::uint64_t>>;
    const auto mul = [&](const Matrix& a, const Matrix& b) {
        Matrix c(L, std::vector<std::uint64_t>(L, 0));
        for (std::size_t i = 0; i < L; ++i) {
            for (std::size_t k = 0; k < L; ++k) {
                if (a[i][k] == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < L; ++j) {
                    c[i][j] = static_cast<std::uint64_t>(
                        (u128(a[i][k]) * b[k][j] + c[i][j]) % m);
                }
            }
        }
        return c;
    };

    Matrix power(L, std::vector<std::uint64_t>(L, 0));
    for (std::size_t i = 0; i < L; ++i) {
        power[i][i] = 1 % m;
    }
    Matrix base(L, std::vector<std::uint64_t>(L, 0));
    for (std::size_t j = 0; j < L; ++j) {
        base[0][j] = mask[j] ? 1 % m : 0;
    }
    for (std::size_t i = 1; i < L; ++i) {
        base[i][i - 1] = 1 % m;
    }

    std::uint64_t steps = n - (L - 1);
    while (steps > 0) {
        if (steps & 1) {
            power = mul(power, base);
        }
        steps >>= 1;
        if (steps > 0) {
            base = mul(base, base);
        }
    }

    // w_{L-1} = (E_{L-1}, ..., E_0); E_n is the first entry of M^(n-L+1) w_{L-1}.
    u128 acc = 0;
    for (std::size_t j = 0; j < L; ++j) {
        acc += u128(power[0][j]) * seed[L - 1 - j] % m;
    }
    return static_cast<std::uint64_t>(acc % m);
}

// Random set over {1..max_largest} that always contains its own maximum.
inline coinstack::DenominationSet random_set(std::mt19937_64& rng, std::uint32_t max_largest) {
    std::uniform_int_distribution<std::uint32_t> pick_largest(1, max_largest);
    const std::uint32_t largest = pick_largest(rng);
    std::vector<std::uint32_t> values{largest};
    std::bernoulli_distribution include(0.35);
    for (std::uint32_t v = 1; v < largest; ++v) {
        if (include(rng)) {
            values.push_back(v);
        }
    }
    return coinstack::DenominationSet::from_values(std::move(values));
}

}  // namespace testref
