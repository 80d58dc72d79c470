#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "coinstack/denominations.hpp"

namespace coinstack {

/// Work cap shared by the evaluators. Units are abstract: window cells for
/// the sliding-window paths ((n+1)*L), coefficient multiplications for the
/// polynomial fast path (2*bits(n)*L^2).
struct WorkBudget {
    static constexpr std::uint64_t kDefaultMaxOps = 1ull << 30;

    std::uint64_t max_ops = kDefaultMaxOps;
};

/// E_0..E_n for one denomination set. E_i counts the ordered stacks of coins
/// whose values sum to i, and obeys
///
///   E_0 = 1,   E_i = sum_{j=1..min(i,L)} B_j * E_{i-j}   for i >= 1,
///
/// with the window simply truncated at the front (terms below index 0 are 0).
struct StackCountSequence {
    DenominationSet ds;
    std::vector<mpz_class> terms;
};

/// One multiset of coins: multiplicities[j-1] copies of value j, summing to
/// total. Multiplicities are zero wherever B_j is.
struct PartMultiset {
    std::vector<std::uint64_t> multiplicities;
    std::uint64_t total = 0;
};

/// Largest index the exponential-time oracles accept by default.
inline constexpr std::uint64_t kDefaultOracleLimit = 24;

// --- main path -------------------------------------------------------------

/// Full sequence E_0..E_n by the sliding-window recurrence, exact.
StackCountSequence e_sequence(const DenominationSet& ds, std::uint64_t n,
                              const WorkBudget& budget = {});

/// Same recurrence on a raw indicator vector. No validity requirements: the
/// all-zero mask gives E_0 = 1 and E_i = 0 for every i >= 1.
std::vector<mpz_class> e_sequence_from_mask(const std::vector<std::uint8_t>& mask,
                                            std::uint64_t n,
                                            const WorkBudget& budget = {});

/// E_n alone; O(n*L) bigint additions but only O(L) live terms.
mpz_class e_term_dp(const DenominationSet& ds, std::uint64_t n,
                    const WorkBudget& budget = {});

/// E_n via x^n modulo the characteristic polynomial
/// x^L - B_1 x^{L-1} - ... - B_L, then an inner product of the residue with
/// the seed window E_0..E_{L-1}. O(L^2 log n) coefficient multiplications.
/// With a modulus (>= 2) the whole computation runs over Z/m and the result
/// is E_n mod m; moduli that fit 64 bits take a fixed-width kernel.
mpz_class e_term_fast(const DenominationSet& ds, std::uint64_t n,
                      const std::optional<mpz_class>& modulus = std::nullopt,
                      const WorkBudget& budget = {});

// --- oracles ----------------------------------------------------------------
// Exponential-time replications of the counting argument. They certify the
// recurrence at desk scale and refuse anything beyond oracle_limit.

/// Number of ordered coin stacks summing to i, by exhaustive DFS over the
/// bottom coin. enumerate_compositions(ds, 0) is 1 (the empty stack).
mpz_class enumerate_compositions(const DenominationSet& ds, std::uint64_t i,
                                 std::uint64_t oracle_limit = kDefaultOracleLimit);

/// Sum over part multisets with total i of (sum K)! / prod K_j!, i.e. the
/// orderings of each multiset counted directly.
mpz_class multinomial_count(const DenominationSet& ds, std::uint64_t i,
                            std::uint64_t oracle_limit = kDefaultOracleLimit);

/// Visits every multiset of denominations with total i.
void for_each_part_multiset(const DenominationSet& ds, std::uint64_t i,
                            const std::function<void(const PartMultiset&)>& fn,
                            std::uint64_t oracle_limit = kDefaultOracleLimit);

/// Closed-form expansions of E_1..E_5 in the B variables, evaluated at a 0/1
/// mask (padded with zeros beyond its length). Indices outside 1..5 are
/// rejected with UnsupportedIndexError.
mpz_class symbolic_expansion_check(std::uint32_t i,
                                   const std::vector<std::uint8_t>& mask);

}  // namespace coinstack
