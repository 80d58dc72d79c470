#pragma once

#include <cstdint>
#include <optional>

#include <gmpxx.h>

#include "coinstack/denominations.hpp"
#include "coinstack/recurrence.hpp"

namespace coinstack {

/// Verdict for one target: representable iff E_target > 0. e_value is the
/// exact stack count E_target, kept as the witness.
struct RepresentabilityReport {
    std::uint64_t target = 0;
    bool representable = false;
    mpz_class e_value;
};

/// Run of consecutive indices with E_i > 0 that terminated a search.
struct IndexRun {
    std::uint64_t first = 0;
    std::uint64_t length = 0;

    friend bool operator==(const IndexRun&, const IndexRun&) = default;
};

enum class FrobeniusKind {
    finite,            ///< a largest non-representable value exists
    all_representable, ///< 1 is a denomination, every amount works
    infinite_gap,      ///< gcd > 1, infinitely many gaps
};

struct FrobeniusResult {
    FrobeniusKind kind = FrobeniusKind::finite;
    std::optional<std::uint64_t> value;   ///< finite only: the Frobenius number
    std::optional<IndexRun> certificate;  ///< finite and all_representable
};

const char* to_string(FrobeniusKind kind) noexcept;

/// E_target > 0 test. Small targets stream the window DP; isolated large
/// targets switch to the polynomial fast path. Magnitudes stay exact either
/// way, so a zero verdict is never a modular artifact.
RepresentabilityReport is_representable(const DenominationSet& ds,
                                        std::uint64_t target,
                                        const WorkBudget& budget = {});

/// Streams E_i until a run of (smallest denomination) consecutive positive
/// terms appears; adding the smallest coin pushes that run forward
/// indefinitely, so the largest zero seen before it is the Frobenius number.
/// gcd > 1 short-circuits to infinite_gap before any recurrence work, and a
/// unit coin to all_representable. search_bound defaults to
/// smallest * largest; passing it raises SearchLimitError instead of ever
/// returning an uncertified answer.
FrobeniusResult frobenius_number(const DenominationSet& ds,
                                 const WorkBudget& budget = {},
                                 std::optional<std::uint64_t> search_bound = std::nullopt);

/// F_i: number of multisets of denominations summing to i, by the standard
/// one-denomination-at-a-time accumulation. Deliberately independent of the
/// E recurrence; F_i = 0 iff E_i = 0.
mpz_class partition_count(const DenominationSet& ds, std::uint64_t i,
                          const WorkBudget& budget = {});

}  // namespace coinstack
