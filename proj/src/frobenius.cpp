#include "coinstack/frobenius.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>
#include <vector>

#include "coinstack/errors.hpp"

namespace coinstack {

namespace {

using u128 = unsigned __int128;

}  // namespace

const char* to_string(FrobeniusKind kind) noexcept {
    switch (kind) {
        case FrobeniusKind::finite:
            return "finite";
        case FrobeniusKind::all_representable:
            return "all_representable";
        case FrobeniusKind::infinite_gap:
            return "infinite_gap";
    }
    return "unknown";
}

RepresentabilityReport is_representable(const DenominationSet& ds, std::uint64_t target,
                                        const WorkBudget& budget) {
    const std::size_t L = ds.mask().size();
    // Window DP costs target*L bigint additions; the polynomial path costs
    // ~2*bits(target)*L^2 multiplications on larger operands.
    const unsigned bits = target == 0 ? 1 : std::bit_width(target);
    const bool fast = target > 4096 && target > 8ull * L * bits;
    mpz_class e = fast ? e_term_fast(ds, target, std::nullopt, budget)
                       : e_term_dp(ds, target, budget);
    const bool representable = sgn(e) > 0;
    return {target, representable, std::move(e)};
}

FrobeniusResult frobenius_number(const DenominationSet& ds, const WorkBudget& budget,
                                 std::optional<std::uint64_t> search_bound) {
    if (ds.gcd() > 1) {
        return {FrobeniusKind::infinite_gap, std::nullopt, std::nullopt};
    }
    const std::uint64_t m = ds.smallest();
    if (m == 1) {
        // E_0 = 1 and every later index gains another unit coin.
        return {FrobeniusKind::all_representable, std::nullopt, IndexRun{0, 1}};
    }

    const std::uint64_t bound =
        search_bound.value_or(std::uint64_t(m) * ds.largest());
    const auto& mask = ds.mask();
    const std::size_t L = mask.size();

    std::vector<mpz_class> ring(L);
    ring[0] = 1;
    std::uint64_t run = 1;        // E_0 = 1 > 0
    std::uint64_t last_zero = 0;  // m >= 2 forces E_1 = 0, so this gets set
    u128 work = L;
    for (std::uint64_t i = 1; i <= bound; ++i) {
        work += L;
        if (work > budget.max_ops) {
            throw ResourceLimitError("Frobenius search work exceeds the budget of " +
                                     std::to_string(budget.max_ops));
        }
        mpz_class acc(0);
        const std::uint64_t window = std::min<std::uint64_t>(i, L);
        for (std::uint64_t j = 1; j <= window; ++j) {
            if (mask[j - 1] != 0) {
                acc += ring[(i - j) % L];
            }
        }
        const bool positive = sgn(acc) > 0;
        ring[i % L] = std::move(acc);
        if (positive) {
            if (++run == m) {
                // Indices last_zero+1 .. last_zero+m are all representable;
                // adding coin m reaches every larger index from the run.
                return {FrobeniusKind::finite, last_zero, IndexRun{last_zero + 1, m}};
            }
        } else {
            last_zero = i;
            run = 0;
        }
    }
    throw SearchLimitError("no certifying run of " + std::to_string(m) +
                           " consecutive representable indices within bound " +
                           std::to_string(bound));
}

mpz_class partition_count(const DenominationSet& ds, std::uint64_t i,
                          const WorkBudget& budget) {
    const u128 work = (u128(i) + 1) * ds.count();
    if (work > budget.max_ops) {
        throw ResourceLimitError("partition-count work (i+1)*N exceeds the budget of " +
                                 std::to_string(budget.max_ops));
    }
    std::vector<mpz_class> f(i + 1);
    f[0] = 1;
    for (std::uint32_t v : ds.values()) {
        for (std::uint64_t s = v; s <= i; ++s) {
            f[s] += f[s - v];
        }
    }
    return f[i];
}

}  // namespace coinstack
