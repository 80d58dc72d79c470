#include "coinstack/recurrence.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "coinstack/errors.hpp"

namespace coinstack {

namespace {

using u128 = unsigned __int128;

void check_window_work(std::uint64_t n, std::size_t window, const WorkBudget& budget) {
    const u128 work = u128(n) * std::max<std::size_t>(window, 1) + window;
    if (work > budget.max_ops) {
        throw ResourceLimitError("sequence work (n+1)*L exceeds the budget of " +
                                 std::to_string(budget.max_ops) +
                                 " (n=" + std::to_string(n) +
                                 ", L=" + std::to_string(window) + ")");
    }
}

// ---------------------------------------------------------------------------
// Coefficient rings for the polynomial fast path. Each provides the handful
// of operations the kernel needs; the exact ring works over Z, the modular
// rings over Z/m with every coefficient kept reduced.

struct ExactRing {
    using value_type = mpz_class;

    mpz_class zero() const { return mpz_class(0); }
    mpz_class one() const { return mpz_class(1); }
    bool is_zero(const mpz_class& v) const { return sgn(v) == 0; }
    void addmul(mpz_class& acc, const mpz_class& a, const mpz_class& b) const {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    void add(mpz_class& acc, const mpz_class& a) const { acc += a; }
    mpz_class from_seed(const mpz_class& s) const { return s; }
    mpz_class to_mpz(const mpz_class& v) const { return v; }
};

struct MpzModRing {
    using value_type = mpz_class;

    mpz_class m;

    mpz_class zero() const { return mpz_class(0); }
    mpz_class one() const { return mpz_class(1); }
    bool is_zero(const mpz_class& v) const { return sgn(v) == 0; }
    void addmul(mpz_class& acc, const mpz_class& a, const mpz_class& b) const {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        acc %= m;
    }
    void add(mpz_class& acc, const mpz_class& a) const {
        acc += a;
        if (acc >= m) {
            acc -= m;
        }
    }
    mpz_class from_seed(const mpz_class& s) const { return s % m; }
    mpz_class to_mpz(const mpz_class& v) const { return v; }
};

struct U64ModRing {
    using value_type = std::uint64_t;

    std::uint64_t m;

    std::uint64_t zero() const { return 0; }
    std::uint64_t one() const { return 1 % m; }
    bool is_zero(std::uint64_t v) const { return v == 0; }
    void addmul(std::uint64_t& acc, std::uint64_t a, std::uint64_t b) const {
        acc = static_cast<std::uint64_t>((u128(a) * b + acc) % m);
    }
    void add(std::uint64_t& acc, std::uint64_t a) const {
        acc = static_cast<std::uint64_t>((u128(acc) + a) % m);
    }
    std::uint64_t from_seed(const mpz_class& s) const {
        mpz_class r = s % m;
        return mpz_get_ui(r.get_mpz_t());
    }
    mpz_class to_mpz(std::uint64_t v) const {
        mpz_class out;
        mpz_set_ui(out.get_mpz_t(), v);
        return out;
    }
};

// Product of two residues of degree < L, reduced modulo the characteristic
// polynomial x^L - B_1 x^{L-1} - ... - B_L. The fold uses
// x^k == sum_j B_j x^{k-j}, additions only since B_j is 0/1.
template <typename Ring>
std::vector<typename Ring::value_type> mul_mod_charpoly(
    const std::vector<typename Ring::value_type>& a,
    const std::vector<typename Ring::value_type>& b,
    const std::vector<std::uint8_t>& mask, const Ring& ring) {
    const std::size_t L = mask.size();
    std::vector<typename Ring::value_type> prod(2 * L - 1, ring.zero());
    for (std::size_t i = 0; i < L; ++i) {
        if (ring.is_zero(a[i])) {
            continue;
        }
        for (std::size_t j = 0; j < L; ++j) {
            ring.addmul(prod[i + j], a[i], b[j]);
        }
    }
    for (std::size_t k = 2 * L - 2; k >= L; --k) {
        if (!ring.is_zero(prod[k])) {
            for (std::size_t j = 1; j <= L; ++j) {
                if (mask[j - 1] != 0) {
                    ring.add(prod[k - j], prod[k]);
                }
            }
        }
        prod.pop_back();
    }
    return prod;
}

// x^n modulo the characteristic polynomial, by binary exponentiation.
template <typename Ring>
std::vector<typename Ring::value_type> power_of_x(const std::vector<std::uint8_t>& mask,
                                                  std::uint64_t n, const Ring& ring) {
    const std::size_t L = mask.size();
    std::vector<typename Ring::value_type> result(L, ring.zero());
    result[0] = ring.one();
    std::vector<typename Ring::value_type> base(L, ring.zero());
    if (L == 1) {
        base[0] = ring.one();  // x == B_1 == 1 (L is always a denomination)
    } else {
        base[1] = ring.one();
    }
    while (n > 0) {
        if (n & 1) {
            result = mul_mod_charpoly(result, base, mask, ring);
        }
        n >>= 1;
        if (n > 0) {
            base = mul_mod_charpoly(base, base, mask, ring);
        }
    }
    return result;
}

template <typename Ring>
mpz_class fast_term(const std::vector<std::uint8_t>& mask,
                    const std::vector<mpz_class>& seed, std::uint64_t n,
                    const Ring& ring) {
    const std::size_t L = mask.size();
    const auto residue = power_of_x(mask, n, ring);
    auto acc = ring.zero();
    for (std::size_t j = 0; j < L; ++j) {
        if (!ring.is_zero(residue[j])) {
            ring.addmul(acc, residue[j], ring.from_seed(seed[j]));
        }
    }
    return ring.to_mpz(acc);
}

void count_compositions(const std::vector<std::uint32_t>& values, std::uint64_t remaining,
                        mpz_class& count) {
    if (remaining == 0) {
        ++count;
        return;
    }
    for (std::uint32_t v : values) {
        if (v > remaining) {
            break;  // values are sorted ascending
        }
        count_compositions(values, remaining - v, count);
    }
}

mpz_class multinomial(const PartMultiset& ms) {
    std::uint64_t coins = 0;
    for (std::uint64_t k : ms.multiplicities) {
        coins += k;
    }
    mpz_class result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(coins));
    mpz_class factorial;
    for (std::uint64_t k : ms.multiplicities) {
        if (k >= 2) {
            mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(k));
            mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), factorial.get_mpz_t());
        }
    }
    return result;
}

void visit_multisets(const DenominationSet& ds, std::size_t index, std::uint64_t remaining,
                     PartMultiset& ms, const std::function<void(const PartMultiset&)>& fn) {
    const auto& values = ds.values();
    if (index == values.size()) {
        if (remaining == 0) {
            fn(ms);
        }
        return;
    }
    const std::uint32_t v = values[index];
    const std::uint64_t max_k = remaining / v;
    for (std::uint64_t k = 0; k <= max_k; ++k) {
        ms.multiplicities[v - 1] = k;
        visit_multisets(ds, index + 1, remaining - k * v, ms, fn);
    }
    ms.multiplicities[v - 1] = 0;
}

}  // namespace

std::vector<mpz_class> e_sequence_from_mask(const std::vector<std::uint8_t>& mask,
                                            std::uint64_t n, const WorkBudget& budget) {
    check_window_work(n, mask.size(), budget);
    const std::size_t L = mask.size();
    std::vector<mpz_class> terms(n + 1);
    terms[0] = 1;
    for (std::uint64_t i = 1; i <= n; ++i) {
        mpz_class acc(0);
        const std::uint64_t window = std::min<std::uint64_t>(i, L);
        for (std::uint64_t j = 1; j <= window; ++j) {
            if (mask[j - 1] != 0) {
                acc += terms[i - j];
            }
        }
        terms[i] = std::move(acc);
    }
    return terms;
}

StackCountSequence e_sequence(const DenominationSet& ds, std::uint64_t n,
                              const WorkBudget& budget) {
    return {ds, e_sequence_from_mask(ds.mask(), n, budget)};
}

mpz_class e_term_dp(const DenominationSet& ds, std::uint64_t n, const WorkBudget& budget) {
    const auto& mask = ds.mask();
    const std::size_t L = mask.size();
    check_window_work(n, L, budget);
    std::vector<mpz_class> ring(L);
    ring[0] = 1;  // E_0; slot i % L holds E_i for the most recent L indices
    for (std::uint64_t i = 1; i <= n; ++i) {
        mpz_class acc(0);
        const std::uint64_t window = std::min<std::uint64_t>(i, L);
        for (std::uint64_t j = 1; j <= window; ++j) {
            if (mask[j - 1] != 0) {
                acc += ring[(i - j) % L];
            }
        }
        ring[i % L] = std::move(acc);
    }
    return ring[n % L];
}

mpz_class e_term_fast(const DenominationSet& ds, std::uint64_t n,
                      const std::optional<mpz_class>& modulus, const WorkBudget& budget) {
    if (modulus && *modulus < 2) {
        throw std::invalid_argument("modulus must be >= 2");
    }
    const auto& mask = ds.mask();
    const std::size_t L = mask.size();
    const unsigned bits = n == 0 ? 1 : std::bit_width(n);
    const u128 work = u128(2) * bits * L * L;
    if (work > budget.max_ops) {
        throw ResourceLimitError("fast-path work 2*bits(n)*L^2 exceeds the budget of " +
                                 std::to_string(budget.max_ops) +
                                 " (L=" + std::to_string(L) + ")");
    }

    const auto seed = e_sequence_from_mask(mask, L - 1, budget);
    if (n < L) {
        return modulus ? mpz_class(seed[n] % *modulus) : seed[n];
    }
    if (!modulus) {
        return fast_term(mask, seed, n, ExactRing{});
    }
    if (mpz_fits_ulong_p(modulus->get_mpz_t())) {
        return fast_term(mask, seed, n, U64ModRing{mpz_get_ui(modulus->get_mpz_t())});
    }
    return fast_term(mask, seed, n, MpzModRing{*modulus});
}

mpz_class enumerate_compositions(const DenominationSet& ds, std::uint64_t i,
                                 std::uint64_t oracle_limit) {
    if (i > oracle_limit) {
        throw OracleLimitError("composition enumeration refused beyond i = " +
                               std::to_string(oracle_limit) + " (got " + std::to_string(i) + ")");
    }
    mpz_class count(0);
    count_compositions(ds.values(), i, count);
    return count;
}

void for_each_part_multiset(const DenominationSet& ds, std::uint64_t i,
                            const std::function<void(const PartMultiset&)>& fn,
                            std::uint64_t oracle_limit) {
    if (i > oracle_limit) {
        throw OracleLimitError("multiset enumeration refused beyond i = " +
                               std::to_string(oracle_limit) + " (got " + std::to_string(i) + ")");
    }
    PartMultiset ms;
    ms.multiplicities.assign(ds.largest(), 0);
    ms.total = i;
    visit_multisets(ds, 0, i, ms, fn);
}

mpz_class multinomial_count(const DenominationSet& ds, std::uint64_t i,
                            std::uint64_t oracle_limit) {
    mpz_class total(0);
    for_each_part_multiset(
        ds, i, [&](const PartMultiset& ms) { total += multinomial(ms); }, oracle_limit);
    return total;
}

mpz_class symbolic_expansion_check(std::uint32_t i, const std::vector<std::uint8_t>& mask) {
    if (i < 1 || i > 5) {
        throw UnsupportedIndexError("expansions are hard-coded for indices 1..5 only (got " +
                                    std::to_string(i) + ")");
    }
    const auto b = [&](std::size_t j) -> std::uint64_t {
        return j <= mask.size() && mask[j - 1] != 0 ? 1 : 0;
    };
    const std::uint64_t b1 = b(1), b2 = b(2), b3 = b(3), b4 = b(4), b5 = b(5);
    std::uint64_t value = 0;
    switch (i) {
        case 1:
            value = b1;
            break;
        case 2:
            value = b2 + b1 * b1;
            break;
        case 3:
            value = b3 + 2 * b1 * b2 + b1 * b1 * b1;
            break;
        case 4:
            value = b4 + 2 * b1 * b3 + b2 * b2 + 3 * b1 * b1 * b2 + b1 * b1 * b1 * b1;
            break;
        case 5:
            value = b5 + 2 * b1 * b4 + 2 * b2 * b3 + 3 * b2 * b2 * b1 + 4 * b2 * b1 * b1 * b1 +
                    3 * b1 * b1 * b3 + b1 * b1 * b1 * b1 * b1;
            break;
    }
    return mpz_class(static_cast<unsigned long>(value));
}

}  // namespace coinstack
