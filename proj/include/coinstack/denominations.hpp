#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coinstack {

/// Validated set of distinct positive coin values.
///
/// Immutable after construction, safe for concurrent reads. Keeps the values
/// sorted ascending together with the dense indicator vector B_1..B_L
/// (B_j = 1 iff j is a coin value, L = largest value) and the gcd of all
/// values.
class DenominationSet {
public:
    /// Default cap on the largest coin value. The indicator vector and the
    /// recurrence window are both L entries long, so L is a memory knob.
    static constexpr std::uint32_t kDefaultMaxValue = 10'000;

    /// Parses a comma-separated list of positive integers, tolerating
    /// whitespace around tokens. Duplicates are dropped, order is ignored.
    static DenominationSet parse(std::string_view text,
                                 std::uint32_t max_value = kDefaultMaxValue);

    static DenominationSet from_values(std::vector<std::uint32_t> values,
                                       std::uint32_t max_value = kDefaultMaxValue);

    const std::vector<std::uint32_t>& values() const noexcept { return values_; }
    std::uint32_t largest() const noexcept { return values_.back(); }
    std::uint32_t smallest() const noexcept { return values_.front(); }
    std::uint32_t gcd() const noexcept { return gcd_; }
    std::size_t count() const noexcept { return values_.size(); }

    /// Indicator vector of length largest(); element j-1 is B_j.
    const std::vector<std::uint8_t>& mask() const noexcept { return mask_; }

    bool contains(std::uint32_t value) const noexcept;

    /// Sorted, comma-separated, no whitespace. parse(to_string()) round-trips.
    std::string to_string() const;

    friend bool operator==(const DenominationSet&, const DenominationSet&) = default;

private:
    DenominationSet() = default;

    std::vector<std::uint32_t> values_;
    std::vector<std::uint8_t> mask_;
    std::uint32_t gcd_ = 0;
};

}  // namespace coinstack
