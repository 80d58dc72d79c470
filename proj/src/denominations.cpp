#include "coinstack/denominations.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "coinstack/errors.hpp"

namespace coinstack {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::uint32_t parse_token(std::string_view token, std::uint32_t max_value) {
    long long value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
        if (token.front() == '-') {
            throw NonPositiveError("denomination must be positive: '" + std::string(token) + "'");
        }
        throw TooLargeError("denomination exceeds the configured cap of " +
                            std::to_string(max_value) + ": '" + std::string(token) + "'");
    }
    if (ec != std::errc{} || ptr != last) {
        throw MalformedError("not an integer: '" + std::string(token) + "'");
    }
    if (value <= 0) {
        throw NonPositiveError("denomination must be positive: '" + std::string(token) + "'");
    }
    if (static_cast<unsigned long long>(value) > max_value) {
        throw TooLargeError("denomination exceeds the configured cap of " +
                            std::to_string(max_value) + ": '" + std::string(token) + "'");
    }
    return static_cast<std::uint32_t>(value);
}

}  // namespace

DenominationSet DenominationSet::parse(std::string_view text, std::uint32_t max_value) {
    std::vector<std::uint32_t> values;
    bool saw_empty_token = false;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view raw = comma == std::string_view::npos
                                         ? text.substr(pos)
                                         : text.substr(pos, comma - pos);
        const std::string_view token = trim(raw);
        if (token.empty()) {
            saw_empty_token = true;
        } else {
            values.push_back(parse_token(token, max_value));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    if (values.empty()) {
        throw EmptyInputError("no denominations given");
    }
    if (saw_empty_token) {
        throw MalformedError("empty element in denomination list");
    }
    return from_values(std::move(values), max_value);
}

DenominationSet DenominationSet::from_values(std::vector<std::uint32_t> values,
                                             std::uint32_t max_value) {
    if (values.empty()) {
        throw EmptyInputError("no denominations given");
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.front() == 0) {
        throw NonPositiveError("denomination must be positive: '0'");
    }
    if (values.back() > max_value) {
        throw TooLargeError("denomination exceeds the configured cap of " +
                            std::to_string(max_value) + ": '" +
                            std::to_string(values.back()) + "'");
    }

    DenominationSet ds;
    ds.values_ = std::move(values);
    ds.mask_.assign(ds.values_.back(), 0);
    ds.gcd_ = 0;
    for (std::uint32_t v : ds.values_) {
        ds.mask_[v - 1] = 1;
        ds.gcd_ = std::gcd(ds.gcd_, v);
    }
    return ds;
}

bool DenominationSet::contains(std::uint32_t value) const noexcept {
    return std::binary_search(values_.begin(), values_.end(), value);
}

std::string DenominationSet::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(values_[i]);
    }
    return out;
}

}  // namespace coinstack
