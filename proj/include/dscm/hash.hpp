#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace dscm {

/// FNV-1a 64-bit; used for content ids of configs, graphs and parameters.
class Fnv1a {
public:
    Fnv1a& update(std::span<const std::byte> bytes);
    Fnv1a& update(std::string_view text);
    template <typename T>
    Fnv1a& update_values(std::span<const T> values) {
        return update(std::as_bytes(values));
    }
    std::uint64_t value() const { return state_; }
    std::string hex() const;

private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

std::string hash_text(std::string_view text);

}  // namespace dscm
