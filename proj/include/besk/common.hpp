#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace besk {

enum class errc {
    malformed_header,
    vertex_out_of_range,
    wrong_arity,
    duplicate_edge,
    too_large,
    not_connected,
    diamond_not_in_subgraph,
    not_m1_input,
    unknown_part,
    odd_k,
    k_too_small,
    cert_mismatch,
    not_free,
    check_failed,
    invalid_argument,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

// Tri-state verdict for searches that may hit a node budget. "unknown" is
// only ever produced by budget exhaustion, never by a wrong answer.
enum class verdict { free, violated, unknown };

struct budget {
    std::uint64_t max_nodes = 10'000'000;
};

// Unordered vertex pair, stored with u < v.
struct vertex_pair {
    std::int32_t u = 0;
    std::int32_t v = 0;

    vertex_pair() = default;
    vertex_pair(std::int32_t a, std::int32_t b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw error(errc::invalid_argument, "vertex pair must have distinct endpoints");
    }

    friend bool operator==(const vertex_pair&, const vertex_pair&) = default;
    friend auto operator<=>(const vertex_pair&, const vertex_pair&) = default;
};

// Dense key for pair-indexed maps; requires both endpoints < 2^31.
inline std::uint64_t pair_key(std::int32_t u, std::int32_t v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

inline std::uint64_t pair_key(const vertex_pair& p) { return pair_key(p.u, p.v); }

inline vertex_pair pair_from_key(std::uint64_t key) {
    return vertex_pair(static_cast<std::int32_t>(key >> 32),
                       static_cast<std::int32_t>(key & 0xffffffffu));
}

} // namespace besk
