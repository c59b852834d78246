#ifndef CONVCODE_DISTANCE_HPP
#define CONVCODE_DISTANCE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "convcode/behavior.hpp"
#include "convcode/code.hpp"

namespace convcode {

struct DistanceResult {
    /// Empty means infinite: no nonzero finite-support codeword exists.
    std::optional<int> d_free;
    /// Minimum-weight codeword and the message producing it (canonical generator).
    std::vector<Poly> witness;
    std::vector<Poly> message;
    std::size_t states_expanded = 0;

    bool infinite() const noexcept { return !d_free.has_value(); }
};

/// Trellis states q^delta times branches q^k allowed per search.
inline constexpr std::uint64_t trellis_budget = 50'000'000;

/**
 * Minimum Hamming weight of a nonzero finite-support codeword, by uniform-cost
 * search over the trellis of the shift-register realization. The witness is
 * checked for membership and weight before returning. The result is cached on
 * the code.
 */
DistanceResult free_distance(const ConvCode& code);
/// Autonomous behaviors have no nonzero finite trajectory (infinite distance);
/// controllable ones are measured through their image. Others throw
/// UnsupportedBehavior.
DistanceResult free_distance(const Behavior& b);

/// Exhaustive minimum of wt(G m) over nonzero messages with entry degrees
/// <= bound. Requires q^(k (bound + 1)) <= 10^7, otherwise BudgetExceeded.
/// Returns nullopt for the zero code.
std::optional<int> free_distance_oracle(const ConvCode& code, int degree_bound);

/// Number of nonzero coefficients over all entries.
std::size_t hamming_weight(const std::vector<Poly>& w) noexcept;

}  // namespace convcode

#endif
