#ifndef CONVCODE_CRC_HPP
#define CONVCODE_CRC_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "convcode/code.hpp"
#include "convcode/poly.hpp"

namespace convcode {

enum class CrcMode { multiplicative, systematic };
std::string to_string(CrcMode m);

class CrcSpec {
public:
    /// Throws InvalidArgument unless deg g >= 1.
    CrcSpec(Poly g, CrcMode mode = CrcMode::multiplicative);

    const Field& field() const noexcept { return g_.field(); }
    const Poly& generator() const noexcept { return g_; }
    CrcMode mode() const noexcept { return mode_; }
    int degree() const noexcept { return g_.degree(); }

private:
    Poly g_;
    CrcMode mode_;
};

/// Multiplicative: g m. Systematic: z^d m - (z^d m mod g), message in the high part.
Poly crc_encode(const CrcSpec& spec, const Poly& message);

struct CrcCheck {
    bool accepted = false;
    /// Recovered message when accepted.
    std::optional<Poly> message;
};
CrcCheck crc_check(const CrcSpec& spec, const Poly& word);

struct Corruption {
    enum class Kind { uniform, burst } kind = Kind::uniform;
    /// Burst length in symbols; ignored for uniform corruption.
    std::size_t length = 0;

    static Corruption uniform() { return {}; }
    static Corruption burst(std::size_t len) { return {Kind::burst, len}; }
};

struct MissRateOptions {
    std::size_t trials = 100'000;
    Corruption corruption;
    /// Message symbols per transmission; words have message_length + deg g symbols.
    std::size_t message_length = 32;
    std::uint64_t seed = 1;
    /// 0 picks the hardware concurrency. The result does not depend on it.
    unsigned threads = 0;
};

struct MissRate {
    std::size_t trials = 0;
    std::size_t accepted = 0;
    double estimate = 0;
    double std_error = 0;
    /// Normal-approximation 95% interval, clamped to [0, 1].
    double ci_low = 0, ci_high = 0;
    /// q^-deg g.
    double predicted = 0;

    /// |estimate - predicted| within k binomial standard deviations of predicted.
    bool within_sigma(double k) const;
};

/**
 * Monte-Carlo fraction of corrupted words (always different from the sent
 * word) that crc_check accepts. Trials run in fixed-size batches, each seeded
 * from (seed, batch index), so results are reproducible for any thread count.
 * Requires trials >= 1000.
 */
MissRate crc_miss_rate(const CrcSpec& spec, const MissRateOptions& opt);

/// Smallest N >= 1 with g | z^N - 1; nullopt when g(0) = 0.
std::optional<std::uint64_t> crc_period(const Poly& g);

/// The module code <g> (framework Dprime, n = k = 1).
ConvCode crc_code(const CrcSpec& spec);

}  // namespace convcode

#endif
