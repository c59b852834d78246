#include "convcode/crc.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "convcode/polymatrix.hpp"

namespace convcode {

std::string to_string(CrcMode m) { return m == CrcMode::multiplicative ? "multiplicative" : "systematic"; }

CrcSpec::CrcSpec(Poly g, CrcMode mode) : g_(std::move(g)), mode_(mode) {
    if (g_.degree() < 1) fail(ErrorKind::InvalidArgument, "CRC generator must have degree >= 1");
}

Poly crc_encode(const CrcSpec& spec, const Poly& message) {
    if (message.field() != spec.field()) fail(ErrorKind::FieldMismatch, "message and generator over different fields");
    if (spec.mode() == CrcMode::multiplicative) return spec.generator() * message;
    const Poly shifted = message.shifted_up(spec.degree());
    return shifted - divmod(shifted, spec.generator()).second;
}

CrcCheck crc_check(const CrcSpec& spec, const Poly& word) {
    if (word.field() != spec.field()) fail(ErrorKind::FieldMismatch, "word and generator over different fields");
    auto [quot, rem] = divmod(word, spec.generator());
    if (!rem.is_zero()) return {false, std::nullopt};
    if (spec.mode() == CrcMode::multiplicative) return {true, std::move(quot)};
    return {true, word.shifted_down(spec.degree())};
}

bool MissRate::within_sigma(double k) const {
    const double sigma = std::sqrt(predicted * (1 - predicted) / static_cast<double>(trials));
    return std::abs(estimate - predicted) <= k * sigma;
}

namespace {

constexpr std::size_t batch_size = 4096;

std::size_t run_batch(const CrcSpec& spec, const MissRateOptions& opt, std::size_t batch, std::size_t count) {
    std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                      static_cast<std::uint32_t>(batch), static_cast<std::uint32_t>(batch >> 32)};
    std::mt19937_64 rng(seq);
    const Field& f = spec.field();
    std::uniform_int_distribution<Elem> sym(0, f.order() - 1);
    const std::size_t len = opt.message_length + static_cast<std::size_t>(spec.degree());
    const std::size_t burst = std::min(opt.corruption.length, len);

    std::size_t accepted = 0;
    std::vector<Elem> msg(opt.message_length), sent(len), recv(len);
    for (std::size_t t = 0; t < count; ++t) {
        for (auto& x : msg) x = sym(rng);
        const Poly c = crc_encode(spec, Poly(f, msg));
        std::fill(sent.begin(), sent.end(), 0);
        for (int i = 0; i <= c.degree(); ++i) sent[static_cast<std::size_t>(i)] = c.coeff(static_cast<std::size_t>(i));
        do {
            recv = sent;
            if (opt.corruption.kind == Corruption::Kind::uniform) {
                for (auto& x : recv) x = sym(rng);
            } else {
                std::uniform_int_distribution<std::size_t> pos(0, len - burst);
                const std::size_t s = pos(rng);
                for (std::size_t i = s; i < s + burst; ++i) recv[i] = sym(rng);
            }
        } while (recv == sent);
        if (crc_check(spec, Poly(f, recv)).accepted) ++accepted;
    }
    return accepted;
}

}  // namespace

MissRate crc_miss_rate(const CrcSpec& spec, const MissRateOptions& opt) {
    if (opt.trials < 1000) fail(ErrorKind::InvalidArgument, "miss-rate experiment needs at least 1000 trials");
    if (opt.corruption.kind == Corruption::Kind::burst && opt.corruption.length == 0)
        fail(ErrorKind::InvalidArgument, "burst length must be positive");
    if (opt.message_length == 0) fail(ErrorKind::InvalidArgument, "message length must be positive");

    const std::size_t batches = (opt.trials + batch_size - 1) / batch_size;
    std::vector<std::size_t> hits(batches, 0);
    unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, batches));

    auto work = [&](unsigned id) {
        for (std::size_t b = id; b < batches; b += threads) {
            const std::size_t count = std::min(batch_size, opt.trials - b * batch_size);
            hits[b] = run_batch(spec, opt, b, count);
        }
    };
    if (threads <= 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work, i);
    }

    MissRate r;
    r.trials = opt.trials;
    for (auto h : hits) r.accepted += h;
    const double n = static_cast<double>(r.trials);
    r.estimate = static_cast<double>(r.accepted) / n;
    r.std_error = std::sqrt(r.estimate * (1 - r.estimate) / n);
    r.ci_low = std::max(0.0, r.estimate - 1.96 * r.std_error);
    r.ci_high = std::min(1.0, r.estimate + 1.96 * r.std_error);
    r.predicted = std::pow(static_cast<double>(spec.field().order()), -spec.degree());
    return r;
}

std::optional<std::uint64_t> crc_period(const Poly& g) {
    if (g.degree() < 1) fail(ErrorKind::InvalidArgument, "period needs a generator of degree >= 1");
    if (g.coeff(std::size_t{0}) == 0) return std::nullopt;
    const Field& f = g.field();
    const std::size_t d = static_cast<std::size_t>(g.degree());
    // Multiply the residue of z^N by z modulo g until it returns to 1.
    const Elem lead_inv = f.inv(g.lead());
    std::vector<Elem> r(d, 0);
    r[0] = 1;
    const double bound = std::pow(static_cast<double>(f.order()), static_cast<double>(d));
    if (bound > 1e9) fail(ErrorKind::BudgetExceeded, "period search space too large");
    for (std::uint64_t n = 1; n <= static_cast<std::uint64_t>(bound); ++n) {
        const Elem top = r[d - 1];
        for (std::size_t i = d - 1; i > 0; --i) r[i] = r[i - 1];
        r[0] = 0;
        if (top) {
            const Elem c = f.mul(top, lead_inv);
            for (std::size_t i = 0; i < d; ++i) r[i] = f.sub(r[i], f.mul(c, g.coeff(i)));
        }
        if (r[0] == 1 && std::all_of(r.begin() + 1, r.end(), [](Elem x) { return x == 0; })) return n;
    }
    return std::nullopt;
}

ConvCode crc_code(const CrcSpec& spec) {
    PolyMat g(spec.field(), 1, 1);
    g(0, 0) = spec.generator();
    return code_from_generator(PolyMatrix::from_poly(g), Framework::ModulePolyDprime);
}

}  // namespace convcode
