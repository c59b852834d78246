#ifndef CONVCODE_CODE_HPP
#define CONVCODE_CODE_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "convcode/polymatrix.hpp"

namespace convcode {

/**
 * How a code is read as a set of sequences:
 *  RationalA       subspace of F(z)^n
 *  LaurentAprime   subspace of F((z))^n
 *  CompleteB       closed shift-invariant subspace of bi-infinite sequences
 *  ModuleLaurentD  F[z, z^-1]-submodule of finite-support sequences
 *  ModulePolyDprime F[z]-submodule of F[z]^n
 */
enum class Framework { RationalA, LaurentAprime, CompleteB, ModuleLaurentD, ModulePolyDprime };

std::string_view to_string(Framework f) noexcept;
/// Accepts "a", "aprime", "b", "d", "dprime" (case-insensitive).
std::optional<Framework> parse_framework(std::string_view s);
bool is_module_framework(Framework f) noexcept;

struct CodeInvariants {
    std::size_t k = 0, n = 0;
    /// Column degrees of the minimal basic encoder, descending.
    std::vector<int> forney_indices;
    /// Column degrees of the canonical generator, descending. Equal to the
    /// Forney indices for the subspace frameworks.
    std::vector<int> kronecker_indices;
    /// Sum of the framework's indices (Forney for A/A'/B, Kronecker for D/D').
    int degree = 0;
    int controller_memory = 0;
    /// Largest parity-check row degree; absent when no parity check exists.
    std::optional<int> observer_memory;
    bool observable = true;
};

/**
 * A convolutional code in one framework, held through its canonical
 * generator: the Popov basis of the module it generates (D, D'), or the
 * right-prime Popov encoder of its rational span (A, A', B).
 *
 * Immutable apart from the lazily filled free-distance cache, which is shared
 * between copies and may be set from any thread.
 */
class ConvCode {
public:
    ConvCode(Framework fw, PolyMat canonical, PolyMat encoder);

    const Field& field() const noexcept { return generator_.field(); }
    Framework framework() const noexcept { return fw_; }
    std::size_t n() const noexcept { return generator_.rows(); }
    std::size_t k() const noexcept { return generator_.cols(); }
    /// Canonical generator over F[z] (n x k).
    const PolyMat& generator() const noexcept { return generator_; }
    /// Minimal basic encoder of the rational span (Popov, right prime).
    const PolyMat& encoder() const noexcept { return encoder_; }
    const CodeInvariants& invariants() const noexcept { return inv_; }

    /// Cached free distance; the outer optional tells whether it was computed,
    /// the inner one is empty for "no nonzero codeword".
    std::optional<std::optional<int>> cached_free_distance() const;
    void cache_free_distance(std::optional<int> d) const;

private:
    struct DistanceCache {
        std::mutex lock;
        std::optional<std::optional<int>> value;
    };
    Framework fw_;
    PolyMat generator_, encoder_;
    CodeInvariants inv_;
    std::shared_ptr<DistanceCache> dfree_;
};

ConvCode code_from_generator(const PolyMatrix& m, Framework fw);
PolyMatrix minimal_basic_encoder(const ConvCode& code);
/// Left-prime row-Popov H with H G = 0 ((n-k) x n). Throws NotObservable for
/// non-observable module codes.
PolyMatrix parity_check(const ConvCode& code);
CodeInvariants invariants(const ConvCode& code);
bool is_observable(const ConvCode& code);
ConvCode observable_closure(const ConvCode& code);

struct ConversionResult {
    ConvCode code;
    bool information_lost = false;
    std::string note;
};
ConversionResult convert(const ConvCode& code, Framework target);

/// Same framework, field and length required; compares canonical generators.
bool codes_equal(const ConvCode& a, const ConvCode& b);

struct Membership {
    bool member = false;
    /// k x 1 message with word = G m for the canonical generator G.
    std::optional<PolyMatrix> message;
};
Membership membership(const ConvCode& code, const PolyMatrix& word);

/// Polynomial words only (n x 1 column).
PolyMatrix column_word(const Field& f, const std::vector<Poly>& w, Ring ring = Ring::poly);

}  // namespace convcode

#endif
