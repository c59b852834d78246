#ifndef CONVCODE_BEHAVIOR_HPP
#define CONVCODE_BEHAVIOR_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "convcode/polymatrix.hpp"

namespace convcode {

/// Time axis of trajectories: all integers, or the nonnegative ones.
enum class Axis { Z, Zplus };

std::string_view to_string(Axis a) noexcept;
std::optional<Axis> parse_axis(std::string_view s);

struct BehaviorInvariants {
    /// Row degrees of the canonical kernel, descending.
    std::vector<int> kronecker_indices;
    int mcmillan_degree = 0;
    /// Rate (n - r) / n as the pair (n - r, n).
    std::size_t free_variables = 0, n = 0;
    bool controllable = true;
    bool autonomous = false;
};

/**
 * Kernel-represented behavior {w : P(sigma) w = 0} where sigma shifts time
 * backwards: (P(sigma) w)_t = sum_s P_s w_{t+s}.
 *
 * The kernel is canonical: row Popov over F[z] with full row rank; on the Z
 * axis it is additionally saturated at z, so P(0) has full row rank.
 */
class Behavior {
public:
    Behavior(Axis axis, PolyMat kernel);

    const Field& field() const noexcept { return kernel_.field(); }
    Axis axis() const noexcept { return axis_; }
    std::size_t n() const noexcept { return kernel_.cols(); }
    std::size_t r() const noexcept { return kernel_.rows(); }
    const PolyMat& kernel() const noexcept { return kernel_; }
    const BehaviorInvariants& invariants() const noexcept { return inv_; }

    friend bool operator==(const Behavior& a, const Behavior& b) noexcept {
        return a.axis_ == b.axis_ && a.kernel_ == b.kernel_;
    }

private:
    Axis axis_;
    PolyMat kernel_;
    BehaviorInvariants inv_;
};

/// Finite window w_a..w_b of a trajectory; symbols[t - a] is w_t in F^n.
struct WindowTrajectory {
    int start = 0;
    std::vector<std::vector<Elem>> symbols;

    int end() const noexcept { return start + static_cast<int>(symbols.size()) - 1; }
    std::size_t length() const noexcept { return symbols.size(); }
};

/// Window [a, b] of the finite-support sequence sum_t w_t z^t (Laurent entries).
WindowTrajectory window_of(const std::vector<LaurentPoly>& w, std::size_t n, int a, int b);
WindowTrajectory window_of(const std::vector<Poly>& w, int a, int b);

/// num / 2^exponent, reduced (num odd or zero with exponent 0).
struct DyadicRational {
    boost::multiprecision::cpp_int num;
    unsigned exponent = 0;

    std::string to_string() const;
    double to_double() const;
    friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
        return a.num == b.num && a.exponent == b.exponent;
    }
};

Behavior behavior_from_kernel(const PolyMatrix& p, Axis axis);
bool window_membership(const Behavior& b, const WindowTrajectory& w);
bool is_controllable(const Behavior& b);
Behavior controllable_part(const Behavior& b);
/// Right-prime G with P G = 0 and full column rank n - r. Throws NotControllable.
PolyMatrix image_representation(const Behavior& b);
/// Behavior {w : exists m, P(sigma) w = G(sigma) m}.
Behavior arma_to_kernel(const PolyMatrix& p, const PolyMatrix& g, Axis axis = Axis::Z);
BehaviorInvariants behavior_invariants(const Behavior& b);

struct SpliceResult {
    /// w'' = G m'' as polynomials and as the window [0, deg w''].
    std::vector<Poly> word;
    WindowTrajectory window;
    int gap = 0;
};
/**
 * Join the codewords G a and G b: the result is a codeword agreeing with G a at
 * times <= j and with G b at times >= j + gap, where gap = deg G + 1. Both
 * agreements are checked; a failure raises SpliceCheckFailed.
 */
SpliceResult splice(const PolyMat& g, const std::vector<Poly>& a, const std::vector<Poly>& b, int j);

/**
 * Fill the unknown symbols of a window so that the result passes
 * window_membership, or report that no completion exists. symbols[t][i] is
 * nullopt where w_{i, start + t} is free.
 */
using PartialWindow = std::vector<std::vector<std::optional<Elem>>>;
std::optional<WindowTrajectory> complete_window(const Behavior& b, int start, const PartialWindow& symbols);

/**
 * Concatenate a past block and a future block with `gap` free symbols between
 * them, if the behavior admits it on the combined window.
 */
std::optional<WindowTrajectory> splice_blocks(const Behavior& b, const WindowTrajectory& past,
                                              const WindowTrajectory& future, int gap);

/// sum_t 2^-|t| d_H(v_t, w_t) over the common window. Throws IntervalMismatch.
DyadicRational sequence_metric(const WindowTrajectory& v, const WindowTrajectory& w);

}  // namespace convcode

#endif
