#ifndef CONVCODE_DUALITY_HPP
#define CONVCODE_DUALITY_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "convcode/behavior.hpp"
#include "convcode/code.hpp"

namespace convcode {

/**
 * Bilinear forms between sequences:
 *  Standard             sum_t <w_t, v_t>
 *  TimeReversed         sum_t <w_t, v_{-t}>  (bi-infinite w, finite v)
 *  LaurentTimeReversed  the same sum for two Laurent series
 */
enum class PairingForm { Standard, TimeReversed, LaurentTimeReversed };

std::string_view to_string(PairingForm f) noexcept;

/// Pair a window (read as zero outside [start, end]) with a finite-support
/// vector sequence. The result is exact whenever the support of v, after any
/// time reversal, lies inside the window.
Elem pairing(const Field& f, const WindowTrajectory& w, const std::vector<LaurentPoly>& v, PairingForm form);

/// Behavior ker G^t(sigma) of all sequences orthogonal to the code under the
/// standard form. Axis Z for Laurent-module codes, Z+ for polynomial ones.
Behavior annihilator_of_code(const ConvCode& code);
/// Module code generated by P^t.
ConvCode annihilator_of_behavior(const Behavior& b);
/// Finite-support words orthogonal to the code under the time-reversed form:
/// the module {v : G^t v = 0}. Always observable.
ConvCode module_dual(const ConvCode& code);
/// Closure of the code's words c(z) = G(z) m(z) among bi-infinite sequences:
/// the behavior H(z) w(z) = 0, i.e. kernel H(sigma^-1) for the parity check H
/// of the minimal basic encoder. Z axis; always controllable.
Behavior closure_behavior(const ConvCode& code);
/// Annihilator of the finite-support part of B; a controllable behavior whose
/// own dual is the controllable part of B. Z axis only.
Behavior behavior_dual(const Behavior& b);

}  // namespace convcode

#endif
