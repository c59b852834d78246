#ifndef CONVCODE_REALIZATION_HPP
#define CONVCODE_REALIZATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "convcode/behavior.hpp"
#include "convcode/code.hpp"

namespace convcode {

/// x_{t+1} = A x_t + B u_t, y_t = C x_t + D u_t over F.
struct Realization {
    FMat A, B, C, D;
    /// rank G(0) = k for the realized encoder.
    bool g0_full_rank = true;

    std::size_t state_dim() const noexcept { return A.rows(); }
};

/**
 * Shift-register realization of G(z^-1) from the canonical generator: one
 * register chain per input whose length is that column's degree. Its Markov
 * parameters are the coefficient matrices G_0, G_1, ...
 */
Realization realize_code(const ConvCode& code);
/// [D, CB, CAB, ..., C A^{count-2} B].
std::vector<FMat> markov_parameters(const Realization& r, std::size_t count);

struct Minimality {
    bool controllable = false;
    bool observable = false;
};
Minimality is_minimal(const Realization& r);
/// Throws NotMinimal unless both are minimal.
bool realizations_equivalent(const Realization& a, const Realization& b);
/// Controllability indices of (A, B), descending.
std::vector<int> controllability_indices(const FMat& a, const FMat& b);

/**
 * First-order description z K x + L x + M v = 0 of the codewords v. Built from
 * a row split G = [Y; U] (rows chosen lexicographically with deg det U equal
 * to the code degree) and a controller-form realization of Y U^-1.
 */
struct CodePencil {
    FMat K, L, M;
    /// Realization of Y U^-1 the pencil is assembled from.
    Realization realization;
    /// Word coordinates acting as inputs (U) and outputs (Y), ascending.
    std::vector<std::size_t> input_rows, output_rows;
    bool k_full_column_rank = false;
    bool km_full_row_rank = false;
    bool left_prime = false;
    /// Controllability indices of the underlying (A, B), descending.
    std::vector<int> controllability_indices;
};
CodePencil code_pencil(const ConvCode& code);

struct PencilMembership {
    bool member = false;
    /// State sequence x(z) as delta polynomials.
    std::vector<Poly> state;
};
PencilMembership pencil_membership(const CodePencil& p, const std::vector<Poly>& v);

/**
 * Behavior in first-order form: trajectories are w_t = Hp zeta_t with
 * Gp zeta_{t+1} = Fp zeta_t. Obtained by transposing the code pencil of the
 * annihilator code.
 */
struct BehaviorPencil {
    FMat Gp, Fp, Hp;
    bool full_row_rank = false;
    bool stacked_full_column_rank = false;
    bool right_prime = false;
};
BehaviorPencil behavior_pencil(const Behavior& b);
/// True iff some zeta on the window satisfies the pencil equations.
bool pencil_window_membership(const BehaviorPencil& p, const WindowTrajectory& w);

}  // namespace convcode

#endif
