#include "convcode/duality.hpp"

#include <algorithm>

namespace convcode {

std::string_view to_string(PairingForm f) noexcept {
    switch (f) {
        case PairingForm::Standard: return "standard";
        case PairingForm::TimeReversed: return "time-reversed";
        case PairingForm::LaurentTimeReversed: return "laurent-time-reversed";
    }
    return "?";
}

Elem pairing(const Field& f, const WindowTrajectory& w, const std::vector<LaurentPoly>& v, PairingForm form) {
    Elem acc = 0;
    const bool reversed = form != PairingForm::Standard;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const LaurentPoly& vi = v[i];
        if (vi.is_zero()) continue;
        for (int e = vi.min_exponent(); e <= vi.max_exponent(); ++e) {
            const Elem c = vi.coeff(e);
            if (!c) continue;
            const int t = reversed ? -e : e;
            if (t < w.start || t > w.end()) continue;
            const auto& sym = w.symbols[static_cast<std::size_t>(t - w.start)];
            if (i >= sym.size()) fail(ErrorKind::DimensionMismatch, "pairing of sequences with different n");
            acc = f.add(acc, f.mul(sym[i], c));
        }
    }
    return acc;
}

namespace {

void require_module(const ConvCode& code) {
    if (!is_module_framework(code.framework()))
        fail(ErrorKind::FrameworkMismatch, "annihilators are defined for module codes");
}

}  // namespace

Behavior annihilator_of_code(const ConvCode& code) {
    require_module(code);
    const Axis axis = code.framework() == Framework::ModuleLaurentD ? Axis::Z : Axis::Zplus;
    return behavior_from_kernel(PolyMatrix::from_poly(code.generator().transpose()), axis);
}

ConvCode annihilator_of_behavior(const Behavior& b) {
    const Framework fw = b.axis() == Axis::Z ? Framework::ModuleLaurentD : Framework::ModulePolyDprime;
    return code_from_generator(PolyMatrix::from_poly(b.kernel().transpose()), fw);
}

ConvCode module_dual(const ConvCode& code) {
    require_module(code);
    const PolyMat gt = code.generator().transpose();
    PolyMat ker = gt.rows() == 0 ? PolyMat::identity(code.field(), code.n()) : right_kernel(gt);
    return code_from_generator(PolyMatrix::from_poly(ker), code.framework());
}

Behavior closure_behavior(const ConvCode& code) {
    const PolyMat h = left_kernel(code.encoder());
    PolyMatrix p(code.field(), Ring::laurent, h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (!h(i, j).is_zero()) p(i, j) = RationalFn(LaurentPoly(h(i, j).reversed(), -h(i, j).degree()));
    return behavior_from_kernel(p, Axis::Z);
}

Behavior behavior_dual(const Behavior& b) {
    if (b.axis() != Axis::Z) fail(ErrorKind::InvalidArgument, "behavior duality is defined on the Z axis");
    const PolyMat& p = b.kernel();
    // Finite-support trajectories are the right kernel of P(z^-1); scaling by
    // z^deg P keeps it polynomial without changing the kernel.
    const int top = std::max(p.degree(), 0);
    PolyMat rev(p.field(), p.rows(), p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j)
            if (!p(i, j).is_zero()) rev(i, j) = p(i, j).reversed().shifted_up(static_cast<std::size_t>(top - p(i, j).degree()));
    const PolyMat n = p.rows() == 0 ? PolyMat::identity(b.field(), b.n()) : right_kernel(rev);
    return behavior_from_kernel(PolyMatrix::from_poly(n.transpose()), Axis::Z);
}

}  // namespace convcode
