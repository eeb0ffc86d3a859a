#pragma once

#include <cmath>

#include "leafcurve/errors.hpp"

namespace leafcurve {

/// Turning-angle law of the cross-section spiral.
///
/// `Cornu` is the classical clothoid phase u^2 with the origin at the
/// non-axial end. `ShiftedEuler` is m*u - u^2/2, whose curvature m - u
/// vanishes at u = m, which moves the zero-curvature point along the leaf.
template <typename Scalar>
struct PhaseKind {
    enum class Kind { Cornu, ShiftedEuler };

    Kind kind = Kind::Cornu;
    Scalar m = Scalar(0);

    static PhaseKind cornu() { return PhaseKind{Kind::Cornu, Scalar(0)}; }
    static PhaseKind shifted_euler(Scalar m) {
        if (!std::isfinite(m)) {
            throw DomainError("ShiftedEuler phase needs a finite m");
        }
        return PhaseKind{Kind::ShiftedEuler, m};
    }

    bool is_cornu() const { return kind == Kind::Cornu; }

    friend bool operator==(const PhaseKind&, const PhaseKind&) = default;
};

/// Absolute error target for the quadrature routines.
template <typename Scalar>
struct Tolerance {
    Scalar abs_tol;

    explicit Tolerance(Scalar abs = Scalar(1e-10)) : abs_tol(abs) {
        if (!(abs_tol > Scalar(0)) || !std::isfinite(abs_tol)) {
            throw DomainError("tolerance must be positive and finite");
        }
    }
};

}  // namespace leafcurve
