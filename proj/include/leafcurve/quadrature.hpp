#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <type_traits>
#include <vector>

namespace leafcurve {

template <typename Value>
struct QuadratureResult {
    Value value;
    double error_estimate;
    int evaluations;
};

namespace detail {

template <typename Value>
double max_abs(const Value& v) {
    if constexpr (std::is_arithmetic_v<Value>) {
        return static_cast<double>(std::abs(v));
    } else {
        return static_cast<double>(v.cwiseAbs().maxCoeff());
    }
}

template <typename Value>
Value zero_like() {
    if constexpr (std::is_arithmetic_v<Value>) {
        return Value(0);
    } else {
        return Value::Zero();
    }
}

// 7-point Gauss / 15-point Kronrod pair. Abscissae in descending order; the
// Gauss nodes are the odd-indexed Kronrod nodes plus the centre.
template <typename Scalar>
struct Kronrod15 {
    static constexpr long double xgk[8] = {
        0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
        0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
        0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
        0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L};
    static constexpr long double wgk[8] = {
        0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
        0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
        0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
        0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
    static constexpr long double wg[4] = {
        0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
        0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};
};

template <typename Scalar, typename Value>
struct Panel {
    Scalar a;
    Scalar b;
    Value value;
    double error;
};

template <typename Scalar, typename Func>
auto gauss_kronrod_panel(const Func& f, Scalar a, Scalar b) {
    using Value = std::decay_t<decltype(f(a))>;
    using K = Kronrod15<Scalar>;
    const Scalar centre = (a + b) / Scalar(2);
    const Scalar half = (b - a) / Scalar(2);

    const Value fc = f(centre);
    Value kronrod = fc * Scalar(K::wgk[7]);
    Value gauss = fc * Scalar(K::wg[3]);
    for (int j = 0; j < 7; ++j) {
        const Scalar dx = half * Scalar(K::xgk[j]);
        const Value pair = f(centre - dx) + f(centre + dx);
        kronrod += pair * Scalar(K::wgk[j]);
        if (j % 2 == 1) {
            gauss += pair * Scalar(K::wg[j / 2]);
        }
    }
    kronrod *= half;
    gauss *= half;
    const double error = max_abs<Value>(kronrod - gauss);
    return Panel<Scalar, Value>{a, b, kronrod, error};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (G7/K15) integration of `f` over [a, b].
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below `abs_tol` or `max_panels` is reached. `f` may return
/// a scalar or any fixed-size Eigen vector; vector errors use the max norm.
/// The result is deterministic for identical inputs.
template <typename Scalar, typename Func>
auto integrate(const Func& f, Scalar a, Scalar b, Scalar abs_tol, int max_panels = 512) {
    using Panel = decltype(detail::gauss_kronrod_panel(f, a, b));
    using Value = decltype(Panel::value);

    if (a == b) {
        return QuadratureResult<Value>{detail::zero_like<Value>(), 0.0, 0};
    }
    const Scalar sign = b < a ? Scalar(-1) : Scalar(1);
    const Scalar lo = std::min(a, b);
    const Scalar hi = std::max(a, b);

    auto worse = [](const Panel& x, const Panel& y) {
        if (x.error != y.error) {
            return x.error < y.error;
        }
        return x.a > y.a;
    };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> heap(worse);
    heap.push(detail::gauss_kronrod_panel(f, lo, hi));
    double total_error = heap.top().error;
    int evaluations = 15;

    while (total_error > static_cast<double>(abs_tol) && static_cast<int>(heap.size()) < max_panels) {
        Panel top = heap.top();
        heap.pop();
        const Scalar mid = (top.a + top.b) / Scalar(2);
        if (!(top.a < mid && mid < top.b)) {
            heap.push(top);
            break;
        }
        Panel left = detail::gauss_kronrod_panel(f, top.a, mid);
        Panel right = detail::gauss_kronrod_panel(f, mid, top.b);
        evaluations += 30;
        total_error += left.error + right.error - top.error;
        heap.push(left);
        heap.push(right);
    }

    // Sum in abscissa order so the result does not depend on heap layout.
    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    Value sum = detail::zero_like<Value>();
    double err = 0.0;
    for (const auto& p : panels) {
        sum += p.value;
        err += p.error;
    }
    return QuadratureResult<Value>{sum * sign, err, evaluations};
}

}  // namespace leafcurve
