#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leafcurve/curves.hpp"

namespace leafcurve {

/// Named parameter sets for the reference curves.
///  fig2: Cornu spiral on [0, 7*pi/6]
///  fig3: elastica with k = 0.3 on [0, 1]
///  fig4: Cornu spiral on [-0.78622, 2.170803] moved to the axial end, no stretch
///  fig5: as fig4 with end-anchored weight (l - t)^2
struct Preset {
    enum class Kind { Spiral, Elastica, Profile };

    std::string name;
    Kind kind;
    SpiralParams<double> spiral;
    ElasticaParams<double> elastica;
};

inline constexpr double kFig5SEnd = 2.170803;
inline constexpr double kFig5SStart = -0.78622;
inline constexpr double kFig3Modulus = 0.3;

const std::vector<Preset>& preset_registry();

/// Looks a preset up by name; std::nullopt when unknown.
std::optional<Preset> find_preset(std::string_view name);

}  // namespace leafcurve
