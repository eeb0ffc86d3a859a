#include "leafcurve/presets.hpp"

#include <numbers>

namespace leafcurve {

const std::vector<Preset>& preset_registry() {
    static const std::vector<Preset> registry = [] {
        using P = SpiralParams<double>;
        const auto cornu = PhaseKind<double>::cornu();
        std::vector<Preset> r;
        r.push_back({"fig2", Preset::Kind::Spiral, P{cornu, 0.0, 7.0 * std::numbers::pi / 6.0, 0.0, WeightMode::End},
                     {}});
        r.push_back({"fig3", Preset::Kind::Elastica, P{}, ElasticaParams<double>{kFig3Modulus, 0.0, 1.0}});
        r.push_back({"fig4", Preset::Kind::Profile, P{cornu, kFig5SStart, kFig5SEnd, 0.0, WeightMode::End}, {}});
        r.push_back({"fig5", Preset::Kind::Profile, P{cornu, kFig5SStart, kFig5SEnd, 2.0, WeightMode::End}, {}});
        return r;
    }();
    return registry;
}

std::optional<Preset> find_preset(std::string_view name) {
    for (const auto& p : preset_registry()) {
        if (p.name == name) {
            return p;
        }
    }
    return std::nullopt;
}

}  // namespace leafcurve
