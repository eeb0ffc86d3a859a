#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "leafcurve/curves.hpp"
#include "leafcurve/imagewarp.hpp"
#include "leafcurve/presets.hpp"

namespace leafcurve::cli {

enum class CurveKind { Spiral, Elastica, Profile };

/// Everything a command needs. Defaults reproduce the fig5 profile.
/// Precedence, lowest first: defaults, --config JSON, flags, then the preset's
/// own fields.
struct RunConfig {
    std::optional<std::string> preset;
    CurveKind curve = CurveKind::Profile;
    std::string phase = "cornu";
    double m = 0.0;
    double e = kFig5SStart;
    double l = kFig5SEnd;
    double lambda = 2.0;
    std::string weight = "end";
    double k = kFig3Modulus;
    int knots = 2048;
    int samples = 512;
    double tol = 1e-10;
    std::string mode = "linear";
    int width = 0;  // 0: same as the input image
    bool fold_free = false;

    SpiralParams<double> spiral() const;
    ElasticaParams<double> elastica() const;
    ResampleMode resample_mode() const;
    Tolerance<double> tolerance() const { return Tolerance<double>(tol); }
};

/// Overlays the keys present in `j` (named like the long flags) onto `cfg`.
void apply_json(RunConfig& cfg, const nlohmann::json& j);

/// Applies the preset named in `cfg.preset`, if any. Throws ArgumentError for
/// an unknown name.
void apply_preset(RunConfig& cfg);

}  // namespace leafcurve::cli
