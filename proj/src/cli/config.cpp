#include "leafcurve/cli/config.hpp"

#include "leafcurve/errors.hpp"

namespace leafcurve::cli {

SpiralParams<double> RunConfig::spiral() const {
    SpiralParams<double> p;
    if (phase == "cornu") {
        p.phase = PhaseKind<double>::cornu();
    } else if (phase == "euler") {
        p.phase = PhaseKind<double>::shifted_euler(m);
    } else {
        throw ArgumentError("unknown phase '" + phase + "' (expected cornu or euler)");
    }
    if (weight == "end") {
        p.weight = WeightMode::End;
    } else if (weight == "arc") {
        p.weight = WeightMode::Arc;
    } else {
        throw ArgumentError("unknown weight '" + weight + "' (expected end or arc)");
    }
    p.s_start = e;
    p.s_end = l;
    p.lambda = lambda;
    p.validate();
    return p;
}

ElasticaParams<double> RunConfig::elastica() const {
    ElasticaParams<double> p{k, e, l};
    try {
        p.validate();
    } catch (const DomainError& err) {
        throw ArgumentError(err.what());
    }
    return p;
}

ResampleMode RunConfig::resample_mode() const {
    if (mode == "linear") {
        return ResampleMode::Linear;
    }
    if (mode == "nearest") {
        return ResampleMode::Nearest;
    }
    throw ArgumentError("unknown resample mode '" + mode + "' (expected nearest or linear)");
}

void apply_json(RunConfig& cfg, const nlohmann::json& j) {
    if (!j.is_object()) {
        throw FormatError("config JSON must be an object");
    }
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "preset") {
                cfg.preset = value.get<std::string>();
            } else if (key == "curve") {
                const auto v = value.get<std::string>();
                if (v == "spiral") {
                    cfg.curve = CurveKind::Spiral;
                } else if (v == "elastica") {
                    cfg.curve = CurveKind::Elastica;
                } else if (v == "profile") {
                    cfg.curve = CurveKind::Profile;
                } else {
                    throw ArgumentError("unknown curve '" + v + "'");
                }
            } else if (key == "phase") {
                cfg.phase = value.get<std::string>();
            } else if (key == "m") {
                cfg.m = value.get<double>();
            } else if (key == "e") {
                cfg.e = value.get<double>();
            } else if (key == "l") {
                cfg.l = value.get<double>();
            } else if (key == "lambda") {
                cfg.lambda = value.get<double>();
            } else if (key == "weight") {
                cfg.weight = value.get<std::string>();
            } else if (key == "k") {
                cfg.k = value.get<double>();
            } else if (key == "knots") {
                cfg.knots = value.get<int>();
            } else if (key == "samples") {
                cfg.samples = value.get<int>();
            } else if (key == "tol") {
                cfg.tol = value.get<double>();
            } else if (key == "mode") {
                cfg.mode = value.get<std::string>();
            } else if (key == "width") {
                cfg.width = value.get<int>();
            } else if (key == "fold-free") {
                cfg.fold_free = value.get<bool>();
            } else {
                throw ArgumentError("unknown config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& err) {
        throw FormatError(std::string("config JSON: ") + err.what());
    }
}

void apply_preset(RunConfig& cfg) {
    if (!cfg.preset) {
        return;
    }
    const auto preset = find_preset(*cfg.preset);
    if (!preset) {
        throw ArgumentError("unknown preset '" + *cfg.preset + "' (expected fig2, fig3, fig4 or fig5)");
    }
    switch (preset->kind) {
        case Preset::Kind::Elastica:
            cfg.curve = CurveKind::Elastica;
            cfg.k = preset->elastica.k;
            cfg.e = preset->elastica.s_start;
            cfg.l = preset->elastica.s_end;
            return;
        case Preset::Kind::Spiral:
            cfg.curve = CurveKind::Spiral;
            break;
        case Preset::Kind::Profile:
            cfg.curve = CurveKind::Profile;
            break;
    }
    const auto& p = preset->spiral;
    cfg.phase = p.phase.is_cornu() ? "cornu" : "euler";
    cfg.m = p.phase.m;
    cfg.e = p.s_start;
    cfg.l = p.s_end;
    cfg.lambda = p.lambda;
    cfg.weight = p.weight == WeightMode::End ? "end" : "arc";
}

}  // namespace leafcurve::cli
