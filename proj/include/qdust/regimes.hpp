#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qdust/dispersion.hpp"
#include "qdust/plasma.hpp"

namespace qdust {

/// One ordering assumption, reported as a ratio: the assumption reads
/// "margin >> 1" and is flagged satisfied at margin >= threshold.
struct RegimeCheck {
    std::string name;
    double margin = 0.0;
    double threshold = 10.0;
    bool satisfied = false;
};

struct RegimeReport {
    Mode mode;
    double k = 0.0;
    double omega = 0.0;
    std::vector<RegimeCheck> checks;

    const RegimeCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

/// Factor-of-10 reading of ">>": the raw margin is always reported so callers
/// can apply stricter cuts.
inline constexpr double regime_threshold = 10.0;

/// Evaluates every ordering assumption behind the chosen branch at (k, omega)
/// and reports each as a margin ratio. The electron-response assumptions are
/// shared by both branches; the charge-to-mass margin carries the Z_i^2
/// factor that the exact reduction produces.
inline RegimeReport classify_regime(Mode mode, const DerivedScales& scales,
                                    const PlasmaComposition& comp,
                                    const PhysicalConstants& consts,
                                    double k, double omega) {
    if (!(k > 0.0)) fail(ErrorCode::BadInput, "k must be > 0");
    RegimeReport report{mode, k, omega, {}};
    auto add = [&report](std::string name, double margin) {
        report.checks.push_back(
            {std::move(name), margin, regime_threshold, margin >= regime_threshold});
    };

    const double k2 = k * k;
    const double hbar2 = consts.hbar * consts.hbar;
    const double w2 = omega * omega;

    // Electron response assumptions (both branches): pressure term dominates
    // the density perturbation and electron inertia is negligible.
    add("electron_pressure_dominates", hbar2 * k2 / (scales.T_eF * consts.m_e));
    add("electron_inertia_negligible",
        w2 > 0.0 ? hbar2 * k2 * k2 / (4.0 * consts.m_e * consts.m_e * w2)
                 : std::numeric_limits<double>::infinity());

    if (mode == Mode::ImmobileDust) {
        add("quantum_wavenumber_dominates", scales.K_q / k);
        add("charge_to_mass_margin",
            static_cast<double>(comp.Z_i) * static_cast<double>(comp.Z_i)
                * (comp.n_i0 / comp.n_e0) * (comp.m_i / consts.m_e));
    } else {
        add("ion_inertia_negligible",
            w2 > 0.0 ? k2 * scales.V_Ti * scales.V_Ti / w2
                     : std::numeric_limits<double>::infinity());
        add("ion_quantum_negligible", comp.m_i * comp.T_i / (hbar2 * k2));
        if (scales.k_Di) {
            add("long_wavelength", *scales.k_Di / k);
            add("quantum_screening", scales.K_q * scales.K_q / (k * *scales.k_Di));
        }
    }
    return report;
}

} // namespace qdust
