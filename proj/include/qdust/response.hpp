#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include "qdust/dispersion.hpp"
#include "qdust/plasma.hpp"

namespace qdust {

/// Plane-wave amplitudes of the linear perturbations driven by a potential
/// amplitude phi_hat, following the exp(i k.r - i omega t) ansatz. All
/// amplitudes are exactly linear in phi_hat. n_d1 exists only for the
/// mobile-dust branch, v_i only for the immobile-dust branch (recovered from
/// continuity so every symbol of the derivation has a home).
struct PerturbationSet {
    double phi_hat = 0.0;       ///< potential amplitude [statvolt]
    double n_e1 = 0.0;          ///< electron density amplitude [cm^-3]
    double n_i1 = 0.0;          ///< ion density amplitude [cm^-3]
    std::optional<double> n_d1; ///< dust density amplitude [cm^-3]
    std::optional<double> v_i;  ///< longitudinal ion velocity amplitude [cm/s]
};

namespace detail {

/// Ion response denominator omega^2 - k^2 V_Ti^2 - (hbar k^2 / 2 m_i)^2 and
/// the magnitude scale used by the resonance guard.
struct IonDenominator {
    double value;
    double scale;
};

inline IonDenominator ion_denominator(double k, double omega, const PlasmaComposition& c,
                                      const PhysicalConstants& consts) {
    const double k2 = k * k;
    const double thermal = k2 * c.T_i / c.m_i;
    const double qi = consts.hbar / (2.0 * c.m_i);
    const double quantum = qi * qi * k2 * k2;
    const double w2 = omega * omega;
    return {w2 - thermal - quantum, w2 + thermal + quantum};
}

inline constexpr double ion_resonance_tolerance = 1e-12;

} // namespace detail

/// Reconstructs the density (and, where applicable, velocity) amplitudes for
/// one plane-wave component of the chosen branch.
inline PerturbationSet density_responses(Mode mode, double phi_hat, double k, double omega,
                                         const PlasmaComposition& comp,
                                         const PhysicalConstants& consts) {
    if (!(k > 0.0)) fail(ErrorCode::BadInput, "k must be > 0");
    const double k2 = k * k;
    const double Zi = static_cast<double>(comp.Z_i);
    const double Zd = static_cast<double>(comp.Z_d);

    PerturbationSet p;
    p.phi_hat = phi_hat;
    p.n_e1 = 4.0 * consts.m_e * comp.n_e0 * consts.e * phi_hat / (consts.hbar * consts.hbar * k2);

    if (mode == Mode::ImmobileDust) {
        const auto d = detail::ion_denominator(k, omega, comp, consts);
        if (std::abs(d.value) <= detail::ion_resonance_tolerance * d.scale)
            fail(ErrorCode::IonResonance,
                 "omega^2 sits on the free ion branch; the ion response diverges");
        p.n_i1 = comp.n_i0 * Zi * consts.e * k2 * phi_hat / (comp.m_i * d.value);
        p.v_i = omega * p.n_i1 / (comp.n_i0 * k);
    } else {
        if (omega == 0.0)
            fail(ErrorCode::ZeroFrequency, "mobile-dust responses need omega != 0");
        if (!(comp.T_i > 0.0))
            fail(ErrorCode::MissingParameter, "mobile-dust responses need T_i > 0");
        p.n_i1 = -comp.n_i0 * Zi * consts.e * phi_hat / comp.T_i;
        p.n_d1 = -polarity_sign(comp.polarity) * comp.n_d0 * Zd * consts.e * k2 * phi_hat
                 / (comp.m_d * omega * omega);
    }
    return p;
}

/// Relative residual of the Poisson balance k^2 phi + 4 pi e (n_e1 - Z_i n_i1
/// [+ eps Z_d n_d1]) = 0 assembled from the reconstructed amplitudes. The
/// balance is cleared of the response denominators and normalized by the sum
/// of all term magnitudes, so the on-shell value stays at machine level for
/// any parameter scales while off-shell frequencies still register at O(1).
/// Analytically the residual is zero exactly when omega solves the branch's
/// full dispersion relation.
inline double poisson_residual(Mode mode, double phi_hat, double k, double omega,
                               const PlasmaComposition& comp, const PhysicalConstants& consts) {
    const PerturbationSet p = density_responses(mode, phi_hat, k, omega, comp, consts);
    const double fourpie = 4.0 * std::numbers::pi * consts.e;
    const double k2 = k * k;
    const double Zi = static_cast<double>(comp.Z_i);
    const double Zd = static_cast<double>(comp.Z_d);

    const double t_phi = k2 * phi_hat;
    const double t_e = fourpie * p.n_e1;

    if (mode == Mode::ImmobileDust) {
        const auto d = detail::ion_denominator(k, omega, comp, consts);
        const double t_ion = fourpie * Zi * p.n_i1;
        const double num = d.value * t_phi + d.value * t_e - d.value * t_ion;
        const double den = d.scale * (std::abs(t_phi) + std::abs(t_e))
                           + std::abs(d.value * t_ion);
        return den > 0.0 ? std::abs(num) / den : 0.0;
    }

    const double w2 = omega * omega;
    const double t_ion = fourpie * Zi * p.n_i1;
    const double t_dust = fourpie * polarity_sign(comp.polarity) * Zd * p.n_d1.value();
    const double num = w2 * t_phi + w2 * t_e - w2 * t_ion + w2 * t_dust;
    const double den = w2 * (std::abs(t_phi) + std::abs(t_e) + std::abs(t_ion))
                       + std::abs(w2 * t_dust);
    return den > 0.0 ? std::abs(num) / den : 0.0;
}

} // namespace qdust
