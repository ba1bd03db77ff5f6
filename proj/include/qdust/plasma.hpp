#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "qdust/constants.hpp"
#include "qdust/error.hpp"

namespace qdust {

/// Sign convention for the dust charge: the equilibrium balance reads
/// Z_i n_i0 = n_e0 + eps Z_d n_d0 with eps = +1 for negatively and -1 for
/// positively charged dust.
enum class DustPolarity { Negative, Positive };

inline double polarity_sign(DustPolarity p) {
    return p == DustPolarity::Negative ? 1.0 : -1.0;
}

inline const char* polarity_name(DustPolarity p) {
    return p == DustPolarity::Negative ? "negative" : "positive";
}

/// Equilibrium composition of a three-species plasma (electrons, ions,
/// charged dust), Gaussian CGS throughout.
struct PlasmaComposition {
    double n_e0 = 0.0;  ///< electron density [cm^-3]
    double n_i0 = 0.0;  ///< ion density [cm^-3]
    double n_d0 = 0.0;  ///< dust density [cm^-3]
    int Z_i = 1;        ///< ion charge state
    int Z_d = 1;        ///< charges residing on a dust grain
    DustPolarity polarity = DustPolarity::Negative;
    double m_i = 0.0;   ///< ion mass [g]
    double m_d = 0.0;   ///< dust grain mass [g]
    double T_i = 0.0;   ///< ion temperature [erg]
    std::optional<double> T_eF;  ///< Fermi electron temperature [erg]; derived from n_e0 when absent
};

/// Relative charge imbalance |Z_i n_i0 - n_e0 - eps Z_d n_d0| / (Z_i n_i0).
inline double quasineutrality_residual(const PlasmaComposition& c) {
    const double lhs = static_cast<double>(c.Z_i) * c.n_i0;
    const double rhs = c.n_e0 + polarity_sign(c.polarity) * static_cast<double>(c.Z_d) * c.n_d0;
    return std::abs(lhs - rhs) / lhs;
}

inline constexpr double quasineutrality_tolerance = 1e-10;

/// Checks positivity and equilibrium charge balance; returns the composition
/// unchanged on success.
inline const PlasmaComposition& validate_composition(const PlasmaComposition& c) {
    if (!(c.n_e0 > 0.0)) fail(ErrorCode::NonPositiveDensity, "n_e0 must be > 0");
    if (!(c.n_i0 > 0.0)) fail(ErrorCode::NonPositiveDensity, "n_i0 must be > 0");
    if (!(c.n_d0 >= 0.0)) fail(ErrorCode::NonPositiveDensity, "n_d0 must be >= 0");
    if (!(c.m_i > 0.0)) fail(ErrorCode::NonPositiveMass, "m_i must be > 0");
    if (!(c.m_d > 0.0)) fail(ErrorCode::NonPositiveMass, "m_d must be > 0");
    if (c.Z_i < 1) fail(ErrorCode::BadInput, "Z_i must be a positive integer");
    if (c.Z_d < 1) fail(ErrorCode::BadInput, "Z_d must be a positive integer");
    if (!(c.T_i >= 0.0)) fail(ErrorCode::BadInput, "T_i must be >= 0");
    if (c.T_eF && !(*c.T_eF > 0.0)) fail(ErrorCode::BadInput, "T_eF must be > 0 when given");
    const double residual = quasineutrality_residual(c);
    if (!(residual <= quasineutrality_tolerance)) {
        std::ostringstream os;
        os << "relative charge imbalance " << residual << " exceeds "
           << quasineutrality_tolerance;
        fail(ErrorCode::QuasineutralityViolated, os.str());
    }
    return c;
}

/// Fermi temperature of a degenerate electron gas,
/// T_eF = (hbar^2 / 2 m_e) (3 pi^2 n_e0)^(2/3) [erg].
inline double fermi_temperature(double n_e0, const PhysicalConstants& consts) {
    if (!(n_e0 > 0.0)) fail(ErrorCode::NonPositiveDensity, "n_e0 must be > 0");
    const double pi = std::numbers::pi;
    return consts.hbar * consts.hbar / (2.0 * consts.m_e)
           * std::pow(3.0 * pi * pi * n_e0, 2.0 / 3.0);
}

/// Characteristic scales derived from a composition. k_Di is absent when
/// T_i = 0 and C_D is absent when the dust density or the ion temperature
/// vanishes (no dust acoustic branch to speak of).
struct DerivedScales {
    double K_q = 0.0;       ///< quantum wavenumber (16 pi n_e0 / a0)^(1/4) [cm^-1]
    double omega_pi = 0.0;  ///< ion plasma frequency [rad/s]
    double omega_pd = 0.0;  ///< dust plasma frequency [rad/s]
    double V_Ti = 0.0;      ///< ion thermal speed (T_i/m_i)^(1/2) [cm/s]
    double q_i = 0.0;       ///< ion quantum dispersion coefficient hbar/(2 m_i) [cm^2/s]
    double T_eF = 0.0;      ///< Fermi electron temperature [erg]
    bool T_eF_derived = false;  ///< true when T_eF was filled in from n_e0
    std::optional<double> k_Di; ///< ion Debye wavenumber [cm^-1]
    std::optional<double> C_D;  ///< dust acoustic speed omega_pd / k_Di [cm/s]
};

inline DerivedScales derived_scales(const PlasmaComposition& c, const PhysicalConstants& consts) {
    const double pi = std::numbers::pi;
    const double e2 = consts.e * consts.e;
    const double Zi = static_cast<double>(c.Z_i);
    const double Zd = static_cast<double>(c.Z_d);

    DerivedScales s;
    s.K_q = std::pow(16.0 * pi * c.n_e0 / consts.bohr_radius(), 0.25);
    s.omega_pi = std::sqrt(4.0 * pi * c.n_i0 * Zi * Zi * e2 / c.m_i);
    s.omega_pd = c.n_d0 > 0.0 ? std::sqrt(4.0 * pi * c.n_d0 * Zd * Zd * e2 / c.m_d) : 0.0;
    s.V_Ti = std::sqrt(c.T_i / c.m_i);
    s.q_i = consts.hbar / (2.0 * c.m_i);
    if (c.T_eF) {
        s.T_eF = *c.T_eF;
        s.T_eF_derived = false;
    } else {
        s.T_eF = fermi_temperature(c.n_e0, consts);
        s.T_eF_derived = true;
    }
    if (c.T_i > 0.0) {
        s.k_Di = std::sqrt(4.0 * pi * c.n_i0 * Zi * Zi * e2 / c.T_i);
        if (c.n_d0 > 0.0) s.C_D = s.omega_pd / *s.k_Di;
    }
    return s;
}

} // namespace qdust
