#pragma once

#include <cmath>

#include "qdust/error.hpp"

namespace qdust {

/// Fundamental constants in Gaussian CGS units. The Bohr radius is always
/// derived from (hbar, m_e, e) so the constant set cannot drift out of
/// internal consistency. Tests with dimensionless toy problems set all three
/// base constants to 1.
struct PhysicalConstants {
    double e;      ///< magnitude of the electron charge [statC]
    double m_e;    ///< electron mass [g]
    double hbar;   ///< reduced Planck constant [erg s]

    /// Bohr radius a0 = hbar^2 / (m_e e^2) [cm].
    double bohr_radius() const { return hbar * hbar / (m_e * e * e); }

    void validate() const {
        if (!(e > 0.0) || !(m_e > 0.0) || !(hbar > 0.0))
            fail(ErrorCode::BadInput, "physical constants must be strictly positive");
        if (!std::isfinite(bohr_radius()) || !(bohr_radius() > 0.0))
            fail(ErrorCode::BadInput, "derived Bohr radius is not finite and positive");
    }
};

namespace constants {

// CODATA-2018, converted to Gaussian CGS.
inline constexpr double electron_charge_statC = 4.80320471257026372e-10; // 1.602176634e-19 C * 2997924580
inline constexpr double electron_mass_g       = 9.1093837015e-28;
inline constexpr double hbar_erg_s            = 1.054571817e-27;
inline constexpr double proton_mass_g         = 1.67262192369e-24;
inline constexpr double amu_g                 = 1.66053906660e-24;
inline constexpr double boltzmann_erg_per_K   = 1.380649e-16;
inline constexpr double erg_per_eV            = 1.602176634e-12;

inline PhysicalConstants codata2018() {
    return PhysicalConstants{electron_charge_statC, electron_mass_g, hbar_erg_s};
}

/// All base constants equal to 1; handy for dimensionless unit tests.
inline PhysicalConstants unit_system() { return PhysicalConstants{1.0, 1.0, 1.0}; }

} // namespace constants

} // namespace qdust
