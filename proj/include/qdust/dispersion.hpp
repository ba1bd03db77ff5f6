#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "qdust/error.hpp"
#include "qdust/plasma.hpp"

namespace qdust {

/// The two low-frequency electrostatic branches: ions oscillating against a
/// frozen dust background, and mobile dust with inertialess ions.
enum class Mode { ImmobileDust, MobileDust };

inline const char* mode_name(Mode m) {
    return m == Mode::ImmobileDust ? "immobile-dust" : "mobile-dust";
}

/// Coefficients of the immobile-dust relation
/// omega^2 = k^2 V_Ti^2 + q_i^2 k^4 + omega_pi^2 k^4 / (k^4 + K_q^4).
struct ImmobileDustCoeffs {
    double V_Ti = 0.0;
    double q_i = 0.0;
    double omega_pi = 0.0;
    double K_q = 0.0;

    static ImmobileDustCoeffs from_scales(const DerivedScales& s) {
        return {s.V_Ti, s.q_i, s.omega_pi, s.K_q};
    }

    void validate() const {
        if (!(V_Ti >= 0.0 && q_i >= 0.0 && omega_pi >= 0.0) || !(K_q > 0.0))
            fail(ErrorCode::BadInput, "immobile-dust coefficients must be >= 0 with K_q > 0");
    }
};

/// Coefficients of the mobile-dust relation
/// omega^2 = omega_pd^2 k^4 / ((k^2 + k_Di^2) k^2 + K_q^4).
struct MobileDustCoeffs {
    double omega_pd = 0.0;
    double k_Di = 0.0;
    double K_q = 0.0;

    static MobileDustCoeffs from_scales(const DerivedScales& s) {
        if (!s.k_Di)
            fail(ErrorCode::MissingParameter, "mobile-dust coefficients need k_Di (T_i > 0)");
        return {s.omega_pd, *s.k_Di, s.K_q};
    }

    void validate() const {
        if (!(omega_pd >= 0.0 && k_Di >= 0.0) || !(K_q > 0.0))
            fail(ErrorCode::BadInput, "mobile-dust coefficients must be >= 0 with K_q > 0");
    }
};

/// Non-negative root of the immobile-dust relation; 0 at k = 0.
inline double omega_immobile_dust(const ImmobileDustCoeffs& c, double k) {
    const double k2 = k * k;
    const double k4 = k2 * k2;
    const double Kq4 = c.K_q * c.K_q * c.K_q * c.K_q;
    return std::sqrt(k2 * c.V_Ti * c.V_Ti + c.q_i * c.q_i * k4
                     + c.omega_pi * c.omega_pi * k4 / (k4 + Kq4));
}

/// Non-negative root of the mobile-dust relation; 0 at k = 0, approaches
/// omega_pd from below as k grows.
inline double omega_mobile_dust(const MobileDustCoeffs& c, double k) {
    const double k2 = k * k;
    const double Kq4 = c.K_q * c.K_q * c.K_q * c.K_q;
    return c.omega_pd * k2 / std::sqrt(k2 * k2 + c.k_Di * c.k_Di * k2 + Kq4);
}

/// Closed-form asymptotic branches quoted alongside the full relations.
enum class Limit {
    ImmobileQuantum,       ///< cold ions, K_q >> k
    MobileLongWavelength,  ///< k << k_Di
    MobileQuantum,         ///< additionally K_q >> (k k_Di)^(1/2)
    DustAcoustic,          ///< opposite screening limit, omega = k C_D
};

inline const char* limit_name(Limit l) {
    switch (l) {
        case Limit::ImmobileQuantum:      return "immobile-quantum";
        case Limit::MobileLongWavelength: return "long-wavelength";
        case Limit::MobileQuantum:        return "mobile-quantum";
        case Limit::DustAcoustic:         return "dust-acoustic";
    }
    return "?";
}

/// Union of the symbols the four limit formulas may need; each limit checks
/// for exactly the ones it uses.
struct LimitParams {
    std::optional<double> Z_i, Z_d;
    std::optional<double> n_i0_over_n_e0, n_d0_over_n_e0;
    std::optional<double> hbar, m_e, m_i, m_d;
    std::optional<double> omega_pd, k_Di, K_q;
    std::optional<double> C_D;

    static LimitParams from_plasma(const PlasmaComposition& c, const PhysicalConstants& consts,
                                   const DerivedScales& s) {
        LimitParams p;
        p.Z_i = static_cast<double>(c.Z_i);
        p.Z_d = static_cast<double>(c.Z_d);
        p.n_i0_over_n_e0 = c.n_i0 / c.n_e0;
        p.n_d0_over_n_e0 = c.n_d0 / c.n_e0;
        p.hbar = consts.hbar;
        p.m_e = consts.m_e;
        p.m_i = c.m_i;
        p.m_d = c.m_d;
        p.omega_pd = s.omega_pd;
        p.k_Di = s.k_Di;
        p.K_q = s.K_q;
        p.C_D = s.C_D;
        return p;
    }
};

namespace detail {
inline double require(const std::optional<double>& v, const char* symbol, const char* where) {
    if (!v) fail(ErrorCode::MissingParameter, std::string(symbol) + " required for " + where);
    return *v;
}
} // namespace detail

/// Evaluates the requested asymptotic formula at k.
inline double omega_limit(Limit limit, const LimitParams& p, double k) {
    if (!(k >= 0.0)) fail(ErrorCode::BadInput, "k must be >= 0");
    using detail::require;
    switch (limit) {
        case Limit::ImmobileQuantum: {
            const char* w = "immobile-quantum limit";
            const double Zi = require(p.Z_i, "Z_i", w);
            const double ratio = require(p.n_i0_over_n_e0, "n_i0/n_e0", w);
            const double hbar = require(p.hbar, "hbar", w);
            const double me = require(p.m_e, "m_e", w);
            const double mi = require(p.m_i, "m_i", w);
            return 0.5 * Zi * std::sqrt(ratio) * hbar * k * k / std::sqrt(me * mi);
        }
        case Limit::MobileLongWavelength: {
            const char* w = "long-wavelength limit";
            const double wpd = require(p.omega_pd, "omega_pd", w);
            const double kDi = require(p.k_Di, "k_Di", w);
            const double Kq = require(p.K_q, "K_q", w);
            const double Kq4 = Kq * Kq * Kq * Kq;
            return wpd * k * k / std::sqrt(kDi * kDi * k * k + Kq4);
        }
        case Limit::MobileQuantum: {
            const char* w = "mobile-quantum limit";
            const double Zd = require(p.Z_d, "Z_d", w);
            const double ratio = require(p.n_d0_over_n_e0, "n_d0/n_e0", w);
            const double hbar = require(p.hbar, "hbar", w);
            const double me = require(p.m_e, "m_e", w);
            const double md = require(p.m_d, "m_d", w);
            return 0.5 * Zd * std::sqrt(ratio) * hbar * k * k / std::sqrt(me * md);
        }
        case Limit::DustAcoustic: {
            return require(p.C_D, "C_D", "dust-acoustic limit") * k;
        }
    }
    fail(ErrorCode::BadInput, "unknown limit");
}

/// Per-sample asymptotic-regime flags, using the factor-of-10 reading of the
/// ordering assumptions. Only the flags meaningful for the curve's mode are
/// populated (the immobile branch carries just quantum_limit).
struct SampleFlags {
    bool quantum_limit = false;     ///< K_q >= 10 k
    bool long_wavelength = false;   ///< k_Di >= 10 k
    bool quantum_screening = false; ///< K_q^2 >= 10 k k_Di
    bool acoustic = false;          ///< K_q^2 <= 0.1 k k_Di
};

struct CurveSample {
    double k = 0.0;
    double omega = 0.0;
    SampleFlags flags;
};

struct DispersionCurve {
    Mode mode;
    std::vector<CurveSample> samples;
};

enum class Spacing { Linear, Log };

namespace detail {

inline std::vector<double> make_grid(double k_min, double k_max, int n_points, Spacing spacing) {
    if (n_points < 2) fail(ErrorCode::BadGrid, "need at least 2 grid points");
    if (!(k_min < k_max)) fail(ErrorCode::BadGrid, "k_min must be < k_max");
    if (spacing == Spacing::Log && !(k_min > 0.0))
        fail(ErrorCode::BadGrid, "log spacing requires k_min > 0");
    if (spacing == Spacing::Linear && !(k_min >= 0.0))
        fail(ErrorCode::BadGrid, "k_min must be >= 0");
    std::vector<double> grid(static_cast<size_t>(n_points));
    const double n1 = static_cast<double>(n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        const double f = static_cast<double>(i) / n1;
        grid[static_cast<size_t>(i)] =
            spacing == Spacing::Log ? k_min * std::pow(k_max / k_min, f)
                                    : k_min + (k_max - k_min) * f;
    }
    grid.front() = k_min;
    grid.back() = k_max;
    return grid;
}

} // namespace detail

inline DispersionCurve sample_curve(const ImmobileDustCoeffs& c, double k_min, double k_max,
                                    int n_points, Spacing spacing = Spacing::Log) {
    c.validate();
    DispersionCurve curve{Mode::ImmobileDust, {}};
    for (double k : detail::make_grid(k_min, k_max, n_points, spacing)) {
        CurveSample s;
        s.k = k;
        s.omega = omega_immobile_dust(c, k);
        s.flags.quantum_limit = k > 0.0 && c.K_q >= 10.0 * k;
        curve.samples.push_back(s);
    }
    return curve;
}

inline DispersionCurve sample_curve(const MobileDustCoeffs& c, double k_min, double k_max,
                                    int n_points, Spacing spacing = Spacing::Log) {
    c.validate();
    DispersionCurve curve{Mode::MobileDust, {}};
    const double Kq2 = c.K_q * c.K_q;
    for (double k : detail::make_grid(k_min, k_max, n_points, spacing)) {
        CurveSample s;
        s.k = k;
        s.omega = omega_mobile_dust(c, k);
        if (k > 0.0) {
            s.flags.quantum_limit = c.K_q >= 10.0 * k;
            s.flags.long_wavelength = c.k_Di >= 10.0 * k;
            s.flags.quantum_screening = Kq2 >= 10.0 * k * c.k_Di;
            s.flags.acoustic = Kq2 <= 0.1 * k * c.k_Di;
        }
        curve.samples.push_back(s);
    }
    return curve;
}

} // namespace qdust
