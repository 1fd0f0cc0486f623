#pragma once

// Physical parameters (CGS) of a charged particle in a uniform transverse
// magnetic field, and the derived scales everything else is built from.

#include <cmath>
#include <stdexcept>

namespace landau {

/// Charge/mass/field configuration in CGS units. The default-constructed
/// value is the natural-unit profile m = q = B = c = hbar = 1, which is the
/// reference configuration of every check suite.
struct PhysicalParams {
    double m = 1.0;     // mass [g]
    double q = 1.0;     // charge [statC]
    double B = 1.0;     // field [G]
    double c = 1.0;     // speed of light [cm/s]
    double hbar = 1.0;  // reduced Planck constant [erg s]

    void validate() const {
        if (!(std::isfinite(m) && std::isfinite(q) && std::isfinite(B) &&
              std::isfinite(c) && std::isfinite(hbar)))
            throw std::invalid_argument("PhysicalParams: non-finite value");
        if (!(m > 0.0)) throw std::invalid_argument("PhysicalParams: m must be > 0");
        if (!(c > 0.0)) throw std::invalid_argument("PhysicalParams: c must be > 0");
        if (!(hbar > 0.0)) throw std::invalid_argument("PhysicalParams: hbar must be > 0");
        if (B == 0.0) throw std::invalid_argument("PhysicalParams: B must be nonzero");
        if (q == 0.0) throw std::invalid_argument("PhysicalParams: q must be nonzero");
    }

    bool operator==(const PhysicalParams&) const = default;
};

/// Signed cyclotron frequency qB/(mc) [rad/s]. The sign carries the
/// orientation of the Lorentz force; spectra and lengths use |omega_c|.
inline double cyclotron_frequency(const PhysicalParams& p) {
    p.validate();
    return p.q * p.B / (p.m * p.c);
}

/// Magnetic length sqrt(hbar/(m |omega_c|)) [cm].
inline double magnetic_length(const PhysicalParams& p) {
    p.validate();
    return std::sqrt(p.hbar / (p.m * std::abs(cyclotron_frequency(p))));
}

/// Landau level E_n = hbar |omega_c| (n + 1/2) [erg]; n >= 0.
inline double landau_level(long n, const PhysicalParams& p) {
    p.validate();
    if (n < 0) throw std::invalid_argument("landau_level: n must be >= 0");
    return p.hbar * std::abs(cyclotron_frequency(p)) * (static_cast<double>(n) + 0.5);
}

/// Hall resistivity (hbar/q^2)(m omega_c l1 l2 / hbar) for a rectangle of
/// sides l1, l2. At quantized areas m omega_c l1 l2 = 2 pi k hbar this is
/// 2 pi k hbar / q^2.
inline double hall_resistivity(const PhysicalParams& p, double l1, double l2) {
    p.validate();
    return p.m * cyclotron_frequency(p) * l1 * l2 / (p.q * p.q);
}

}  // namespace landau
