#pragma once

#include "askey/families.hpp"
#include "oracles.hpp"

#include <optional>

namespace oracle {

// textbook coefficients for any family instance the oracle header covers
inline std::optional<std::pair<double, double>> textbook(const askey::FamilyInstance<double> &f, int n) {
    using askey::FamilyId;
    switch (f.id) {
    case FamilyId::Racah: return racah(f.re(0), f.re(1), -f.re(2) - 1, f.re(3), n);
    case FamilyId::Wilson: return wilson(f.z(0), f.z(1), f.z(2), f.z(3), n);
    case FamilyId::Hahn: return hahn(f.re(0), f.re(1), f.re(2), n);
    case FamilyId::DualHahn: return dual_hahn(f.re(0), f.re(1), f.re(2), n);
    case FamilyId::Meixner: return meixner(f.re(0), f.re(1), n);
    case FamilyId::Krawtchouk: return krawtchouk(f.re(0), f.re(1), n);
    case FamilyId::Charlier: return charlier(f.re(0), n);
    case FamilyId::MeixnerPollaczek: return meixner_pollaczek(f.re(0), f.re(1), n);
    case FamilyId::ContinuousHahn: return continuous_hahn(f.z(0), f.z(1), n);
    case FamilyId::ContinuousDualHahn: return continuous_dual_hahn(f.z(0), f.z(1), f.z(2), n);
    case FamilyId::Jacobi: return jacobi(f.re(0), f.re(1), n);
    case FamilyId::Laguerre: return std::pair<double, double>{2.0 * n + f.re(0) + 1, n * (n + f.re(0))};
    case FamilyId::Hermite: return std::pair<double, double>{0.0, n / 2.0};
    }
    return std::nullopt;
}

} // namespace oracle
