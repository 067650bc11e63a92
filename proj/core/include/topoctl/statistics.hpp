#pragma once

namespace topoctl {

enum class Statistics { Fermi, Bose };

// Statistics sign: -1 for fermions, +1 for bosons.
inline constexpr int stat_sign(Statistics s) {
    return s == Statistics::Fermi ? -1 : +1;
}

inline constexpr const char* stat_name(Statistics s) {
    return s == Statistics::Fermi ? "fermi" : "bose";
}

}  // namespace topoctl
