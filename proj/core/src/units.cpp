#include "hatom/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hatom {

AtomParams make_params(double mass_ratio) {
    if (!std::isfinite(mass_ratio) || mass_ratio <= 0.0) {
        throw std::invalid_argument("make_params: mass_ratio must be finite and > 0, got " +
                                    std::to_string(mass_ratio));
    }
    AtomParams p{};
    p.m_e = 1.0;
    p.m_p = mass_ratio;
    p.M = p.m_e + p.m_p;
    p.mu = p.m_e * p.m_p / p.M;
    p.a_B = 1.0;
    p.hbar = 1.0;
    return p;
}

} // namespace hatom
