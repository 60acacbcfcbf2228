#pragma once

#include <cstddef>
#include <vector>

#include "hatom/geometry.hpp"

namespace hatom {

// Sampled observable series shared by all propagators. One-dimensional runs
// use the x components. `populations` is empty when the representation has
// no attached eigenbasis.
struct TrajectoryRecord {
    std::vector<double> t;
    std::vector<Vec3> r_p;
    std::vector<Vec3> p_p;
    std::vector<Vec3> r_e;
    std::vector<Vec3> p_e;
    std::vector<Vec3> P; // total momentum p_p + <p_e>
    std::vector<double> energy;
    std::vector<double> norm;
    std::vector<std::vector<double>> populations;
    int n_lo = 0; // basis label of populations[k][0]

    std::size_t size() const { return t.size(); }
};

} // namespace hatom
