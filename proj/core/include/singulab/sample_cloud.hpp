#pragma once

#include <vector>

namespace singulab {

// Discretization of "for all x near x0": a base point, a strictly decreasing
// geometric radius grid, and a seeded set of unit directions.
struct SampleCloud {
    std::vector<double> base;
    std::vector<double> radii;
    std::vector<std::vector<double>> directions;
    unsigned seed = 0;
};

// radii are the powers 2^-i falling inside [radius_min, radius_max]
// (default i = 4..24); directions are seeded normalized Gaussian draws.
SampleCloud make_sample_cloud(std::vector<double> base, int direction_count, unsigned seed,
                              double radius_max = 0x1p-4, double radius_min = 0x1p-24);

// throws DomainMismatchError unless radii are strictly decreasing and
// positive and every direction is unit within 1e-12
void validate_cloud(const SampleCloud& cloud);

} // namespace singulab
