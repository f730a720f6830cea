#include "singulab/sample_cloud.hpp"

#include "singulab/errors.hpp"

#include <cmath>
#include <random>

namespace singulab {

SampleCloud make_sample_cloud(std::vector<double> base, int direction_count, unsigned seed,
                              double radius_max, double radius_min) {
    if (base.empty()) throw DomainMismatchError("cloud needs a base point");
    if (direction_count < 1) throw DomainMismatchError("cloud needs at least one direction");
    if (!(0 < radius_min && radius_min <= radius_max))
        throw DomainMismatchError("cloud needs 0 < radius_min <= radius_max");
    SampleCloud cloud;
    cloud.seed = seed;
    const std::size_t dimension = base.size();
    cloud.base = std::move(base);
    for (int i = static_cast<int>(std::ceil(-std::log2(radius_max)));; ++i) {
        double r = std::ldexp(1.0, -i);
        if (r < radius_min) break;
        if (r <= radius_max) cloud.radii.push_back(r);
    }
    if (cloud.radii.empty()) throw DomainMismatchError("no dyadic radius inside the given range");

    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (static_cast<int>(cloud.directions.size()) < direction_count) {
        std::vector<double> v(dimension);
        double norm_sq = 0.0;
        for (double& c : v) {
            c = gauss(rng);
            norm_sq += c * c;
        }
        if (norm_sq < 1e-18) continue;
        double norm = std::sqrt(norm_sq);
        for (double& c : v) c /= norm;
        cloud.directions.push_back(std::move(v));
    }
    return cloud;
}

void validate_cloud(const SampleCloud& cloud) {
    if (cloud.base.empty()) throw DomainMismatchError("cloud has no base point");
    if (cloud.radii.empty() || cloud.directions.empty())
        throw DomainMismatchError("cloud has no samples");
    for (std::size_t i = 0; i < cloud.radii.size(); ++i) {
        if (cloud.radii[i] <= 0) throw DomainMismatchError("cloud radius not positive");
        if (i > 0 && cloud.radii[i] >= cloud.radii[i - 1])
            throw DomainMismatchError("cloud radii not strictly decreasing");
    }
    for (const auto& v : cloud.directions) {
        if (v.size() != cloud.base.size()) throw DomainMismatchError("direction dimension mismatch");
        double norm_sq = 0.0;
        for (double c : v) norm_sq += c * c;
        if (std::fabs(std::sqrt(norm_sq) - 1.0) > 1e-12)
            throw DomainMismatchError("direction is not unit length");
    }
}

} // namespace singulab
