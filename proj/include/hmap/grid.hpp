#ifndef HMAP_GRID_HPP
#define HMAP_GRID_HPP

#include <vector>

namespace hmap {

enum class Verdict { Pass, Fail, Inconclusive };

const char* to_string(Verdict v);

/// Sampling plan shared by the geometric verifiers: `radii` circles placed
/// geometrically from 0.1 up to r_max, `angles` equispaced samples each.
struct GridSpec {
    int radii = 24;
    double r_max = 0.95;
    int angles = 96;
    double tol = 1e-6;
};

void validate(const GridSpec& g);
std::vector<double> grid_radii(const GridSpec& g);
std::vector<double> grid_angles(const GridSpec& g);

}  // namespace hmap

#endif
