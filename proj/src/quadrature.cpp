#include "jchom/quadrature.hpp"

namespace jchom {

std::vector<double> make_breakpoints(double lo, double hi, std::span<const double> interior)
{
    std::vector<double> pts;
    pts.reserve(interior.size() + 2);
    pts.push_back(lo);
    for (double x : interior)
        if (x > lo && x < hi) pts.push_back(x);
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace jchom
