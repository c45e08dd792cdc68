#include "trieven/perm.hpp"

#include <algorithm>

namespace trieven {

std::vector<std::vector<int>> orbit_partition(
    int npoints, int ngens, const std::function<int(int, int)>& apply) {
    std::vector<bool> seen(npoints, false);
    std::vector<std::vector<int>> out;
    for (int p = 0; p < npoints; ++p) {
        if (seen[p]) continue;
        std::vector<int> orb{p};
        seen[p] = true;
        for (std::size_t i = 0; i < orb.size(); ++i) {
            for (int g = 0; g < ngens; ++g) {
                int q = apply(g, orb[i]);
                if (!seen[q]) { seen[q] = true; orb.push_back(q); }
            }
        }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

} // namespace trieven
