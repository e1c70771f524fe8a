#include "skyline/composition.hpp"

#include <algorithm>

namespace skyline {

Composition lambda_of(const Composition& alpha) {
    std::vector<int> p = alpha.parts();
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Composition(std::move(p));
}

}  // namespace skyline
