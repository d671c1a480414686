#include "etaq/faa_di_bruno.hpp"

namespace etaq {

std::vector<TruncatedSeries> faa_di_bruno_tower(unsigned n, const TruncatedSeries& f) {
    std::vector<TruncatedSeries> tower;
    tower.reserve(n + 1);
    tower.push_back(TruncatedSeries::one(f.order()));
    for (unsigned m = 0; m < n; ++m)
        tower.push_back(q_derive(tower.back()) + f * tower.back());
    return tower;
}

TruncatedSeries faa_di_bruno_shifted(unsigned n, const TruncatedSeries& f) {
    return faa_di_bruno_tower(n, f).back();
}

} // namespace etaq
