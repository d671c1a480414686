#pragma once

#include <vector>

#include "etaq/series.hpp"

namespace etaq {

/* Shifted Faa di Bruno polynomials in f and its D-derivatives, defined by
 * the recursion P_0(f) = 1, P_{m+1}(f) = D(P_m(f)) + f P_m(f) with
 * D = q d/dq. They satisfy D^n y = P_n(f) y whenever D y = f y, so they
 * turn derivative rows of a Wronskian into rows of log-derivative data. */
TruncatedSeries faa_di_bruno_shifted(unsigned n, const TruncatedSeries& f);

/* P_0(f) .. P_n(f) in one pass. */
std::vector<TruncatedSeries> faa_di_bruno_tower(unsigned n, const TruncatedSeries& f);

} // namespace etaq
