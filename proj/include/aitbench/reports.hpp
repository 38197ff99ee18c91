#pragma once

#include "aitbench/profile.hpp"
#include "aitbench/report.hpp"
#include "aitbench/table_store.hpp"

namespace aitbench {

// Per string of length n: K, bdepth0, soph_free, antistochasticity, holographic
// rank and the time and description profiles. Then, for the most
// antistochastic string and each split into x y, the conditional profiles and
// their closeness.
Report survey(std::size_t n, TableStore& store);

// closeness(L_x, Lambda_x) for |x| <= nx; closeness(Theta-hat_{y|z}, L_{y|z})
// and closeness(Theta-tilde_{y|z}, Lambda_{y|z}) for |y| <= nx, |z| <= nz.
Report equivalences_report(std::size_t nx, std::size_t nz, TableStore& store);

// soph(x,y) against max{soph(x), R_x(soph(y|x))} over pairs whose theta
// profiles all finish sharply.
Report soph_pair_report(std::size_t n, Coord eps, TableStore& store);

// Count and slack for every k <= kmax and 0 <= s <= k.
Report late_halters_report(std::size_t kmax, TableStore& store);

// Reach curve by definition and by the clock route, H_z, and their closeness.
Report reach_report(const BitString& z, std::size_t i_max, TableStore& store);

}  // namespace aitbench
