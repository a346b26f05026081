#pragma once

#include <cstdint>
#include <vector>

#include "resfit/envelope.hpp"
#include "resfit/graph.hpp"

namespace resfit {

// Exhaustive scan over the subsets S of R (|R| <= 25). Entry v of the result
// holds min cut(S) over subsets with vol(S) = v, or unreachable_cut() if no
// subset has that volume. cut counts edges into all of V, not just R.
//
// The scan walks a Gray code so each step updates cut and volume in O(1).
// min_cut_by_volume splits the code into contiguous ranges across OpenMP
// threads and min-merges the per-thread tables, which is order-independent;
// min_cut_by_volume_serial is the single-threaded reference.
std::vector<std::int64_t> min_cut_by_volume(const Graph& g, const NodeSet& r);
std::vector<std::int64_t> min_cut_by_volume_serial(const Graph& g, const NodeSet& r);

std::int64_t unreachable_cut();

// min over S of cut(S) + alpha*(vol(R) - vol(S)), from a scan table.
double min_f_alpha_from_table(const std::vector<std::int64_t>& table, double alpha);

// Concave lower envelope of the lines cut(S) + alpha*(vol(R) - vol(S)).
Envelope local_g_envelope(const std::vector<std::int64_t>& table);

}  // namespace resfit
