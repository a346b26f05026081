#include "resfit/subset_scan.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace resfit {

namespace {

struct ScanData {
    std::vector<std::int32_t> deg;        // degree in G of R[j]
    std::vector<std::uint32_t> adj_mask;  // neighbors of R[j] inside R, as local bits
    std::int64_t vol_r = 0;
};

ScanData prepare(const Graph& g, const NodeSet& r) {
    if (r.size() > 25) throw std::invalid_argument("subset scan limited to |R| <= 25");
    ScanData d;
    int k = static_cast<int>(r.size());
    d.deg.resize(k);
    d.adj_mask.assign(k, 0);
    std::vector<std::int32_t> local(g.n(), -1);
    for (int j = 0; j < k; ++j) local[r.ids[j]] = j;
    for (int j = 0; j < k; ++j) {
        NodeId u = r.ids[j];
        d.deg[j] = g.degree(u);
        d.vol_r += d.deg[j];
        for (NodeId v : g.neighbors(u))
            if (local[v] >= 0) d.adj_mask[j] |= (1u << local[v]);
    }
    return d;
}

// walk gray codes for indices [i0, i1) updating the table of min cut per volume
void scan_range(const ScanData& d, std::uint64_t i0, std::uint64_t i1,
                std::vector<std::int64_t>& table) {
    std::uint32_t mask = static_cast<std::uint32_t>(i0 ^ (i0 >> 1));
    std::int64_t c = 0, v = 0;
    // profile at the chunk start: summing |adj & mask| over members counts
    // each internal edge twice, giving cut = sum deg - 2*internal
    for (int j = 0; j < static_cast<int>(d.deg.size()); ++j) {
        if (!(mask >> j & 1)) continue;
        v += d.deg[j];
        c += d.deg[j] - std::popcount(d.adj_mask[j] & mask);
    }
    if (c < table[v]) table[v] = c;
    for (std::uint64_t i = i0 + 1; i < i1; ++i) {
        int j = std::countr_zero(i);
        std::uint32_t bit = 1u << j;
        if (mask & bit) {
            mask ^= bit;
            v -= d.deg[j];
            c -= d.deg[j];
            c += 2 * std::popcount(d.adj_mask[j] & mask);
        } else {
            c += d.deg[j];
            c -= 2 * std::popcount(d.adj_mask[j] & mask);
            mask ^= bit;
            v += d.deg[j];
        }
        if (c < table[v]) table[v] = c;
    }
}

}  // namespace

std::vector<std::int64_t> min_cut_by_volume_serial(const Graph& g, const NodeSet& r) {
    ScanData d = prepare(g, r);
    std::vector<std::int64_t> table(d.vol_r + 1, unreachable_cut());
    scan_range(d, 0, std::uint64_t(1) << r.size(), table);
    return table;
}

std::vector<std::int64_t> min_cut_by_volume(const Graph& g, const NodeSet& r) {
    ScanData d = prepare(g, r);
    std::uint64_t total = std::uint64_t(1) << r.size();
    std::vector<std::int64_t> table(d.vol_r + 1, unreachable_cut());
#ifdef _OPENMP
    if (total >= (1u << 12)) {
        int threads = omp_get_max_threads();
        std::vector<std::vector<std::int64_t>> parts(
            threads, std::vector<std::int64_t>(d.vol_r + 1, unreachable_cut()));
#pragma omp parallel num_threads(threads)
        {
            int tid = omp_get_thread_num();
            int nt = omp_get_num_threads();
            std::uint64_t chunk = (total + nt - 1) / nt;
            std::uint64_t lo = chunk * tid;
            std::uint64_t hi = std::min(total, lo + chunk);
            if (lo < hi) scan_range(d, lo, hi, parts[tid]);
        }
        for (const auto& part : parts)
            for (std::size_t v = 0; v < table.size(); ++v)
                if (part[v] < table[v]) table[v] = part[v];
        return table;
    }
#endif
    scan_range(d, 0, total, table);
    return table;
}

std::int64_t unreachable_cut() { return std::numeric_limits<std::int64_t>::max(); }

double min_f_alpha_from_table(const std::vector<std::int64_t>& table, double alpha) {
    std::int64_t vol_r = static_cast<std::int64_t>(table.size()) - 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t v = 0; v <= vol_r; ++v) {
        if (table[v] == unreachable_cut()) continue;
        double f = static_cast<double>(table[v]) + alpha * static_cast<double>(vol_r - v);
        if (f < best) best = f;
    }
    return best;
}

Envelope local_g_envelope(const std::vector<std::int64_t>& table) {
    std::int64_t vol_r = static_cast<std::int64_t>(table.size()) - 1;
    std::vector<Line> lines;
    for (std::int64_t v = 0; v <= vol_r; ++v) {
        if (table[v] == unreachable_cut()) continue;
        lines.push_back(Line{table[v], vol_r - v});
    }
    return Envelope::lower_of_lines(std::move(lines));
}

}  // namespace resfit
