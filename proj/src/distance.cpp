#include "ccwb/distance.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ccwb {

unsigned long long code_size(const LinearCode& C) {
    unsigned long long s = 1;
    for (int i = 0; i < C.k(); ++i) {
        if (s > (1ull << 63) / C.field().q()) return 1ull << 63;
        s *= C.field().q();
    }
    return s;
}

namespace {

// Scaled copies of the generator rows: srow[level][c] = c * row_level.
std::vector<std::vector<std::vector<fe>>> scaled_rows(const LinearCode& C) {
    const Field& F = C.field();
    const Mat& G = C.rref_matrix();
    int q = F.q(), n = C.n(), k = C.k();
    std::vector<std::vector<std::vector<fe>>> s(k, std::vector<std::vector<fe>>(q, std::vector<fe>(n)));
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < q; ++c)
            for (int j = 0; j < n; ++j) s[i][c][j] = F.mul(fe(c), G.at(i, j));
    return s;
}

// Depth-first message enumeration below a fixed prefix.  buf[level] holds
// the partial codeword; each leaf reports its weight to `leaf`.
template <typename LeafFn>
void enum_below(const Field& F, const std::vector<std::vector<std::vector<fe>>>& srow, int k,
                int n, int level, std::vector<std::vector<fe>>& buf, LeafFn&& leaf) {
    if (level == k) {
        int w = 0;
        for (int j = 0; j < n; ++j) w += (buf[level][j] != 0);
        leaf(w);
        return;
    }
    for (int c = 0; c < F.q(); ++c) {
        const auto& add = srow[level][c];
        for (int j = 0; j < n; ++j) buf[level + 1][j] = F.add(buf[level][j], add[j]);
        enum_below(F, srow, k, n, level + 1, buf, leaf);
    }
}

// Splits the message space into q^L prefix chunks for the parallel loop.
int split_levels(const LinearCode& C) {
    int q = C.field().q(), k = C.k();
    long long chunks = 1;
    int L = 0;
    while (L < k && chunks < 512) {
        chunks *= q;
        ++L;
    }
    return L;
}

template <typename ChunkFn>
void parallel_enum(const LinearCode& C, ChunkFn&& per_chunk) {
    const Field& F = C.field();
    const int q = F.q(), n = C.n(), k = C.k();
    const int L = split_levels(C);
    long long nchunks = 1;
    for (int i = 0; i < L; ++i) nchunks *= q;
    auto srow = scaled_rows(C);

#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<std::vector<fe>> buf(k + 1, std::vector<fe>(n, 0));
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 4)
#endif
        for (long long chunk = 0; chunk < nchunks; ++chunk) {
            // prefix codeword for the first L digits
            long long t = chunk;
            std::fill(buf[L].begin(), buf[L].end(), 0);
            for (int i = 0; i < L; ++i) {
                int c = int(t % q);
                t /= q;
                if (c)
                    for (int j = 0; j < n; ++j) buf[L][j] = F.add(buf[L][j], srow[i][c][j]);
            }
            per_chunk(chunk, srow, buf);
        }
    }
}

}  // namespace

std::vector<unsigned long long> weight_histogram(const LinearCode& C) {
    const int n = C.n(), k = C.k();
    std::vector<unsigned long long> hist(n + 1, 0);
    if (k == 0) {
        hist[0] = 1;
        return hist;
    }
    const int L = split_levels(C);
    parallel_enum(C, [&](long long, const auto& srow, auto& buf) {
        std::vector<unsigned long long> local(n + 1, 0);
        // buf[L] already holds the prefix sum; enumerate the tail starting
        // from it by aliasing level L as the current accumulator
        enum_below(C.field(), srow, k, n, L, buf, [&](int w) { ++local[w]; });
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            for (int w = 0; w <= n; ++w) hist[w] += local[w];
        }
    });
    return hist;
}

std::vector<unsigned long long> weight_histogram_serial(const LinearCode& C) {
    const Field& F = C.field();
    const Mat& G = C.rref_matrix();
    const int q = F.q(), n = C.n(), k = C.k();
    std::vector<unsigned long long> hist(n + 1, 0);
    std::vector<int> msg(k, 0);
    while (true) {
        std::vector<fe> cw(n, 0);
        for (int i = 0; i < k; ++i) {
            if (!msg[i]) continue;
            for (int j = 0; j < n; ++j) cw[j] = F.add(cw[j], F.mul(fe(msg[i]), G.at(i, j)));
        }
        int w = 0;
        for (int j = 0; j < n; ++j) w += (cw[j] != 0);
        ++hist[w];
        int pos = 0;
        while (pos < k && msg[pos] == q - 1) msg[pos++] = 0;
        if (pos == k) break;
        ++msg[pos];
    }
    return hist;
}

int min_weight_full(const LinearCode& C) {
    if (C.k() < 1) throw std::invalid_argument("minimum weight needs k >= 1");
    const int n = C.n(), k = C.k();
    const int L = split_levels(C);
    int best = n + 1;
    parallel_enum(C, [&](long long, const auto& srow, auto& buf) {
        int local = n + 1;
        // the zero codeword (w = 0) is skipped; nonzero messages cannot
        // produce it since the rows are independent
        enum_below(C.field(), srow, k, n, L, buf, [&](int w) {
            if (w > 0 && w < local) local = w;
        });
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            best = std::min(best, local);
        }
    });
    return best;
}

int min_weight_full_serial(const LinearCode& C) {
    auto h = weight_histogram_serial(C);
    for (size_t w = 1; w < h.size(); ++w)
        if (h[w]) return int(w);
    throw std::logic_error("no nonzero codeword found");
}

std::vector<unsigned long long> weight_distribution(const LinearCode& C, unsigned long long cap) {
    if (code_size(C) > cap) throw std::runtime_error("weight distribution exceeds enumeration cap");
    return weight_histogram(C);
}

namespace {

struct InfoSetMatrix {
    Mat B;                 // k x n, systematic on the set for the first `rank` rows
    int rank = 0;          // pivots inside the (previously unused) set
};

// Gaussian elimination with a column priority order: all pivots that can
// be placed on `preferred` columns come first.
std::vector<InfoSetMatrix> build_info_sets(const LinearCode& C) {
    const Field& F = C.field();
    const int n = C.n(), k = C.k();
    std::vector<char> used(n, 0);
    std::vector<InfoSetMatrix> out;
    while (true) {
        std::vector<int> order;
        for (int c = 0; c < n; ++c)
            if (!used[c]) order.push_back(c);
        size_t unused_cnt = order.size();
        for (int c = 0; c < n; ++c)
            if (used[c]) order.push_back(c);

        Mat m = C.rref_matrix();
        std::vector<int> pivot_cols;
        int prow = 0;
        for (int oi = 0; oi < n && prow < k; ++oi) {
            int col = order[oi];
            int sel = -1;
            for (int r = prow; r < k; ++r)
                if (m.at(r, col) != 0) {
                    sel = r;
                    break;
                }
            if (sel < 0) continue;
            if (sel != prow)
                for (int c = 0; c < n; ++c) std::swap(m.at(sel, c), m.at(prow, c));
            fe il = F.inv(m.at(prow, col));
            if (il != 1)
                for (int c = 0; c < n; ++c) m.at(prow, c) = F.mul(m.at(prow, c), il);
            for (int r = 0; r < k; ++r) {
                if (r == prow) continue;
                fe f = m.at(r, col);
                if (!f) continue;
                for (int c = 0; c < n; ++c) m.at(r, c) = F.sub(m.at(r, c), F.mul(f, m.at(prow, c)));
            }
            pivot_cols.push_back(col);
            ++prow;
        }

        InfoSetMatrix ism;
        ism.B = m;
        ism.rank = 0;
        for (size_t i = 0; i < pivot_cols.size(); ++i) {
            bool fresh = false;
            for (size_t oi = 0; oi < unused_cnt; ++oi)
                if (order[oi] == pivot_cols[i]) fresh = true;
            if (fresh) {
                used[pivot_cols[i]] = 1;
                ++ism.rank;
            }
        }
        if (ism.rank == 0) break;
        out.push_back(std::move(ism));
    }
    return out;
}

u128 binomial_u128(int n, int kk) {
    if (kk < 0 || kk > n) return 0;
    u128 r = 1;
    const u128 cap = u128(1) << 100;
    for (int i = 1; i <= kk; ++i) {
        r = r * u128(n - kk + i) / u128(i);
        if (r > cap) return cap;
    }
    return r;
}

// Minimum nonzero weight over all codewords m*B with wt(m) = w.
// Parallel over the first chosen row.
int min_weight_at(const Field& F, const Mat& B, int k, int n, int w) {
    const int q = F.q();
    int best = n + 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(min : best)
#endif
    for (int first = 0; first <= k - w; ++first) {
        std::vector<std::vector<fe>> buf(w + 1, std::vector<fe>(n, 0));
        int local = n + 1;
        auto rec = [&](auto&& self, int depth, int start) -> void {
            if (depth == w) {
                int wt = 0;
                for (int j = 0; j < n; ++j) wt += (buf[w][j] != 0);
                if (wt > 0 && wt < local) local = wt;
                return;
            }
            for (int r = start; r <= k - (w - depth); ++r) {
                for (int s = 1; s < q; ++s) {
                    for (int j = 0; j < n; ++j)
                        buf[depth + 1][j] = F.add(buf[depth][j], F.mul(fe(s), B.at(r, j)));
                    self(self, depth + 1, r + 1);
                }
            }
        };
        for (int s = 1; s < q; ++s) {
            for (int j = 0; j < n; ++j) buf[1][j] = F.mul(fe(s), B.at(first, j));
            if (w == 1) {
                int wt = 0;
                for (int j = 0; j < n; ++j) wt += (buf[1][j] != 0);
                if (wt > 0 && wt < local) local = wt;
            } else {
                rec(rec, 1, first + 1);
            }
        }
        best = std::min(best, local);
    }
    return best;
}

}  // namespace

DistanceResult min_distance_infoset(const LinearCode& C, unsigned long long budget) {
    const Field& F = C.field();
    const int q = F.q(), n = C.n(), k = C.k();
    if (k < 1) throw std::invalid_argument("minimum distance needs k >= 1");

    auto sets = build_info_sets(C);
    DistanceResult res;
    res.method = DistanceResult::Method::InfoSet;
    res.upper = n;
    res.lower = 0;
    res.exact = false;

    u128 spent = 0;
    for (int w = 1; w <= k; ++w) {
        // cost of the next full round; rounds are atomic, so the returned
        // bounds only depend on the budget, not on thread count
        u128 scal = 1;
        for (int i = 0; i < w; ++i) scal *= (q - 1);
        u128 round_cost = binomial_u128(k, w) * scal * u128(sets.size());
        if (spent + round_cost > u128(budget) && w > 1) break;

        for (auto& ism : sets)
            res.upper = std::min(res.upper, min_weight_at(F, ism.B, k, n, w));
        spent += round_cost;

        long long lb = 0;
        for (auto& ism : sets) lb += std::max(0, (w + 1) - (k - ism.rank));
        res.lower = int(std::min<long long>(lb, res.upper));
        if (lb >= res.upper || w == k) {
            res.lower = res.upper;
            res.exact = true;
            return res;
        }
    }
    return res;
}

DistanceResult min_distance(const LinearCode& C, const DistanceOptions& opt) {
    if (C.k() < 1) throw std::invalid_argument("minimum distance needs k >= 1");
    DistanceResult res;
    if (code_size(C) <= opt.full_enum_cap) {
        int d = min_weight_full(C);
        res.lower = res.upper = d;
        res.exact = true;
        res.method = DistanceResult::Method::FullEnum;
    } else {
        res = min_distance_infoset(C, opt.infoset_budget);
    }
    if (res.exact && res.upper > C.n() - C.k() + 1)
        throw std::logic_error("Singleton bound violated; internal error");
    return res;
}

}  // namespace ccwb
