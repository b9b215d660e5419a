#include "ccwb/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ccwb {

LinearCode extend(const LinearCode& C) {
    const Field& F = C.field();
    const Mat& G = C.gen_matrix();
    Mat R(G.rows, C.n() + 1);
    for (int i = 0; i < G.rows; ++i) {
        fe sum = 0;
        for (int j = 0; j < C.n(); ++j) {
            R.at(i, j) = G.at(i, j);
            sum = F.add(sum, G.at(i, j));
        }
        R.at(i, C.n()) = F.neg(sum);
    }
    return LinearCode(F, R);
}

LinearCode puncture(const LinearCode& C, int pos) {
    if (pos < 0 || pos >= C.n()) throw std::out_of_range("puncture position out of range");
    if (C.n() < 2) throw std::invalid_argument("cannot puncture below length 1");
    const Mat& G = C.gen_matrix();
    Mat R(G.rows, C.n() - 1);
    for (int i = 0; i < G.rows; ++i) {
        int c = 0;
        for (int j = 0; j < C.n(); ++j) {
            if (j == pos) continue;
            R.at(i, c++) = G.at(i, j);
        }
    }
    return LinearCode(C.field(), R);
}

LinearCode shorten(const LinearCode& C, int pos) {
    if (pos < 0 || pos >= C.n()) throw std::out_of_range("shorten position out of range");
    if (C.n() < 2) throw std::invalid_argument("cannot shorten below length 1");
    const Field& F = C.field();
    // eliminate column pos across the basis, drop the row that pivots there
    Mat m = C.rref_matrix();
    int pivot_row = -1;
    for (int i = 0; i < m.rows; ++i) {
        if (m.at(i, pos) != 0) {
            pivot_row = i;
            break;
        }
    }
    if (pivot_row >= 0) {
        fe il = F.inv(m.at(pivot_row, pos));
        for (int c = 0; c < m.cols; ++c) m.at(pivot_row, c) = F.mul(m.at(pivot_row, c), il);
        for (int i = 0; i < m.rows; ++i) {
            if (i == pivot_row) continue;
            fe f = m.at(i, pos);
            if (!f) continue;
            for (int c = 0; c < m.cols; ++c)
                m.at(i, c) = F.sub(m.at(i, c), F.mul(f, m.at(pivot_row, c)));
        }
    }
    Mat R(m.rows - (pivot_row >= 0 ? 1 : 0), C.n() - 1);
    if (R.rows == 0) R = Mat(1, C.n() - 1);
    int out = 0;
    for (int i = 0; i < m.rows; ++i) {
        if (i == pivot_row) continue;
        int c = 0;
        for (int j = 0; j < C.n(); ++j) {
            if (j == pos) continue;
            R.at(out, c++) = m.at(i, j);
        }
        ++out;
    }
    return LinearCode(F, R);
}

DistanceOracle default_oracle(const DistanceOptions& opt) {
    return [opt](const LinearCode& C) { return min_distance(C, opt); };
}

namespace {

std::pair<LinearCode, int> best_position(const LinearCode& C, const DistanceOracle& oracle,
                                         bool shortening) {
    const int n = C.n();
    std::vector<int> score(n, -1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int pos = 0; pos < n; ++pos) {
        LinearCode t = shortening ? shorten(C, pos) : puncture(C, pos);
        score[pos] = (t.k() >= 1) ? oracle(t).lower : -1;
    }
    int best = 0;
    for (int pos = 1; pos < n; ++pos)
        if (score[pos] > score[best]) best = pos;
    if (score[best] < 0) throw std::invalid_argument("no usable position");
    return {shortening ? shorten(C, best) : puncture(C, best), best};
}

}  // namespace

std::pair<LinearCode, int> best_puncture(const LinearCode& C, const DistanceOracle& oracle) {
    return best_position(C, oracle, false);
}

std::pair<LinearCode, int> best_shorten(const LinearCode& C, const DistanceOracle& oracle) {
    return best_position(C, oracle, true);
}

LinearCode construction_x(const LinearCode& parent, const LinearCode& subcode,
                          const LinearCode& aux) {
    const Field& F = parent.field();
    if (&subcode.field() != &F || &aux.field() != &F)
        throw std::invalid_argument("construction X inputs over different fields");
    if (subcode.n() != parent.n())
        throw std::invalid_argument("parent and subcode lengths differ");
    if (!parent.contains_code(subcode))
        throw std::invalid_argument("subcode is not contained in parent");
    int extra = parent.k() - subcode.k();
    if (extra != aux.k())
        throw std::invalid_argument("aux dimension must equal dim(parent) - dim(subcode)");
    if (extra == 0) return parent;  // nothing to glue

    const int n = parent.n(), na = aux.n();
    Mat R(parent.k(), n + na);
    // subcode rows padded with zeros
    for (int i = 0; i < subcode.k(); ++i)
        for (int j = 0; j < n; ++j) R.at(i, j) = subcode.rref_matrix().at(i, j);
    // coset representatives completing subcode to parent, glued to aux rows
    int out = subcode.k();
    LinearCode cur = subcode;
    for (int i = 0; i < parent.k() && out < parent.k(); ++i) {
        std::vector<fe> row(parent.rref_matrix().row(i), parent.rref_matrix().row(i) + n);
        if (cur.contains(row)) continue;
        int aux_row = out - subcode.k();
        for (int j = 0; j < n; ++j) R.at(out, j) = row[j];
        for (int j = 0; j < na; ++j) R.at(out, n + j) = aux.rref_matrix().at(aux_row, j);
        ++out;
        // grow the spanned subspace
        Mat g(out, n);
        for (int r = 0; r < out; ++r)
            for (int j = 0; j < n; ++j) g.at(r, j) = R.at(r, j);
        cur = LinearCode(F, g);
    }
    if (out != parent.k()) throw std::logic_error("failed to complete a basis of the parent");
    LinearCode X(F, R);
    if (X.k() != parent.k()) throw std::logic_error("construction X lost rank");
    return X;
}

int construction_x_bound(int d_parent, int d_subcode, int d_aux) {
    return std::min(d_subcode, d_parent + d_aux);
}

namespace {

void modify_rec(const LinearCode& C, const BklcTable& table, const ModifyOptions& opt,
                const std::string& ops, int depth, std::set<std::pair<int, int>>& seen,
                std::vector<Derivation>& out) {
    if (depth >= opt.max_depth) return;
    const int q = C.field().q();

    auto visit = [&](const LinearCode& child, char op) {
        if (child.k() < 1) return;
        auto key = std::make_pair(child.n(), child.k());
        if (seen.count(key)) return;
        int bk = table.lookup(q, child.n(), child.k());
        DistanceResult dr = opt.oracle(child);
        if (dr.lower <= bk) return;
        seen.insert(key);
        Derivation d;
        d.ops = ops + op;
        d.name = opt.root_name + d.ops;
        d.n = child.n();
        d.k = child.k();
        d.dist = dr;
        d.table_d = bk;
        out.push_back(d);
        modify_rec(child, table, opt, d.ops, depth + 1, seen, out);
    };

    visit(extend(C), 'e');
    if (C.n() >= 2) {
        visit(best_puncture(C, opt.oracle).first, 'p');
        visit(best_shorten(C, opt.oracle).first, 's');
    }
}

}  // namespace

std::vector<Derivation> recursively_modify(const LinearCode& C, const BklcTable& table,
                                           const ModifyOptions& opt_in) {
    ModifyOptions opt = opt_in;
    if (!opt.oracle) opt.oracle = default_oracle();
    std::vector<Derivation> out;
    std::set<std::pair<int, int>> seen;
    seen.insert({C.n(), C.k()});
    modify_rec(C, table, opt, "", 0, seen, out);
    return out;
}

}  // namespace ccwb
