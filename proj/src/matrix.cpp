#include "ccwb/matrix.hpp"

namespace ccwb {

std::vector<int> rref(Mat& m, const Field& F) {
    std::vector<int> pivots;
    int prow = 0;
    for (int col = 0; col < m.cols && prow < m.rows; ++col) {
        int sel = -1;
        for (int r = prow; r < m.rows; ++r) {
            if (m.at(r, col) != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != prow) {
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(prow, c));
        }
        fe il = F.inv(m.at(prow, col));
        if (il != 1) {
            for (int c = col; c < m.cols; ++c) m.at(prow, c) = F.mul(m.at(prow, c), il);
        }
        for (int r = 0; r < m.rows; ++r) {
            if (r == prow) continue;
            fe f = m.at(r, col);
            if (!f) continue;
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) = F.sub(m.at(r, c), F.mul(f, m.at(prow, c)));
        }
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

int rank(Mat m, const Field& F) { return int(rref(m, F).size()); }

Mat mat_mul(const Mat& A, const Mat& B, const Field& F) {
    Mat r(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int k = 0; k < A.cols; ++k) {
            fe v = A.at(i, k);
            if (!v) continue;
            for (int j = 0; j < B.cols; ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(v, B.at(k, j)));
        }
    }
    return r;
}

Mat transpose(const Mat& A) {
    Mat r(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) r.at(j, i) = A.at(i, j);
    return r;
}

Mat reverse_cols(const Mat& A) {
    Mat r(A.rows, A.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) r.at(i, A.cols - 1 - j) = A.at(i, j);
    return r;
}

bool is_zero(const Mat& A) {
    for (fe v : A.a)
        if (v) return false;
    return true;
}

Mat drop_zero_rows(const Mat& A) {
    Mat r(0, A.cols);
    for (int i = 0; i < A.rows; ++i) {
        bool z = true;
        for (int j = 0; j < A.cols; ++j)
            if (A.at(i, j)) z = false;
        if (!z) {
            r.a.insert(r.a.end(), A.row(i), A.row(i) + A.cols);
            ++r.rows;
        }
    }
    return r;
}

bool in_row_space(const Mat& R, const std::vector<int>& pivots, const std::vector<fe>& v,
                  const Field& F) {
    std::vector<fe> w = v;
    for (size_t i = 0; i < pivots.size(); ++i) {
        fe f = w[pivots[i]];
        if (!f) continue;
        for (int c = 0; c < R.cols; ++c) w[c] = F.sub(w[c], F.mul(f, R.at(int(i), c)));
    }
    for (fe x : w)
        if (x) return false;
    return true;
}

}  // namespace ccwb
