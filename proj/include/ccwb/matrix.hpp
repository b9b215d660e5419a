#ifndef CCWB_MATRIX_HPP
#define CCWB_MATRIX_HPP

#include <vector>

#include "ccwb/field.hpp"

namespace ccwb {

// Row-major matrix of field-element codes.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<fe> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

    fe& at(int r, int c) { return a[size_t(r) * cols + c]; }
    fe at(int r, int c) const { return a[size_t(r) * cols + c]; }
    const fe* row(int r) const { return &a[size_t(r) * cols]; }
    fe* row(int r) { return &a[size_t(r) * cols]; }

    bool operator==(const Mat&) const = default;
};

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(Mat& m, const Field& F);

int rank(Mat m, const Field& F);

Mat mat_mul(const Mat& A, const Mat& B, const Field& F);
Mat transpose(const Mat& A);
Mat reverse_cols(const Mat& A);
bool is_zero(const Mat& A);

// Drops all-zero rows (call after rref).
Mat drop_zero_rows(const Mat& A);

// Is v in the row space of R (R in rref with the given pivots)?
bool in_row_space(const Mat& R, const std::vector<int>& pivots, const std::vector<fe>& v,
                  const Field& F);

}  // namespace ccwb

#endif
