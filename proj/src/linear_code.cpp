#include "ccwb/linear_code.hpp"

#include <stdexcept>

#include "ccwb/distance.hpp"

namespace ccwb {

LinearCode::LinearCode(const Field& F, Mat rows) : F_(&F), n_(rows.cols) {
    if (rows.cols <= 0) throw std::invalid_argument("code length must be positive");
    Mat r = rows;
    pivots_ = rref(r, F);
    rref_ = drop_zero_rows(r);
    k_ = rref_.rows;
    G_ = drop_zero_rows(rows);
    if (G_.rows != k_) G_ = rref_;  // dependent input rows: keep the reduced basis
    if (k_ == 0) {
        // zero code: keep a single zero row so the matrix shape stays usable
        G_ = Mat(1, n_);
        rref_ = Mat(0, n_);
    }
}

bool LinearCode::contains(const std::vector<fe>& word) const {
    if (int(word.size()) != n_) throw std::invalid_argument("word length mismatch");
    return in_row_space(rref_, pivots_, word, *F_);
}

bool LinearCode::contains_code(const LinearCode& sub) const {
    if (sub.n() != n_) return false;
    for (int i = 0; i < sub.rref_.rows; ++i) {
        std::vector<fe> row(sub.rref_.row(i), sub.rref_.row(i) + n_);
        if (!contains(row)) return false;
    }
    return true;
}

bool LinearCode::operator==(const LinearCode& o) const {
    return F_ == o.F_ && n_ == o.n_ && k_ == o.k_ && rref_ == o.rref_;
}

LinearCode cc_code(const CCParams& P, const Poly& g) {
    const Field& F = *P.F;
    if (g.F != &F) throw std::invalid_argument("generator over wrong field");
    if (g.is_zero() || g.deg() >= P.n)
        throw std::invalid_argument("generator degree must be in [0, n)");
    if (!poly_divides(g, poly_xn_minus_a(F, P.n, P.a)))
        throw std::invalid_argument("generator does not divide x^n - a");

    int k = P.n - g.deg();
    Mat rows(k, P.n);
    for (int j = 0; j <= g.deg(); ++j) rows.at(0, j) = g.at(j);
    for (int i = 1; i < k; ++i) {
        // constacyclic shift of the previous row
        rows.at(i, 0) = F.mul(P.a, rows.at(i - 1, P.n - 1));
        for (int j = 1; j < P.n; ++j) rows.at(i, j) = rows.at(i - 1, j - 1);
    }
    LinearCode C(F, rows);
    if (C.k() != k) throw std::logic_error("constacyclic generator rows are dependent");

    // closure under the shift: the wrap-around of the last row must land
    // back in the code
    std::vector<fe> shifted(P.n);
    shifted[0] = F.mul(P.a, rows.at(k - 1, P.n - 1));
    for (int j = 1; j < P.n; ++j) shifted[j] = rows.at(k - 1, j - 1);
    if (!C.contains(shifted)) throw std::logic_error("code is not closed under the shift");
    return C;
}

LinearCode dual(const LinearCode& C) {
    const Field& F = C.field();
    int n = C.n(), k = C.k();
    const Mat& R = C.rref_matrix();
    const auto& piv = C.pivots();
    std::vector<char> is_piv(n, 0);
    for (int c : piv) is_piv[c] = 1;

    Mat H(n - k, n);
    int hr = 0;
    for (int c = 0; c < n; ++c) {
        if (is_piv[c]) continue;
        H.at(hr, c) = 1;
        for (int i = 0; i < k; ++i) H.at(hr, piv[i]) = F.neg(R.at(i, c));
        ++hr;
    }
    if (k == n) H = Mat(1, n);  // dual of the full space is the zero code
    return LinearCode(F, H);
}

int hull_dimension(const LinearCode& C) {
    const Field& F = C.field();
    Mat gram = mat_mul(C.rref_matrix(), transpose(C.rref_matrix()), F);
    return C.k() - rank(gram, F);
}

PropertySet classify(const LinearCode& C, unsigned long long cap) {
    const Field& F = C.field();
    PropertySet ps;
    Mat gram = mat_mul(C.rref_matrix(), transpose(C.rref_matrix()), F);
    ps.self_orthogonal = is_zero(gram);
    ps.lcd = (rank(gram, F) == C.k());

    LinearCode D = dual(C);
    ps.dual_containing = C.contains_code(D);
    ps.self_dual = ps.self_orthogonal && 2 * C.k() == C.n();

    LinearCode Rev(F, reverse_cols(C.gen_matrix()));
    ps.reversible = (Rev == C);

    if (C.k() >= 1 && code_size(C) <= cap) {
        auto wd = weight_distribution(C, cap);
        for (size_t w = 1; w < wd.size(); ++w)
            if (wd[w]) ps.nonzero_weights.insert(int(w));
        ps.two_weight = ps.nonzero_weights.size() <= 2;
    }
    return ps;
}

}  // namespace ccwb
