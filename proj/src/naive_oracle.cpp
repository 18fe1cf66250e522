#include "enricat/naive_oracle.hpp"

namespace enricat::naive {

int rank(std::vector<std::vector<long>> rows, int p) {
    int rk = 0;
    std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
        std::size_t piv = row;
        while (piv < rows.size() && rows[piv][col] % p == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[row], rows[piv]);
        for (std::size_t r = row + 1; r < rows.size(); ++r) {
            // eliminate without normalizing: r <- pivval*r - rval*pivrow
            long rv = ((rows[r][col] % p) + p) % p;
            if (rv == 0) continue;
            long pv = ((rows[row][col] % p) + p) % p;
            for (std::size_t c = 0; c < ncols; ++c)
                rows[r][c] = (((pv * rows[r][c] - rv * rows[row][c]) % p) + p) % p;
        }
        ++row;
        ++rk;
    }
    return rk;
}

namespace {

std::vector<std::vector<long>> to_rows(const Mat& m) {
    std::vector<std::vector<long>> rows(static_cast<std::size_t>(m.rows),
                                        std::vector<long>(static_cast<std::size_t>(m.cols), 0));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m.at(r, c);
    return rows;
}

}  // namespace

int homology_dim(const BaseValue& v, int degree) {
    if (v.base.kind != BaseKind::Fdch) throw BaseError("naive::homology_dim: Fdch only");
    int p = v.base.p;
    int n = v.dim_at(degree);
    if (n == 0) return 0;
    int rank_out = 0;
    if (degree - 1 >= v.base.deg_lo) {
        const Mat& d = v.diff_at(degree);
        if (d.rows > 0 && d.cols > 0) rank_out = rank(to_rows(d), p);
    }
    int rank_in = 0;
    if (degree + 1 <= v.base.deg_hi) {
        const Mat& d = v.diff_at(degree + 1);
        if (d.rows > 0 && d.cols > 0) rank_in = rank(to_rows(d), p);
    }
    return n - rank_out - rank_in;
}

std::vector<int> tensor_dims(const BaseValue& a, const BaseValue& b) {
    std::vector<int> dims(static_cast<std::size_t>(a.base.width()), 0);
    for (int i = a.base.deg_lo; i <= a.base.deg_hi; ++i)
        for (int j = b.base.deg_lo; j <= b.base.deg_hi; ++j) {
            int cnt = a.dim_at(i) * b.dim_at(j);
            if (cnt == 0) continue;
            int n = i + j;
            if (n >= a.base.deg_lo && n <= a.base.deg_hi)
                dims[static_cast<std::size_t>(n - a.base.deg_lo)] += cnt;
        }
    return dims;
}

}  // namespace enricat::naive
