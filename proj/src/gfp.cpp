#include "enricat/gfp.hpp"

#include <sstream>
#include <stdexcept>

namespace enricat::gfp {

namespace {

Scalar inv_mod(Scalar x, Scalar p) {
    // p is a small prime, Fermat.
    Scalar r = 1, b = x % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat add(const Mat& x, const Mat& y, Scalar p) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("gfp::add shape");
    Mat r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = (x.a[i] + y.a[i]) % p;
    return r;
}

Mat sub(const Mat& x, const Mat& y, Scalar p) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("gfp::sub shape");
    Mat r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = (x.a[i] + p - y.a[i]) % p;
    return r;
}

Mat neg(const Mat& x, Scalar p) {
    Mat r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = (p - x.a[i]) % p;
    return r;
}

Mat mul(const Mat& x, const Mat& y, Scalar p) {
    if (x.cols != y.rows) throw std::invalid_argument("gfp::mul shape");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            Scalar v = x.at(i, k);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % p;
        }
    return r;
}

Mat scale(const Mat& x, Scalar c, Scalar p) {
    Mat r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] * (c % p) % p;
    return r;
}

Mat hcat(const Mat& x, const Mat& y) {
    if (x.rows != y.rows) throw std::invalid_argument("gfp::hcat shape");
    Mat r(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

Mat vcat(const Mat& x, const Mat& y) {
    if (x.cols != y.cols) throw std::invalid_argument("gfp::vcat shape");
    Mat r(x.rows + y.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
    return r;
}

Mat dsum(const Mat& x, const Mat& y, Scalar) {
    Mat r(x.rows + y.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, x.cols + j) = y.at(i, j);
    return r;
}

Mat kron(const Mat& x, const Mat& y, Scalar p) {
    Mat r(x.rows * y.rows, x.cols * y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) {
            Scalar v = x.at(i, j);
            if (!v) continue;
            for (int k = 0; k < y.rows; ++k)
                for (int l = 0; l < y.cols; ++l)
                    r.at(i * y.rows + k, j * y.cols + l) = v * y.at(k, l) % p;
        }
    return r;
}

bool is_zero(const Mat& x) {
    for (Scalar v : x.a)
        if (v) return false;
    return true;
}

Rref rref(const Mat& x, Scalar p) {
    Rref out{x, {}};
    Mat& m = out.m;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Scalar inv = inv_mod(m.at(r, c), p);
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv % p;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            Scalar f = m.at(i, c);
            if (!f) continue;
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = (m.at(i, j) + (p - f) * m.at(r, j)) % p;
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

int rank(const Mat& x, Scalar p) { return static_cast<int>(rref(x, p).pivots.size()); }

Mat kernel_basis(const Mat& x, Scalar p) {
    Rref rr = rref(x, p);
    std::vector<int> free_cols;
    {
        std::size_t pi = 0;
        for (int c = 0; c < x.cols; ++c) {
            if (pi < rr.pivots.size() && rr.pivots[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    Mat k(x.cols, static_cast<int>(free_cols.size()));
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        int fc = free_cols[fi];
        k.at(fc, static_cast<int>(fi)) = 1;
        for (std::size_t r = 0; r < rr.pivots.size(); ++r)
            k.at(rr.pivots[r], static_cast<int>(fi)) = (p - rr.m.at(static_cast<int>(r), fc)) % p;
    }
    return k;
}

std::optional<Mat> solve(const Mat& x, const Mat& y, Scalar p) {
    if (x.rows != y.rows) throw std::invalid_argument("gfp::solve shape");
    Rref rr = rref(hcat(x, y), p);
    // Inconsistent iff some pivot lands in the y block.
    for (int c : rr.pivots)
        if (c >= x.cols) return std::nullopt;
    Mat s(x.cols, y.cols);
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
        for (int j = 0; j < y.cols; ++j)
            s.at(rr.pivots[r], j) = rr.m.at(static_cast<int>(r), x.cols + j);
    return s;
}

std::optional<Mat> inverse(const Mat& x, Scalar p) {
    if (x.rows != x.cols) return std::nullopt;
    auto s = solve(x, Mat::identity(x.rows), p);
    if (!s) return std::nullopt;
    if (mul(x, *s, p) != Mat::identity(x.rows)) return std::nullopt;
    return s;
}

std::string to_string(const Mat& x) {
    std::ostringstream os;
    os << x.rows << "x" << x.cols << "[";
    for (int i = 0; i < x.rows; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < x.cols; ++j) {
            if (j) os << " ";
            os << x.at(i, j);
        }
    }
    os << "]";
    return os.str();
}

}  // namespace enricat::gfp
