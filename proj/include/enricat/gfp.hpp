// Dense matrices over the prime field F_p (p small; entries stored mod p).
// All routines are deterministic: row reduction picks pivots in index order,
// so canonical forms are reproducible bit for bit.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace enricat::gfp {

using Scalar = std::uint32_t;

struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a;  // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    Scalar& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    Scalar at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    bool operator==(const Mat& o) const = default;

    static Mat identity(int n);
    static Mat zero(int r, int c) { return Mat(r, c); }
};

Mat add(const Mat& x, const Mat& y, Scalar p);
Mat sub(const Mat& x, const Mat& y, Scalar p);
Mat neg(const Mat& x, Scalar p);
Mat mul(const Mat& x, const Mat& y, Scalar p);
Mat scale(const Mat& x, Scalar c, Scalar p);

// Horizontal / vertical concatenation.
Mat hcat(const Mat& x, const Mat& y);
Mat vcat(const Mat& x, const Mat& y);

// Block diagonal sum.
Mat dsum(const Mat& x, const Mat& y, Scalar p);

// Kronecker product, row-major convention: index (i,j) -> i*cols_y + j.
Mat kron(const Mat& x, const Mat& y, Scalar p);

bool is_zero(const Mat& x);

// Reduced row echelon form; returns pivot column indices in ascending order.
struct Rref {
    Mat m;
    std::vector<int> pivots;
};
Rref rref(const Mat& x, Scalar p);

int rank(const Mat& x, Scalar p);

// Canonical kernel basis: one column per free column of x, unit at the free
// index, pivot coordinates back-substituted. Columns ordered by free index.
Mat kernel_basis(const Mat& x, Scalar p);

// Solve x * s = y for s (all columns at once); nullopt if inconsistent.
std::optional<Mat> solve(const Mat& x, const Mat& y, Scalar p);

std::optional<Mat> inverse(const Mat& x, Scalar p);

std::string to_string(const Mat& x);

}  // namespace enricat::gfp
