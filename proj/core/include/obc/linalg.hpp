#pragma once

#include <vector>

#include "obc/scalar.hpp"

namespace obc {

// Dense exact matrices, row-major. Small sizes only (Hom spaces at desk scale).
using Vec = std::vector<Fq>;
using Mat = std::vector<Vec>;

Mat mat_zero(int rows, int cols, long p);
Mat mat_identity(int n, long p);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_pow(const Mat& a, int e, long p);
Mat mat_transpose(const Mat& a);

// Gauss-Jordan to reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& m);

int mat_rank(Mat m);  // by value: destroys a copy

// Basis of { x : m x = 0 }, deterministic order (free columns ascending).
std::vector<Vec> kernel(const Mat& m, long p);

// One solution of A x = b if consistent (returns false otherwise).
bool solve(const Mat& a, const Vec& b, Vec& x, long p);

// Columns of x expressed in the columns of s: returns r with s * r = x.
// Throws if some column is outside the span.
Mat express_in(const Mat& s, const Mat& x, long p);

}  // namespace obc
