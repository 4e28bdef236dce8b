#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcvx/rational.hpp"

namespace pcvx {

/// Dense rational vector; the dimension is the entry count. Zero-dimensional
/// vectors are legal and model points of the space {0}.
using Vec = std::vector<Rat>;

/// Dense rational matrix stored as a list of equal-length rows. A matrix may
/// have zero rows but still carries a column count.
struct Mat {
    int nrows = 0;
    int ncols = 0;
    std::vector<Vec> rows;

    static Mat zero(int nrows, int ncols);
    static Mat identity(int n);
    static Mat from_rows(std::vector<Vec> rows, int ncols);

    const Rat& at(int i, int j) const { return rows[i][j]; }
    Rat& at(int i, int j) { return rows[i][j]; }
};

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& s, const Vec& v);
bool is_zero_vec(const Vec& v);
Vec zero_vec(int dim);

Vec mat_vec(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);
Mat vstack(const Mat& top, const Mat& bottom);

/// Scale a vector by a positive rational so entries become coprime integers.
/// The zero vector is returned unchanged.
Vec primitive(const Vec& v);

std::string vec_to_string(const Vec& v);

struct RrefResult {
    Mat reduced;
    std::vector<int> pivot_cols;
};

/// Reduced row echelon form with exact pivots; preserves the row space.
RrefResult rref(const Mat& m);

int rank(const Mat& m);

/// Linearly independent exact spanning set of {v : m v = 0}.
std::vector<Vec> nullspace_basis(const Mat& m);

struct AffineSolution {
    Vec particular;
    std::vector<Vec> kernel;
};

/// Solve a x = b. Returns a particular solution (free variables set to zero)
/// plus a kernel basis, or nothing when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Mat& a, const Vec& b);

}  // namespace pcvx
