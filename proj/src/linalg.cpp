#include "pcvx/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "pcvx/errors.hpp"

namespace pcvx {

Mat Mat::zero(int nrows, int ncols) {
    Mat m;
    m.nrows = nrows;
    m.ncols = ncols;
    m.rows.assign(nrows, Vec(ncols, Rat(0)));
    return m;
}

Mat Mat::identity(int n) {
    Mat m = zero(n, n);
    for (int i = 0; i < n; ++i) m.rows[i][i] = 1;
    return m;
}

Mat Mat::from_rows(std::vector<Vec> rows, int ncols) {
    Mat m;
    m.nrows = static_cast<int>(rows.size());
    m.ncols = ncols;
    for (const Vec& r : rows) {
        if (static_cast<int>(r.size()) != ncols) throw DomainError("ragged matrix rows");
    }
    m.rows = std::move(rows);
    return m;
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DomainError("add: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DomainError("sub: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Rat& s, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

Vec zero_vec(int dim) { return Vec(dim, Rat(0)); }

Vec mat_vec(const Mat& m, const Vec& v) {
    if (static_cast<int>(v.size()) != m.ncols) throw DomainError("mat_vec: dimension mismatch");
    Vec r(m.nrows, Rat(0));
    for (int i = 0; i < m.nrows; ++i) r[i] = dot(m.rows[i], v);
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.ncols != b.nrows) throw DomainError("mat_mul: dimension mismatch");
    Mat r = Mat::zero(a.nrows, b.ncols);
    for (int i = 0; i < a.nrows; ++i) {
        for (int k = 0; k < a.ncols; ++k) {
            if (a.rows[i][k] == 0) continue;
            for (int j = 0; j < b.ncols; ++j) r.rows[i][j] += a.rows[i][k] * b.rows[k][j];
        }
    }
    return r;
}

Mat transpose(const Mat& m) {
    Mat r = Mat::zero(m.ncols, m.nrows);
    for (int i = 0; i < m.nrows; ++i) {
        for (int j = 0; j < m.ncols; ++j) r.rows[j][i] = m.rows[i][j];
    }
    return r;
}

Mat vstack(const Mat& top, const Mat& bottom) {
    if (top.ncols != bottom.ncols) throw DomainError("vstack: column mismatch");
    Mat r = top;
    r.nrows += bottom.nrows;
    r.rows.insert(r.rows.end(), bottom.rows.begin(), bottom.rows.end());
    return r;
}

Vec primitive(const Vec& v) {
    mpz_class den_lcm(1);
    for (const Rat& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_class num_gcd(0);
    for (const Rat& x : v) {
        mpz_class n = x.get_num() * (den_lcm / x.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    if (num_gcd == 0) return v;  // zero vector
    Rat factor(den_lcm, num_gcd);
    factor.canonicalize();
    return scale(factor, v);
}

std::string vec_to_string(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << rat_to_string(v[i]);
    }
    os << ")";
    return os.str();
}

RrefResult rref(const Mat& m) {
    RrefResult out;
    out.reduced = m;
    Mat& a = out.reduced;
    int pivot_row = 0;
    for (int col = 0; col < a.ncols && pivot_row < a.nrows; ++col) {
        int sel = -1;
        for (int r = pivot_row; r < a.nrows; ++r) {
            if (a.rows[r][col] != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(a.rows[pivot_row], a.rows[sel]);
        const Rat inv = Rat(1) / a.rows[pivot_row][col];
        for (int j = col; j < a.ncols; ++j) a.rows[pivot_row][j] *= inv;
        for (int r = 0; r < a.nrows; ++r) {
            if (r == pivot_row || a.rows[r][col] == 0) continue;
            const Rat f = a.rows[r][col];
            for (int j = col; j < a.ncols; ++j) a.rows[r][j] -= f * a.rows[pivot_row][j];
        }
        out.pivot_cols.push_back(col);
        ++pivot_row;
    }
    return out;
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

std::vector<Vec> nullspace_basis(const Mat& m) {
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.ncols, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (int free_col = 0; free_col < m.ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v = zero_vec(m.ncols);
        v[free_col] = 1;
        for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
            v[r.pivot_cols[k]] = -r.reduced.rows[k][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<AffineSolution> solve_affine(const Mat& a, const Vec& b) {
    if (static_cast<int>(b.size()) != a.nrows) throw DomainError("solve_affine: dimension mismatch");
    Mat aug = a;
    aug.ncols += 1;
    for (int i = 0; i < a.nrows; ++i) aug.rows[i].push_back(b[i]);

    const RrefResult r = rref(aug);
    for (int c : r.pivot_cols) {
        if (c == a.ncols) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
    }

    AffineSolution sol;
    sol.particular = zero_vec(a.ncols);
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
        sol.particular[r.pivot_cols[k]] = r.reduced.rows[k][a.ncols];
    }
    sol.kernel = nullspace_basis(a);
    return sol;
}

}  // namespace pcvx
