#include "pcvx/multifunction.hpp"

#include <utility>

#include "pcvx/errors.hpp"

namespace pcvx {

namespace {

CoordSet range_coords(int from, int to) {
    CoordSet c;
    for (int i = from; i < to; ++i) c.push_back(i);
    return c;
}

// Rebuild rows over a target space given, per source column, the target
// column it maps to. Used for block permutations and embeddings.
Mat spread_columns(const Mat& m, int target_dim, const std::vector<int>& col_map) {
    Mat out = Mat::zero(m.nrows, target_dim);
    for (int i = 0; i < m.nrows; ++i) {
        for (int j = 0; j < m.ncols; ++j) out.rows[i][col_map[j]] = m.rows[i][j];
    }
    return out;
}

HRep embed_hrep(const HRep& p, int target_dim, const std::vector<int>& col_map) {
    return make_hrep(target_dim, spread_columns(p.eq_A, target_dim, col_map), p.eq_b,
                     spread_columns(p.ineq_C, target_dim, col_map), p.ineq_d);
}

}  // namespace

MultiFn make_multifn(int nx, int ny, HRep graph) {
    if (nx < 0 || ny < 0) throw DomainError("multifn: negative block dimension");
    if (graph.dim != nx + ny) throw DomainError("multifn: graph dimension must be nx + ny");
    return MultiFn{nx, ny, std::move(graph)};
}

HRep domain(const MultiFn& f) { return project(f.graph, range_coords(0, f.nx)); }

HRep range(const MultiFn& f) { return project(f.graph, range_coords(f.nx, f.nx + f.ny)); }

MultiFn inverse(const MultiFn& f) {
    std::vector<int> col_map(f.nx + f.ny);
    for (int j = 0; j < f.nx; ++j) col_map[j] = f.ny + j;
    for (int j = 0; j < f.ny; ++j) col_map[f.nx + j] = j;
    return make_multifn(f.ny, f.nx, embed_hrep(f.graph, f.nx + f.ny, col_map));
}

HRep value(const MultiFn& f, const Vec& x) {
    if (static_cast<int>(x.size()) != f.nx) throw DomainError("value: point dimension mismatch");
    HRep out = hrep_universe(f.ny);
    out.eq_A = Mat::zero(f.graph.eq_A.nrows, f.ny);
    out.eq_b = Vec(f.graph.eq_A.nrows);
    for (int i = 0; i < f.graph.eq_A.nrows; ++i) {
        Rat shift(0);
        for (int j = 0; j < f.nx; ++j) shift += f.graph.eq_A.rows[i][j] * x[j];
        for (int j = 0; j < f.ny; ++j) out.eq_A.rows[i][j] = f.graph.eq_A.rows[i][f.nx + j];
        out.eq_b[i] = f.graph.eq_b[i] - shift;
    }
    out.ineq_C = Mat::zero(f.graph.ineq_C.nrows, f.ny);
    out.ineq_d = Vec(f.graph.ineq_C.nrows);
    for (int i = 0; i < f.graph.ineq_C.nrows; ++i) {
        Rat shift(0);
        for (int j = 0; j < f.nx; ++j) shift += f.graph.ineq_C.rows[i][j] * x[j];
        for (int j = 0; j < f.ny; ++j) out.ineq_C.rows[i][j] = f.graph.ineq_C.rows[i][f.nx + j];
        out.ineq_d[i] = f.graph.ineq_d[i] - shift;
    }
    return out;
}

HRep image(const MultiFn& f, const HRep& c) {
    if (c.dim != f.nx) throw DomainError("image: set dimension mismatch");
    const HRep lifted = intersect(f.graph, product(c, hrep_universe(f.ny)));
    return project(lifted, range_coords(f.nx, f.nx + f.ny));
}

HRep preimage(const MultiFn& f, const HRep& d) {
    if (d.dim != f.ny) throw DomainError("preimage: set dimension mismatch");
    return image(inverse(f), d);
}

MultiFn compose(const MultiFn& g, const MultiFn& f) {
    if (f.ny != g.nx) throw DomainError("compose: inner dimensions disagree");
    const int nx = f.nx, nz = g.ny, nmid = f.ny;
    const int total = nx + nz + nmid;  // (x, z, y)-space, middle block last

    std::vector<int> f_map(nx + nmid);
    for (int j = 0; j < nx; ++j) f_map[j] = j;
    for (int j = 0; j < nmid; ++j) f_map[nx + j] = nx + nz + j;
    std::vector<int> g_map(nmid + nz);
    for (int j = 0; j < nmid; ++j) g_map[j] = nx + nz + j;
    for (int j = 0; j < nz; ++j) g_map[nmid + j] = nx + j;

    const HRep omega = intersect(embed_hrep(f.graph, total, f_map), embed_hrep(g.graph, total, g_map));
    return make_multifn(nx, nz, project(omega, range_coords(0, nx + nz)));
}

MultiFn sum(const MultiFn& f1, const MultiFn& f2) {
    if (f1.nx != f2.nx || f1.ny != f2.ny) throw DomainError("sum: block dimensions disagree");
    const int nx = f1.nx, ny = f1.ny;
    const int total = nx + 2 * ny;  // (x, y1, y2)-space

    std::vector<int> m1(nx + ny), m2(nx + ny);
    for (int j = 0; j < nx; ++j) m1[j] = m2[j] = j;
    for (int j = 0; j < ny; ++j) {
        m1[nx + j] = nx + j;
        m2[nx + j] = nx + ny + j;
    }
    const HRep omega = intersect(embed_hrep(f1.graph, total, m1), embed_hrep(f2.graph, total, m2));

    // A(x, y1, y2) = (x, y1 + y2)
    Mat a = Mat::zero(nx + ny, total);
    for (int j = 0; j < nx; ++j) a.rows[j][j] = 1;
    for (int j = 0; j < ny; ++j) {
        a.rows[nx + j][nx + j] = 1;
        a.rows[nx + j][nx + ny + j] = 1;
    }
    return make_multifn(nx, ny, linear_image(a, omega));
}

}  // namespace pcvx
