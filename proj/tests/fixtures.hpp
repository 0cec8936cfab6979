#pragma once

// Bracket tables used across the unit tests.

#include "hexad/lie.hpp"

namespace hexad::fixtures {

inline Vec unit_vec(unsigned dim, unsigned k, unsigned order = 6) {
    Vec v = vec_zero(dim, order);
    v[k] = CycloScalar::one(order);
    return v;
}

/// Heisenberg algebra h_m, dim 2m+1: [x_i, y_i] = z with x_i = e_i,
/// y_i = e_{m+i}, z = e_{2m}.
inline LieAlgebra heisenberg(unsigned m, unsigned order = 6) {
    unsigned n = 2 * m + 1;
    LieAlgebra::BracketMap bm;
    for (unsigned i = 0; i < m; ++i) bm[{i, m + i}] = unit_vec(n, n - 1, order);
    return LieAlgebra::make("heisenberg_" + std::to_string(m), n, order, std::move(bm));
}

/// N(2,3): [x1,x2]=x4, [x1,x3]=x5, [x2,x3]=x6.
inline LieAlgebra n23(unsigned order = 6) {
    LieAlgebra::BracketMap bm;
    bm[{0, 1}] = unit_vec(6, 3, order);
    bm[{0, 2}] = unit_vec(6, 4, order);
    bm[{1, 2}] = unit_vec(6, 5, order);
    return LieAlgebra::make("N23", 6, order, std::move(bm));
}

/// N(3,2): [x1,x2]=x3, [x1,x3]=x4, [x2,x3]=x5.
inline LieAlgebra n32(unsigned order = 6) {
    LieAlgebra::BracketMap bm;
    bm[{0, 1}] = unit_vec(5, 2, order);
    bm[{0, 2}] = unit_vec(5, 3, order);
    bm[{1, 2}] = unit_vec(5, 4, order);
    return LieAlgebra::make("N32", 5, order, std::move(bm));
}

/// Dim-7 two-step algebra with brackets [x1,x2]=x5, [x1,x3]=x6,
/// [x2,x3]=x7, [x3,x4]=-x5.
inline LieAlgebra n24_mod_i5(unsigned order = 6) {
    LieAlgebra::BracketMap bm;
    bm[{0, 1}] = unit_vec(7, 4, order);
    bm[{0, 2}] = unit_vec(7, 5, order);
    bm[{1, 2}] = unit_vec(7, 6, order);
    bm[{2, 3}] = vec_scale(-CycloScalar::one(order), unit_vec(7, 4, order));
    return LieAlgebra::make("N24_mod_I5", 7, order, std::move(bm));
}

/// The 8-dimensional 5-step nilpotent algebra with
/// [x1,x2]=x3, [x1,x3]=x4, [x2,x3]=x5, [x2,x4]=x6, [x1,x5]=x6,
/// [x2,x5]=x7, [x1,x7]=x8, [x2,x6]=x8.
inline LieAlgebra example_513(unsigned order = 6) {
    LieAlgebra::BracketMap bm;
    bm[{0, 1}] = unit_vec(8, 2, order);
    bm[{0, 2}] = unit_vec(8, 3, order);
    bm[{1, 2}] = unit_vec(8, 4, order);
    bm[{1, 3}] = unit_vec(8, 5, order);
    bm[{0, 4}] = unit_vec(8, 5, order);
    bm[{1, 4}] = unit_vec(8, 6, order);
    bm[{0, 6}] = unit_vec(8, 7, order);
    bm[{1, 5}] = unit_vec(8, 7, order);
    return LieAlgebra::make("example_513", 8, order, std::move(bm));
}

/// Filiform g1 of dim 5: [x1,xi] = x_{i+1} for i = 2,3,4.
inline LieAlgebra filiform_g1(unsigned order = 6) {
    LieAlgebra::BracketMap bm;
    bm[{0, 1}] = unit_vec(5, 2, order);
    bm[{0, 2}] = unit_vec(5, 3, order);
    bm[{0, 3}] = unit_vec(5, 4, order);
    return LieAlgebra::make("filiform_g1", 5, order, std::move(bm));
}

/// Filiform g2 of dim 5: g1 plus [x2,x3] = x5.
inline LieAlgebra filiform_g2(unsigned order = 6) {
    LieAlgebra::BracketMap bm;
    bm[{0, 1}] = unit_vec(5, 2, order);
    bm[{0, 2}] = unit_vec(5, 3, order);
    bm[{0, 3}] = unit_vec(5, 4, order);
    bm[{1, 2}] = unit_vec(5, 4, order);
    return LieAlgebra::make("filiform_g2", 5, order, std::move(bm));
}

/// Model filiform of dimension n: [x1, xi] = x_{i+1} for 2 <= i <= n-1.
inline LieAlgebra model_filiform(unsigned n, unsigned order = 6) {
    LieAlgebra::BracketMap bm;
    for (unsigned i = 1; i + 1 < n; ++i) bm[{0, i}] = unit_vec(n, i + 1, order);
    return LieAlgebra::make("model_filiform_" + std::to_string(n), n, order, std::move(bm));
}

/// sl2 in the basis e1 = E12, e2 = E21, e3 = [[1,1],[-1,-1]]:
/// [e1,e2] = -e1+e2+e3, [e1,e3] = -e1-e2-e3, [e2,e3] = e1+e2-e3.
inline LieAlgebra sl2_demo(unsigned order = 6) {
    LieAlgebra::BracketMap bm;
    auto v = [&](long a, long b, long c) {
        Vec r = vec_zero(3, order);
        r[0] = CycloScalar::from_int(a, order);
        r[1] = CycloScalar::from_int(b, order);
        r[2] = CycloScalar::from_int(c, order);
        return r;
    };
    bm[{0, 1}] = v(-1, 1, 1);
    bm[{0, 2}] = v(-1, -1, -1);
    bm[{1, 2}] = v(1, 1, -1);
    return LieAlgebra::make("sl2_adnilpotent_demo", 3, order, std::move(bm));
}

}  // namespace hexad::fixtures
