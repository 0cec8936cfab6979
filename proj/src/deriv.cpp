#include "hexad/deriv.hpp"

#include "hexad/error.hpp"

namespace hexad {

namespace {

Vec basis_vec(const LieAlgebra& g, unsigned i) {
    Vec v = vec_zero(g.dim(), g.field_order());
    v[i] = CycloScalar::one(g.field_order());
    return v;
}

// The defining identities are linear in the unknown map, so constraint rows
// are read off by evaluating at elementary matrices E_{rs}: with D = E_{rs},
// D v = v_s e_r.

void append_derivation_rows(const LieAlgebra& g, unsigned i, unsigned j, std::vector<Vec>& rows) {
    unsigned n = g.dim();
    unsigned ord = g.field_order();
    Vec br = g.bracket_basis(i, j);
    std::vector<Vec> br_rj(n), br_ir(n);
    for (unsigned r = 0; r < n; ++r) {
        br_rj[r] = g.bracket_basis(r, j);
        br_ir[r] = g.bracket_basis(i, r);
    }
    // coordinate k of D[e_i,e_j] - [De_i,e_j] - [e_i,De_j]:
    //   E_{ks} contributes br_s; E_{ri} contributes -[e_r,e_j]_k;
    //   E_{rj} contributes -[e_i,e_r]_k
    for (unsigned k = 0; k < n; ++k) {
        Vec row = vec_zero(n * n, ord);
        for (unsigned s = 0; s < n; ++s)
            if (!br[s].is_zero()) row[k * n + s] = row[k * n + s] + br[s];
        for (unsigned r = 0; r < n; ++r) {
            if (!br_rj[r][k].is_zero()) row[r * n + i] = row[r * n + i] - br_rj[r][k];
            if (!br_ir[r][k].is_zero()) row[r * n + j] = row[r * n + j] - br_ir[r][k];
        }
        if (!vec_is_zero(row)) rows.push_back(std::move(row));
    }
}

}  // namespace

Subspace derivation_space(const LieAlgebra& g) {
    std::vector<Vec> rows;
    for (unsigned i = 0; i < g.dim(); ++i)
        for (unsigned j = i + 1; j < g.dim(); ++j) append_derivation_rows(g, i, j, rows);
    unsigned n2 = g.dim() * g.dim();
    if (rows.empty()) return Subspace::full(n2, g.field_order());
    return nullspace(Matrix::from_rows(rows, n2, g.field_order()));
}

Subspace prederivation_space(const LieAlgebra& g) {
    unsigned n = g.dim();
    unsigned ord = g.field_order();
    std::vector<Vec> rows;
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned k = j + 1; k < n; ++k) {
            Vec inner = g.bracket_basis(j, k);
            for (unsigned i = 0; i < n; ++i) {
                Vec outer = g.bracket(basis_vec(g, i), inner);
                std::vector<Vec> t1(n), t2(n), t3(n);
                for (unsigned r = 0; r < n; ++r) {
                    t1[r] = g.bracket(basis_vec(g, r), inner);
                    t2[r] = g.bracket(basis_vec(g, i), g.bracket_basis(r, k));
                    t3[r] = g.bracket(basis_vec(g, i), g.bracket_basis(j, r));
                }
                // coordinate c of P[e_i,[e_j,e_k]] - [Pe_i,[e_j,e_k]]
                //   - [e_i,[Pe_j,e_k]] - [e_i,[e_j,Pe_k]]
                for (unsigned c = 0; c < n; ++c) {
                    Vec row = vec_zero(n * n, ord);
                    for (unsigned s = 0; s < n; ++s)
                        if (!outer[s].is_zero()) row[c * n + s] = row[c * n + s] + outer[s];
                    for (unsigned r = 0; r < n; ++r) {
                        if (!t1[r][c].is_zero()) row[r * n + i] = row[r * n + i] - t1[r][c];
                        if (!t2[r][c].is_zero()) row[r * n + j] = row[r * n + j] - t2[r][c];
                        if (!t3[r][c].is_zero()) row[r * n + k] = row[r * n + k] - t3[r][c];
                    }
                    if (!vec_is_zero(row)) rows.push_back(std::move(row));
                }
            }
        }
    }
    unsigned n2 = n * n;
    if (rows.empty()) return Subspace::full(n2, ord);
    return nullspace(Matrix::from_rows(rows, n2, ord));
}

MemberResult is_member(const LieAlgebra& g, const Matrix& m, MapKind kind) {
    if (m.rows() != g.dim() || m.cols() != g.dim())
        throw Error("map dimensions do not match the algebra");
    unsigned n = g.dim();
    MemberResult res;
    if (kind == MapKind::derivation) {
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = i + 1; j < n; ++j) {
                Vec lhs = m.apply(g.bracket_basis(i, j));
                Vec rhs = vec_add(g.bracket(m.col(i), basis_vec(g, j)),
                                  g.bracket(basis_vec(g, i), m.col(j)));
                if (!vec_eq(lhs, rhs)) {
                    res.is_pair = true;
                    res.violation = {i + 1, j + 1, 0};
                    return res;
                }
            }
        }
        res.ok = true;
        return res;
    }
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            for (unsigned k = j + 1; k < n; ++k) {
                Vec inner = g.bracket_basis(j, k);
                Vec lhs = m.apply(g.bracket(basis_vec(g, i), inner));
                Vec rhs = g.bracket(m.col(i), inner);
                rhs = vec_add(rhs,
                              g.bracket(basis_vec(g, i), g.bracket(m.col(j), basis_vec(g, k))));
                rhs = vec_add(rhs,
                              g.bracket(basis_vec(g, i), g.bracket(basis_vec(g, j), m.col(k))));
                if (!vec_eq(lhs, rhs)) {
                    res.violation = {i + 1, j + 1, k + 1};
                    return res;
                }
            }
        }
    }
    res.ok = true;
    return res;
}

PeriodicResult periodic_order(const Matrix& m, unsigned bound) {
    PeriodicResult out;
    out.min_poly = min_poly(m);
    if (!poly_squarefree(out.min_poly)) {
        out.failure = PeriodicFailure::non_semisimple;
        return out;
    }
    for (unsigned k = 1; k <= bound; ++k) {
        if (poly_divides_cyclic(out.min_poly, k)) {
            PeriodicityCertificate cert;
            cert.order = k;
            cert.min_poly = out.min_poly;
            cert.semisimple = true;
            // x^k mod p == 1 is exactly what poly_divides_cyclic verified
            cert.divisibility_witness =
                Poly(out.min_poly.field_order(),
                     {CycloScalar::one(out.min_poly.field_order())});
            out.certificate = std::move(cert);
            return out;
        }
    }
    out.failure = PeriodicFailure::bound_exhausted;
    return out;
}

InverseCheckResult inverse_derivation_check(const LieAlgebra& g, const Matrix& m) {
    InverseCheckResult r;
    auto inv = inverse(m);
    if (!inv) return r;
    r.invertible = true;
    r.inverse_is_derivation = is_member(g, *inv, MapKind::derivation).ok;
    r.inverse_matrix = std::move(inv);
    return r;
}

std::pair<LieAlgebra, Matrix> extend_order(const LieAlgebra& g, const Matrix& d, unsigned k) {
    if (k == 0) throw Error("extend_order requires k >= 1");
    if (!d.is_diagonal()) throw StructureError("extend_order requires a diagonal map");
    unsigned n = g.dim();
    for (unsigned i = 0; i < n; ++i) {
        auto u = d.at(i, i).unit_order();
        if (!u || 6 % *u != 0)
            throw StructureError("extend_order requires sixth-root diagonal entries");
    }
    PeriodicResult pr = periodic_order(d);
    if (!pr.periodic() || pr.order() != 6)
        throw StructureError("extend_order requires a periodic derivation of order exactly 6");
    if (!is_member(g, d, MapKind::derivation).ok)
        throw StructureError("extend_order input is not a derivation");

    unsigned new_order = lcm_u(g.field_order(), 6 * k);
    LieAlgebra lifted = g.embedded(new_order);
    Matrix dl = d.embedded(new_order);
    // rescale so the first diagonal entry becomes 1, then multiply by a
    // primitive 6k-th root
    CycloScalar scale = dl.at(0, 0).inverse() * CycloScalar::zeta(new_order, new_order / (6 * k));
    Matrix out = dl.scaled(scale);

    PeriodicResult check = periodic_order(out);
    if (!check.periodic() || check.order() != 6 * k)
        throw InternalError("extend_order produced order " + std::to_string(check.order()) +
                            ", expected " + std::to_string(6 * k));
    if (!is_member(lifted, out, MapKind::derivation).ok)
        throw InternalError("extend_order result is not a derivation");
    return {std::move(lifted), std::move(out)};
}

}  // namespace hexad
