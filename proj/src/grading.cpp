#include "hexad/grading.hpp"

#include <algorithm>

#include "hexad/error.hpp"

namespace hexad {

namespace {

Vec basis_vec(const LieAlgebra& g, unsigned i) {
    Vec v = vec_zero(g.dim(), g.field_order());
    v[i] = CycloScalar::one(g.field_order());
    return v;
}

/// zeta_6^k as an element of Q(zeta_n), when it exists there. The sixth
/// roots 1 and -1 live in every field; the others need 3 | n and are
/// expressed through omega: zeta_6 = -w^2, zeta_6^5 = -w.
std::optional<CycloScalar> sixth_root_in(unsigned n, unsigned k) {
    k %= 6;
    if (k == 0) return CycloScalar::one(n);
    if (k == 3) return -CycloScalar::one(n);
    if (n % 3 != 0) return std::nullopt;
    CycloScalar w = CycloScalar::omega(n);
    switch (k) {
        case 1: return -(w * w);
        case 2: return w;
        case 4: return w * w;
        case 5: return -w;
    }
    return std::nullopt;
}

/// Part index of a scalar that is a sixth root of unity, if any.
std::optional<unsigned> sixth_root_index(const CycloScalar& s) {
    for (unsigned k = 0; k < 6; ++k) {
        auto root = sixth_root_in(s.field_order(), k);
        if (root && s == *root) return k;
    }
    return std::nullopt;
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    std::vector<Vec> gens;
    for (const Vec& u : a.basis())
        for (const Vec& v : b.basis()) gens.push_back(g.bracket(u, v));
    return Subspace::span(gens, g.dim(), g.field_order());
}

bool commutator_is_central(const LieAlgebra& g) {
    Subspace comm = commutator_subalgebra(g);
    for (unsigned i = 0; i < g.dim(); ++i)
        for (const Vec& c : comm.basis())
            if (!vec_is_zero(g.bracket(basis_vec(g, i), c))) return false;
    return true;
}

/// Deterministic complement of `inner` within `outer`: extend the basis of
/// `inner` greedily by the RREF basis vectors of `outer`, in order.
Subspace complement_in(const Subspace& inner, const Subspace& outer) {
    Subspace span = inner;
    std::vector<Vec> added;
    for (const Vec& v : outer.basis()) {
        if (span.contains(v)) continue;
        added.push_back(v);
        std::vector<Vec> gens = span.basis();
        gens.push_back(v);
        span = Subspace::span(gens, outer.ambient_dim(), outer.field_order());
    }
    return Subspace::span(added, outer.ambient_dim(), outer.field_order());
}

}  // namespace

unsigned HexGrading::total_dim() const {
    unsigned d = 0;
    for (const auto& p : parts_) d += p.dim();
    return d;
}

VerifyReport verify_hexagonal(const LieAlgebra& g, const HexGrading& h) {
    VerifyReport rep;
    unsigned n = g.dim();
    unsigned ord = g.field_order();

    Subspace sum(n, ord);
    unsigned dim_sum = 0;
    for (unsigned k = 0; k < 6; ++k) {
        if (h.part(k).ambient_dim() != n) {
            rep.fail("part z6^" + std::to_string(k) + " has wrong ambient dimension");
            return rep;
        }
        sum = sum.sum(h.part(k));
        dim_sum += h.part(k).dim();
    }
    if (dim_sum != n || sum.dim() != n)
        rep.fail("parts do not sum directly to the whole algebra");

    // closure (1): [g_u, g_v] lies in the part labeled u+v, and vanishes
    // when u+v is not a sixth root
    for (unsigned a = 0; a < 6; ++a) {
        for (unsigned b = a; b < 6; ++b) {
            Subspace br = bracket_span(g, h.part(a), h.part(b));
            if (br.dim() == 0) continue;
            auto target = sixth_root_index(HexGrading::label(a) + HexGrading::label(b));
            if (!target)
                rep.fail("bracket of parts z6^" + std::to_string(a) + ", z6^" +
                         std::to_string(b) + " must vanish (label sum is not a sixth root)");
            else if (!h.part(*target).contains(br))
                rep.fail("bracket of parts z6^" + std::to_string(a) + ", z6^" +
                         std::to_string(b) + " escapes part z6^" + std::to_string(*target));
        }
    }

    // centrality (2): odd-power parts bracket to zero with everything
    for (unsigned k = 1; k < 6; k += 2) {
        for (const Vec& v : h.part(k).basis()) {
            for (unsigned i = 0; i < n; ++i) {
                if (!vec_is_zero(g.bracket(v, basis_vec(g, i)))) {
                    rep.fail("central part z6^" + std::to_string(k) +
                             " brackets nontrivially with e_" + std::to_string(i + 1));
                    break;
                }
            }
        }
    }

    // consequence: [g, [g,g]] = 0
    if (rep.ok && !commutator_is_central(g))
        rep.fail("[g,[g,g]] != 0 although the grading conditions hold");
    return rep;
}

VerifyReport verify_triangular(const LieAlgebra& g, const TriGrading& t) {
    VerifyReport rep;
    unsigned n = g.dim();
    unsigned ord = g.field_order();

    for (size_t i = 0; i < t.parts.size(); ++i) {
        if (t.parts[i].first.is_zero()) rep.fail("triangular label 0 is not allowed");
        for (size_t j = i + 1; j < t.parts.size(); ++j)
            if (t.parts[i].first == t.parts[j].first) rep.fail("duplicate triangular label");
    }
    if (!rep.ok) return rep;

    Subspace sum(n, ord);
    unsigned dim_sum = 0;
    for (const auto& [lab, part] : t.parts) {
        sum = sum.sum(part);
        dim_sum += part.dim();
    }
    if (dim_sum != n || sum.dim() != n)
        rep.fail("parts do not sum directly to the whole algebra");

    CycloScalar w3 = sixth_root_in(ord, 2).value_or(CycloScalar::zero(ord));
    bool have_omega = ord % 3 == 0;

    for (size_t a = 0; a < t.parts.size(); ++a) {
        for (size_t b = a; b < t.parts.size(); ++b) {
            Subspace br = bracket_span(g, t.parts[a].second, t.parts[b].second);
            if (br.dim() == 0) continue;
            const CycloScalar& la = t.parts[a].first;
            const CycloScalar& lb = t.parts[b].first;
            // nonzero bracket forces the ratio to be a primitive third root
            bool ratio_ok = false;
            if (a != b && have_omega) {
                CycloScalar r = lb / la;
                ratio_ok = (r == w3) || (r == w3 * w3);
            }
            if (!ratio_ok) {
                rep.fail("nonzero bracket between labels " + la.str() + " and " + lb.str() +
                         " whose ratio is not a primitive third root");
                continue;
            }
            // additive closure into the part labeled la + lb
            CycloScalar s = la + lb;
            const Subspace* target = nullptr;
            for (const auto& [lab, part] : t.parts)
                if (lab == s) target = &part;
            if (!target)
                rep.fail("bracket of labels " + la.str() + ", " + lb.str() +
                         " lands outside every part (sum label " + s.str() + ")");
            else if (!target->contains(br))
                rep.fail("bracket of labels " + la.str() + ", " + lb.str() +
                         " escapes the part labeled " + s.str());
        }
    }
    return rep;
}

GradingDerivation grading_to_derivation(const LieAlgebra& g, const HexGrading& h) {
    VerifyReport vr = verify_hexagonal(g, h);
    if (!vr.ok) throw StructureError("invalid hexagonal grading: " + vr.violations.front());
    unsigned n = g.dim();
    unsigned ord = g.field_order();

    std::vector<Vec> cols;
    Vec diag;
    for (unsigned k = 0; k < 6; ++k) {
        if (h.part(k).dim() == 0) continue;
        auto lab = sixth_root_in(ord, k);
        if (!lab)
            throw FieldOrderError("grading label z6^" + std::to_string(k) +
                                  " is not representable in Q(zeta_" + std::to_string(ord) +
                                  "); raise the field order");
        for (const Vec& v : h.part(k).basis()) {
            cols.push_back(v);
            diag.push_back(*lab);
        }
    }
    GradingDerivation out;
    if (cols.empty()) {
        out.matrix = Matrix(0, 0, ord);
        out.order = 1;
        out.degenerate = true;
        return out;
    }
    Matrix b = Matrix::from_columns(cols, n, ord);
    auto binv = inverse(b);
    if (!binv) throw InternalError("grading basis change is singular");
    out.matrix = b * Matrix::diagonal(diag) * *binv;

    MemberResult mr = is_member(g, out.matrix, MapKind::derivation);
    if (!mr.ok) throw InternalError("block-scalar map of a valid grading is not a derivation");
    PeriodicResult pr = periodic_order(out.matrix, 6);
    if (!pr.periodic()) throw InternalError("block-scalar map of a valid grading is not periodic");
    out.order = pr.order();
    // Gradings concentrated on few parts legitimately give order < 6; they
    // are flagged as degenerate rather than rejected.
    out.degenerate = out.order != 6;
    return out;
}

std::pair<HexGrading, ConversionTrace> triangular_to_hexagonal(const LieAlgebra& g,
                                                               const TriGrading& t) {
    VerifyReport vr = verify_triangular(g, t);
    if (!vr.ok) throw StructureError("invalid triangular grading: " + vr.violations.front());
    unsigned n = g.dim();
    unsigned ord = g.field_order();

    Subspace comm = commutator_subalgebra(g);
    ConversionTrace trace;
    for (const auto& [lab, part] : t.parts) {
        trace.labels.push_back(lab);
        Subspace w = part.intersect(comm);
        Subspace v = complement_in(w, part);
        if (!v.is_direct_with(w) || v.sum(w) != part)
            throw InternalError("complement construction failed for label " + lab.str());
        trace.w_parts.push_back(std::move(w));
        trace.v_parts.push_back(std::move(v));
    }

    size_t m = t.parts.size();
    std::vector<CycloScalar> cubes;
    cubes.reserve(m);
    for (const auto& [lab, part] : t.parts) cubes.push_back(lab.pow(3));

    std::vector<bool> w_claimed(m, false);
    HexGrading hex(n, ord);
    auto add_to_part = [&](unsigned k, const Subspace& s) {
        hex.set_part(k, hex.part(k).sum(s));
    };

    std::vector<bool> v_done(m, false);
    for (size_t rep_idx = 0; rep_idx < m; ++rep_idx) {
        if (v_done[rep_idx] || trace.v_parts[rep_idx].dim() == 0) continue;
        const CycloScalar& rep_label = t.parts[rep_idx].first;
        const CycloScalar rep_cube = cubes[rep_idx];
        trace.class_representatives.push_back(rep_label);

        Subspace block(n, ord);
        for (size_t i = 0; i < m; ++i) {
            if (trace.v_parts[i].dim() > 0 && cubes[i] == rep_cube) {
                v_done[i] = true;
                CycloScalar ratio = t.parts[i].first / rep_label;
                auto k = sixth_root_index(ratio);
                if (!k || HexGrading::is_central_label(*k))
                    throw InternalError("class member ratio " + ratio.str() +
                                        " is not a third root of unity");
                add_to_part(*k, trace.v_parts[i]);
                block = block.sum(trace.v_parts[i]);
            }
        }
        for (size_t j = 0; j < m; ++j) {
            if (trace.w_parts[j].dim() > 0 && cubes[j] == -rep_cube) {
                w_claimed[j] = true;
                CycloScalar ratio = t.parts[j].first / rep_label;
                auto k = sixth_root_index(ratio);
                if (!k || !HexGrading::is_central_label(*k))
                    throw InternalError("commutator part ratio " + ratio.str() +
                                        " is not a central sixth root");
                add_to_part(*k, trace.w_parts[j]);
                block = block.sum(trace.w_parts[j]);
            }
        }
        trace.blocks.push_back(std::move(block));
    }

    // labels carrying only commutator parts at an unclaimed cube cannot occur
    // in a valid triangular grading
    for (size_t j = 0; j < m; ++j)
        if (trace.w_parts[j].dim() > 0 && !w_claimed[j])
            throw InternalError("commutator part at label " + t.parts[j].first.str() +
                                " belongs to no class");

    // blocks are ideals and sum directly to g
    unsigned total = 0;
    for (const Subspace& blk : trace.blocks) {
        total += blk.dim();
        std::pair<unsigned, unsigned> viol;
        if (!is_ideal(g, blk, &viol)) throw InternalError("conversion block is not an ideal");
    }
    Subspace all(n, ord);
    for (const Subspace& blk : trace.blocks) all = all.sum(blk);
    if (total != n || all.dim() != n) throw InternalError("conversion blocks do not sum directly");

    VerifyReport check = verify_hexagonal(g, hex);
    if (!check.ok)
        throw InternalError("assembled hexagonal grading fails verification: " +
                            check.violations.front());
    return {std::move(hex), std::move(trace)};
}

HexGrading derivation_to_grading(const LieAlgebra& g, const Matrix& d) {
    MemberResult mr = is_member(g, d, MapKind::derivation);
    if (!mr.ok) throw StructureError("map is not a derivation");
    PeriodicResult pr = periodic_order(d);
    if (!pr.periodic())
        throw StructureError(pr.failure == PeriodicFailure::non_semisimple
                                 ? "map is not periodic: minimal polynomial is not squarefree"
                                 : "map is not periodic within the scan bound");

    unsigned n = g.dim();
    unsigned ord = g.field_order();
    unsigned N = lcm_u(2, ord);

    // canonical enumeration of the roots of unity of Q(zeta_ord)
    CycloScalar rho = (ord % 2 == 0) ? CycloScalar::zeta(ord, 1)
                                     : -CycloScalar::zeta(ord, (ord + 1) / 2);
    TriGrading tri;
    unsigned found = 0;
    CycloScalar cand = CycloScalar::one(ord);
    for (unsigned j = 0; j < N; ++j) {
        if (pr.min_poly.eval(cand).is_zero()) {
            Matrix shifted = d - Matrix::identity(n, ord).scaled(cand);
            Subspace eig = nullspace(shifted);
            if (eig.dim() > 0) {
                tri.parts.emplace_back(cand, std::move(eig));
                found += tri.parts.back().second.dim();
            }
        }
        cand = cand * rho;
    }
    if (found != n)
        throw StructureError(
            "eigenvalues lie outside Q(zeta_" + std::to_string(ord) +
            "); raise the field order so the minimal polynomial splits");

    auto [hex, trace] = triangular_to_hexagonal(g, tri);
    return hex;
}

}  // namespace hexad
