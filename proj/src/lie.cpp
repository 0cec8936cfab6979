#include "hexad/lie.hpp"

#include <algorithm>

#include "hexad/error.hpp"

namespace hexad {

LieAlgebra LieAlgebra::make(std::string name, unsigned dim, unsigned field_order,
                            BracketMap brackets) {
    LieAlgebra g;
    g.name_ = std::move(name);
    g.dim_ = dim;
    g.order_ = field_order;
    for (auto& [key, vec] : brackets) {
        auto [i, j] = key;
        if (i >= j || j >= dim)
            throw StructureError("bracket index (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") out of range or not i < j");
        if (vec.size() != dim) throw StructureError("bracket coefficient vector length mismatch");
        Vec v;
        v.reserve(dim);
        for (const auto& c : vec) v.push_back(c.embedded(field_order));
        if (!vec_is_zero(v)) g.brackets_[key] = std::move(v);
    }
    // Exhaustive Jacobi validation on basis triples, via sparse lookups into
    // the bracket table.
    auto lookup = [&g](unsigned a, unsigned b) -> std::pair<int, const Vec*> {
        if (a == b) return {0, nullptr};
        int sign = 1;
        if (a > b) {
            std::swap(a, b);
            sign = -1;
        }
        auto it = g.brackets_.find({a, b});
        if (it == g.brackets_.end()) return {0, nullptr};
        return {sign, &it->second};
    };
    Vec acc = vec_zero(dim, field_order);
    auto add_term = [&](unsigned a, unsigned b, unsigned c) {
        auto [s1, v] = lookup(a, b);
        if (!v) return;
        for (unsigned t = 0; t < dim; ++t) {
            if ((*v)[t].is_zero()) continue;
            auto [s2, w] = lookup(t, c);
            if (!w) continue;
            CycloScalar coef = (s1 * s2 == 1) ? (*v)[t] : -(*v)[t];
            for (unsigned u = 0; u < dim; ++u)
                if (!(*w)[u].is_zero()) acc[u] = acc[u] + coef * (*w)[u];
        }
    };
    for (unsigned i = 0; i < dim; ++i) {
        for (unsigned j = i + 1; j < dim; ++j) {
            for (unsigned k = j + 1; k < dim; ++k) {
                for (auto& c : acc) c = CycloScalar::zero(field_order);
                add_term(i, j, k);
                add_term(j, k, i);
                add_term(k, i, j);
                if (!vec_is_zero(acc))
                    throw StructureError("Jacobi identity fails on basis triple (" +
                                         std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                         "," + std::to_string(k + 1) + ") of '" + g.name_ + "'");
            }
        }
    }
    return g;
}

LieAlgebra LieAlgebra::abelian(std::string name, unsigned dim, unsigned field_order) {
    return make(std::move(name), dim, field_order, {});
}

Vec LieAlgebra::bracket_basis(unsigned i, unsigned j) const {
    if (i == j) return vec_zero(dim_, order_);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = brackets_.find({i, j});
    if (it == brackets_.end()) return vec_zero(dim_, order_);
    return flip ? vec_scale(-CycloScalar::one(order_), it->second) : it->second;
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw Error("bracket operand length mismatch");
    Vec r = vec_zero(dim_, order_);
    for (const auto& [key, out] : brackets_) {
        auto [i, j] = key;
        CycloScalar c = u[i] * v[j] - u[j] * v[i];
        if (c.is_zero()) continue;
        for (unsigned k = 0; k < dim_; ++k)
            if (!out[k].is_zero()) r[k] = r[k] + c * out[k];
    }
    return r;
}

Matrix LieAlgebra::ad(const Vec& x) const {
    Matrix m(dim_, dim_, order_);
    for (unsigned j = 0; j < dim_; ++j) {
        Vec ej = vec_zero(dim_, order_);
        ej[j] = CycloScalar::one(order_);
        Vec col = bracket(x, ej);
        for (unsigned i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Matrix LieAlgebra::ad_basis(unsigned i) const {
    Vec ei = vec_zero(dim_, order_);
    ei[i] = CycloScalar::one(order_);
    return ad(ei);
}

LieAlgebra LieAlgebra::embedded(unsigned new_order) const {
    if (new_order == order_) return *this;
    BracketMap bm;
    for (const auto& [key, vec] : brackets_) {
        Vec v;
        v.reserve(dim_);
        for (const auto& c : vec) v.push_back(c.embedded(new_order));
        bm[key] = std::move(v);
    }
    return make(name_, dim_, new_order, std::move(bm));
}

LieAlgebra LieAlgebra::renamed(std::string new_name) const {
    LieAlgebra g = *this;
    g.name_ = std::move(new_name);
    return g;
}

// ---------------------------------------------------------------------------

Subspace commutator_subalgebra(const LieAlgebra& g) {
    std::vector<Vec> gens;
    for (const auto& [key, vec] : g.brackets()) gens.push_back(vec);
    return Subspace::span(gens, g.dim(), g.field_order());
}

SeriesReport series(const LieAlgebra& g) {
    SeriesReport rep;
    unsigned n = g.dim();
    unsigned ord = g.field_order();
    rep.terms.push_back(Subspace::full(n, ord));
    while (true) {
        const Subspace& prev = rep.terms.back();
        if (prev.dim() == 0) break;
        std::vector<Vec> gens;
        for (unsigned i = 0; i < n; ++i) {
            Vec ei = vec_zero(n, ord);
            ei[i] = CycloScalar::one(ord);
            for (const Vec& b : prev.basis()) gens.push_back(g.bracket(ei, b));
        }
        Subspace next = Subspace::span(gens, n, ord);
        if (next.dim() == prev.dim()) {
            // stabilized at nonzero: not nilpotent
            rep.nilpotency_class = std::nullopt;
            break;
        }
        rep.terms.push_back(next);
        if (next.dim() == 0) {
            rep.nilpotency_class = static_cast<unsigned>(rep.terms.size()) - 1;
            break;
        }
    }

    // center = {v : [v, e_i] = 0 for all i}: stack the maps v -> [v, e_i]
    std::vector<Vec> rows;
    for (unsigned i = 0; i < n; ++i) {
        // matrix of v -> [v, e_i] has columns [e_j, e_i]
        for (unsigned r = 0; r < n; ++r) {
            Vec row = vec_zero(n, ord);
            for (unsigned j = 0; j < n; ++j) row[j] = g.bracket_basis(j, i)[r];
            rows.push_back(std::move(row));
        }
    }
    rep.center = nullspace(Matrix::from_rows(rows, n, ord));
    rep.generator_count = n - commutator_subalgebra(g).dim();
    return rep;
}

bool is_ideal(const LieAlgebra& g, const Subspace& ideal, std::pair<unsigned, unsigned>* violation) {
    for (unsigned i = 0; i < g.dim(); ++i) {
        Vec ei = vec_zero(g.dim(), g.field_order());
        ei[i] = CycloScalar::one(g.field_order());
        for (unsigned b = 0; b < ideal.dim(); ++b) {
            if (!ideal.contains(g.bracket(ei, ideal.basis()[b]))) {
                if (violation) *violation = {i, b};
                return false;
            }
        }
    }
    return true;
}

std::pair<LieAlgebra, Matrix> quotient(const LieAlgebra& g, const Subspace& ideal,
                                       const std::string& name) {
    if (ideal.ambient_dim() != g.dim()) throw Error("ideal ambient dimension mismatch");
    std::pair<unsigned, unsigned> viol;
    if (!is_ideal(g, ideal, &viol))
        throw StructureError("not an ideal: [e_" + std::to_string(viol.first + 1) +
                             ", b_" + std::to_string(viol.second + 1) + "] escapes the subspace");
    unsigned n = g.dim();
    unsigned ord = g.field_order();
    std::vector<unsigned> keep = ideal.non_pivot_coordinates();
    unsigned q = static_cast<unsigned>(keep.size());

    // projection: reduce modulo the ideal, then read off the kept coordinates
    Matrix proj(q, n, ord);
    for (unsigned j = 0; j < n; ++j) {
        Vec ej = vec_zero(n, ord);
        ej[j] = CycloScalar::one(ord);
        Vec r = ideal.reduce(ej);
        for (unsigned a = 0; a < q; ++a) proj.at(a, j) = r[keep[a]];
    }

    LieAlgebra::BracketMap bm;
    for (unsigned a = 0; a < q; ++a) {
        for (unsigned b = a + 1; b < q; ++b) {
            Vec br = g.bracket_basis(keep[a], keep[b]);
            Vec img = proj.apply(br);
            if (!vec_is_zero(img)) bm[{a, b}] = img;
        }
    }
    return {LieAlgebra::make(name, q, ord, std::move(bm)), proj};
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, const std::string& name) {
    if (a.field_order() != b.field_order())
        throw FieldOrderError("direct sum requires equal field orders");
    unsigned n = a.dim() + b.dim();
    LieAlgebra::BracketMap bm;
    for (const auto& [key, vec] : a.brackets()) {
        Vec v = vec;
        v.resize(n, CycloScalar::zero(a.field_order()));
        bm[key] = std::move(v);
    }
    for (const auto& [key, vec] : b.brackets()) {
        Vec v = vec_zero(n, b.field_order());
        for (unsigned k = 0; k < b.dim(); ++k) v[a.dim() + k] = vec[k];
        bm[{key.first + a.dim(), key.second + a.dim()}] = std::move(v);
    }
    return LieAlgebra::make(name, n, a.field_order(), std::move(bm));
}

}  // namespace hexad
