#include "hexad/engel.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "hexad/error.hpp"

namespace hexad {

namespace {

Vec basis_vec(const LieAlgebra& g, unsigned i) {
    Vec v = vec_zero(g.dim(), g.field_order());
    v[i] = CycloScalar::one(g.field_order());
    return v;
}

Vec random_rational_vec(const LieAlgebra& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    Vec v = vec_zero(g.dim(), g.field_order());
    for (unsigned i = 0; i < g.dim(); ++i) {
        Rat r(num(rng), den(rng));
        r.canonicalize();
        v[i] = CycloScalar::from_rational(r, g.field_order());
    }
    return v;
}

}  // namespace

bool ad_power_zero(const LieAlgebra& g, const Vec& x, unsigned m) {
    Matrix a = g.ad(x);
    Matrix p = Matrix::identity(g.dim(), g.field_order());
    for (unsigned s = 0; s < m; ++s) {
        p = a * p;
        if (p.is_zero()) return true;  // powers of a nilpotent stay zero
    }
    return p.is_zero();
}

bool pre_engel_witness(const LieAlgebra& g, const Matrix& basis, unsigned m) {
    if (basis.rows() != g.dim() || basis.cols() != g.dim())
        throw Error("basis matrix dimensions do not match the algebra");
    if (!inverse(basis)) throw StructureError("pre-Engel witness basis is singular");
    for (unsigned j = 0; j < g.dim(); ++j)
        if (!ad_power_zero(g, basis.col(j), m)) return false;
    return true;
}

EngelDecision engel_identity(const LieAlgebra& g, unsigned m, unsigned long seed) {
    if (m == 0 || m > 5) throw GuardError("engel_identity guard: 1 <= m <= 5");
    unsigned n = g.dim();
    EngelDecision out;
    if (n == 0) {
        out.holds = true;
        return out;
    }

    std::vector<Matrix> ads;
    ads.reserve(n);
    for (unsigned i = 0; i < n; ++i) ads.push_back(g.ad_basis(i));

    // Symmetrized operator per index multiset, memoized over sub-multisets:
    //   S({}) = I,  S(M) = sum_{i in supp M} ad(e_i) * S(M - i).
    // S(M) equals the sum over all distinct arrangements of the multiset.
    std::map<std::vector<unsigned>, Matrix> memo;
    memo[{}] = Matrix::identity(n, g.field_order());
    std::function<const Matrix&(const std::vector<unsigned>&)> sym =
        [&](const std::vector<unsigned>& mult) -> const Matrix& {
        auto it = memo.find(mult);
        if (it != memo.end()) return it->second;
        Matrix acc(n, n, g.field_order());
        for (size_t p = 0; p < mult.size(); ++p) {
            if (p > 0 && mult[p] == mult[p - 1]) continue;  // distinct first letters
            std::vector<unsigned> rest = mult;
            rest.erase(rest.begin() + static_cast<long>(p));
            acc = acc + ads[mult[p]] * sym(rest);
        }
        return memo.emplace(mult, std::move(acc)).first->second;
    };

    // enumerate multisets of size m as non-decreasing index tuples
    std::vector<unsigned> mult(m, 0);
    bool identity_holds = true;
    while (true) {
        if (!sym(mult).is_zero()) {
            identity_holds = false;
            break;
        }
        int pos = static_cast<int>(m) - 1;
        while (pos >= 0 && mult[static_cast<size_t>(pos)] == n - 1) --pos;
        if (pos < 0) break;
        unsigned v = mult[static_cast<size_t>(pos)] + 1;
        for (size_t q = static_cast<size_t>(pos); q < m; ++q) mult[q] = v;
    }
    out.holds = identity_holds;
    if (identity_holds) return out;

    // reconstruct an explicit violator: basis, then e_i + e_j, e_i - e_j,
    // then seeded random rational samples
    std::vector<Vec> candidates;
    for (unsigned i = 0; i < n; ++i) candidates.push_back(basis_vec(g, i));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            candidates.push_back(vec_add(basis_vec(g, i), basis_vec(g, j)));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            candidates.push_back(vec_sub(basis_vec(g, i), basis_vec(g, j)));
    for (const Vec& c : candidates) {
        if (!ad_power_zero(g, c, m)) {
            out.violator = c;
            return out;
        }
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Vec c = random_rational_vec(g, rng);
        if (!ad_power_zero(g, c, m)) {
            out.violator = c;
            return out;
        }
    }
    throw InternalError("polarized identity fails but no violator was found");
}

EngelReport em_span_bound(const LieAlgebra& g, unsigned m, std::vector<Vec> candidates,
                          unsigned long seed) {
    EngelReport rep;
    rep.m = m;
    unsigned n = g.dim();
    if (candidates.empty()) {
        for (unsigned i = 0; i < n; ++i) candidates.push_back(basis_vec(g, i));
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = i + 1; j < n; ++j) {
                candidates.push_back(vec_add(basis_vec(g, i), basis_vec(g, j)));
                candidates.push_back(vec_sub(basis_vec(g, i), basis_vec(g, j)));
            }
        }
    }
    for (const Vec& c : candidates)
        if (ad_power_zero(g, c, m)) rep.witness_set.push_back(c);
    rep.em_span_lower_bound = Subspace::span(rep.witness_set, n, g.field_order()).dim();

    if (m >= 1 && m <= 5) {
        EngelDecision dec = engel_identity(g, m, seed);
        rep.identity_holds = dec.holds;
        rep.witness_violator = dec.violator;
    }
    return rep;
}

std::map<std::array<unsigned, 3>, std::array<unsigned, 2>> pair_choice_from_list(
    unsigned dim, const std::vector<std::array<unsigned, 2>>& pairs) {
    std::map<std::array<unsigned, 3>, std::array<unsigned, 2>> out;
    for (unsigned i = 1; i <= dim; ++i) {
        for (unsigned j = i + 1; j <= dim; ++j) {
            for (unsigned k = j + 1; k <= dim; ++k) {
                bool found = false;
                for (const auto& pr : pairs) {
                    unsigned a = std::min(pr[0], pr[1]), b = std::max(pr[0], pr[1]);
                    bool inside = (a == i || a == j || a == k) && (b == i || b == j || b == k);
                    if (inside) {
                        out[{i, j, k}] = {a, b};
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw StructureError("pair list covers no pair of triple (" +
                                         std::to_string(i) + "," + std::to_string(j) + "," +
                                         std::to_string(k) + ")");
            }
        }
    }
    return out;
}

PropertyFResult property_f_falsify(const LieAlgebra& g, const PropertyFWitness& w) {
    PropertyFResult res;
    unsigned n = g.dim();
    if (w.basis.rows() != n || w.basis.cols() != n)
        throw Error("witness basis dimensions do not match the algebra");
    if (!inverse(w.basis)) throw StructureError("property-F witness basis is singular");

    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i + 1; j <= n; ++j) {
            for (unsigned k = j + 1; k <= n; ++k) {
                auto it = w.pair_choice.find({i, j, k});
                if (it == w.pair_choice.end())
                    throw StructureError("pair choice misses triple (" + std::to_string(i) + "," +
                                         std::to_string(j) + "," + std::to_string(k) + ")");
                auto [l, mm] = it->second;
                bool in_triple = (l == i || l == j || l == k) && (mm == i || mm == j || mm == k);
                if (!in_triple || l == mm) {
                    res.failing_triple = {{i, j, k}};
                    res.reason = "chosen pair is not inside the triple";
                    return res;
                }
                Vec bl = w.basis.col(l - 1), bm = w.basis.col(mm - 1);
                if (!vec_is_zero(g.bracket(bl, g.bracket(bl, bm))) ||
                    !vec_is_zero(g.bracket(bm, g.bracket(bm, bl)))) {
                    res.failing_triple = {{i, j, k}};
                    res.reason = "double brackets of the chosen pair (" + std::to_string(l) + "," +
                                 std::to_string(mm) + ") do not vanish";
                    return res;
                }
            }
        }
    }
    res.falsified = true;
    return res;
}

}  // namespace hexad
