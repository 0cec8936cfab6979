#include "hexad/enumerate.hpp"

#include <algorithm>

#include "hexad/error.hpp"

#ifdef HEXAD_HAVE_OPENMP
#include <omp.h>
#endif

namespace hexad {

CycloIntContext::CycloIntContext(unsigned N) : n_(N) {
    if (N == 0 || N % 2 != 0) throw Error("CycloIntContext expects an even modulus");
    const std::vector<Rat>& phi = cyclotomic_polynomial(N);
    phi_ = static_cast<unsigned>(phi.size()) - 1;
    std::vector<long> mod(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) {
        if (phi[i].get_den() != 1) throw InternalError("cyclotomic polynomial not integral");
        mod[i] = static_cast<long>(phi[i].get_num().get_si());
    }
    // roots by iterated shift-and-reduce (the modulus is monic)
    roots_.assign(N, std::vector<long>(phi_, 0));
    roots_[0][0] = 1;
    for (unsigned j = 1; j < N; ++j) {
        const std::vector<long>& prev = roots_[j - 1];
        std::vector<long>& cur = roots_[j];
        long top = prev[phi_ - 1];
        for (unsigned k = phi_ - 1; k > 0; --k) cur[k] = prev[k - 1];
        cur[0] = 0;
        if (top != 0)
            for (unsigned k = 0; k < phi_; ++k) cur[k] -= top * mod[k];
    }
    // all roots of unity of Q(zeta_N) for even N are zeta_N^e
    sorted_units_.reserve(N);
    for (unsigned e = 0; e < N; ++e) sorted_units_.emplace_back(roots_[e], e);
    std::sort(sorted_units_.begin(), sorted_units_.end());
}

std::optional<unsigned> CycloIntContext::unit_exponent(const std::vector<long>& v) const {
    auto it = std::lower_bound(sorted_units_.begin(), sorted_units_.end(), v,
                               [](const auto& a, const std::vector<long>& b) { return a.first < b; });
    if (it == sorted_units_.end() || it->first != v) return std::nullopt;
    return it->second;
}

std::vector<std::vector<long>> UnitSystem::all_forms() const {
    std::vector<std::vector<long>> out = forms;
    for (size_t i = 0; i < vars.size(); ++i) {
        std::vector<long> singleton(vars.size(), 0);
        singleton[i] = 1;
        if (std::find(out.begin(), out.end(), singleton) == out.end())
            out.push_back(std::move(singleton));
    }
    return out;
}

namespace {

unsigned long long checked_power(unsigned m, size_t vars) {
    unsigned long long total = 1;
    for (size_t i = 0; i < vars; ++i) {
        if (total > 100000000ull / std::max(1u, m)) throw GuardError("enumeration guard m^vars <= 1e8");
        total *= m;
    }
    return total;
}

}  // namespace

EnumerateResult oracle_enumerate(const UnitSystem& s, unsigned m) {
    if (m == 0) throw Error("oracle_enumerate needs m >= 1");
    if (s.vars.empty()) throw Error("unit system needs at least one variable");
    size_t nv = s.vars.size();
    unsigned long long total = checked_power(m, nv);
    unsigned N = lcm_u(m, 6);
    CycloIntContext ctx(N);
    unsigned step = N / m;
    auto forms = s.all_forms();
    for (const auto& f : forms)
        if (f.size() != nv) throw Error("form length does not match the variable count");

    EnumerateResult res;
    res.assignments_scanned = 0;

    auto check_idx = [&](unsigned long long idx, std::vector<unsigned>& exps,
                         std::vector<long>& acc) -> bool {
        unsigned long long t = idx;
        for (size_t v = nv; v-- > 0;) {
            exps[v] = static_cast<unsigned>(t % m);
            t /= m;
        }
        for (const auto& f : forms) {
            std::fill(acc.begin(), acc.end(), 0L);
            for (size_t v = 0; v < nv; ++v) {
                long c = f[v];
                if (c == 0) continue;
                const std::vector<long>& r = ctx.root(exps[v] * step);
                for (unsigned k = 0; k < ctx.degree(); ++k) acc[k] += c * r[k];
            }
            if (!ctx.unit_exponent(acc)) return false;
        }
        return true;
    };

    const unsigned long long block = 1u << 16;
    for (unsigned long long base = 0; base < total; base += block) {
        unsigned long long end = std::min(total, base + block);
        unsigned long long best = ~0ull;
#ifdef HEXAD_HAVE_OPENMP
#pragma omp parallel
        {
            std::vector<unsigned> exps(nv);
            std::vector<long> acc(ctx.degree());
            unsigned long long local = ~0ull;
#pragma omp for schedule(static) nowait
            for (long long idx = static_cast<long long>(base); idx < static_cast<long long>(end);
                 ++idx) {
                if (local == ~0ull && check_idx(static_cast<unsigned long long>(idx), exps, acc))
                    local = static_cast<unsigned long long>(idx);
            }
#pragma omp critical
            best = std::min(best, local);
        }
#else
        {
            std::vector<unsigned> exps(nv);
            std::vector<long> acc(ctx.degree());
            for (unsigned long long idx = base; idx < end; ++idx) {
                if (check_idx(idx, exps, acc)) {
                    best = idx;
                    break;
                }
            }
        }
#endif
        res.assignments_scanned = end;
        if (best != ~0ull) {
            res.sat = true;
            std::vector<unsigned> exps(nv);
            std::vector<long> acc(ctx.degree());
            check_idx(best, exps, acc);
            res.witness_exponents = std::move(exps);
            return res;
        }
    }
    return res;
}

EnumerateResult oracle_enumerate_reference(const UnitSystem& s, unsigned m) {
    if (m == 0) throw Error("oracle_enumerate needs m >= 1");
    size_t nv = s.vars.size();
    unsigned long long total = checked_power(m, nv);
    unsigned N = lcm_u(m, 6);
    auto forms = s.all_forms();

    std::vector<CycloScalar> roots;
    roots.reserve(m);
    for (unsigned e = 0; e < m; ++e) roots.push_back(CycloScalar::zeta(N, (e * (N / m)) % N));

    EnumerateResult res;
    std::vector<unsigned> exps(nv, 0);
    for (unsigned long long idx = 0; idx < total; ++idx) {
        unsigned long long t = idx;
        for (size_t v = nv; v-- > 0;) {
            exps[v] = static_cast<unsigned>(t % m);
            t /= m;
        }
        bool ok = true;
        for (const auto& f : forms) {
            CycloScalar val = CycloScalar::zero(N);
            for (size_t v = 0; v < nv; ++v)
                if (f[v] != 0)
                    val = val + CycloScalar::from_int(f[v], N) * roots[exps[v]];
            if (!val.unit_order()) {
                ok = false;
                break;
            }
        }
        res.assignments_scanned = idx + 1;
        if (ok) {
            res.sat = true;
            res.witness_exponents = exps;
            return res;
        }
    }
    return res;
}

}  // namespace hexad
