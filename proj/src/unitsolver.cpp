#include "hexad/unitsolver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "hexad/error.hpp"

namespace hexad {

namespace {

// Allowed values of a ratio of two roots of unity with a prescribed rational
// real part: rational cosines of rational angles are 0, +-1/2, +-1 only, and
// each value pins the ratio to at most two twelfth roots. Returned in
// ascending order of the zeta_12 exponent.
std::optional<std::vector<unsigned>> ratio_exponents_for_cosine(const Rat& q) {
    if (q == 1) return std::vector<unsigned>{0};
    if (q == Rat(1, 2)) return std::vector<unsigned>{2, 10};
    if (q == 0) return std::vector<unsigned>{3, 9};
    if (q == Rat(-1, 2)) return std::vector<unsigned>{4, 8};
    if (q == -1) return std::vector<unsigned>{6};
    return std::nullopt;
}

std::vector<CycloScalar> exponents_to_scalars(const std::vector<unsigned>& exps) {
    std::vector<CycloScalar> out;
    out.reserve(exps.size());
    for (unsigned e : exps) out.push_back(CycloScalar::zeta(12, e));
    return out;
}

struct PairConstraint {
    unsigned i = 0, j = 0;             // i < j; ratio r = v_j / v_i
    std::vector<unsigned> exponents;   // allowed zeta_12 exponents of r
};

struct EdgeAnalysis {
    std::vector<CertStep> steps;
    std::vector<PairConstraint> pairs;  // one per constrained pair, intersected
    bool contradiction = false;
};

// TRIANGLE bounds and two-variable ratio constraints; deterministic order.
EdgeAnalysis analyze(const UnitSystem& s, const std::vector<std::vector<long>>& forms) {
    EdgeAnalysis out;
    size_t nv = s.vars.size();

    for (const auto& f : forms) {
        long upper = 0, maxc = 0;
        for (long c : f) {
            upper += std::abs(c);
            maxc = std::max(maxc, std::abs(c));
        }
        long lower = 2 * maxc - upper;
        if (upper < 1 || lower > 1) {
            CertStep st;
            st.kind = CertStep::Kind::TRIANGLE;
            st.form = f;
            st.lower_bound = lower;
            st.upper_bound = upper;
            out.steps.push_back(std::move(st));
            out.contradiction = true;
            return out;
        }
    }

    std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> merged;
    for (const auto& f : forms) {
        std::vector<unsigned> support;
        for (unsigned v = 0; v < nv; ++v)
            if (f[v] != 0) support.push_back(v);
        if (support.size() != 2) continue;
        unsigned i = support[0], j = support[1];
        long a = f[i], b = f[j];
        // |a v_i + b v_j| = 1 with |v_i| = |v_j| = 1 forces
        // Re(v_j / v_i) = (1 - a^2 - b^2) / (2ab)
        Rat q = Rat(1 - a * a - b * b) / Rat(2 * a * b);
        auto allowed = ratio_exponents_for_cosine(q);

        CertStep st;
        st.kind = CertStep::Kind::EQUILATERAL;
        st.form = f;
        st.var_i = i;
        st.var_j = j;
        st.cosine = q;
        if (allowed) st.allowed_ratios = exponents_to_scalars(*allowed);
        out.steps.push_back(st);
        if (!allowed) {
            out.contradiction = true;
            return out;
        }

        auto key = std::make_pair(i, j);
        auto it = merged.find(key);
        if (it == merged.end()) {
            merged.emplace(key, *allowed);
        } else {
            std::vector<unsigned> inter;
            for (unsigned e : it->second)
                if (std::find(allowed->begin(), allowed->end(), e) != allowed->end())
                    inter.push_back(e);
            it->second = std::move(inter);
            if (it->second.empty()) {
                CertStep conflict;
                conflict.kind = CertStep::Kind::EQUILATERAL;
                conflict.var_i = i;
                conflict.var_j = j;
                conflict.cosine = q;
                out.steps.push_back(std::move(conflict));
                out.contradiction = true;
                return out;
            }
        }
    }
    for (auto& [key, exps] : merged) out.pairs.push_back({key.first, key.second, exps});
    return out;
}

CycloScalar evaluate_form(const std::vector<long>& f, const std::vector<unsigned>& exps) {
    CycloScalar val = CycloScalar::zero(12);
    for (size_t v = 0; v < f.size(); ++v)
        if (f[v] != 0)
            val = val + CycloScalar::from_int(f[v], 12) * CycloScalar::zeta(12, exps[v]);
    return val;
}

}  // namespace

std::string CertStep::describe(const UnitSystem& s) const {
    std::ostringstream os;
    auto form_str = [&](const std::vector<long>& f) {
        std::string r;
        for (size_t v = 0; v < f.size(); ++v) {
            if (f[v] == 0) continue;
            if (!r.empty()) r += f[v] > 0 ? " + " : " - ";
            else if (f[v] < 0) r += "-";
            long a = std::abs(f[v]);
            if (a != 1) r += std::to_string(a) + "*";
            r += v < s.vars.size() ? s.vars[v] : "?";
        }
        return r.empty() ? std::string("0") : r;
    };
    switch (kind) {
        case Kind::TRIANGLE:
            os << "TRIANGLE: |" << form_str(form) << "| is bounded in [" << lower_bound << ", "
               << upper_bound << "], never 1";
            break;
        case Kind::EQUILATERAL:
            if (form.empty()) {
                os << "EQUILATERAL: ratio constraints on (" << s.vars[var_i] << ", "
                   << s.vars[var_j] << ") intersect to the empty set";
            } else {
                os << "EQUILATERAL: |" << form_str(form) << "| = 1 forces Re(" << s.vars[var_j]
                   << "/" << s.vars[var_i] << ") = " << rat_str(cosine);
                if (allowed_ratios.empty())
                    os << ", impossible for roots of unity";
                else {
                    os << ", ratio in {";
                    for (size_t k = 0; k < allowed_ratios.size(); ++k)
                        os << (k ? ", " : "") << allowed_ratios[k].str();
                    os << "}";
                }
            }
            break;
        case Kind::EXHAUST:
            os << "EXHAUST: " << branches << " branches closed, each violating a form";
            break;
    }
    return os.str();
}

UnitVerdict solve_units(const UnitSystem& s) {
    if (s.vars.empty()) throw Error("unit system needs at least one variable");
    if (s.vars.size() > 8) throw GuardError("solve_units guard: <= 8 variables");
    if (s.forms.size() > 40) throw GuardError("solve_units guard: <= 40 forms");
    auto forms = s.all_forms();
    for (const auto& f : forms)
        if (f.size() != s.vars.size()) throw Error("form length does not match variable count");
    size_t nv = s.vars.size();

    UnitVerdict verdict;
    EdgeAnalysis ea = analyze(s, forms);
    verdict.certificate = ea.steps;
    if (ea.contradiction) {
        verdict.status = UnitStatus::UNSAT;
        return verdict;
    }

    // spanning tree over the constrained pairs, rooted at the first variable
    std::vector<int> parent(nv, -1);
    std::vector<const PairConstraint*> parent_edge(nv, nullptr);
    std::vector<unsigned> bfs_order;
    std::vector<bool> seen(nv, false);
    seen[0] = true;
    bfs_order.push_back(0);
    for (size_t head = 0; head < bfs_order.size(); ++head) {
        unsigned u = bfs_order[head];
        for (const PairConstraint& pc : ea.pairs) {
            unsigned other = pc.i == u ? pc.j : (pc.j == u ? pc.i : u);
            if (other == u || seen[other]) continue;
            seen[other] = true;
            parent[other] = static_cast<int>(u);
            parent_edge[other] = &pc;
            bfs_order.push_back(other);
        }
    }
    bool connected = bfs_order.size() == nv;
    std::vector<unsigned> free_vars;
    for (unsigned v = 0; v < nv; ++v)
        if (!seen[v]) free_vars.push_back(v);

    // depth-first enumeration: connected variables take values along the
    // tree ratios, free variables range over the sixth roots
    std::vector<unsigned> exps(nv, 0);
    std::vector<std::pair<std::vector<unsigned>, std::vector<long>>> refutations;
    unsigned long branches = 0;
    bool found = false;

    std::vector<unsigned> order = bfs_order;
    for (unsigned v : free_vars) order.push_back(v);

    std::function<void(size_t)> dfs = [&](size_t pos) {
        if (found) return;
        if (pos == order.size()) {
            ++branches;
            for (const auto& f : forms) {
                if (!evaluate_form(f, exps).unit_order()) {
                    refutations.emplace_back(exps, f);
                    return;
                }
            }
            found = true;
            return;
        }
        unsigned v = order[pos];
        if (pos == 0) {
            exps[v] = 0;  // normalization: scaling by a unit preserves the system
            dfs(pos + 1);
            return;
        }
        if (parent_edge[v]) {
            const PairConstraint& pc = *parent_edge[v];
            for (unsigned re : pc.exponents) {
                // r = v_j / v_i
                if (pc.j == v)
                    exps[v] = (exps[pc.i] + re) % 12;
                else
                    exps[v] = (exps[pc.j] + 12 - re) % 12;
                dfs(pos + 1);
                if (found) return;
            }
            return;
        }
        for (unsigned e = 0; e < 12; e += 2) {  // sixth roots for free variables
            exps[v] = e;
            dfs(pos + 1);
            if (found) return;
        }
    };
    dfs(0);

    verdict.search_bound_used = free_vars.empty() ? 12 : 6;
    if (found) {
        verdict.status = UnitStatus::SAT;
        std::vector<CycloScalar> w;
        w.reserve(nv);
        for (unsigned v = 0; v < nv; ++v) w.push_back(CycloScalar::zeta(12, exps[v]));
        verdict.witness = std::move(w);
        return verdict;
    }
    if (connected) {
        verdict.status = UnitStatus::UNSAT;
        CertStep st;
        st.kind = CertStep::Kind::EXHAUST;
        st.branches = branches;
        st.branch_refutations = std::move(refutations);
        verdict.certificate.push_back(std::move(st));
        return verdict;
    }
    verdict.status = UnitStatus::UNKNOWN;
    std::ostringstream note;
    note << "variables {";
    for (size_t k = 0; k < free_vars.size(); ++k)
        note << (k ? ", " : "") << s.vars[free_vars[k]];
    note << "} are not connected to " << s.vars[0]
         << " through two-variable forms; the finite search is incomplete";
    verdict.note = note.str();
    return verdict;
}

bool replay_certificate(const UnitSystem& s, const UnitVerdict& v) {
    if (v.status == UnitStatus::SAT) {
        if (!v.witness || v.witness->size() != s.vars.size()) return false;
        for (const auto& f : s.all_forms()) {
            CycloScalar val = CycloScalar::zero(12);
            for (size_t k = 0; k < f.size(); ++k)
                if (f[k] != 0) val = val + CycloScalar::from_int(f[k], 12) * (*v.witness)[k];
            if (!val.unit_order()) return false;
        }
        return true;
    }
    if (v.status != UnitStatus::UNSAT) return false;

    auto forms = s.all_forms();
    bool closes = false;
    for (const CertStep& st : v.certificate) {
        switch (st.kind) {
            case CertStep::Kind::TRIANGLE: {
                if (std::find(forms.begin(), forms.end(), st.form) == forms.end()) return false;
                long upper = 0, maxc = 0;
                for (long c : st.form) {
                    upper += std::abs(c);
                    maxc = std::max(maxc, std::abs(c));
                }
                if (upper != st.upper_bound || 2 * maxc - upper != st.lower_bound) return false;
                if (!(st.upper_bound < 1 || st.lower_bound > 1)) return false;
                closes = true;
                break;
            }
            case CertStep::Kind::EQUILATERAL: {
                if (st.form.empty()) {
                    // conflict step: the merged ratio constraints of the pair
                    // must really intersect to nothing
                    std::optional<std::vector<unsigned>> inter;
                    for (const auto& f : forms) {
                        std::vector<unsigned> support;
                        for (unsigned k = 0; k < f.size(); ++k)
                            if (f[k] != 0) support.push_back(k);
                        if (support.size() != 2 || support[0] != st.var_i ||
                            support[1] != st.var_j)
                            continue;
                        long a = f[support[0]], b = f[support[1]];
                        Rat q = Rat(1 - a * a - b * b) / Rat(2 * a * b);
                        auto allowed = ratio_exponents_for_cosine(q);
                        // an impossible cosine is the empty ratio constraint
                        if (!allowed) allowed.emplace();
                        if (!inter) {
                            inter = *allowed;
                        } else {
                            std::vector<unsigned> next;
                            for (unsigned e : *inter)
                                if (std::find(allowed->begin(), allowed->end(), e) !=
                                    allowed->end())
                                    next.push_back(e);
                            inter = std::move(next);
                        }
                    }
                    if (!inter || !inter->empty()) return false;
                    closes = true;
                    break;
                }
                if (std::find(forms.begin(), forms.end(), st.form) == forms.end()) return false;
                long a = st.form[st.var_i], b = st.form[st.var_j];
                if (a == 0 || b == 0) return false;
                Rat q = Rat(1 - a * a - b * b) / Rat(2 * a * b);
                if (q != st.cosine) return false;
                auto allowed = ratio_exponents_for_cosine(q);
                if (!allowed) {
                    if (!st.allowed_ratios.empty()) return false;
                    closes = true;
                } else if (exponents_to_scalars(*allowed) != st.allowed_ratios) {
                    return false;
                }
                break;
            }
            case CertStep::Kind::EXHAUST: {
                if (st.branches == 0 || st.branch_refutations.size() != st.branches) return false;
                for (const auto& [exps, form] : st.branch_refutations) {
                    if (exps.size() != s.vars.size()) return false;
                    if (std::find(forms.begin(), forms.end(), form) == forms.end()) return false;
                    if (evaluate_form(form, exps).unit_order()) return false;
                }
                // the case split must cover all branch choices: re-derive the
                // ratio constraints and count the spanning-tree combinations
                EdgeAnalysis ea = analyze(s, forms);
                if (ea.contradiction) return false;  // search would not have run
                size_t nv = s.vars.size();
                std::vector<bool> seen(nv, false);
                std::vector<unsigned long> edge_choices;
                std::vector<unsigned> frontier{0};
                seen[0] = true;
                for (size_t head = 0; head < frontier.size(); ++head) {
                    unsigned u = frontier[head];
                    for (const PairConstraint& pc : ea.pairs) {
                        unsigned other = pc.i == u ? pc.j : (pc.j == u ? pc.i : u);
                        if (other == u || seen[other]) continue;
                        seen[other] = true;
                        edge_choices.push_back(pc.exponents.size());
                        frontier.push_back(other);
                    }
                }
                if (frontier.size() != nv) return false;  // EXHAUST needs connectivity
                unsigned long expected = 1;
                for (unsigned long c : edge_choices) expected *= c;
                if (st.branches != expected) return false;
                closes = true;
                break;
            }
        }
    }
    return closes;
}

bool eigenform_family_check(const LieAlgebra& g, const UnitSystem& family,
                            const std::vector<std::vector<long>>& positions, MapKind kind,
                            unsigned samples, unsigned long seed) {
    if (positions.size() != g.dim())
        throw Error("positions must assign one form per basis index");
    size_t nv = family.vars.size();
    if (nv > 3) throw GuardError("eigenform families use at most 3 variables");
    for (const auto& p : positions)
        if (p.size() != nv) throw Error("position form length mismatch");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    for (unsigned t = 0; t < samples; ++t) {
        std::vector<Rat> values(nv);
        for (auto& r : values) {
            r = Rat(num(rng), den(rng));
            r.canonicalize();
        }
        Vec diag = vec_zero(g.dim(), g.field_order());
        for (unsigned i = 0; i < g.dim(); ++i) {
            Rat d(0);
            for (size_t k = 0; k < nv; ++k) d += Rat(positions[i][k]) * values[k];
            diag[i] = CycloScalar::from_rational(d, g.field_order());
        }
        if (!is_member(g, Matrix::diagonal(diag), kind).ok) return false;
    }
    return true;
}

}  // namespace hexad
