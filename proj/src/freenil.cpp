#include "hexad/freenil.hpp"

#include <algorithm>
#include <map>

#include "hexad/error.hpp"

namespace hexad {

namespace {

int moebius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

unsigned long ipow(unsigned g, unsigned e) {
    unsigned long r = 1;
    while (e--) r *= g;
    return r;
}

// ---------------------------------------------------------------------------
// Incremental echelon form over Q, with expression of dependent vectors in
// terms of the vectors previously accepted as independent.

struct RatEchelon {
    size_t width;
    std::vector<std::vector<Rat>> rows;    // echelon rows
    std::vector<size_t> pivots;
    std::vector<std::vector<Rat>> combos;  // row = sum combos[r][i] * accepted[i]
    size_t accepted = 0;

    explicit RatEchelon(size_t w) : width(w) {}

    // Reduce v in place; fills combo with the coordinates of the reduced
    // vector over the accepted set (index `accepted` = v itself).
    void reduce(std::vector<Rat>& v, std::vector<Rat>& combo) const {
        combo.assign(accepted + 1, Rat(0));
        combo[accepted] = 1;
        for (size_t r = 0; r < rows.size(); ++r) {
            const Rat& c = v[pivots[r]];
            if (c == 0) continue;
            Rat f = c;
            for (size_t j = 0; j < width; ++j)
                if (rows[r][j] != 0) v[j] -= f * rows[r][j];
            for (size_t j = 0; j < combos[r].size(); ++j) combo[j] -= f * combos[r][j];
        }
    }

    // Returns true when v was independent (and absorbs it).
    bool add(std::vector<Rat> v) {
        std::vector<Rat> combo;
        reduce(v, combo);
        size_t piv = 0;
        while (piv < width && v[piv] == 0) ++piv;
        if (piv == width) return false;
        Rat inv = 1 / v[piv];
        for (auto& x : v) x *= inv;
        for (auto& x : combo) x *= inv;
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        combos.push_back(std::move(combo));
        ++accepted;
        return true;
    }

    // Coordinates of v over the accepted set; v must lie in the span.
    std::vector<Rat> coordinates(std::vector<Rat> v) const {
        std::vector<Rat> combo;
        reduce(v, combo);
        for (const Rat& x : v)
            if (x != 0) throw InternalError("vector escapes the expected span");
        // reduced to zero: v = -sum_{j < accepted} combo[j] * accepted[j]
        std::vector<Rat> out(accepted, Rat(0));
        for (size_t j = 0; j < accepted; ++j) out[j] = -combo[j];
        return out;
    }
};

// Tensor component of one degree: dense coefficient vector indexed by words
// of that degree (base-g encoding).
using Tensor = std::vector<Rat>;

Tensor concat_product(const Tensor& a, unsigned da, const Tensor& b, unsigned db, unsigned g) {
    Tensor out(ipow(g, da + db), Rat(0));
    unsigned long shift = ipow(g, db);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i * shift + j] += a[i] * b[j];
        }
    }
    return out;
}

Tensor tensor_commutator(const Tensor& a, unsigned da, const Tensor& b, unsigned db, unsigned g) {
    Tensor out = concat_product(a, da, b, db, g);
    Tensor ba = concat_product(b, db, a, da, g);
    for (size_t i = 0; i < out.size(); ++i) out[i] -= ba[i];
    return out;
}

// Left-normed word (i1,...,id) expanded in the degree-d tensor component.
Tensor expand_left_normed(const std::vector<unsigned>& word, unsigned g) {
    unsigned d = static_cast<unsigned>(word.size());
    Tensor acc(g, Rat(0));
    acc[word[d - 1]] = 1;
    unsigned deg = 1;
    for (unsigned pos = d - 1; pos-- > 0;) {
        Tensor letter(g, Rat(0));
        letter[word[pos]] = 1;
        acc = tensor_commutator(letter, 1, acc, deg, g);
        ++deg;
    }
    return acc;
}

}  // namespace

unsigned long witt_dimension(unsigned d, unsigned g) {
    if (d == 0) throw Error("witt_dimension needs d >= 1");
    long sum = 0;
    for (unsigned e = 1; e <= d; ++e) {
        if (d % e) continue;
        sum += moebius(e) * static_cast<long>(ipow(g, d / e));
    }
    if (sum % static_cast<long>(d) != 0) throw InternalError("Witt sum not divisible by degree");
    return static_cast<unsigned long>(sum / d);
}

std::vector<unsigned long> hall_tree_counts(unsigned c, unsigned g) {
    // Hall trees t = [u, v] with u < v and (v a letter or left(v) <= u);
    // letters are ordered first, then trees by (degree, insertion index).
    struct Tree {
        unsigned degree;
        unsigned left = 0, right = 0;  // global indices; degree 1 = letter
    };
    std::vector<Tree> trees;
    std::vector<std::vector<unsigned>> by_degree(c + 1);
    for (unsigned i = 0; i < g; ++i) {
        by_degree[1].push_back(static_cast<unsigned>(trees.size()));
        trees.push_back({1});
    }
    for (unsigned d = 2; d <= c; ++d) {
        for (unsigned p = 1; 2 * p <= d; ++p) {
            unsigned q = d - p;
            for (unsigned u : by_degree[p]) {
                for (unsigned v : by_degree[q]) {
                    if (u >= v) continue;  // global order: index order
                    if (trees[v].degree > 1 && trees[v].left > u) continue;
                    by_degree[d].push_back(static_cast<unsigned>(trees.size()));
                    trees.push_back({d, u, v});
                }
            }
        }
    }
    std::vector<unsigned long> counts;
    for (unsigned d = 1; d <= c; ++d) counts.push_back(by_degree[d].size());
    return counts;
}

unsigned HallBasis::degree_of(unsigned index) const {
    return static_cast<unsigned>(words[index].size());
}

unsigned HallBasis::pair_position(unsigned i, unsigned j) const {
    if (i >= j || j >= generators) throw Error("pair_position requires i < j < g");
    if (nilpotency_class < 2) throw Error("no degree-2 words in class 1");
    unsigned idx = degree_offsets[1];
    for (unsigned a = 0; a < i; ++a) idx += generators - a - 1;
    idx += j - i - 1;
    return idx;
}

HallBasis free_nilpotent(unsigned c, unsigned g, unsigned field_order) {
    // class 2 additionally admits g = 6 so partition searches over six
    // generators have their ambient algebra
    if (c < 1 || c > 5 || g < 1 || g > 6 || (g == 6 && c != 2))
        throw GuardError("free_nilpotent supports 1 <= c <= 5, 1 <= g <= 5 (g = 6 only at c = 2)");
    unsigned long dim = 0;
    for (unsigned d = 1; d <= c; ++d) dim += witt_dimension(d, g);
    if (dim > 64)
        throw GuardError("free-nilpotent dimension " + std::to_string(dim) + " exceeds guard 64");

    HallBasis hb;
    hb.generators = g;
    hb.nilpotency_class = c;

    // per-degree greedy bases in the tensor algebra
    std::vector<RatEchelon> ech;
    std::vector<std::vector<Tensor>> basis_tensors(c + 1);
    ech.reserve(c + 1);
    for (unsigned d = 0; d <= c; ++d) ech.emplace_back(ipow(g, d));

    hb.degree_offsets.push_back(0);
    for (unsigned d = 1; d <= c; ++d) {
        unsigned long target = witt_dimension(d, g);
        std::vector<unsigned> word(d, 0);
        bool done = target == 0;
        while (!done) {
            Tensor t = expand_left_normed(word, g);
            if (ech[d].add(t)) {
                hb.words.push_back(word);
                basis_tensors[d].push_back(std::move(t));
                if (basis_tensors[d].size() == target) break;
            }
            // next word in lex order
            int pos = static_cast<int>(d) - 1;
            while (pos >= 0 && word[static_cast<size_t>(pos)] == g - 1) {
                word[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++word[static_cast<size_t>(pos)];
        }
        if (basis_tensors[d].size() != target)
            throw InternalError("degree " + std::to_string(d) + " basis has " +
                                std::to_string(basis_tensors[d].size()) + " words, Witt expects " +
                                std::to_string(target));
        hb.degree_offsets.push_back(static_cast<unsigned>(hb.words.size()));
    }

    unsigned n = static_cast<unsigned>(hb.words.size());
    LieAlgebra::BracketMap bm;
    for (unsigned a = 0; a < n; ++a) {
        unsigned da = static_cast<unsigned>(hb.words[a].size());
        for (unsigned b = a + 1; b < n; ++b) {
            unsigned db = static_cast<unsigned>(hb.words[b].size());
            if (da + db > c) continue;
            Tensor t = tensor_commutator(basis_tensors[da][a - hb.degree_offsets[da - 1]], da,
                                         basis_tensors[db][b - hb.degree_offsets[db - 1]], db, g);
            std::vector<Rat> coords = ech[da + db].coordinates(std::move(t));
            Vec out = vec_zero(n, field_order);
            bool nonzero = false;
            for (size_t k = 0; k < coords.size(); ++k) {
                if (coords[k] == 0) continue;
                out[hb.degree_offsets[da + db - 1] + k] =
                    CycloScalar::from_rational(coords[k], field_order);
                nonzero = true;
            }
            if (nonzero) bm[{a, b}] = std::move(out);
        }
    }
    hb.algebra = LieAlgebra::make("N(" + std::to_string(c) + "," + std::to_string(g) + ")", n,
                                  field_order, std::move(bm));
    return hb;
}

// ---------------------------------------------------------------------------
// Homogeneously partitioning ideals

namespace {

// block index 0..5 for a degree-2 coordinate: XX, YY, ZZ, XY, XZ, YZ
int block_of(unsigned part_i, unsigned part_j) {
    if (part_i == part_j) return static_cast<int>(part_i);
    unsigned lo = std::min(part_i, part_j), hi = std::max(part_i, part_j);
    if (lo == 0) return hi == 1 ? 3 : 4;
    return 5;
}

std::vector<int> generator_parts(unsigned g, const std::array<std::vector<unsigned>, 3>& partition) {
    std::vector<int> part(g, -1);
    for (unsigned p = 0; p < 3; ++p) {
        for (unsigned idx : partition[p]) {
            if (idx >= g || part[idx] != -1)
                throw StructureError("partition must split the generators disjointly");
            part[idx] = static_cast<int>(p);
        }
    }
    for (int p : part)
        if (p < 0) throw StructureError("partition must cover all generators");
    return part;
}

// Coordinate sets of the six degree-2 blocks in full N(2,g) coordinates.
std::array<std::vector<unsigned>, 6> block_coordinates(const HallBasis& f,
                                                       const std::vector<int>& part) {
    std::array<std::vector<unsigned>, 6> blocks;
    unsigned g = f.generators;
    for (unsigned i = 0; i < g; ++i)
        for (unsigned j = i + 1; j < g; ++j)
            blocks[static_cast<size_t>(block_of(static_cast<unsigned>(part[i]),
                                                static_cast<unsigned>(part[j])))]
                .push_back(f.pair_position(i, j));
    return blocks;
}

Vec project_onto(const Vec& v, const std::vector<unsigned>& coords, unsigned ambient,
                 unsigned order) {
    Vec out = vec_zero(ambient, order);
    for (unsigned c : coords) out[c] = v[c];
    return out;
}

Subspace coordinate_subspace(const std::vector<unsigned>& coords, unsigned ambient,
                             unsigned order) {
    std::vector<Vec> basis;
    for (unsigned c : coords) {
        Vec v = vec_zero(ambient, order);
        v[c] = CycloScalar::one(order);
        basis.push_back(std::move(v));
    }
    return Subspace::span(basis, ambient, order);
}

// Does the ideal decompose along the six blocks with full diagonal pieces?
// Fills the presentation pieces on success.
bool decompose_ideal(const HallBasis& f, const Subspace& ideal, const std::vector<int>& part,
                     FreePresentation* out) {
    unsigned n = f.dim();
    unsigned ord = f.algebra.field_order();
    auto blocks = block_coordinates(f, part);

    // block projections of the echelon basis must stay inside the ideal
    for (const Vec& b : ideal.basis())
        for (const auto& coords : blocks)
            if (!ideal.contains(project_onto(b, coords, n, ord))) return false;

    // diagonal blocks must be contained whole
    std::array<Subspace, 3> diag;
    for (unsigned p = 0; p < 3; ++p) {
        diag[p] = coordinate_subspace(blocks[p], n, ord);
        if (!ideal.contains(diag[p])) return false;
    }

    if (out) {
        out->generators = f.generators;
        for (unsigned i = 0; i < f.generators; ++i)
            out->partition[static_cast<size_t>(part[i])].push_back(i);
        out->ideal = ideal;
        out->diagonal_parts = diag;
        for (unsigned cb = 0; cb < 3; ++cb)
            out->cross_parts[cb] = ideal.intersect(coordinate_subspace(blocks[cb + 3], n, ord));
    }
    return true;
}

}  // namespace

FreePresentation build_partition_ideal(const HallBasis& f,
                                       const std::array<std::vector<unsigned>, 3>& partition,
                                       const std::array<std::vector<Vec>, 3>& cross_vectors) {
    if (f.nilpotency_class != 2) throw Error("presentations live over N(2,g)");
    unsigned g = f.generators;
    unsigned n = f.dim();
    unsigned ord = f.algebra.field_order();
    std::vector<int> part = generator_parts(g, partition);
    auto blocks = block_coordinates(f, part);

    FreePresentation p;
    p.generators = g;
    p.partition = partition;

    std::vector<Vec> ideal_gens;
    for (unsigned d = 0; d < 3; ++d) {
        p.diagonal_parts[d] = coordinate_subspace(blocks[d], n, ord);
        for (const Vec& b : p.diagonal_parts[d].basis()) ideal_gens.push_back(b);
    }
    unsigned deg2 = g * (g - 1) / 2;
    for (unsigned cb = 0; cb < 3; ++cb) {
        Subspace cross_span = coordinate_subspace(blocks[cb + 3], n, ord);
        std::vector<Vec> lifted;
        for (const Vec& v : cross_vectors[cb]) {
            if (v.size() != deg2) throw Error("cross vectors use degree-2 coordinates");
            Vec w = vec_zero(n, ord);
            for (unsigned k = 0; k < deg2; ++k) w[g + k] = v[k];
            if (!cross_span.contains(w))
                throw StructureError("cross vector escapes its bracket span");
            lifted.push_back(std::move(w));
        }
        p.cross_parts[cb] = Subspace::span(lifted, n, ord);
        for (const Vec& b : p.cross_parts[cb].basis()) ideal_gens.push_back(b);
    }
    p.ideal = Subspace::span(ideal_gens, n, ord);
    return p;
}

std::pair<LieAlgebra, HexGrading> presentation_to_grading(const HallBasis& f,
                                                          const FreePresentation& p,
                                                          const std::string& name) {
    auto [q, proj] = quotient(f.algebra, p.ideal, name);
    unsigned ord = q.field_order();

    std::vector<int> part = generator_parts(f.generators, p.partition);
    auto blocks = block_coordinates(f, part);

    HexGrading h(q.dim(), ord);
    auto project_span = [&](const std::vector<Vec>& gens) {
        std::vector<Vec> imgs;
        for (const Vec& v : gens) imgs.push_back(proj.apply(v));
        return Subspace::span(imgs, q.dim(), ord);
    };
    // generator parts at labels 1, w, w^2 = z6^{0,2,4}
    for (unsigned pl = 0; pl < 3; ++pl) {
        std::vector<Vec> gens;
        for (unsigned i : p.partition[pl]) {
            Vec v = vec_zero(f.dim(), ord);
            v[i] = CycloScalar::one(ord);
            gens.push_back(std::move(v));
        }
        h.set_part(2 * pl, project_span(gens));
    }
    // cross blocks at labels 1+w, 1+w^2, w+w^2 = z6^{1,5,3}
    const unsigned cross_label[3] = {1, 5, 3};
    for (unsigned cb = 0; cb < 3; ++cb) {
        std::vector<Vec> gens;
        for (unsigned c : blocks[cb + 3]) {
            Vec v = vec_zero(f.dim(), ord);
            v[c] = CycloScalar::one(ord);
            gens.push_back(std::move(v));
        }
        h.set_part(cross_label[cb], project_span(gens));
    }
    VerifyReport rep = verify_hexagonal(q, h);
    if (!rep.ok)
        throw InternalError("presentation-induced grading fails verification: " +
                            rep.violations.front());
    return {std::move(q), std::move(h)};
}

FreePresentation grading_to_presentation(const LieAlgebra& g, const HexGrading& h) {
    VerifyReport vr = verify_hexagonal(g, h);
    if (!vr.ok) throw StructureError("invalid hexagonal grading: " + vr.violations.front());
    unsigned n = g.dim();
    unsigned ord = g.field_order();

    // generator parts are z6^0, z6^2, z6^4
    std::array<std::vector<Vec>, 3> gens;
    unsigned total_gens = 0;
    for (unsigned pl = 0; pl < 3; ++pl) {
        for (const Vec& v : h.part(2 * pl).basis()) gens[pl].push_back(v);
        total_gens += h.part(2 * pl).dim();
    }
    // they must generate g: their span plus pairwise brackets is everything
    {
        std::vector<Vec> closure;
        std::vector<Vec> flat;
        for (const auto& part : gens)
            for (const Vec& v : part) {
                closure.push_back(v);
                flat.push_back(v);
            }
        for (const Vec& a : flat)
            for (const Vec& b : flat) closure.push_back(g.bracket(a, b));
        if (Subspace::span(closure, n, ord).dim() != n)
            throw StructureError("generator parts fail to generate the algebra");
    }

    HallBasis f = free_nilpotent(2, total_gens, ord);
    std::array<std::vector<unsigned>, 3> partition;
    std::vector<Vec> images;
    unsigned idx = 0;
    for (unsigned pl = 0; pl < 3; ++pl)
        for (const Vec& v : gens[pl]) {
            partition[pl].push_back(idx++);
            images.push_back(v);
        }
    // epimorphism N(2, total) -> g on basis: generators to images, degree-2
    // words to brackets of images
    std::vector<Vec> cols = images;
    for (unsigned i = 0; i < total_gens; ++i)
        for (unsigned j = i + 1; j < total_gens; ++j)
            cols.push_back(g.bracket(images[i], images[j]));
    Matrix pi = Matrix::from_columns(cols, n, ord);
    Subspace kernel = nullspace(pi);

    FreePresentation p;
    std::vector<int> part = generator_parts(total_gens, partition);
    if (!decompose_ideal(f, kernel, part, &p))
        throw InternalError("kernel of the grading epimorphism does not partition homogeneously");
    return p;
}

EstimateReport check_estimates(unsigned n, unsigned generators, unsigned relations) {
    EstimateReport rep;
    rep.n = n;
    rep.generators = generators;
    rep.relations = relations;
    Rat gg(static_cast<long>(generators));
    rep.n_upper = gg * gg / 3 + gg;
    rep.r_lower = gg * (gg - 3) / 6;
    rep.r_upper = gg * (gg - 1) / 2;
    Rat nn(static_cast<long>(n)), rr(static_cast<long>(relations));
    rep.n_within = (gg <= nn) && (nn <= rep.n_upper);
    rep.r_within = (rep.r_lower <= rr) && (rr <= rep.r_upper);
    return rep;
}

PartitionSearchResult partition_search(const HallBasis& f, const Subspace& ideal,
                                       const std::string& quotient_name) {
    if (f.nilpotency_class != 2) throw Error("partition search lives over N(2,g)");
    unsigned g = f.generators;
    if (g > 6) throw GuardError("partition search guard: g <= 6");

    // the ideal must lie in the commutator (degree-2 coordinates)
    Subspace comm = commutator_subalgebra(f.algebra);
    if (!comm.contains(ideal))
        throw StructureError("ideal must be contained in the degree-2 span");

    PartitionSearchResult result;
    // assignments of generators 2..g to X/Y/Z (0/1/2), generator 1 fixed in
    // X; label symmetry reduced by requiring the first non-X label to be Y.
    // Lexicographic order on (assign[2], ..., assign[g]).
    std::vector<unsigned> assign(g, 0);
    unsigned long total = 1;
    for (unsigned i = 1; i < g; ++i) total *= 3;
    for (unsigned long code = 0; code < total; ++code) {
        unsigned long c = code;
        for (unsigned i = g; i-- > 1;) {
            assign[i] = static_cast<unsigned>(c % 3);
            c /= 3;
        }
        unsigned first_non_x = 0;
        for (unsigned i = 1; i < g; ++i) {
            if (assign[i] != 0) {
                first_non_x = assign[i];
                break;
            }
        }
        if (first_non_x == 2) continue;
        ++result.partitions_tried;

        std::vector<int> part(g);
        for (unsigned i = 0; i < g; ++i) part[i] = static_cast<int>(assign[i]);
        FreePresentation p;
        if (!decompose_ideal(f, ideal, part, &p)) continue;
        auto [q, h] = presentation_to_grading(f, p, quotient_name);
        result.presentation = std::move(p);
        result.grading = std::move(h);
        result.quotient = std::move(q);
        return result;
    }
    return result;
}

}  // namespace hexad
