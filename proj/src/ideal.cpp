#include "qcas/ideal.hpp"

#include "qcas/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace qcas {

namespace {

// ---- sorted-term representation used by the division/Buchberger loops ----

using Term = std::pair<Mono, Rat>;
using SPoly = std::vector<Term>;  // descending in the working order

SPoly to_sorted(const Poly& p, const MonOrder& ord) {
    SPoly s(p.terms().begin(), p.terms().end());
    std::sort(s.begin(), s.end(), [&](const Term& a, const Term& b) { return ord.greater(a.first, b.first); });
    return s;
}

Poly from_sorted(const RingPtr& ring, const SPoly& s) {
    Poly p(ring);
    for (const Term& t : s) p.add_term(t.first, t.second);
    return p;
}

// f - c * x^shift * g, all sorted descending.
SPoly subtract_scaled(const SPoly& f, const Rat& c, const Mono& shift, const SPoly& g, const MonOrder& ord) {
    SPoly out;
    out.reserve(f.size() + g.size());
    size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
        if (j >= g.size()) {
            out.push_back(f[i++]);
            continue;
        }
        Mono gm = mono_mul(g[j].first, shift);
        if (i >= f.size()) {
            out.emplace_back(std::move(gm), -(c * g[j].second));
            ++j;
            continue;
        }
        if (f[i].first == gm) {
            Rat coeff = f[i].second - c * g[j].second;
            if (!is_zero(coeff)) out.emplace_back(f[i].first, std::move(coeff));
            ++i;
            ++j;
        } else if (ord.greater(f[i].first, gm)) {
            out.push_back(f[i++]);
        } else {
            out.emplace_back(std::move(gm), -(c * g[j].second));
            ++j;
        }
    }
    return out;
}

void make_monic(SPoly& f) {
    if (f.empty()) return;
    const Rat lc = f.front().second;
    if (lc == Rat(1)) return;
    for (Term& t : f) t.second /= lc;
}

// Full normal form; divisor choice is the first basis element (by index)
// whose leading term divides, so reduction is deterministic.
SPoly nf_sorted(SPoly p, const std::vector<SPoly>& basis, const MonOrder& ord) {
    SPoly rem;
    while (!p.empty()) {
        bool reduced = false;
        for (const SPoly& g : basis) {
            if (g.empty()) continue;
            if (mono_divides(g.front().first, p.front().first)) {
                const Rat c = p.front().second / g.front().second;
                const Mono shift = mono_div(p.front().first, g.front().first);
                p = subtract_scaled(p, c, shift, g, ord);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(p.front());
            p.erase(p.begin());
        }
    }
    return rem;
}

struct Pair {
    int i, j;
    Mono lcm;
};

// Becker-Weispfenning UPDATE: installs pairs of the new element against the
// current basis, applying the Gebauer-Moeller criteria, and prunes old pairs
// made redundant by the new leading term.
void update_pairs(std::vector<Pair>& pairs, const std::vector<SPoly>& basis, int new_index, const MonOrder& ord) {
    const Mono& ht = basis[new_index].front().first;

    struct Cand {
        int g;
        Mono lcm;
        bool coprime;
    };
    std::vector<Cand> cands;
    for (int g = 0; g < new_index; ++g) {
        if (basis[g].empty()) continue;
        cands.push_back({g, mono_lcm(basis[g].front().first, ht), mono_coprime(basis[g].front().first, ht)});
    }

    std::vector<Cand> kept;
    for (size_t a = 0; a < cands.size(); ++a) {
        bool drop = false;
        if (!cands[a].coprime) {
            for (size_t b = a + 1; b < cands.size() && !drop; ++b)
                if (mono_divides(cands[b].lcm, cands[a].lcm) && cands[b].lcm != cands[a].lcm) drop = true;
            for (const Cand& k : kept)
                if (!drop && mono_divides(k.lcm, cands[a].lcm) && !(k.lcm == cands[a].lcm)) drop = true;
            for (const Cand& k : kept)
                if (!drop && k.lcm == cands[a].lcm) drop = true;  // keep one per lcm
        }
        if (!drop) kept.push_back(cands[a]);
    }

    // Old-pair pruning: (i,j) dies when ht strictly refines its lcm.
    std::vector<Pair> survivors;
    for (const Pair& p : pairs) {
        const Mono& li = basis[p.i].front().first;
        const Mono& lj = basis[p.j].front().first;
        const bool prune = mono_divides(ht, p.lcm) && mono_lcm(li, ht) != p.lcm && mono_lcm(lj, ht) != p.lcm;
        if (!prune) survivors.push_back(p);
    }
    pairs.swap(survivors);

    for (const Cand& k : kept) {
        if (k.coprime) continue;  // Buchberger's first criterion
        pairs.push_back({k.g, new_index, k.lcm});
    }
}

SPoly s_polynomial(const SPoly& f, const SPoly& g, const Mono& lcm, const MonOrder& ord) {
    // (1/lc f) x^(lcm/lt f) f - (1/lc g) x^(lcm/lt g) g
    SPoly a;
    const Mono sf = mono_div(lcm, f.front().first);
    a.reserve(f.size());
    for (const Term& t : f) a.emplace_back(mono_mul(t.first, sf), t.second / f.front().second);
    return subtract_scaled(a, Rat(1) / g.front().second, mono_div(lcm, g.front().first), g, ord);
}

std::vector<SPoly> buchberger(std::vector<SPoly> input, const MonOrder& ord) {
    std::vector<SPoly> basis;
    std::vector<Pair> pairs;

    // seed: drop zeros, make monic, deterministic order
    for (SPoly& f : input) {
        if (f.empty()) continue;
        make_monic(f);
        basis.push_back(std::move(f));
        update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1, ord);
    }

    while (!pairs.empty()) {
        // normal selection: smallest lcm in the order, ties by indices
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            if (ord.less(pairs[k].lcm, pairs[best].lcm) ||
                (pairs[k].lcm == pairs[best].lcm &&
                 std::tie(pairs[k].i, pairs[k].j) < std::tie(pairs[best].i, pairs[best].j)))
                best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));

        SPoly s = s_polynomial(basis[p.i], basis[p.j], p.lcm, ord);
        SPoly r = nf_sorted(std::move(s), basis, ord);
        if (r.empty()) continue;
        make_monic(r);
        basis.push_back(std::move(r));
        update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1, ord);
    }
    return basis;
}

std::vector<SPoly> reduce_basis(std::vector<SPoly> basis, const MonOrder& ord) {
    // minimalise: drop g whose leading term another leading term divides
    std::sort(basis.begin(), basis.end(),
              [&](const SPoly& a, const SPoly& b) { return ord.less(a.front().first, b.front().first); });
    std::vector<SPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Mono& li = basis[i].front().first;
            const Mono& lj = basis[j].front().first;
            if (mono_divides(lj, li) && (li != lj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // tail-reduce every element against the others
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<SPoly> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            SPoly r = nf_sorted(minimal[i], others, ord);
            make_monic(r);
            if (r != minimal[i]) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
        std::erase_if(minimal, [](const SPoly& f) { return f.empty(); });
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const SPoly& a, const SPoly& b) { return ord.less(a.front().first, b.front().first); });
    return minimal;
}

RingPtr common_ring(const std::vector<Poly>& gens) {
    RingPtr ring;
    for (const Poly& g : gens) {
        if (!g.ring()) continue;
        if (!ring)
            ring = g.ring();
        else if (ring != g.ring())
            throw std::invalid_argument("generators from different rings");
    }
    return ring;
}

}  // namespace

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const MonOrder& order) {
    RingPtr ring = common_ring(gens);
    if (!ring) return {};
    std::vector<SPoly> input;
    for (const Poly& g : gens)
        if (!g.is_zero()) input.push_back(to_sorted(g, order));
    std::vector<SPoly> gb = reduce_basis(buchberger(std::move(input), order), order);
    std::vector<Poly> out;
    out.reserve(gb.size());
    for (const SPoly& f : gb) out.push_back(from_sorted(ring, f));
    return out;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& gb, const MonOrder& order) {
    if (gb.empty()) return f;
    std::vector<SPoly> basis;
    basis.reserve(gb.size());
    for (const Poly& g : gb) basis.push_back(to_sorted(g, order));
    return from_sorted(f.ring(), nf_sorted(to_sorted(f, order), basis, order));
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const Poly& g : gens_)
        if (g.ring() && g.ring() != ring_) throw std::invalid_argument("generator outside the ideal's ring");
}

Ideal::Ideal(const Ideal& other) : ring_(other.ring_), gens_(other.gens_) {
    std::lock_guard<std::mutex> lock(other.mu_);
    gb_cache_ = other.gb_cache_;
}

Ideal& Ideal::operator=(const Ideal& other) {
    if (this == &other) return *this;
    std::scoped_lock lock(mu_, other.mu_);
    ring_ = other.ring_;
    gens_ = other.gens_;
    gb_cache_ = other.gb_cache_;
    return *this;
}

const std::vector<Poly>& Ideal::groebner(const MonOrder& order) const {
    const std::string key = order.key();
    {
        std::lock_guard<std::mutex> lock(mu_);
        for (const auto& [k, gb] : gb_cache_)
            if (k == key) return gb;
    }
    std::vector<Poly> gb = groebner_basis(gens_, order);
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& [k, cached] : gb_cache_)
        if (k == key) return cached;
    gb_cache_.emplace_back(key, std::move(gb));
    return gb_cache_.back().second;
}

bool Ideal::contains(const Poly& f, const MonOrder& order) const {
    return normal_form(f, groebner(order), order).is_zero();
}

bool Ideal::is_unit(const MonOrder& order) const {
    const std::vector<Poly>& gb = groebner(order);
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool Ideal::is_zero() const {
    for (const Poly& g : gens_)
        if (!g.is_zero()) return false;
    return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    return a.groebner(MonOrder::grevlex()) == b.groebner(MonOrder::grevlex());
}

bool ideal_subset(const Ideal& a, const Ideal& b) {
    for (const Poly& g : a.gens())
        if (!b.contains(g)) return false;
    return true;
}

namespace {

// Promote a polynomial into a ring extended by one fresh variable appended
// at the end. Used by the intersection trick.
Poly promote(const Poly& p, const RingPtr& big) {
    Poly out(big);
    for (const auto& [m, c] : p.terms()) {
        Mono ext = m;
        ext.push_back(0);
        out.add_term(ext, c);
    }
    return out;
}

Poly demote(const Poly& p, const RingPtr& small) {
    Poly out(small);
    for (const auto& [m, c] : p.terms()) {
        Mono cut(m.begin(), m.end() - 1);
        out.add_term(cut, c);
    }
    return out;
}

}  // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("intersecting ideals from different rings");
    const RingPtr& ring = a.ring();
    std::vector<std::string> vars = ring->vars;
    vars.push_back("@u");
    RingPtr big = make_ring(vars);
    Poly u = Poly::variable(big, big->nvars() - 1);
    Poly one_minus_u = Poly::constant(big, Rat(1)) - u;

    std::vector<Poly> gens;
    for (const Poly& g : a.gens()) gens.push_back(u * promote(g, big));
    for (const Poly& g : b.gens()) gens.push_back(one_minus_u * promote(g, big));

    std::vector<bool> mask(big->nvars(), false);
    mask[big->nvars() - 1] = true;
    std::vector<Poly> gb = groebner_basis(gens, MonOrder::block(mask));
    std::vector<Poly> kept;
    for (const Poly& g : gb)
        if (!g.uses_var(big->nvars() - 1)) kept.push_back(demote(g, ring));
    return Ideal(ring, std::move(kept));
}

bool poly_divide_exact(const Poly& f, const Poly& g, Poly& quotient) {
    if (g.is_zero()) return false;
    MonOrder ord = MonOrder::grevlex();
    SPoly p = to_sorted(f, ord);
    SPoly d = to_sorted(g, ord);
    Poly q(f.ring());
    while (!p.empty()) {
        if (!mono_divides(d.front().first, p.front().first)) return false;
        const Rat c = p.front().second / d.front().second;
        const Mono shift = mono_div(p.front().first, d.front().first);
        q.add_term(shift, c);
        p = subtract_scaled(p, c, shift, d, ord);
    }
    quotient = q;
    return true;
}

Ideal ideal_quotient_by_intersection(const Ideal& ideal, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("quotient by the zero polynomial");
    Ideal fi(ideal.ring(), {f});
    Ideal cap = ideal_intersect(ideal, fi);
    std::vector<Poly> gens;
    for (const Poly& g : cap.gens()) {
        Poly q;
        if (!poly_divide_exact(g, f, q)) throw std::logic_error("intersection with (f) produced a non-multiple of f");
        gens.push_back(std::move(q));
    }
    return Ideal(ideal.ring(), groebner_basis(gens, MonOrder::grevlex()));
}

std::pair<Ideal, int> saturate(const Ideal& ideal, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
    Ideal current = ideal;
    for (int exponent = 0; exponent <= 64; ++exponent) {
        Ideal next = ideal_quotient(current, f);
        if (ideal_equal(next, current)) return {current, exponent};
        current = next;
    }
    throw std::runtime_error("saturation did not stabilise within 64 steps");
}

Ideal eliminate(const Ideal& ideal, const std::vector<bool>& remove_vars) {
    const RingPtr& ring = ideal.ring();
    if (static_cast<int>(remove_vars.size()) != ring->nvars()) throw std::invalid_argument("mask arity mismatch");
    std::vector<Poly> gb = groebner_basis(ideal.gens(), MonOrder::block(remove_vars));
    std::vector<Poly> kept;
    for (const Poly& g : gb) {
        bool touches = false;
        for (int v = 0; v < ring->nvars() && !touches; ++v)
            if (remove_vars[v] && g.uses_var(v)) touches = true;
        if (!touches) kept.push_back(g);
    }
    return Ideal(ring, std::move(kept));
}

int krull_dimension(const Ideal& ideal) {
    const RingPtr& ring = ideal.ring();
    const int n = ring->nvars();
    if (n > 24) throw std::invalid_argument("dimension search limited to 24 variables");
    const std::vector<Poly>& gb = ideal.groebner(MonOrder::grevlex());
    for (const Poly& g : gb)
        if (g.is_constant() && !g.is_zero()) return -1;

    MonOrder ord = MonOrder::grevlex();
    std::vector<uint32_t> supports;
    for (const Poly& g : gb) {
        const Mono* lead = nullptr;
        for (const auto& [m, c] : g.terms())
            if (!lead || ord.greater(m, *lead)) lead = &m;
        uint32_t s = 0;
        for (int v = 0; v < n; ++v)
            if ((*lead)[v] > 0) s |= (1u << v);
        supports.push_back(s);
    }

    int best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (uint32_t s : supports)
            if ((s & ~mask) == 0) {  // leading monomial supported inside the candidate set
                independent = false;
                break;
            }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

namespace {

struct MinorKey {
    uint32_t rows;
    uint32_t cols;
    bool operator==(const MinorKey&) const = default;
};
struct MinorKeyHash {
    size_t operator()(const MinorKey& k) const {
        return std::hash<uint64_t>()((static_cast<uint64_t>(k.rows) << 32) | k.cols);
    }
};
using MinorTable = std::unordered_map<MinorKey, Poly, MinorKeyHash>;

std::vector<uint32_t> subsets_of_size(int universe, int size) {
    std::vector<uint32_t> out;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    if (size > universe) return out;
    while (true) {
        uint32_t mask = 0;
        for (int i : idx) mask |= (1u << i);
        out.push_back(mask);
        int pos = size - 1;
        while (pos >= 0 && idx[pos] == universe - size + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

std::vector<int> mask_bits(uint32_t mask) {
    std::vector<int> bits;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) bits.push_back(i);
    return bits;
}

// One level of the minor table: all size-s minors from the (s-1)-level,
// expanding along the first selected row.
Poly expand_minor(const PolyMatrix& m, const RingPtr& ring, uint32_t rows, uint32_t cols, const MinorTable& below) {
    std::vector<int> r = mask_bits(rows);
    std::vector<int> c = mask_bits(cols);
    if (r.size() == 1) return m[r[0]][c[0]];
    Poly det(ring);
    const int r0 = r[0];
    const uint32_t rows_rest = rows & ~(1u << r0);
    int sign = 1;
    for (size_t j = 0; j < c.size(); ++j) {
        const Poly& entry = m[r0][c[j]];
        if (!entry.is_zero()) {
            const uint32_t cols_rest = cols & ~(1u << c[j]);
            const Poly& sub = below.at({rows_rest, cols_rest});
            Poly contrib = entry * sub;
            if (sign < 0) contrib = -contrib;
            det += contrib;
        }
        sign = -sign;
    }
    return det;
}

std::vector<Poly> minors_impl(const PolyMatrix& m, int size, bool parallel) {
    if (m.empty() || m[0].empty() || size <= 0) return {};
    const int nrows = static_cast<int>(m.size());
    const int ncols = static_cast<int>(m[0].size());
    if (size > nrows || size > ncols) return {};
    RingPtr ring = m[0][0].ring();

    MinorTable below;
    for (int s = 1; s <= size; ++s) {
        std::vector<uint32_t> rsets = subsets_of_size(nrows, s);
        std::vector<uint32_t> csets = subsets_of_size(ncols, s);
        std::vector<std::pair<uint32_t, uint32_t>> keys;
        keys.reserve(rsets.size() * csets.size());
        for (uint32_t r : rsets)
            for (uint32_t c : csets) keys.emplace_back(r, c);

        std::vector<Poly> values(keys.size());
        auto work = [&](size_t i) { values[i] = expand_minor(m, ring, keys[i].first, keys[i].second, below); };
        if (parallel)
            par::for_each_index(keys.size(), work);
        else
            par::for_each_index_serial(keys.size(), work);

        MinorTable level;
        level.reserve(keys.size());
        for (size_t i = 0; i < keys.size(); ++i) level.emplace(MinorKey{keys[i].first, keys[i].second}, std::move(values[i]));
        below.swap(level);
    }

    std::vector<uint32_t> rsets = subsets_of_size(nrows, size);
    std::vector<uint32_t> csets = subsets_of_size(ncols, size);
    std::vector<Poly> out;
    for (uint32_t r : rsets)
        for (uint32_t c : csets) {
            Poly v = below.at({r, c});
            if (!v.is_zero()) out.push_back(std::move(v));
        }
    return out;
}

}  // namespace

std::vector<Poly> minors(const PolyMatrix& m, int size) { return minors_impl(m, size, true); }
std::vector<Poly> minors_serial(const PolyMatrix& m, int size) { return minors_impl(m, size, false); }

Ideal fitting_ideal(const PolyMatrix& presentation, int index) {
    if (index < 0) throw std::invalid_argument("fitting index must be nonnegative");
    if (presentation.empty()) throw std::invalid_argument("presentation needs at least one target row");
    RingPtr ring;
    for (const auto& row : presentation)
        for (const Poly& e : row)
            if (e.ring()) ring = e.ring();
    if (!ring) throw std::invalid_argument("presentation has no ring");

    const int k = static_cast<int>(presentation.size());
    const int c = presentation[0].empty() ? 0 : static_cast<int>(presentation[0].size());
    const int size = k - index;
    if (size <= 0) return Ideal::unit(ring);
    if (size > k || size > c) return Ideal::zero(ring);
    return Ideal(ring, minors(presentation, size));
}

}  // namespace qcas
