#include "qcas/module_basis.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace qcas {

namespace {

struct MTermKey {
    int pos;
    Mono mono;
    bool operator==(const MTermKey&) const = default;
};

// Position-over-term: smaller position index always wins.
bool mkey_greater(const MTermKey& a, const MTermKey& b, const MonOrder& ord) {
    if (a.pos != b.pos) return a.pos < b.pos;
    return ord.greater(a.mono, b.mono);
}

using MTerm = std::pair<MTermKey, Rat>;
using SVec = std::vector<MTerm>;  // descending

SVec to_sorted(const PolyVec& v, const MonOrder& ord) {
    SVec s;
    for (size_t p = 0; p < v.size(); ++p)
        for (const auto& [m, c] : v[p].terms()) s.push_back({{static_cast<int>(p), m}, c});
    std::sort(s.begin(), s.end(), [&](const MTerm& a, const MTerm& b) { return mkey_greater(a.first, b.first, ord); });
    return s;
}

PolyVec from_sorted(const RingPtr& ring, int rank, const SVec& s) {
    PolyVec v(rank, Poly(ring));
    for (const MTerm& t : s) v[t.first.pos].add_term(t.first.mono, t.second);
    return v;
}

SVec subtract_scaled(const SVec& f, const Rat& c, const Mono& shift, const SVec& g, const MonOrder& ord) {
    SVec out;
    out.reserve(f.size() + g.size());
    size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
        if (j >= g.size()) {
            out.push_back(f[i++]);
            continue;
        }
        MTermKey gk{g[j].first.pos, mono_mul(g[j].first.mono, shift)};
        if (i >= f.size()) {
            out.push_back({std::move(gk), -(c * g[j].second)});
            ++j;
            continue;
        }
        if (f[i].first == gk) {
            Rat coeff = f[i].second - c * g[j].second;
            if (!is_zero(coeff)) out.push_back({f[i].first, std::move(coeff)});
            ++i;
            ++j;
        } else if (mkey_greater(f[i].first, gk, ord)) {
            out.push_back(f[i++]);
        } else {
            out.push_back({std::move(gk), -(c * g[j].second)});
            ++j;
        }
    }
    return out;
}

void make_monic(SVec& f) {
    if (f.empty()) return;
    const Rat lc = f.front().second;
    if (lc == Rat(1)) return;
    for (MTerm& t : f) t.second /= lc;
}

bool lead_divides(const MTermKey& lead, const MTermKey& k) {
    return lead.pos == k.pos && mono_divides(lead.mono, k.mono);
}

SVec nf_sorted(SVec p, const std::vector<SVec>& basis, const MonOrder& ord) {
    SVec rem;
    while (!p.empty()) {
        bool reduced = false;
        for (const SVec& g : basis) {
            if (g.empty()) continue;
            if (lead_divides(g.front().first, p.front().first)) {
                const Rat c = p.front().second / g.front().second;
                const Mono shift = mono_div(p.front().first.mono, g.front().first.mono);
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

struct MPair {
    int i, j;
    Mono lcm;
    int pos;
};

// Pairs exist only for leading terms in the same position; the coprimality
// shortcut is not sound for modules, so only the lcm-divisibility pruning
// applies.
void update_pairs(std::vector<MPair>& pairs, const std::vector<SVec>& basis, int new_index, const MonOrder& ord) {
    const MTermKey& ht = basis[new_index].front().first;

    struct Cand {
        int g;
        Mono lcm;
    };
    std::vector<Cand> cands;
    for (int g = 0; g < new_index; ++g) {
        if (basis[g].empty()) continue;
        const MTermKey& hg = basis[g].front().first;
        if (hg.pos != ht.pos) continue;
        cands.push_back({g, mono_lcm(hg.mono, ht.mono)});
    }

    std::vector<Cand> kept;
    for (size_t a = 0; a < cands.size(); ++a) {
        bool drop = false;
        for (size_t b = a + 1; b < cands.size() && !drop; ++b)
            if (mono_divides(cands[b].lcm, cands[a].lcm) && cands[b].lcm != cands[a].lcm) drop = true;
        for (const Cand& k : kept)
            if (!drop && mono_divides(k.lcm, cands[a].lcm)) drop = true;
        if (!drop) kept.push_back(cands[a]);
    }

    std::vector<MPair> survivors;
    for (const MPair& p : pairs) {
        bool prune = false;
        if (p.pos == ht.pos) {
            const Mono& li = basis[p.i].front().first.mono;
            const Mono& lj = basis[p.j].front().first.mono;
            prune = mono_divides(ht.mono, p.lcm) && mono_lcm(li, ht.mono) != p.lcm && mono_lcm(lj, ht.mono) != p.lcm;
        }
        if (!prune) survivors.push_back(p);
    }
    pairs.swap(survivors);

    for (const Cand& k : kept) pairs.push_back({k.g, new_index, k.lcm, ht.pos});
}

SVec s_vector(const SVec& f, const SVec& g, const Mono& lcm, const MonOrder& ord) {
    SVec a;
    const Mono sf = mono_div(lcm, f.front().first.mono);
    a.reserve(f.size());
    for (const MTerm& t : f) a.push_back({{t.first.pos, mono_mul(t.first.mono, sf)}, t.second / f.front().second});
    std::sort(a.begin(), a.end(), [&](const MTerm& x, const MTerm& y) { return mkey_greater(x.first, y.first, ord); });
    return subtract_scaled(a, Rat(1) / g.front().second, mono_div(lcm, g.front().first.mono), g, ord);
}

std::vector<SVec> buchberger(std::vector<SVec> input, const MonOrder& ord) {
    std::vector<SVec> basis;
    std::vector<MPair> pairs;
    for (SVec& f : input) {
        if (f.empty()) continue;
        make_monic(f);
        basis.push_back(std::move(f));
        update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1, ord);
    }
    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            if (pairs[k].pos != pairs[best].pos) {
                if (pairs[k].pos < pairs[best].pos) best = k;
                continue;
            }
            if (ord.less(pairs[k].lcm, pairs[best].lcm) ||
                (pairs[k].lcm == pairs[best].lcm &&
                 std::tie(pairs[k].i, pairs[k].j) < std::tie(pairs[best].i, pairs[best].j)))
                best = k;
        }
        MPair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));

        SVec s = s_vector(basis[p.i], basis[p.j], p.lcm, ord);
        SVec r = nf_sorted(std::move(s), basis, ord);
        if (r.empty()) continue;
        make_monic(r);
        basis.push_back(std::move(r));
        update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1, ord);
    }
    return basis;
}

bool mkey_less_sort(const SVec& a, const SVec& b, const MonOrder& ord) {
    return mkey_greater(b.front().first, a.front().first, ord);
}

std::vector<SVec> reduce_basis(std::vector<SVec> basis, const MonOrder& ord) {
    std::sort(basis.begin(), basis.end(), [&](const SVec& a, const SVec& b) { return mkey_less_sort(a, b, ord); });
    std::vector<SVec> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const MTermKey& li = basis[i].front().first;
            const MTermKey& lj = basis[j].front().first;
            if (lead_divides(lj, li) && (!(li == lj) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<SVec> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            SVec r = nf_sorted(minimal[i], others, ord);
            make_monic(r);
            if (r != minimal[i]) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
        std::erase_if(minimal, [](const SVec& f) { return f.empty(); });
    }
    std::sort(minimal.begin(), minimal.end(), [&](const SVec& a, const SVec& b) { return mkey_less_sort(a, b, ord); });
    return minimal;
}

RingPtr common_ring(const std::vector<PolyVec>& gens) {
    RingPtr ring;
    for (const PolyVec& v : gens)
        for (const Poly& p : v) {
            if (!p.ring()) continue;
            if (!ring)
                ring = p.ring();
            else if (ring != p.ring())
                throw std::invalid_argument("module generators from different rings");
        }
    return ring;
}

}  // namespace

std::vector<PolyVec> module_groebner(int rank, const std::vector<PolyVec>& gens, const MonOrder& order) {
    RingPtr ring = common_ring(gens);
    if (!ring) return {};
    std::vector<SVec> input;
    for (const PolyVec& v : gens) {
        if (static_cast<int>(v.size()) != rank) throw std::invalid_argument("generator rank mismatch");
        SVec s = to_sorted(v, order);
        if (!s.empty()) input.push_back(std::move(s));
    }
    std::vector<SVec> gb = reduce_basis(buchberger(std::move(input), order), order);
    std::vector<PolyVec> out;
    out.reserve(gb.size());
    for (const SVec& f : gb) out.push_back(from_sorted(ring, rank, f));
    return out;
}

PolyVec vector_normal_form(const PolyVec& v, const std::vector<PolyVec>& gb, const MonOrder& order) {
    RingPtr ring = common_ring({v});
    if (!ring) {
        for (const PolyVec& g : gb)
            for (const Poly& p : g)
                if (p.ring()) ring = p.ring();
    }
    const int rank = static_cast<int>(v.size());
    std::vector<SVec> basis;
    for (const PolyVec& g : gb) basis.push_back(to_sorted(g, order));
    return from_sorted(ring, rank, nf_sorted(to_sorted(v, order), basis, order));
}

SubmoduleBasis::SubmoduleBasis(RingPtr ring, int rank, std::vector<PolyVec> gens)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)) {
    for (const PolyVec& v : gens_)
        if (static_cast<int>(v.size()) != rank_) throw std::invalid_argument("generator rank mismatch");
}

SubmoduleBasis::SubmoduleBasis(const SubmoduleBasis& other) : ring_(other.ring_), rank_(other.rank_), gens_(other.gens_) {
    std::lock_guard<std::mutex> lock(other.mu_);
    gb_cache_ = other.gb_cache_;
}

SubmoduleBasis& SubmoduleBasis::operator=(const SubmoduleBasis& other) {
    if (this == &other) return *this;
    std::scoped_lock lock(mu_, other.mu_);
    ring_ = other.ring_;
    rank_ = other.rank_;
    gens_ = other.gens_;
    gb_cache_ = other.gb_cache_;
    return *this;
}

const std::vector<PolyVec>& SubmoduleBasis::groebner(const MonOrder& order) const {
    const std::string key = order.key();
    {
        std::lock_guard<std::mutex> lock(mu_);
        for (const auto& [k, gb] : gb_cache_)
            if (k == key) return gb;
    }
    std::vector<PolyVec> gb = module_groebner(rank_, gens_, order);
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& [k, cached] : gb_cache_)
        if (k == key) return cached;
    gb_cache_.emplace_back(key, std::move(gb));
    return gb_cache_.back().second;
}

bool SubmoduleBasis::contains(const PolyVec& v, const MonOrder& order) const {
    PolyVec nf = vector_normal_form(v, groebner(order), order);
    for (const Poly& p : nf)
        if (!p.is_zero()) return false;
    return true;
}

bool module_equal(const SubmoduleBasis& a, const SubmoduleBasis& b) {
    return a.rank() == b.rank() && a.groebner(MonOrder::grevlex()) == b.groebner(MonOrder::grevlex());
}

bool module_subset(const SubmoduleBasis& a, const SubmoduleBasis& b) {
    for (const PolyVec& g : a.gens())
        if (!b.contains(g)) return false;
    return true;
}

SubmoduleBasis module_kernel(const PolyMatrix& map, int source_rank) {
    RingPtr ring;
    for (const auto& row : map)
        for (const Poly& e : row)
            if (e.ring()) ring = e.ring();
    const int k = static_cast<int>(map.size());
    if (!ring) throw std::invalid_argument("kernel of a matrix with no ring");
    for (const auto& row : map)
        if (static_cast<int>(row.size()) != source_rank) throw std::invalid_argument("matrix width mismatch");

    // Embed the graph of the map in R^(k+m); positions 0..k-1 dominate, so a
    // Groebner element with zero head block lies entirely in the source block.
    std::vector<PolyVec> graph;
    for (int j = 0; j < source_rank; ++j) {
        PolyVec w(k + source_rank, Poly(ring));
        for (int i = 0; i < k; ++i) w[i] = map[i][j];
        w[k + j] = Poly::constant(ring, Rat(1));
        graph.push_back(std::move(w));
    }
    std::vector<PolyVec> gb = module_groebner(k + source_rank, graph, MonOrder::grevlex());

    std::vector<PolyVec> kernel_gens;
    for (const PolyVec& g : gb) {
        bool head_zero = true;
        for (int i = 0; i < k && head_zero; ++i)
            if (!g[i].is_zero()) head_zero = false;
        if (!head_zero) continue;
        kernel_gens.push_back(PolyVec(g.begin() + k, g.end()));
    }
    return SubmoduleBasis(ring, source_rank, module_groebner(source_rank, kernel_gens, MonOrder::grevlex()));
}

SubmoduleBasis module_quotient(const SubmoduleBasis& m, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("module quotient by zero");
    const RingPtr& ring = m.ring();
    const int k = m.rank();
    const int s = static_cast<int>(m.gens().size());
    // columns: f e_1 .. f e_k, then the generators of M
    PolyMatrix map(k, std::vector<Poly>(k + s, Poly(ring)));
    for (int i = 0; i < k; ++i) map[i][i] = f;
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < k; ++i) map[i][k + j] = m.gens()[j][i];
    SubmoduleBasis syz = module_kernel(map, k + s);

    std::vector<PolyVec> quot;
    for (const PolyVec& v : syz.gens()) quot.push_back(PolyVec(v.begin(), v.begin() + k));
    return SubmoduleBasis(ring, k, module_groebner(k, quot, MonOrder::grevlex()));
}

std::pair<SubmoduleBasis, int> module_saturate(const SubmoduleBasis& m, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("module saturation by zero");
    SubmoduleBasis current = m;
    for (int exponent = 0; exponent <= 64; ++exponent) {
        SubmoduleBasis next = module_quotient(current, f);
        if (module_equal(next, current)) return {current, exponent};
        current = next;
    }
    throw std::runtime_error("module saturation did not stabilise within 64 steps");
}

SubmoduleBasis orthogonal(const SubmoduleBasis& m) {
    const RingPtr& ring = m.ring();
    const int k = m.rank();
    const int s = static_cast<int>(m.gens().size());
    if (s == 0) {
        // everything annihilates the zero module
        std::vector<PolyVec> gens;
        for (int i = 0; i < k; ++i) {
            PolyVec e(k, Poly(ring));
            e[i] = Poly::constant(ring, Rat(1));
            gens.push_back(std::move(e));
        }
        return SubmoduleBasis(ring, k, std::move(gens));
    }
    // theta in R^k with <g_j, theta> = 0 for all j: kernel of the s x k
    // matrix whose rows are the generators.
    PolyMatrix rows(s, std::vector<Poly>(k, Poly(ring)));
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < k; ++i) rows[j][i] = m.gens()[j][i];
    return module_kernel(rows, k);
}

SubmoduleBasis double_orthogonal(const SubmoduleBasis& m) { return orthogonal(orthogonal(m)); }

// Syzygy route for the ideal quotient, declared in ideal.hpp.
Ideal ideal_quotient(const Ideal& ideal, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("quotient by the zero polynomial");
    const RingPtr& ring = ideal.ring();
    const int s = static_cast<int>(ideal.gens().size());
    PolyMatrix map(1, std::vector<Poly>(1 + s, Poly(ring)));
    map[0][0] = f;
    for (int j = 0; j < s; ++j) map[0][1 + j] = ideal.gens()[j];
    SubmoduleBasis syz = module_kernel(map, 1 + s);
    std::vector<Poly> gens;
    for (const PolyVec& v : syz.gens())
        if (!v[0].is_zero()) gens.push_back(v[0]);
    return Ideal(ring, groebner_basis(gens, MonOrder::grevlex()));
}

}  // namespace qcas
