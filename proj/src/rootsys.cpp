#include "qcas/rootsys.hpp"

#include "qcas/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcas {

namespace {

QVec qvec(std::initializer_list<int> xs) {
    QVec v;
    for (int x : xs) v.push_back(Rat(x));
    return v;
}

QVec basis_vec(int n, int i, int val = 1) {
    QVec v(n, Rat(0));
    v[i] = val;
    return v;
}

Rat dot(const QVec& a, const QVec& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec add(const QVec& a, const QVec& b, int sb = 1) {
    QVec v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = a[i] + Rat(sb) * b[i];
    return v;
}

void push_with_negatives(std::vector<QVec>& roots, const QVec& v) {
    roots.push_back(v);
    QVec neg(v.size());
    for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    roots.push_back(std::move(neg));
}

int expected_count(RootType t, int r) {
    switch (t) {
        case RootType::A: return r * (r + 1);
        case RootType::B:
        case RootType::C: return 2 * r * r;
        case RootType::D: return 2 * r * (r - 1);
        case RootType::E: return r == 6 ? 72 : (r == 7 ? 126 : 240);
        case RootType::F: return 48;
        case RootType::G: return 12;
    }
    return 0;
}

std::vector<QVec> e8_roots() {
    // scaled by 2 to stay integral: 2(+-e_i +- e_j) and (+-1)^8 with an even
    // number of minus signs
    std::vector<QVec> roots;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    QVec v(8, Rat(0));
                    v[i] = 2 * si;
                    v[j] = 2 * sj;
                    roots.push_back(std::move(v));
                }
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        QVec v(8);
        for (int i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
        roots.push_back(std::move(v));
    }
    return roots;
}

std::vector<QVec> e8_simple() {
    // Bourbaki base, scaled by 2
    std::vector<QVec> s;
    s.push_back(qvec({1, -1, -1, -1, -1, -1, -1, 1}));
    s.push_back(qvec({2, 2, 0, 0, 0, 0, 0, 0}));
    s.push_back(qvec({-2, 2, 0, 0, 0, 0, 0, 0}));
    s.push_back(qvec({0, -2, 2, 0, 0, 0, 0, 0}));
    s.push_back(qvec({0, 0, -2, 2, 0, 0, 0, 0}));
    s.push_back(qvec({0, 0, 0, -2, 2, 0, 0, 0}));
    s.push_back(qvec({0, 0, 0, 0, -2, 2, 0, 0}));
    s.push_back(qvec({0, 0, 0, 0, 0, -2, 2, 0}));
    return s;
}

bool in_rational_span(const std::vector<QVec>& span, const QVec& v) {
    std::vector<QVec> rows = span;
    const int r0 = rank(QMatrix::from_rows(rows));
    rows.push_back(v);
    return rank(QMatrix::from_rows(rows)) == r0;
}

}  // namespace

std::string root_type_name(RootType t, int rank) {
    const char* letter = "?";
    switch (t) {
        case RootType::A: letter = "A"; break;
        case RootType::B: letter = "B"; break;
        case RootType::C: letter = "C"; break;
        case RootType::D: letter = "D"; break;
        case RootType::E: letter = "E"; break;
        case RootType::F: letter = "F"; break;
        case RootType::G: letter = "G"; break;
    }
    return std::string(letter) + std::to_string(rank);
}

RootSystem build_root_system(RootType type, int rank) {
    RootSystem rs;
    rs.type = type;
    rs.rank = rank;

    switch (type) {
        case RootType::A: {
            if (rank < 1) throw std::invalid_argument("A needs rank >= 1");
            rs.ambient = rank + 1;
            for (int i = 0; i <= rank; ++i)
                for (int j = 0; j <= rank; ++j) {
                    if (i == j) continue;
                    QVec v(rs.ambient, Rat(0));
                    v[i] = 1;
                    v[j] = -1;
                    rs.roots.push_back(std::move(v));
                }
            for (int i = 0; i < rank; ++i) rs.simple.push_back(add(basis_vec(rs.ambient, i), basis_vec(rs.ambient, i + 1), -1));
            break;
        }
        case RootType::B: {
            if (rank < 2) throw std::invalid_argument("B needs rank >= 2");
            rs.ambient = rank;
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1}) {
                            QVec v(rs.ambient, Rat(0));
                            v[i] = si;
                            v[j] = sj;
                            rs.roots.push_back(std::move(v));
                        }
            for (int i = 0; i < rank; ++i) push_with_negatives(rs.roots, basis_vec(rs.ambient, i));
            for (int i = 0; i + 1 < rank; ++i) rs.simple.push_back(add(basis_vec(rs.ambient, i), basis_vec(rs.ambient, i + 1), -1));
            rs.simple.push_back(basis_vec(rs.ambient, rank - 1));
            break;
        }
        case RootType::C: {
            if (rank < 3) throw std::invalid_argument("C needs rank >= 3");
            rs.ambient = rank;
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1}) {
                            QVec v(rs.ambient, Rat(0));
                            v[i] = si;
                            v[j] = sj;
                            rs.roots.push_back(std::move(v));
                        }
            for (int i = 0; i < rank; ++i) push_with_negatives(rs.roots, basis_vec(rs.ambient, i, 2));
            for (int i = 0; i + 1 < rank; ++i) rs.simple.push_back(add(basis_vec(rs.ambient, i), basis_vec(rs.ambient, i + 1), -1));
            rs.simple.push_back(basis_vec(rs.ambient, rank - 1, 2));
            break;
        }
        case RootType::D: {
            if (rank < 4) throw std::invalid_argument("D needs rank >= 4");
            rs.ambient = rank;
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1}) {
                            QVec v(rs.ambient, Rat(0));
                            v[i] = si;
                            v[j] = sj;
                            rs.roots.push_back(std::move(v));
                        }
            for (int i = 0; i + 1 < rank; ++i) rs.simple.push_back(add(basis_vec(rs.ambient, i), basis_vec(rs.ambient, i + 1), -1));
            rs.simple.push_back(add(basis_vec(rs.ambient, rank - 2), basis_vec(rs.ambient, rank - 1)));
            break;
        }
        case RootType::E: {
            if (rank < 6 || rank > 8) throw std::invalid_argument("E needs rank 6, 7 or 8");
            rs.ambient = 8;
            std::vector<QVec> all = e8_roots();
            std::vector<QVec> simple8 = e8_simple();
            rs.simple.assign(simple8.begin(), simple8.begin() + rank);
            if (rank == 8) {
                rs.roots = std::move(all);
            } else {
                for (const QVec& v : all)
                    if (in_rational_span(rs.simple, v)) rs.roots.push_back(v);
            }
            break;
        }
        case RootType::F: {
            if (rank != 4) throw std::invalid_argument("F needs rank 4");
            rs.ambient = 4;
            // scaled by 2: long +-2e_i +- 2e_j, short +-2e_i and (+-1,...)
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1}) {
                            QVec v(4, Rat(0));
                            v[i] = 2 * si;
                            v[j] = 2 * sj;
                            rs.roots.push_back(std::move(v));
                        }
            for (int i = 0; i < 4; ++i) push_with_negatives(rs.roots, basis_vec(4, i, 2));
            for (int mask = 0; mask < 16; ++mask) {
                QVec v(4);
                for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
                rs.roots.push_back(std::move(v));
            }
            rs.simple.push_back(qvec({0, 2, -2, 0}));
            rs.simple.push_back(qvec({0, 0, 2, -2}));
            rs.simple.push_back(qvec({0, 0, 0, 2}));
            rs.simple.push_back(qvec({1, -1, -1, -1}));
            break;
        }
        case RootType::G: {
            if (rank != 2) throw std::invalid_argument("G needs rank 2");
            rs.ambient = 3;
            push_with_negatives(rs.roots, qvec({1, -1, 0}));
            push_with_negatives(rs.roots, qvec({1, 0, -1}));
            push_with_negatives(rs.roots, qvec({0, 1, -1}));
            push_with_negatives(rs.roots, qvec({2, -1, -1}));
            push_with_negatives(rs.roots, qvec({-1, 2, -1}));
            push_with_negatives(rs.roots, qvec({-1, -1, 2}));
            rs.simple.push_back(qvec({1, -1, 0}));
            rs.simple.push_back(qvec({-2, 1, 1}));
            break;
        }
    }

    if (static_cast<int>(rs.roots.size()) != expected_count(type, rank))
        throw std::logic_error("root count mismatch for " + root_type_name(type, rank));

    // expansions over Delta: integral and of a single sign
    QMatrix simple_cols(rs.ambient, rank);
    for (int j = 0; j < rank; ++j)
        for (int i = 0; i < rs.ambient; ++i) simple_cols.at(i, j) = rs.simple[j][i];
    int best_height = -1;
    for (size_t k = 0; k < rs.roots.size(); ++k) {
        QVec coeffs;
        if (!solve(simple_cols, rs.roots[k], coeffs)) throw std::logic_error("root outside the span of the base");
        int pos = 0, neg = 0;
        int height = 0;
        for (const Rat& c : coeffs) {
            if (c.get_den() != 1) throw std::logic_error("non-integral simple-root expansion");
            const int ci = static_cast<int>(c.get_num().get_si());
            if (ci > 0) ++pos;
            if (ci < 0) ++neg;
            height += ci;
        }
        if (pos > 0 && neg > 0) throw std::logic_error("mixed-sign expansion: base is wrong");
        rs.expansions.push_back(coeffs);
        if (pos > 0) {
            rs.positive.push_back(static_cast<int>(k));
            if (height > best_height) {
                best_height = height;
                rs.highest = static_cast<int>(k);
            }
        }
    }
    if (2 * static_cast<int>(rs.positive.size()) != static_cast<int>(rs.roots.size()))
        throw std::logic_error("positive roots are not half of all roots");
    return rs;
}

CoxeterNumbers coxeter_numbers(const RootSystem& rs) {
    CoxeterNumbers cox;
    // h = 1 + height of the highest root
    int height = 0;
    for (const Rat& c : rs.expansions[rs.highest]) height += static_cast<int>(c.get_num().get_si());
    cox.h = 1 + height;

    // h_dual = 1 + sum of comarks: expansion of the highest coroot over the
    // simple coroots
    const QVec& theta = rs.roots[rs.highest];
    const Rat theta_norm = dot(theta, theta);
    QMatrix coroot_cols(rs.ambient, rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
        const Rat n = dot(rs.simple[j], rs.simple[j]);
        for (int i = 0; i < rs.ambient; ++i) coroot_cols.at(i, j) = rs.simple[j][i] * 2 / n;
    }
    QVec theta_co(theta.size());
    for (size_t i = 0; i < theta.size(); ++i) theta_co[i] = theta[i] * 2 / theta_norm;
    QVec comarks;
    if (!solve(coroot_cols, theta_co, comarks)) throw std::logic_error("coroot expansion failed");
    Rat sum(0);
    for (const Rat& c : comarks) sum += c;
    if (sum.get_den() != 1) throw std::logic_error("non-integral comark sum");
    cox.h_dual = 1 + static_cast<int>(sum.get_num().get_si());
    return cox;
}

int count_nonorthogonal(const RootSystem& rs, const QVec& v) {
    int count = 0;
    for (const QVec& alpha : rs.roots)
        if (!is_zero(dot(alpha, v))) ++count;
    return count;
}

SuterWangCheck suter_wang_check(const RootSystem& rs) {
    SuterWangCheck c;
    c.computed = count_nonorthogonal(rs, rs.highest_root());
    c.formula = 4 * coxeter_numbers(rs).h_dual - 6;
    c.equal = c.computed == c.formula;
    return c;
}

namespace {

// Residue of v against the rows of an rref matrix; zero residue means v lies
// in their span.
bool reduces_to_zero(const RrefResult& rr, const QVec& v) {
    QVec w = v;
    for (size_t p = 0; p < rr.pivot_cols.size(); ++p) {
        const int c = rr.pivot_cols[p];
        if (is_zero(w[c])) continue;
        const Rat f = w[c];
        for (size_t k = 0; k < w.size(); ++k) w[k] -= f * rr.matrix.at(static_cast<int>(p), static_cast<int>(k));
    }
    for (const Rat& x : w)
        if (!is_zero(x)) return false;
    return true;
}

}  // namespace

LeviMinimum min_semisimple_complement(const RootSystem& rs) {
    const int r = rs.rank;
    if (r > 20) throw std::invalid_argument("subset search limited to rank 20");
    LeviMinimum best;
    best.minimum = -1;
    for (uint32_t mask = 0; mask < (1u << r); ++mask) {
        if (mask == (1u << r) - 1) continue;  // proper subsets only
        std::vector<QVec> span;
        std::vector<int> subset;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) {
                span.push_back(rs.simple[i]);
                subset.push_back(i);
            }
        int inside = 0;
        if (!span.empty()) {
            const RrefResult rr = rref(QMatrix::from_rows(span));
            for (const QVec& alpha : rs.roots)
                if (reduces_to_zero(rr, alpha)) ++inside;
        }
        const int complement = static_cast<int>(rs.roots.size()) - inside;
        if (best.minimum < 0 || complement < best.minimum) {
            best.minimum = complement;
            best.witness = subset;
        }
    }
    return best;
}

int nilpotent_centralizer_lb(const RootSystem& rs) {
    const QVec& theta = rs.highest_root();
    int count = 0;
    for (int idx : rs.positive)
        if (!is_zero(dot(rs.roots[idx], theta))) ++count;
    return count + 1;
}

SpringerBounds make_springer_bounds(int levi_minimum, int nilp_lb) {
    SpringerBounds b;
    b.ss_bound = (levi_minimum + 1) / 2;
    b.nilp_bound = (nilp_lb + 1) / 2;
    b.element_bound = std::min(b.ss_bound, b.nilp_bound);
    b.pencil_bound = b.element_bound - 1;
    return b;
}

SpringerBounds springer_bounds(const RootSystem& rs) {
    return make_springer_bounds(min_semisimple_complement(rs).minimum, nilpotent_centralizer_lb(rs));
}

int reference_levi_minimum(RootType t, int rank) {
    switch (t) {
        case RootType::A: return 2 * rank;
        case RootType::B:
        case RootType::C: return 4 * rank - 2;
        case RootType::D: return 4 * rank - 4;
        case RootType::E: return rank == 6 ? 36 : (rank == 7 ? 54 : 114);
        case RootType::F: return 30;
        case RootType::G: return 16;  // tabulated claim; the brute force says less
    }
    return -1;
}

int reference_nilp_half_bound(RootType t, int rank) {
    switch (t) {
        case RootType::A: return rank;
        case RootType::B: return 2 * rank - 2;
        case RootType::C: return rank;
        case RootType::D: return 2 * rank - 3;
        case RootType::E: return rank == 6 ? 11 : (rank == 7 ? 17 : 27);
        case RootType::F: return 8;
        case RootType::G: return 3;
    }
    return -1;
}

namespace {

std::vector<std::pair<RootType, int>> all_types(int cap) {
    std::vector<std::pair<RootType, int>> ts;
    for (int r = 1; r <= cap; ++r) ts.emplace_back(RootType::A, r);
    for (int r = 2; r <= cap; ++r) ts.emplace_back(RootType::B, r);
    for (int r = 3; r <= cap; ++r) ts.emplace_back(RootType::C, r);
    for (int r = 4; r <= cap; ++r) ts.emplace_back(RootType::D, r);
    for (int r = 6; r <= std::min(cap, 8); ++r) ts.emplace_back(RootType::E, r);
    if (cap >= 4) ts.emplace_back(RootType::F, 4);
    if (cap >= 2) ts.emplace_back(RootType::G, 2);
    return ts;
}

EligibilityRow eligibility_row(RootType t, int rank) {
    EligibilityRow row;
    row.type = t;
    row.rank = rank;
    RootSystem rs = build_root_system(t, rank);
    row.root_count = static_cast<int>(rs.roots.size());
    row.cox = coxeter_numbers(rs);
    row.suter_wang = suter_wang_check(rs);
    row.levi = min_semisimple_complement(rs);
    row.nilp_lb = nilpotent_centralizer_lb(rs);
    row.bounds = make_springer_bounds(row.levi.minimum, row.nilp_lb);
    row.eligible = row.bounds.pencil_bound >= 3;

    if (!row.suter_wang.equal)
        row.warnings.push_back("suter-wang count " + std::to_string(row.suter_wang.computed) + " != formula " +
                               std::to_string(row.suter_wang.formula));
    const int ref_levi = reference_levi_minimum(t, rank);
    if (ref_levi >= 0 && ref_levi != row.levi.minimum)
        row.warnings.push_back("levi minimum " + std::to_string(row.levi.minimum) + " != tabulated " +
                               std::to_string(ref_levi));
    const int ref_nilp = reference_nilp_half_bound(t, rank);
    if (ref_nilp >= 0 && ref_nilp != row.bounds.nilp_bound)
        row.warnings.push_back("halved nilpotent bound " + std::to_string(row.bounds.nilp_bound) + " != tabulated " +
                               std::to_string(ref_nilp));
    return row;
}

std::vector<EligibilityRow> eligibility_impl(int rank_cap, bool parallel) {
    if (rank_cap < 1 || rank_cap > 8) throw std::invalid_argument("rank cap must be between 1 and 8");
    std::vector<std::pair<RootType, int>> ts = all_types(rank_cap);
    std::vector<EligibilityRow> rows(ts.size());
    auto work = [&](size_t i) { rows[i] = eligibility_row(ts[i].first, ts[i].second); };
    if (parallel)
        par::for_each_index(ts.size(), work);
    else
        par::for_each_index_serial(ts.size(), work);
    return rows;
}

}  // namespace

std::vector<EligibilityRow> eligibility_report(int rank_cap) { return eligibility_impl(rank_cap, true); }
std::vector<EligibilityRow> eligibility_report_serial(int rank_cap) { return eligibility_impl(rank_cap, false); }

}  // namespace qcas
