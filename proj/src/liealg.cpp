#include "qcas/liealg.hpp"

#include <random>
#include <stdexcept>

namespace qcas {

namespace {

void add_sparse(QVec& acc, const std::vector<std::pair<int, Rat>>& v, const Rat& scale) {
    for (const auto& [k, c] : v) acc[k] += c * scale;
}

}  // namespace

LieAlgebra LieAlgebra::from_structure_constants(int dim,
                                                std::vector<std::vector<std::vector<std::pair<int, Rat>>>> table,
                                                std::optional<std::vector<QMatrix>> realization) {
    LieAlgebra g;
    g.dim_ = dim;
    g.table_ = std::move(table);
    g.realization_ = std::move(realization);
    if (static_cast<int>(g.table_.size()) != dim) throw std::invalid_argument("structure table size mismatch");
    for (const auto& row : g.table_)
        if (static_cast<int>(row.size()) != dim) throw std::invalid_argument("structure table size mismatch");
    g.check_jacobi();
    if (g.realization_) {
        if (static_cast<int>(g.realization_->size()) != dim) throw std::invalid_argument("realization size mismatch");
        // bracket of realizations must equal realization of bracket
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j) {
                QMatrix lhs = commutator((*g.realization_)[i], (*g.realization_)[j]);
                if (!(lhs - g.realize(g.bracket_basis(i, j))).is_zero())
                    throw std::invalid_argument("realization does not respect the bracket");
            }
    }
    return g;
}

QVec LieAlgebra::bracket_basis(int i, int j) const {
    QVec out(dim_, Rat(0));
    if (i == j) return out;
    if (i < j) {
        add_sparse(out, table_[i][j], Rat(1));
    } else {
        add_sparse(out, table_[j][i], Rat(-1));
    }
    return out;
}

void LieAlgebra::check_jacobi() const {
    // sparse evaluation of [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
    auto bracket_sparse_basis = [&](const QVec& x, int k, QVec& acc, const Rat& scale) {
        for (int a = 0; a < dim_; ++a) {
            if (is_zero(x[a])) continue;
            QVec br = bracket_basis(a, k);
            for (int b = 0; b < dim_; ++b)
                if (!is_zero(br[b])) acc[b] += scale * x[a] * br[b];
        }
    };
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j) {
            QVec cij = bracket_basis(i, j);
            for (int k = j + 1; k < dim_; ++k) {
                QVec acc(dim_, Rat(0));
                bracket_sparse_basis(cij, k, acc, Rat(1));
                QVec cjk = bracket_basis(j, k);
                bracket_sparse_basis(cjk, i, acc, Rat(1));
                QVec cki = bracket_basis(k, i);
                bracket_sparse_basis(cki, j, acc, Rat(1));
                for (const Rat& c : acc)
                    if (!is_zero(c)) throw std::invalid_argument("Jacobi identity fails");
            }
        }
}

LieAlgebra LieAlgebra::special_linear(int m) {
    if (m < 2) throw std::invalid_argument("special_linear wants m >= 2");
    const int dim = m * m - 1;
    std::vector<QMatrix> basis;
    basis.reserve(dim);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            QMatrix e(m, m);
            e.at(i, j) = 1;
            basis.push_back(std::move(e));
        }
    for (int k = 0; k + 1 < m; ++k) {
        QMatrix h(m, m);
        h.at(k, k) = 1;
        h.at(k + 1, k + 1) = -1;
        basis.push_back(std::move(h));
    }

    LieAlgebra g;
    g.dim_ = dim;
    g.sl_size_ = m;
    g.realization_ = basis;
    g.table_.assign(dim, std::vector<std::vector<std::pair<int, Rat>>>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            QMatrix c = commutator(basis[i], basis[j]);
            QVec coords = g.coordinates_of(c);
            std::vector<std::pair<int, Rat>> sparse;
            for (int k = 0; k < dim; ++k)
                if (!is_zero(coords[k])) sparse.emplace_back(k, coords[k]);
            g.table_[i][j] = std::move(sparse);
        }
    g.check_jacobi();
    return g;
}

QVec LieAlgebra::coordinates_of(const QMatrix& m) const {
    if (sl_size_ == 0) throw std::logic_error("coordinates_of requires an sl factory algebra");
    const int s = sl_size_;
    if (m.rows() != s || m.cols() != s) throw std::invalid_argument("matrix size mismatch");
    if (!is_zero(m.trace())) throw std::invalid_argument("matrix is not traceless");
    QVec coords(dim_, Rat(0));
    int idx = 0;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            if (i == j) continue;
            coords[idx++] = m.at(i, j);
        }
    // diagonal part: coefficient of H_k is the k-th partial sum
    Rat partial(0);
    for (int k = 0; k + 1 < s; ++k) {
        partial += m.at(k, k);
        coords[idx++] = partial;
    }
    return coords;
}

QVec LieAlgebra::bracket(const QVec& x, const QVec& y) const {
    if (x.size() != static_cast<size_t>(dim_) || y.size() != static_cast<size_t>(dim_))
        throw std::invalid_argument("element dimension mismatch");
    QVec out(dim_, Rat(0));
    for (int i = 0; i < dim_; ++i) {
        if (is_zero(x[i])) continue;
        for (int j = 0; j < dim_; ++j) {
            if (is_zero(y[j]) || i == j) continue;
            const Rat scale = x[i] * y[j];
            if (i < j)
                add_sparse(out, table_[i][j], scale);
            else
                add_sparse(out, table_[j][i], -scale);
        }
    }
    return out;
}

QMatrix LieAlgebra::ad(const QVec& x) const {
    QMatrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        QVec ej(dim_, Rat(0));
        ej[j] = 1;
        QVec col = bracket(x, ej);
        for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

QMatrix LieAlgebra::realize(const QVec& coords) const {
    if (!realization_) throw std::logic_error("algebra has no matrix realization");
    const QMatrix& first = (*realization_)[0];
    QMatrix acc(first.rows(), first.cols());
    for (int i = 0; i < dim_; ++i)
        if (!is_zero(coords[i])) acc = acc + (*realization_)[i].scaled(coords[i]);
    return acc;
}

bool LieAlgebra::ad_nilpotent(const QVec& x) const {
    QMatrix a = ad(x);
    return a.power(dim_).is_zero();
}

Subspace make_subspace(const LieAlgebra& algebra, std::vector<QVec> basis) {
    QMatrix m = QMatrix::from_rows(basis);
    if (!basis.empty() && rank(m) != static_cast<int>(basis.size()))
        throw std::invalid_argument("subspace basis is linearly dependent");
    return Subspace{&algebra, std::move(basis)};
}

SL2Triple make_sl2_triple(const LieAlgebra& algebra, QVec e, QVec h, QVec f) {
    auto scaled = [](const QVec& v, int c) {
        QVec out(v.size());
        for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
        return out;
    };
    if (algebra.bracket(h, e) != scaled(e, 2)) throw std::invalid_argument("[h,e] != 2e");
    if (algebra.bracket(h, f) != scaled(f, -2)) throw std::invalid_argument("[h,f] != -2f");
    if (algebra.bracket(e, f) != h) throw std::invalid_argument("[e,f] != h");
    return SL2Triple{&algebra, std::move(e), std::move(h), std::move(f)};
}

bool is_subalgebra(const Subspace& v) {
    if (v.basis.empty()) return true;
    std::vector<QVec> rows = v.basis;
    const int base_rank = rank(QMatrix::from_rows(rows));
    for (size_t i = 0; i < v.basis.size(); ++i)
        for (size_t j = i + 1; j < v.basis.size(); ++j) rows.push_back(v.algebra->bracket(v.basis[i], v.basis[j]));
    return rank(QMatrix::from_rows(rows)) == base_rank;
}

bool is_abelian(const Subspace& v) {
    if (!is_subalgebra(v)) throw std::invalid_argument("not a subalgebra");
    for (size_t i = 0; i < v.basis.size(); ++i)
        for (size_t j = i + 1; j < v.basis.size(); ++j) {
            QVec br = v.algebra->bracket(v.basis[i], v.basis[j]);
            for (const Rat& c : br)
                if (!is_zero(c)) return false;
        }
    return true;
}

Partition jordan_type(const QMatrix& nilpotent) {
    const int n = nilpotent.rows();
    if (n != nilpotent.cols()) throw std::invalid_argument("jordan_type wants a square matrix");
    if (!nilpotent.power(n).is_zero()) throw std::invalid_argument("matrix is not nilpotent");
    // multiplicity of parts >= k equals rank(x^(k-1)) - rank(x^k)
    std::vector<int> ranks;
    QMatrix p = QMatrix::identity(n);
    ranks.push_back(n);
    for (int k = 1; k <= n; ++k) {
        p = p * nilpotent;
        ranks.push_back(rank(p));
        if (ranks.back() == 0) break;
    }
    std::vector<int> ge;  // ge[k-1] = number of parts of size >= k
    for (size_t k = 1; k < ranks.size(); ++k) ge.push_back(ranks[k - 1] - ranks[k]);
    std::vector<int> parts;
    const int npart = ge.empty() ? 0 : ge[0];
    for (int j = 1; j <= npart; ++j) {
        int len = 0;
        for (int v : ge)
            if (v >= j) ++len;
        parts.push_back(len);
    }
    return make_partition(parts);
}

std::optional<Partition> orbit_of_subalgebra(const Subspace& h) {
    if (h.basis.size() != 2) throw std::invalid_argument("orbit classifier wants a 2-dimensional subspace");
    if (!is_subalgebra(h)) throw std::invalid_argument("not a subalgebra");
    if (is_abelian(h)) return std::nullopt;  // the zero orbit

    QVec derived = h.algebra->bracket(h.basis[0], h.basis[1]);
    std::vector<QVec> rows{derived};
    if (rank(QMatrix::from_rows(rows)) != 1)
        throw std::invalid_argument("derived algebra of a non-abelian plane must be a line");
    if (!h.algebra->ad_nilpotent(derived)) throw std::invalid_argument("derived line is not nilpotent");
    if (!h.algebra->has_realization()) throw std::invalid_argument("orbit classification needs a matrix realization");
    return jordan_type(h.algebra->realize(derived));
}

namespace {

// Quotient bookkeeping for g/h: a change-of-basis whose first r columns are
// the h-basis and whose remaining columns are standard vectors.
struct QuotientData {
    QMatrix basis_inv;            // inverse of [h_1 .. h_r e_c1 .. e_cq]
    std::vector<int> complement;  // the chosen standard indices
    int r = 0;
    int q = 0;
};

QuotientData quotient_data(const Subspace& h) {
    const int d = h.algebra->dim();
    const int r = static_cast<int>(h.basis.size());
    RrefResult rr = rref(QMatrix::from_rows(h.basis));
    std::vector<bool> pivot(d, false);
    for (int c : rr.pivot_cols) pivot[c] = true;

    QuotientData qd;
    qd.r = r;
    for (int c = 0; c < d; ++c)
        if (!pivot[c]) qd.complement.push_back(c);
    qd.q = static_cast<int>(qd.complement.size());

    QMatrix basis(d, d);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < d; ++i) basis.at(i, j) = h.basis[j][i];
    for (int j = 0; j < qd.q; ++j) basis.at(qd.complement[j], r + j) = 1;
    qd.basis_inv = inverse(basis);
    return qd;
}

QVec quotient_coords(const QuotientData& qd, const QVec& v) {
    QVec full = qd.basis_inv.apply(v);
    return QVec(full.begin() + qd.r, full.end());
}

QVec h_coords(const QuotientData& qd, const QVec& v) {
    QVec full = qd.basis_inv.apply(v);
    QVec head(full.begin(), full.begin() + qd.r);
    // also confirm the vector lies in h
    for (size_t i = qd.r; i < full.size(); ++i)
        if (!is_zero(full[i])) throw std::invalid_argument("vector not inside the subalgebra");
    return head;
}

// action of h.basis[i] on the quotient in the complement coordinates
std::vector<QMatrix> quotient_actions(const Subspace& h, const QuotientData& qd) {
    std::vector<QMatrix> acts;
    const int d = h.algebra->dim();
    for (const QVec& hi : h.basis) {
        QMatrix a(qd.q, qd.q);
        for (int j = 0; j < qd.q; ++j) {
            QVec ej(d, Rat(0));
            ej[qd.complement[j]] = 1;
            QVec img = quotient_coords(qd, h.algebra->bracket(hi, ej));
            for (int i = 0; i < qd.q; ++i) a.at(i, j) = img[i];
        }
        acts.push_back(std::move(a));
    }
    return acts;
}

}  // namespace

CocycleDims cocycle_dims(const Subspace& h) {
    if (!is_subalgebra(h)) throw std::invalid_argument("not a subalgebra");
    CocycleDims out;
    const int r = static_cast<int>(h.basis.size());
    if (r == 0) return out;
    QuotientData qd = quotient_data(h);
    const int q = qd.q;
    if (q == 0) return out;  // h = g, quotient vanishes

    std::vector<QMatrix> acts = quotient_actions(h, qd);

    // unknowns: delta(h_1), ..., delta(h_r) stacked, r*q of them;
    // one block of q equations per pair (i, j):
    //   sum_k gamma_k delta(h_k) - A_i delta(h_j) + A_j delta(h_i) = 0
    const int unknowns = r * q;
    std::vector<QVec> rows;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            QVec gamma = h_coords(qd, h.algebra->bracket(h.basis[i], h.basis[j]));
            for (int row = 0; row < q; ++row) {
                QVec eq(unknowns, Rat(0));
                for (int k = 0; k < r; ++k) eq[k * q + row] += gamma[k];
                for (int col = 0; col < q; ++col) {
                    eq[j * q + col] -= acts[i].at(row, col);
                    eq[i * q + col] += acts[j].at(row, col);
                }
                rows.push_back(std::move(eq));
            }
        }

    if (rows.empty()) {
        out.z1 = unknowns;  // r < 2: every linear map is a cocycle
    } else {
        out.z1 = unknowns - rank(QMatrix::from_rows(rows));
    }

    // inner derivations: m |-> ([h_1, m], ..., [h_r, m]) in quotient coords
    std::vector<QVec> stacked;
    for (int row = 0; row < r * q; ++row) {
        QVec line(q, Rat(0));
        const int i = row / q;
        const int rr = row % q;
        for (int col = 0; col < q; ++col) line[col] = acts[i].at(rr, col);
        stacked.push_back(std::move(line));
    }
    out.b1 = rank(QMatrix::from_rows(stacked));
    out.h1 = out.z1 - out.b1;
    return out;
}

int invariant_subspace_dim(const Subspace& h) {
    if (!is_subalgebra(h)) throw std::invalid_argument("not a subalgebra");
    QuotientData qd = quotient_data(h);
    if (qd.q == 0) return 0;
    std::vector<QMatrix> acts = quotient_actions(h, qd);
    std::vector<QVec> stacked;
    for (const QMatrix& a : acts)
        for (int i = 0; i < a.rows(); ++i) stacked.push_back(a.row(i));
    if (stacked.empty()) return qd.q;
    return qd.q - rank(QMatrix::from_rows(stacked));
}

Conjugator random_conjugator(int size, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, size - 1);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);

    QMatrix g = QMatrix::identity(size);
    QMatrix g_inv = QMatrix::identity(size);
    int made = 0;
    while (made < 2 * size) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        int n = num(rng);
        if (n == 0) continue;
        Rat c = rat(n, den(rng));
        QMatrix e = QMatrix::identity(size);
        e.at(i, j) = c;
        QMatrix e_inv = QMatrix::identity(size);
        e_inv.at(i, j) = -c;
        g = g * e;
        g_inv = e_inv * g_inv;
        ++made;
    }
    return {g, g_inv};
}

}  // namespace qcas
