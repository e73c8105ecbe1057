#include "qcas/qmatrix.hpp"

#include <stdexcept>

namespace qcas {

QMatrix::QMatrix(int rows, int cols, std::vector<Rat> entries) : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(rows) * cols) throw std::invalid_argument("entry count mismatch");
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rows) {
    if (rows.empty()) return QMatrix(0, 0);
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows_; ++r) {
        if (rows[r].size() != static_cast<size_t>(m.cols_)) throw std::invalid_argument("ragged rows");
        for (int c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

QVec QMatrix::row(int r) const {
    QVec v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch in product");
    QMatrix p(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(r, k);
            if (qcas::is_zero(x)) continue;
            for (int c = 0; c < other.cols_; ++c) {
                if (qcas::is_zero(other.at(k, c))) continue;
                p.at(r, c) += x * other.at(k, c);
            }
        }
    return p;
}

QMatrix QMatrix::operator+(const QMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("dimension mismatch in sum");
    QMatrix s(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + other.a_[i];
    return s;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("dimension mismatch in difference");
    QMatrix s(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - other.a_[i];
    return s;
}

QMatrix QMatrix::scaled(const Rat& c) const {
    QMatrix s(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] * c;
    return s;
}

QVec QMatrix::apply(const QVec& v) const {
    if (v.size() != static_cast<size_t>(cols_)) throw std::invalid_argument("dimension mismatch in apply");
    QVec out(rows_, Rat(0));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!qcas::is_zero(at(r, c))) out[r] += at(r, c) * v[c];
    return out;
}

bool QMatrix::is_zero() const {
    for (const Rat& x : a_)
        if (!qcas::is_zero(x)) return false;
    return true;
}

Rat QMatrix::trace() const {
    Rat t(0);
    for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

QMatrix QMatrix::power(int e) const {
    if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
    QMatrix acc = identity(rows_);
    for (int i = 0; i < e; ++i) acc = acc * (*this);
    return acc;
}

QMatrix commutator(const QMatrix& x, const QMatrix& y) { return x * y - y * x; }

RrefResult rref(const QMatrix& m) {
    RrefResult res;
    res.matrix = m;
    QMatrix& a = res.matrix;
    int lead = 0;
    for (int c = 0; c < a.cols() && lead < a.rows(); ++c) {
        int piv = -1;
        for (int r = lead; r < a.rows(); ++r)
            if (!qcas::is_zero(a.at(r, c))) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int k = 0; k < a.cols(); ++k) std::swap(a.at(piv, k), a.at(lead, k));
        const Rat inv = Rat(1) / a.at(lead, c);
        for (int k = c; k < a.cols(); ++k) a.at(lead, k) *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == lead || qcas::is_zero(a.at(r, c))) continue;
            const Rat f = a.at(r, c);
            for (int k = c; k < a.cols(); ++k) a.at(r, k) -= f * a.at(lead, k);
        }
        res.pivot_cols.push_back(c);
        ++lead;
    }
    res.rank = lead;
    return res;
}

int rank(const QMatrix& m) { return rref(m).rank; }

std::vector<QVec> kernel_basis(const QMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        QVec v(m.cols(), Rat(0));
        v[free] = 1;
        for (size_t p = 0; p < r.pivot_cols.size(); ++p) v[r.pivot_cols[p]] = -r.matrix.at(static_cast<int>(p), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve(const QMatrix& m, const QVec& b, QVec& x) {
    QMatrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    RrefResult rr = rref(aug);
    for (int c : rr.pivot_cols)
        if (c == m.cols()) return false;  // inconsistent
    x.assign(m.cols(), Rat(0));
    for (size_t p = 0; p < rr.pivot_cols.size(); ++p) x[rr.pivot_cols[p]] = rr.matrix.at(static_cast<int>(p), m.cols());
    return true;
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = m.rows();
    QMatrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    RrefResult rr = rref(aug);
    if (rr.rank != n || rr.pivot_cols.back() >= n) throw std::invalid_argument("singular matrix");
    QMatrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = rr.matrix.at(r, n + c);
    return inv;
}

}  // namespace qcas
