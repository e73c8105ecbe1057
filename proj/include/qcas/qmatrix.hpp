// Dense exact linear algebra over the rationals: reduced row echelon form,
// rank, kernel bases, solving. Pivoting always takes the first nonzero entry
// so results are deterministic.
#pragma once

#include "qcas/rational.hpp"

#include <vector>

namespace qcas {

using QVec = std::vector<Rat>;

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}
    QMatrix(int rows, int cols, std::vector<Rat> entries);

    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<QVec>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    QVec row(int r) const;
    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& other) const;
    QMatrix operator+(const QMatrix& other) const;
    QMatrix operator-(const QMatrix& other) const;
    QMatrix scaled(const Rat& c) const;
    QVec apply(const QVec& v) const;
    bool operator==(const QMatrix& other) const = default;
    bool is_zero() const;
    Rat trace() const;
    QMatrix power(int e) const;

    friend QMatrix commutator(const QMatrix& x, const QMatrix& y);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

struct RrefResult {
    QMatrix matrix;
    int rank = 0;
    std::vector<int> pivot_cols;
};

RrefResult rref(const QMatrix& m);
int rank(const QMatrix& m);

// Basis of {v : Mv = 0}; size is cols - rank.
std::vector<QVec> kernel_basis(const QMatrix& m);

// One solution of Mx = b, or empty if inconsistent.
bool solve(const QMatrix& m, const QVec& b, QVec& x);

// Inverse of a square invertible matrix; throws on singular input.
QMatrix inverse(const QMatrix& m);

}  // namespace qcas
