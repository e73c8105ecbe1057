// Finite-dimensional Lie algebras over Q given by structure constants, with
// an optional matrix realization kept as a cross-check witness. Subalgebra
// and abelian tests, nilpotency, Jordan types, the orbit classifier for
// two-dimensional subalgebras, and first-cohomology dimensions for the
// quotient module g/h.
#pragma once

#include "qcas/partitions.hpp"
#include "qcas/qmatrix.hpp"

#include <optional>
#include <vector>

namespace qcas {

class LieAlgebra {
public:
    // table[i][j] lists (k, c) with [e_i, e_j] = sum c e_k, stored for i < j.
    // Antisymmetry and the Jacobi identity are checked on construction.
    static LieAlgebra from_structure_constants(int dim,
                                               std::vector<std::vector<std::vector<std::pair<int, Rat>>>> table,
                                               std::optional<std::vector<QMatrix>> realization = std::nullopt);

    // sl_m with basis: E_ij (i != j) in row-major order, then
    // H_k = E_kk - E_(k+1)(k+1).
    static LieAlgebra special_linear(int m);

    int dim() const { return dim_; }
    bool has_realization() const { return realization_.has_value(); }
    const std::vector<QMatrix>& realization() const { return *realization_; }

    QVec bracket(const QVec& x, const QVec& y) const;
    QMatrix ad(const QVec& x) const;
    QMatrix realize(const QVec& coords) const;
    QVec coordinates_of(const QMatrix& m) const;  // only for special_linear algebras

    bool ad_nilpotent(const QVec& x) const;

private:
    LieAlgebra() = default;
    void check_jacobi() const;
    QVec bracket_basis(int i, int j) const;

    int dim_ = 0;
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> table_;  // i < j entries
    std::optional<std::vector<QMatrix>> realization_;
    int sl_size_ = 0;  // m for sl_m factories, 0 otherwise
};

struct Subspace {
    const LieAlgebra* algebra = nullptr;
    std::vector<QVec> basis;  // linearly independent, enforced by make_subspace
};

Subspace make_subspace(const LieAlgebra& algebra, std::vector<QVec> basis);

// Validated triple: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
struct SL2Triple {
    const LieAlgebra* algebra = nullptr;
    QVec e, h, f;
};
SL2Triple make_sl2_triple(const LieAlgebra& algebra, QVec e, QVec h, QVec f);

bool is_subalgebra(const Subspace& v);
bool is_abelian(const Subspace& v);  // requires is_subalgebra

// Jordan type of a nilpotent matrix from ranks of its powers; throws on a
// non-nilpotent input.
Partition jordan_type(const QMatrix& nilpotent);

// Orbit classifier for 2-dimensional subalgebras: abelian planes map to the
// zero orbit (nullopt); otherwise the derived line must be one-dimensional
// with an ad-nilpotent generator whose Jordan type is returned.
std::optional<Partition> orbit_of_subalgebra(const Subspace& h);

struct CocycleDims {
    int z1 = 0;
    int b1 = 0;
    int h1 = 0;
};

// Dimensions of derivations h -> g/h, inner derivations, and their quotient.
CocycleDims cocycle_dims(const Subspace& h);

// Dimension of the joint kernel of the induced actions of h on g/h.
int invariant_subspace_dim(const Subspace& h);

// det-1 rational conjugator built from seeded elementary operations,
// together with its inverse.
struct Conjugator {
    QMatrix g;
    QMatrix g_inv;
};
Conjugator random_conjugator(int size, unsigned long long seed);

}  // namespace qcas
