// Fundamental vector fields on projective space coming from traceless
// matrices, the minor ideals cutting out their singular loci, projective
// dimension counts, the t-regularity test for one-parameter families, and
// the per-partition pencil certificates.
#pragma once

#include "qcas/ideal.hpp"
#include "qcas/partitions.hpp"
#include "qcas/qmatrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcas {

struct ProjectiveField {
    int n = 0;                    // projective dimension, so n+1 coordinates
    QMatrix matrix;               // traceless (n+1)x(n+1)
    RingPtr ring;                 // Q[x0..xn]
    std::vector<Poly> components;  // entry i is the coefficient of d/dx_i, row i of A.x
};

// Field with components A.x; linear in A, rejects nonzero trace.
ProjectiveField fundamental_field(const QMatrix& a);
ProjectiveField fundamental_field(const QMatrix& a, const RingPtr& ring);

// Homogeneous coordinate ring of P^n.
RingPtr projective_ring(int n);

// Ideal of 2x2 minors of [x; A.x]: the locus where the field vanishes.
Ideal field_singular_ideal(const ProjectiveField& f);

// Ideal of 3x3 minors of [x; A.x; B.x]: points fixed by some member of the
// pencil spanned by the two matrices.
Ideal pencil_singular_ideal(const QMatrix& a, const QMatrix& b);

// Dimension of the projective zero set: affine cone dimension minus one,
// with -1 for an empty projective set. Rejects inhomogeneous input.
int projective_dimension(const Ideal& homogeneous);

// True when (I : t) = I for the designated variable, i.e. t is a
// nonzerodivisor modulo I.
bool t_flatness_check(const Ideal& ideal, int t_var);

struct PencilMember {
    Rat alpha, beta;
    int dim = 0;
    bool pass = false;
};

struct PencilReport {
    Partition lambda;
    int n = 0;
    int delta = 0;
    bool family_flat = false;
    std::vector<PencilMember> members;
    bool all_pass = false;
};

// Certificate for the pencil spanned by (J_lambda, H_lambda): every sampled
// member's singular locus has projective dimension at most delta =
// |lambda| - 5, and t is regular for the one-parameter family t J + H.
// Samples always include the two axes (1,0) and (0,1).
PencilReport pencil_family_certificate(const Partition& lambda, const std::vector<std::pair<Rat, Rat>>& samples);
PencilReport pencil_family_certificate_serial(const Partition& lambda, const std::vector<std::pair<Rat, Rat>>& samples);

// Seeded sample pairs (alpha, beta), both nonzero, for the certificate.
std::vector<std::pair<Rat, Rat>> sample_pairs(int count, unsigned long long seed);

}  // namespace qcas
