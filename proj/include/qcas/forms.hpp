// Exterior q-forms and polynomial vector fields on an affine chart. The
// chart may sit inside a larger coefficient ring: `fiber_vars` lists the
// variables that carry differentials, anything else rides along as a
// parameter (the one-parameter families of the examples use this).
#pragma once

#include "qcas/module_basis.hpp"

#include <map>
#include <vector>

namespace qcas {

struct Chart {
    RingPtr ring;
    std::vector<int> fiber_vars;  // ring variable indices carrying dx
    int dim() const { return static_cast<int>(fiber_vars.size()); }
    bool operator==(const Chart& o) const { return ring == o.ring && fiber_vars == o.fiber_vars; }
};

Chart full_chart(const RingPtr& ring);
Chart make_chart(const RingPtr& ring, std::vector<int> fiber_vars);

struct PolyVectorField {
    Chart chart;
    PolyVec components;  // one polynomial per fiber variable
};

PolyVectorField make_field(const Chart& chart, PolyVec components);

class ExteriorForm {
public:
    ExteriorForm() = default;
    ExteriorForm(Chart chart, int degree);

    const Chart& chart() const { return chart_; }
    int degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    // keys are strictly increasing tuples of fiber positions
    const std::map<std::vector<int>, Poly>& coeffs() const { return coeffs_; }

    void add_term(std::vector<int> indices, const Poly& coeff);  // sorts, tracks sign, drops repeats
    Poly coeff(const std::vector<int>& sorted_indices) const;

    ExteriorForm operator+(const ExteriorForm& other) const;
    ExteriorForm operator-() const;
    ExteriorForm scale(const Poly& f) const;
    bool operator==(const ExteriorForm& other) const;

private:
    Chart chart_;
    int degree_ = 0;
    std::map<std::vector<int>, Poly> coeffs_;
};

// Basis q-form dx_i1 ^ ... ^ dx_iq (positions into the chart).
ExteriorForm basis_form(const Chart& chart, std::vector<int> indices);
// 1-form with the given coefficients.
ExteriorForm one_form(const Chart& chart, const PolyVec& coefficients);

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);
ExteriorForm contract(const PolyVectorField& v, const ExteriorForm& a);
ExteriorForm exterior_derivative(const ExteriorForm& a);

// Ker_omega: generators of {v : i_v omega = 0} inside the rank-dim free
// module, via the syzygy kernel of the contraction matrix.
SubmoduleBasis kernel_module(const ExteriorForm& omega);

// Grassmann-Pluecker relations of the coefficient family vanish identically.
bool is_decomposable_generic(const ExteriorForm& omega);

// Ideal of all coefficients; cuts out the singular set of the form.
Ideal singular_ideal(const ExteriorForm& omega);

// singular_ideal(omega) + singular_ideal(d omega): the non-Kupka locus.
Ideal nonkupka_ideal(const ExteriorForm& omega);

PolyVectorField bracket_fields(const PolyVectorField& v, const PolyVectorField& w);

// Pairwise brackets of the generators reduce to zero against the module
// basis of the (saturated) submodule.
bool is_involutive(const std::vector<PolyVectorField>& gens, const SubmoduleBasis& saturated);

}  // namespace qcas
