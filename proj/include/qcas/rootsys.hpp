// Root systems of the simple types in explicit lattice coordinates, with the
// combinatorial quantities the codimension bounds need: highest root,
// Coxeter and dual Coxeter numbers, counts of roots off a hyperplane, the
// exhaustive Levi-complement minimum, and the derived bound records.
#pragma once

#include "qcas/qmatrix.hpp"

#include <string>
#include <vector>

namespace qcas {

enum class RootType { A, B, C, D, E, F, G };

std::string root_type_name(RootType t, int rank);

struct RootSystem {
    RootType type;
    int rank = 0;
    int ambient = 0;
    std::vector<QVec> roots;
    std::vector<QVec> simple;          // the base Delta
    std::vector<int> positive;         // indices into roots
    std::vector<std::vector<Rat>> expansions;  // root -> coefficients over Delta
    int highest = -1;                  // index of the highest root

    const QVec& highest_root() const { return roots[highest]; }
};

// Standard coordinate model for the given type and rank; validates the
// classical root count and the base property (every root is an all-nonneg or
// all-nonpos integer combination of Delta).
RootSystem build_root_system(RootType type, int rank);

struct CoxeterNumbers {
    int h = 0;
    int h_dual = 0;
};
CoxeterNumbers coxeter_numbers(const RootSystem& rs);

// #(Phi minus v-perp): roots with nonzero inner product against v.
int count_nonorthogonal(const RootSystem& rs, const QVec& v);

struct SuterWangCheck {
    int computed = 0;  // #(Phi minus highest-root-perp), brute force
    int formula = 0;   // 4 h_dual - 6
    bool equal = false;
};
SuterWangCheck suter_wang_check(const RootSystem& rs);

// min over nonzero semisimple directions of #(Phi minus s-perp), realised as
// |Phi| minus the best proper subset of Delta: exhaustive over all
// 2^rank - 1 proper subsets.
struct LeviMinimum {
    int minimum = 0;
    std::vector<int> witness;  // subset of Delta indices achieving it
};
LeviMinimum min_semisimple_complement(const RootSystem& rs);

// #(Phi^+ minus highest-root-perp) + 1.
int nilpotent_centralizer_lb(const RootSystem& rs);

struct SpringerBounds {
    int ss_bound = 0;       // ceil(min_semisimple_complement / 2)
    int nilp_bound = 0;     // ceil(nilpotent_centralizer_lb / 2)
    int element_bound = 0;  // min of the two
    int pencil_bound = 0;   // element_bound - 1 (a pencil is a P^1 of directions)
};
SpringerBounds springer_bounds(const RootSystem& rs);
SpringerBounds make_springer_bounds(int levi_minimum, int nilp_lb);

struct EligibilityRow {
    RootType type;
    int rank = 0;
    int root_count = 0;
    CoxeterNumbers cox;
    SuterWangCheck suter_wang;
    LeviMinimum levi;
    int nilp_lb = 0;
    SpringerBounds bounds;
    bool eligible = false;  // pencil_bound >= 3
    std::vector<std::string> warnings;
};

// One row per irreducible type of rank <= cap (cap at most 8 so the subset
// search stays exhaustive). Disagreements with the tabulated reference
// values are reported as warnings on the row, never patched over.
std::vector<EligibilityRow> eligibility_report(int rank_cap);
std::vector<EligibilityRow> eligibility_report_serial(int rank_cap);

// Tabulated reference values the report compares against: the semisimple
// complement minima per type and the halved nilpotent bounds.
int reference_levi_minimum(RootType t, int rank);       // -1 when no claim
int reference_nilp_half_bound(RootType t, int rank);    // -1 when no claim

}  // namespace qcas
