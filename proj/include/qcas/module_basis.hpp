// Submodules of finite free modules over the polynomial ring: Groebner bases
// under the position-over-term order, syzygy kernels, module quotients and
// saturation, and the orthogonal / double-orthogonal construction.
#pragma once

#include "qcas/ideal.hpp"

#include <list>
#include <mutex>
#include <vector>

namespace qcas {

using PolyVec = std::vector<Poly>;  // element of a rank-k free module

// Reduced module Groebner basis: monic, auto-reduced, sorted. Position 0
// dominates position 1 and so on; within a position the ring order applies.
std::vector<PolyVec> module_groebner(int rank, const std::vector<PolyVec>& gens, const MonOrder& order);

PolyVec vector_normal_form(const PolyVec& v, const std::vector<PolyVec>& gb, const MonOrder& order);

class SubmoduleBasis {
public:
    SubmoduleBasis() = default;
    SubmoduleBasis(RingPtr ring, int rank, std::vector<PolyVec> gens);
    SubmoduleBasis(const SubmoduleBasis& other);
    SubmoduleBasis& operator=(const SubmoduleBasis& other);

    const RingPtr& ring() const { return ring_; }
    int rank() const { return rank_; }
    const std::vector<PolyVec>& gens() const { return gens_; }

    const std::vector<PolyVec>& groebner(const MonOrder& order = MonOrder::grevlex()) const;
    bool contains(const PolyVec& v, const MonOrder& order = MonOrder::grevlex()) const;

private:
    RingPtr ring_;
    int rank_ = 0;
    std::vector<PolyVec> gens_;
    mutable std::mutex mu_;
    mutable std::list<std::pair<std::string, std::vector<PolyVec>>> gb_cache_;
};

bool module_equal(const SubmoduleBasis& a, const SubmoduleBasis& b);
bool module_subset(const SubmoduleBasis& a, const SubmoduleBasis& b);

// Generators of {v in R^m : map . v = 0} for a k x m matrix, i.e. the syzygy
// module of the columns.
SubmoduleBasis module_kernel(const PolyMatrix& map, int source_rank);

// (M : f) = {v : f v in M}.
SubmoduleBasis module_quotient(const SubmoduleBasis& m, const Poly& f);

// (M : f^inf) with the stabilisation exponent; same 64-round contract as the
// ideal version.
std::pair<SubmoduleBasis, int> module_saturate(const SubmoduleBasis& m, const Poly& f);

// M-perp inside the dual free module, realised as a syzygy kernel.
SubmoduleBasis orthogonal(const SubmoduleBasis& m);
SubmoduleBasis double_orthogonal(const SubmoduleBasis& m);

// Syzygy route for (I : f); definition lives here because it rides on the
// module engine.
// (declared in ideal.hpp)

}  // namespace qcas
