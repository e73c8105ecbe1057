// Polynomial ideals with reduced Groebner bases (Buchberger with the
// Gebauer-Moeller pair criteria, normal selection). Quotients, saturation,
// elimination, Krull dimension via independent variable sets, and minor /
// Fitting ideals of polynomial matrices.
#pragma once

#include "qcas/polynomial.hpp"

#include <list>
#include <mutex>
#include <utility>
#include <vector>

namespace qcas {

using PolyMatrix = std::vector<std::vector<Poly>>;  // rows of entries, rectangular

// Reduced Groebner basis of the ideal generated by gens: monic, auto-reduced,
// sorted by leading monomial ascending. Unique for a fixed order.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const MonOrder& order);

// Remainder of full division by a Groebner basis; no term of the result is
// divisible by any basis leading term, and f - result lies in the ideal.
Poly normal_form(const Poly& f, const std::vector<Poly>& gb, const MonOrder& order);

class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Poly> gens);
    Ideal(const Ideal& other);
    Ideal& operator=(const Ideal& other);

    static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
    static Ideal unit(const RingPtr& ring) { return Ideal(ring, {Poly::constant(ring, Rat(1))}); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }

    // Cached per order; safe for concurrent readers.
    const std::vector<Poly>& groebner(const MonOrder& order = MonOrder::grevlex()) const;

    bool contains(const Poly& f, const MonOrder& order = MonOrder::grevlex()) const;
    bool is_unit(const MonOrder& order = MonOrder::grevlex()) const;
    bool is_zero() const;

private:
    RingPtr ring_;
    std::vector<Poly> gens_;
    mutable std::mutex mu_;
    // list: published entries must keep their addresses while new orders land
    mutable std::list<std::pair<std::string, std::vector<Poly>>> gb_cache_;
};

bool ideal_equal(const Ideal& a, const Ideal& b);
bool ideal_subset(const Ideal& a, const Ideal& b);  // a contained in b

// (I : f), elements g with g*f in I. Syzygy method; see also the
// intersection route below, kept as an independent oracle.
Ideal ideal_quotient(const Ideal& ideal, const Poly& f);
Ideal ideal_quotient_by_intersection(const Ideal& ideal, const Poly& f);

// I cap J via an auxiliary-variable elimination.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

// (I : f^inf) plus the first exponent at which the chain stabilises.
// Throws after 64 rounds without stabilisation.
std::pair<Ideal, int> saturate(const Ideal& ideal, const Poly& f);

// I cap Q[vars not removed], returned over the same ring; generators do not
// mention removed variables.
Ideal eliminate(const Ideal& ideal, const std::vector<bool>& remove_vars);

// Krull dimension of R/I, computed on the leading-term ideal by exhaustive
// search for maximal independent variable sets. Unit ideal gives -1.
int krull_dimension(const Ideal& ideal);

// Exact division f / g when g divides f; false if it does not.
bool poly_divide_exact(const Poly& f, const Poly& g, Poly& quotient);

// All size x size minors of a rectangular polynomial matrix, computed by
// Laplace expansion with shared sub-minors (level-by-level dynamic
// programming; the per-level loop is the parallel kernel).
std::vector<Poly> minors(const PolyMatrix& m, int size);
std::vector<Poly> minors_serial(const PolyMatrix& m, int size);

// Fitt_i of the cokernel of a presentation with k rows: ideal of the
// (k-i)-minors. Fitt_i is (1) once k-i <= 0 and (0) once k-i exceeds the
// matrix format.
Ideal fitting_ideal(const PolyMatrix& presentation, int index);

}  // namespace qcas
