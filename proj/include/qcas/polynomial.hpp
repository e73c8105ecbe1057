// Sparse multivariate polynomials over the rationals. Terms live in a map
// keyed by exponent vector, so the representation is canonical and
// independent of any monomial order; orders only matter to the basis
// machinery in ideal.hpp.
//
// Text form used by golden files and the CLI:
//   ring t x0 x1 order grevlex
//   3/2*x0^2*t - x1
#pragma once

#include "qcas/monomial.hpp"
#include "qcas/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qcas {

struct Ring {
    std::vector<std::string> vars;
    int nvars() const { return static_cast<int>(vars.size()); }
    int var_index(const std::string& name) const;  // -1 if absent
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars);

class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, const Rat& constant);

    static Poly variable(const RingPtr& ring, int index, int exponent = 1);
    static Poly constant(const RingPtr& ring, const Rat& c) { return Poly(ring, c); }

    const RingPtr& ring() const { return ring_; }
    const std::map<Mono, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int degree() const;  // total degree, -1 for the zero polynomial
    bool is_homogeneous() const;

    void add_term(const Mono& m, const Rat& c);  // merges, drops zeros

    Poly operator-() const;
    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& other) const { return terms_ == other.terms_; }

    Poly derivative(int var) const;
    Poly substitute(int var, const Poly& value) const;
    Rat evaluate(const std::vector<Rat>& point) const;
    bool uses_var(int var) const;

    std::string to_string() const;

private:
    void check_same_ring(const Poly& other) const;

    RingPtr ring_;
    std::map<Mono, Rat> terms_;
};

Poly poly_parse(const RingPtr& ring, const std::string& text);

// "ring t x0 x1 order grevlex" -> ring + order
struct RingHeader {
    RingPtr ring;
    MonOrder order = MonOrder::grevlex();
};
RingHeader parse_ring_header(const std::string& line);

}  // namespace qcas
