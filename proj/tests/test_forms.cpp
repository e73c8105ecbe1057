#include "qcas/forms.hpp"

#include <doctest.h>

#include <random>

using namespace qcas;

namespace {

struct Counterexample {
    // coefficients in Q[t, x, y, z], differentials only in x, y, z
    RingPtr ring = make_ring({"t", "x", "y", "z"});
    Chart chart = make_chart(ring, {1, 2, 3});
    Poly t = Poly::variable(ring, 0);
    Poly x = Poly::variable(ring, 1);
    Poly y = Poly::variable(ring, 2);
    Poly z = Poly::variable(ring, 3);
    Poly one = Poly::constant(ring, Rat(1));
    Poly zero = Poly(ring);

    ExteriorForm omega() const {
        // x dy + y dx + t dz
        ExteriorForm w(chart, 1);
        w.add_term({0}, y);
        w.add_term({1}, x);
        w.add_term({2}, t);
        return w;
    }
};

Poly random_poly(const RingPtr& ring, std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> deg(0, max_deg);
    Poly p(ring);
    for (int t = 0; t < 3; ++t) {
        Mono m(ring->nvars(), 0);
        int budget = deg(rng);
        for (int v = 0; v < ring->nvars() && budget > 0; ++v) {
            int e = deg(rng) % (budget + 1);
            m[v] = e;
            budget -= e;
        }
        p.add_term(m, rat(num(rng)));
    }
    return p;
}

ExteriorForm random_form(const Chart& chart, int degree, std::mt19937_64& rng, int max_deg = 2) {
    ExteriorForm f(chart, degree);
    std::vector<int> idx(degree);
    // a few random strictly increasing tuples
    std::uniform_int_distribution<int> start(0, chart.dim() - degree);
    for (int reps = 0; reps < 3; ++reps) {
        int s = start(rng);
        for (int i = 0; i < degree; ++i) idx[i] = s + i;
        f.add_term(idx, random_poly(chart.ring, rng, max_deg));
    }
    return f;
}

}  // namespace

TEST_CASE("wedge") {
    RingPtr ring = make_ring({"x", "y"});
    Chart ch = full_chart(ring);
    Poly x = Poly::variable(ring, 0), y = Poly::variable(ring, 1);

    ExteriorForm dx = basis_form(ch, {0});
    ExteriorForm dy = basis_form(ch, {1});
    CHECK(wedge(dx, dx).is_zero());
    ExteriorForm dxdy = wedge(dx, dy);
    CHECK(dxdy.coeff({0, 1}) == Poly::constant(ring, Rat(1)));

    // (x dy) ^ (y dx) = -xy dx^dy
    ExteriorForm a = dy.scale(x);
    ExteriorForm b = dx.scale(y);
    ExteriorForm w = wedge(a, b);
    CHECK(w.coeff({0, 1}) == -(x * y));

    // graded antisymmetry for 1-forms
    ExteriorForm ba = wedge(b, a);
    CHECK(ba.coeff({0, 1}) == x * y);
}

TEST_CASE("contraction") {
    RingPtr ring = make_ring({"x", "y", "z"});
    Chart ch = full_chart(ring);
    Poly one = Poly::constant(ring, Rat(1)), zero = Poly(ring);
    Poly x = Poly::variable(ring, 0);

    ExteriorForm dxdy = basis_form(ch, {0, 1});
    PolyVectorField ddx = make_field(ch, {one, zero, zero});
    PolyVectorField ddz = make_field(ch, {zero, zero, one});
    PolyVectorField xddx = make_field(ch, {x, zero, zero});

    CHECK(contract(ddx, dxdy) == basis_form(ch, {1}));
    CHECK(contract(ddz, dxdy).is_zero());
    CHECK(contract(xddx, dxdy) == basis_form(ch, {1}).scale(x));
    CHECK_THROWS(contract(ddx, ExteriorForm(ch, 0)));
}

TEST_CASE("exterior derivative") {
    Counterexample ce;
    SUBCASE("constants and closed forms") {
        ExteriorForm c(ce.chart, 0);
        c.add_term({}, ce.one * Rat(7));
        CHECK(exterior_derivative(c).is_zero());
        CHECK(exterior_derivative(ce.omega()).is_zero());  // the example form is closed
    }
    SUBCASE("d(x dy) = dx ^ dy") {
        ExteriorForm xdy(ce.chart, 1);
        xdy.add_term({1}, ce.x);
        ExteriorForm d = exterior_derivative(xdy);
        CHECK(d.coeff({0, 1}) == ce.one);
        CHECK(d.coeffs().size() == 1);
    }
}

TEST_CASE("d^2 = 0 and repeated contraction vanish on random forms") {
    RingPtr ring = make_ring({"x", "y", "z", "w"});
    Chart ch = full_chart(ring);
    std::mt19937_64 rng(17);
    for (int degree = 1; degree <= 3; ++degree)
        for (int trial = 0; trial < 10; ++trial) {
            ExteriorForm f = random_form(ch, degree, rng, 3);
            CHECK(exterior_derivative(exterior_derivative(f)).is_zero());
            PolyVec comp;
            for (int i = 0; i < 4; ++i) comp.push_back(random_poly(ring, rng, 2));
            PolyVectorField v = make_field(ch, comp);
            if (degree >= 2) CHECK(contract(v, contract(v, f)).is_zero());
            // graded Leibniz rule for contraction against a random 1-form
            ExteriorForm g = random_form(ch, 1, rng, 2);
            ExteriorForm lhs = contract(v, wedge(f, g));
            ExteriorForm rhs = wedge(contract(v, f), g) +
                               (degree % 2 == 0 ? wedge(f, contract(v, g)) : -wedge(f, contract(v, g)));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("kernel modules") {
    Counterexample ce;
    SUBCASE("decomposable basis form has the coordinate kernel") {
        RingPtr ring = make_ring({"x", "y", "z", "w"});
        Chart ch = full_chart(ring);
        SubmoduleBasis k = kernel_module(basis_form(ch, {0, 1}));
        Poly one = Poly::constant(ring, Rat(1)), zero = Poly(ring);
        CHECK(k.contains({zero, zero, one, zero}));
        CHECK(k.contains({zero, zero, zero, one}));
        CHECK(!k.contains({one, zero, zero, zero}));
    }
    SUBCASE("zero form has full kernel") {
        RingPtr ring = make_ring({"x", "y"});
        Chart ch = full_chart(ring);
        SubmoduleBasis k = kernel_module(ExteriorForm(ch, 1));
        CHECK(k.contains({Poly::constant(ring, Rat(1)), Poly(ring)}));
    }
    SUBCASE("the example form has the three displayed generators") {
        SubmoduleBasis k = kernel_module(ce.omega());
        PolyVec g1{ce.x, -ce.y, ce.zero};
        PolyVec g2{ce.t, ce.zero, -ce.y};
        PolyVec g3{ce.zero, ce.t, -ce.x};
        CHECK(k.contains(g1));
        CHECK(k.contains(g2));
        CHECK(k.contains(g3));
        SubmoduleBasis displayed(ce.ring, 3, {g1, g2, g3});
        CHECK(module_equal(k, displayed));
        // contraction really vanishes on every generator
        for (const PolyVec& v : k.gens()) CHECK(contract(make_field(ce.chart, v), ce.omega()).is_zero());
    }
    SUBCASE("kernels equal their double orthogonal") {
        SubmoduleBasis k = kernel_module(ce.omega());
        CHECK(module_equal(double_orthogonal(k), k));
    }
}

TEST_CASE("grassmann-pluecker decomposability") {
    RingPtr ring = make_ring({"x", "y", "z", "w"});
    Chart ch = full_chart(ring);
    SUBCASE("any 1-form is decomposable") {
        std::mt19937_64 rng(23);
        ExteriorForm f = random_form(ch, 1, rng);
        CHECK(is_decomposable_generic(f));
    }
    SUBCASE("dx^dy + dz^dw is not") {
        ExteriorForm f = basis_form(ch, {0, 1}) + basis_form(ch, {2, 3});
        CHECK(!is_decomposable_generic(f));
    }
    SUBCASE("(dx+dz)^(dy-dw) expands to a decomposable form") {
        Poly one = Poly::constant(ring, Rat(1));
        ExteriorForm a = basis_form(ch, {0}) + basis_form(ch, {2});
        ExteriorForm b = basis_form(ch, {1}) + (-basis_form(ch, {3}));
        CHECK(is_decomposable_generic(wedge(a, b)));
    }
    SUBCASE("wedges of polynomial 1-forms are decomposable") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 10; ++trial) {
            PolyVec a, b;
            for (int i = 0; i < 4; ++i) {
                a.push_back(random_poly(ring, rng, 2));
                b.push_back(random_poly(ring, rng, 2));
            }
            CHECK(is_decomposable_generic(wedge(one_form(ch, a), one_form(ch, b))));
        }
    }
    SUBCASE("wedges of random constant 1-forms are decomposable") {
        std::mt19937_64 rng(29);
        std::uniform_int_distribution<int> num(-4, 4);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<ExteriorForm> ones;
            for (int k = 0; k < 2; ++k) {
                PolyVec coeffs;
                for (int i = 0; i < 4; ++i) coeffs.push_back(Poly::constant(ring, rat(num(rng))));
                ones.push_back(one_form(ch, coeffs));
            }
            CHECK(is_decomposable_generic(wedge(ones[0], ones[1])));
        }
    }
}

TEST_CASE("singular and non-kupka ideals") {
    Counterexample ce;
    SUBCASE("nonvanishing form") {
        RingPtr ring = make_ring({"x", "y"});
        Chart ch = full_chart(ring);
        Ideal s = singular_ideal(basis_form(ch, {0}));
        CHECK(s.is_unit());
    }
    SUBCASE("example form vanishes on a line") {
        Ideal s = singular_ideal(ce.omega());
        CHECK(ideal_equal(s, Ideal(ce.ring, {ce.x, ce.y, ce.t})));
    }
    SUBCASE("zero form") {
        CHECK(singular_ideal(ExteriorForm(ce.chart, 1)).is_zero());
        CHECK(nonkupka_ideal(ExteriorForm(ce.chart, 1)).is_zero());
    }
    SUBCASE("rotation form is kupka everywhere") {
        RingPtr ring = make_ring({"x", "y"});
        Chart ch = full_chart(ring);
        Poly x = Poly::variable(ring, 0), y = Poly::variable(ring, 1);
        ExteriorForm w(ch, 1);
        w.add_term({1}, x);   // x dy
        w.add_term({0}, -y);  // -y dx
        CHECK(nonkupka_ideal(w).is_unit());
    }
    SUBCASE("closed form with a singular point is non-kupka there") {
        RingPtr ring = make_ring({"x", "y"});
        Chart ch = full_chart(ring);
        Poly x = Poly::variable(ring, 0), y = Poly::variable(ring, 1);
        ExteriorForm w(ch, 1);
        w.add_term({1}, x);  // x dy
        w.add_term({0}, y);  // y dx: d(xy), closed
        Ideal nk = nonkupka_ideal(w);
        CHECK(ideal_equal(nk, Ideal(ring, {x, y})));
    }
}

TEST_CASE("field brackets and involutivity") {
    Counterexample ce;
    SUBCASE("coordinate fields commute") {
        Poly one = ce.one, zero = ce.zero;
        PolyVectorField d1 = make_field(ce.chart, {one, zero, zero});
        PolyVectorField d2 = make_field(ce.chart, {zero, one, zero});
        PolyVectorField br = bracket_fields(d1, d2);
        for (const Poly& c : br.components) CHECK(c.is_zero());
    }
    SUBCASE("textbook brackets") {
        RingPtr ring = make_ring({"x", "y"});
        Chart ch = full_chart(ring);
        Poly x = Poly::variable(ring, 0), y = Poly::variable(ring, 1);
        Poly one = Poly::constant(ring, Rat(1)), zero = Poly(ring);
        // [x d/dx, d/dx] = -d/dx
        PolyVectorField a = make_field(ch, {x, zero});
        PolyVectorField b = make_field(ch, {one, zero});
        CHECK(bracket_fields(a, b).components == PolyVec{-one, zero});
        // [x d/dy, y d/dx] = x d/dx - y d/dy
        PolyVectorField c = make_field(ch, {zero, x});
        PolyVectorField d = make_field(ch, {y, zero});
        CHECK(bracket_fields(c, d).components == PolyVec{x, -y});
    }
    SUBCASE("kernel of the closed example form is involutive") {
        SubmoduleBasis k = kernel_module(ce.omega());
        std::vector<PolyVectorField> gens;
        for (const PolyVec& v : k.gens()) gens.push_back(make_field(ce.chart, v));
        CHECK(is_involutive(gens, k));
    }
    SUBCASE("the contact frame is not involutive") {
        RingPtr ring = make_ring({"x", "y", "z"});
        Chart ch = full_chart(ring);
        Poly y = Poly::variable(ring, 1);
        Poly one = Poly::constant(ring, Rat(1)), zero = Poly(ring);
        PolyVectorField v1 = make_field(ch, {one, zero, y});  // d/dx + y d/dz
        PolyVectorField v2 = make_field(ch, {zero, one, zero});
        SubmoduleBasis span(ring, 3, {v1.components, v2.components});
        CHECK(!is_involutive({v1, v2}, span));
    }
}

TEST_CASE("restricting the example to t = 0 shifts the fitting chain") {
    Counterexample ce;
    // kernel generators restricted to t = 0
    SubmoduleBasis k = kernel_module(ce.omega());
    std::vector<PolyVec> restricted;
    for (const PolyVec& v : k.gens()) {
        PolyVec w;
        for (const Poly& p : v) w.push_back(p.substitute(0, ce.zero));
        restricted.push_back(std::move(w));
    }
    SubmoduleBasis m0(ce.ring, 3, restricted);

    // strong saturation via the double orthogonal: the fibre tangent module
    SubmoduleBasis fibre = double_orthogonal(m0);
    PolyVec want1{ce.x, -ce.y, ce.zero};
    PolyVec want2{ce.zero, ce.zero, ce.one};
    CHECK(fibre.contains(want1));
    CHECK(fibre.contains(want2));
    CHECK(module_equal(fibre, SubmoduleBasis(ce.ring, 3, {want1, want2})));

    // the torsion-free route agrees here: saturating against the regular
    // element y reaches the same module
    auto [tof, exponent] = module_saturate(m0, ce.y);
    CHECK(module_equal(tof, fibre));
    CHECK(exponent == 1);

    // free of rank two: the two generators admit no syzygy
    PolyMatrix cols(3, std::vector<Poly>(2, ce.zero));
    for (int i = 0; i < 3; ++i) {
        cols[i][0] = want1[i];
        cols[i][1] = want2[i];
    }
    CHECK(module_kernel(cols, 2).gens().empty());

    // the restricted quotient presentation against the fibre quotient
    // presentation: (x,y) appears one fitting index apart
    PolyMatrix restricted_pres{{ce.x, ce.zero, ce.zero}, {-ce.y, ce.zero, ce.zero}, {ce.zero, -ce.y, -ce.x}};
    PolyMatrix fibre_pres{{ce.x, ce.zero, ce.zero}, {-ce.y, ce.zero, ce.zero}, {ce.zero, ce.one, ce.one}};
    Ideal xy(ce.ring, {ce.x, ce.y});

    auto first_index_equal = [&](const PolyMatrix& pres, const Ideal& target) {
        for (int i = 0; i <= 3; ++i)
            if (ideal_equal(fitting_ideal(pres, i), target)) return i;
        return -1;
    };
    CHECK(first_index_equal(restricted_pres, xy) == 2);
    CHECK(first_index_equal(fibre_pres, xy) == 1);

    auto first_unit = [&](const PolyMatrix& pres) {
        for (int i = 0; i <= 3; ++i)
            if (fitting_ideal(pres, i).is_unit()) return i;
        return -1;
    };
    CHECK(first_unit(restricted_pres) == 3);
    CHECK(first_unit(fibre_pres) == 2);
}
