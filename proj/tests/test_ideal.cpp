#include "qcas/ideal.hpp"

#include <doctest.h>

#include <random>

using namespace qcas;

namespace {
struct XY {
    RingPtr ring = make_ring({"x", "y"});
    Poly x = Poly::variable(ring, 0);
    Poly y = Poly::variable(ring, 1);
    Poly one = Poly::constant(ring, Rat(1));
};
}  // namespace

TEST_CASE("groebner basics") {
    XY s;
    SUBCASE("coordinate ideal is its own basis") {
        std::vector<Poly> gb = groebner_basis({s.x, s.y}, MonOrder::lex());
        REQUIRE(gb.size() == 2);
        CHECK(gb[0] == s.y);
        CHECK(gb[1] == s.x);
    }
    SUBCASE("x^2-1 and x-1 collapse to x-1") {
        std::vector<Poly> gb = groebner_basis({s.x * s.x - s.one, s.x - s.one}, MonOrder::grevlex());
        REQUIRE(gb.size() == 1);
        CHECK(gb[0] == s.x - s.one);
    }
    SUBCASE("xy-1 with x^2 is the unit ideal") {
        std::vector<Poly> gb = groebner_basis({s.x * s.y - s.one, s.x * s.x}, MonOrder::grevlex());
        REQUIRE(gb.size() == 1);
        CHECK(gb[0] == s.one);
    }
    SUBCASE("idempotence and generator membership") {
        std::vector<Poly> gens{s.x * s.x * s.y - s.one, s.x * s.y * s.y - s.x, s.y * s.y - s.x};
        std::vector<Poly> gb = groebner_basis(gens, MonOrder::grevlex());
        CHECK(groebner_basis(gb, MonOrder::grevlex()) == gb);
        for (const Poly& g : gens) CHECK(normal_form(g, gb, MonOrder::grevlex()).is_zero());
    }
    SUBCASE("different generating sets of one ideal give the same reduced basis") {
        std::vector<Poly> a{s.x * s.x - s.y, s.y * s.y};
        std::vector<Poly> b{s.x * s.x - s.y + s.y * s.y, s.y * s.y, (s.x * s.x - s.y) * s.x + s.y * s.y};
        CHECK(groebner_basis(a, MonOrder::grevlex()) == groebner_basis(b, MonOrder::grevlex()));
        CHECK(groebner_basis(a, MonOrder::lex()) == groebner_basis(b, MonOrder::lex()));
    }
}

TEST_CASE("normal form examples") {
    XY s;
    Ideal i(s.ring, {s.x * s.x - s.y});
    const std::vector<Poly>& gb = i.groebner();
    CHECK(normal_form(s.x * s.x, gb, MonOrder::grevlex()) == s.y);
    CHECK(normal_form(s.x * s.x - s.y, gb, MonOrder::grevlex()).is_zero());
    CHECK(normal_form(s.one, gb, MonOrder::grevlex()) == s.one);
}

TEST_CASE("ideal quotient") {
    XY s;
    SUBCASE("((xy) : x) = (y)") {
        Ideal i(s.ring, {s.x * s.y});
        Ideal q = ideal_quotient(i, s.x);
        CHECK(ideal_equal(q, Ideal(s.ring, {s.y})));
    }
    SUBCASE("(I : 1) = I") {
        Ideal i(s.ring, {s.x * s.x - s.y, s.y * s.y});
        CHECK(ideal_equal(ideal_quotient(i, s.one), i));
    }
    SUBCASE("syzygy route equals intersection route") {
        std::vector<Ideal> ideals{
            Ideal(s.ring, {s.x * s.y}),
            Ideal(s.ring, {s.x * s.x, s.x * s.y}),
            Ideal(s.ring, {s.x * s.x - s.y, s.y * s.y * s.y}),
        };
        std::vector<Poly> divisors{s.x, s.y, s.x + s.y};
        for (const Ideal& i : ideals)
            for (const Poly& f : divisors) CHECK(ideal_equal(ideal_quotient(i, f), ideal_quotient_by_intersection(i, f)));
    }
    SUBCASE("quotient laws") {
        Ideal i(s.ring, {s.x * s.x, s.x * s.y});
        Poly f = s.x;
        Ideal q = ideal_quotient(i, f);
        for (const Poly& g : q.gens()) CHECK(i.contains(g * f));  // (I:f).f inside I
        CHECK(ideal_subset(i, q));                               // I inside (I:f)
    }
    CHECK_THROWS(ideal_quotient(Ideal(s.ring, {s.x}), Poly(s.ring)));
}

TEST_CASE("saturation") {
    XY s;
    SUBCASE("((x^2, xy) : x^inf) = (1) with exponent 2") {
        Ideal i(s.ring, {s.x * s.x, s.x * s.y});
        auto [sat, e] = saturate(i, s.x);
        CHECK(sat.is_unit());
        CHECK(e == 2);
    }
    SUBCASE("regular element on a prime ideal") {
        Ideal i(s.ring, {s.y});  // prime; x is regular mod I
        auto [sat, e] = saturate(i, s.x);
        CHECK(ideal_equal(sat, i));
        CHECK(e == 0);
    }
    SUBCASE("((t x, t y) : t^inf) = (x, y)") {
        RingPtr r3 = make_ring({"t", "x", "y"});
        Poly t = Poly::variable(r3, 0), x = Poly::variable(r3, 1), y = Poly::variable(r3, 2);
        auto [sat, e] = saturate(Ideal(r3, {t * x, t * y}), t);
        CHECK(ideal_equal(sat, Ideal(r3, {x, y})));
        CHECK(e == 1);
    }
}

TEST_CASE("elimination") {
    SUBCASE("graph projections") {
        XY s;
        Ideal i(s.ring, {s.x - s.y * s.y});
        Ideal e = eliminate(i, {true, false});
        CHECK(e.gens().empty());  // projection hits everything
    }
    SUBCASE("unit ideal stays unit") {
        XY s;
        Ideal i(s.ring, {s.x * s.y - s.one, s.x * s.x});
        Ideal e = eliminate(i, {true, false});
        CHECK(e.is_unit());
    }
    SUBCASE("parabola parametrisation") {
        RingPtr r3 = make_ring({"t", "x", "y"});
        Poly t = Poly::variable(r3, 0), x = Poly::variable(r3, 1), y = Poly::variable(r3, 2);
        Ideal i(r3, {x - t, y - t * t});
        Ideal e = eliminate(i, {true, false, false});
        REQUIRE(e.gens().size() == 1);
        CHECK(ideal_equal(e, Ideal(r3, {y - x * x})));
        // soundness: generators lie in I and avoid t
        for (const Poly& g : e.gens()) {
            CHECK(i.contains(g));
            CHECK(!g.uses_var(0));
        }
    }
}

TEST_CASE("krull dimension") {
    RingPtr r3 = make_ring({"x", "y", "z"});
    CHECK(krull_dimension(Ideal::zero(r3)) == 3);
    CHECK(krull_dimension(Ideal::unit(r3)) == -1);

    RingPtr r4 = make_ring({"t", "x", "y", "z"});
    Ideal line(r4, {Poly::variable(r4, 1), Poly::variable(r4, 2), Poly::variable(r4, 0)});
    CHECK(krull_dimension(line) == 1);

    SUBCASE("monotone under inclusion") {
        Poly x = Poly::variable(r3, 0), y = Poly::variable(r3, 1);
        Ideal small(r3, {x * y});
        Ideal big(r3, {x * y, x - y});
        CHECK(ideal_subset(small, big));
        CHECK(krull_dimension(big) <= krull_dimension(small));
    }
}

TEST_CASE("minors and fitting ideals") {
    RingPtr r4 = make_ring({"t", "x", "y", "z"});
    Poly t = Poly::variable(r4, 0), x = Poly::variable(r4, 1), y = Poly::variable(r4, 2);
    Poly zero(r4);

    // presentation of the quotient module in the worked example
    PolyMatrix pres{{x, t, zero}, {-y, zero, t}, {zero, -y, -x}};

    SUBCASE("fitting chain of the quotient") {
        CHECK(fitting_ideal(pres, 0).is_zero());
        Ideal f1 = fitting_ideal(pres, 1);
        Ideal expect1(r4, {y * y, x * y, t * y, x * x, t * x, t * t});
        CHECK(ideal_equal(f1, expect1));
        Ideal f2 = fitting_ideal(pres, 2);
        CHECK(ideal_equal(f2, Ideal(r4, {x, y, t})));
        CHECK(fitting_ideal(pres, 3).is_unit());
    }
    SUBCASE("chain inclusion") {
        for (int i = 0; i < 3; ++i) CHECK(ideal_subset(fitting_ideal(pres, i), fitting_ideal(pres, i + 1)));
    }
    SUBCASE("zero matrix") {
        PolyMatrix zmat{{zero, zero}, {zero, zero}};
        CHECK(fitting_ideal(zmat, 0).is_zero());
        CHECK(fitting_ideal(zmat, 1).is_zero());
        CHECK(fitting_ideal(zmat, 2).is_unit());
    }
    SUBCASE("serial and parallel minors agree") {
        for (int size = 1; size <= 3; ++size) CHECK(minors(pres, size) == minors_serial(pres, size));
    }
}

namespace {
// independent certificate of basis-hood: every S-polynomial reduces to zero
bool buchberger_criterion(const std::vector<Poly>& gb, const MonOrder& ord) {
    auto lead = [&](const Poly& p) {
        const Mono* best = nullptr;
        for (const auto& [m, c] : p.terms())
            if (!best || ord.greater(m, *best)) best = &m;
        return *best;
    };
    auto lc = [&](const Poly& p) { return p.terms().at(lead(p)); };
    for (size_t i = 0; i < gb.size(); ++i)
        for (size_t j = i + 1; j < gb.size(); ++j) {
            const Mono li = lead(gb[i]), lj = lead(gb[j]);
            const Mono l = mono_lcm(li, lj);
            Poly si(gb[i].ring()), sj(gb[j].ring());
            si.add_term(mono_div(l, li), Rat(1) / lc(gb[i]));
            sj.add_term(mono_div(l, lj), Rat(1) / lc(gb[j]));
            Poly sp = si * gb[i] - sj * gb[j];
            if (!normal_form(sp, gb, ord).is_zero()) return false;
        }
    return true;
}
}  // namespace

TEST_CASE("output passes the closure criterion") {
    RingPtr r3 = make_ring({"x", "y", "z"});
    Poly x = Poly::variable(r3, 0), y = Poly::variable(r3, 1), z = Poly::variable(r3, 2);
    Poly one = Poly::constant(r3, Rat(1));
    std::vector<std::vector<Poly>> systems{
        {x + y + z, x * y + y * z + z * x, x * y * z - one},
        {x * x - y, y * y - x * z, x * z - y * z},
        {x * x * y - z * z, y * y * z - x, z * z * x - y},
    };
    for (const auto& gens : systems)
        for (MonOrder ord : {MonOrder::grevlex(), MonOrder::lex()}) {
            std::vector<Poly> gb = groebner_basis(gens, ord);
            CHECK(buchberger_criterion(gb, ord));
            for (const Poly& g : gens) CHECK(normal_form(g, gb, ord).is_zero());
        }
}

TEST_CASE("mixed rings are rejected") {
    RingPtr a = make_ring({"x"});
    RingPtr b = make_ring({"x"});
    CHECK_THROWS(groebner_basis({Poly::variable(a, 0), Poly::variable(b, 0)}, MonOrder::grevlex()));
}
