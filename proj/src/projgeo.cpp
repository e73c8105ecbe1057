#include "qcas/projgeo.hpp"

#include "qcas/parallel.hpp"

#include <random>
#include <stdexcept>

namespace qcas {

RingPtr projective_ring(int n) {
    std::vector<std::string> vars;
    for (int i = 0; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    return make_ring(std::move(vars));
}

ProjectiveField fundamental_field(const QMatrix& a) { return fundamental_field(a, projective_ring(a.rows() - 1)); }

ProjectiveField fundamental_field(const QMatrix& a, const RingPtr& ring) {
    if (a.rows() != a.cols()) throw std::invalid_argument("field matrix must be square");
    if (!is_zero(a.trace())) throw std::invalid_argument("field matrix must be traceless");
    ProjectiveField f;
    f.n = a.rows() - 1;
    f.matrix = a;
    f.ring = ring;
    for (int i = 0; i <= f.n; ++i) {
        Poly comp(ring);
        for (int j = 0; j <= f.n; ++j)
            if (!is_zero(a.at(i, j))) comp += Poly::variable(ring, j) * a.at(i, j);
        f.components.push_back(std::move(comp));
    }
    return f;
}

namespace {

PolyMatrix coordinate_rows(const RingPtr& ring, const std::vector<const std::vector<Poly>*>& field_rows, int n) {
    PolyMatrix m;
    std::vector<Poly> xs;
    for (int j = 0; j <= n; ++j) xs.push_back(Poly::variable(ring, j));
    m.push_back(std::move(xs));
    for (const auto* comp : field_rows) m.push_back(*comp);
    return m;
}

}  // namespace

Ideal field_singular_ideal(const ProjectiveField& f) {
    PolyMatrix m = coordinate_rows(f.ring, {&f.components}, f.n);
    return Ideal(f.ring, minors(m, 2));
}

Ideal pencil_singular_ideal(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("pencil matrices disagree in size");
    RingPtr ring = projective_ring(a.rows() - 1);
    ProjectiveField fa = fundamental_field(a, ring);
    ProjectiveField fb = fundamental_field(b, ring);
    PolyMatrix m = coordinate_rows(ring, {&fa.components, &fb.components}, fa.n);
    return Ideal(ring, minors(m, 3));
}

int projective_dimension(const Ideal& homogeneous) {
    for (const Poly& g : homogeneous.gens())
        if (!g.is_homogeneous()) throw std::invalid_argument("projective dimension wants homogeneous generators");
    const int cone = krull_dimension(homogeneous);
    return cone >= 1 ? cone - 1 : -1;
}

bool t_flatness_check(const Ideal& ideal, int t_var) {
    Poly t = Poly::variable(ideal.ring(), t_var);
    return ideal_equal(ideal_quotient(ideal, t), ideal);
}

std::vector<std::pair<Rat, Rat>> sample_pairs(int count, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<std::pair<Rat, Rat>> out;
    while (static_cast<int>(out.size()) < count) {
        int a = num(rng), b = num(rng);
        if (a == 0 || b == 0) continue;
        out.emplace_back(rat(a, den(rng)), rat(b, den(rng)));
    }
    return out;
}

namespace {

PencilReport pencil_impl(const Partition& lambda, const std::vector<std::pair<Rat, Rat>>& samples, bool parallel) {
    if (!lambda.contains_part(5)) throw std::invalid_argument("pencil certificates want a partition containing 5");
    PencilReport rep;
    rep.lambda = lambda;
    rep.n = lambda.size() - 1;
    rep.delta = lambda.size() - 5;

    JordanTriple triple = jordan_triple(lambda);

    std::vector<std::pair<Rat, Rat>> all;
    all.emplace_back(Rat(1), Rat(0));
    all.emplace_back(Rat(0), Rat(1));
    for (const auto& s : samples) all.push_back(s);

    rep.members.resize(all.size());
    auto work = [&](size_t i) {
        const auto& [alpha, beta] = all[i];
        QMatrix member = triple.j.scaled(alpha) + triple.h.scaled(beta);
        ProjectiveField f = fundamental_field(member);
        const int dim = projective_dimension(field_singular_ideal(f));
        rep.members[i] = {alpha, beta, dim, dim <= rep.delta};
    };
    if (parallel)
        par::for_each_index(all.size(), work);
    else
        par::for_each_index_serial(all.size(), work);

    // family over Q[t]: the field of t J + H, t carried as an extra variable
    std::vector<std::string> vars{"t"};
    for (int i = 0; i <= rep.n; ++i) vars.push_back("x" + std::to_string(i));
    RingPtr tring = make_ring(std::move(vars));
    Poly t = Poly::variable(tring, 0);

    std::vector<Poly> xs, field;
    for (int j = 0; j <= rep.n; ++j) xs.push_back(Poly::variable(tring, j + 1));
    for (int i = 0; i <= rep.n; ++i) {
        Poly comp(tring);
        for (int j = 0; j <= rep.n; ++j) {
            if (!is_zero(triple.j.at(i, j))) comp += t * xs[j] * triple.j.at(i, j);
            if (!is_zero(triple.h.at(i, j))) comp += xs[j] * triple.h.at(i, j);
        }
        field.push_back(std::move(comp));
    }
    PolyMatrix m{xs, field};
    Ideal family(tring, minors(m, 2));
    rep.family_flat = t_flatness_check(family, 0);

    rep.all_pass = rep.family_flat;
    for (const PencilMember& mem : rep.members) rep.all_pass = rep.all_pass && mem.pass;
    return rep;
}

}  // namespace

PencilReport pencil_family_certificate(const Partition& lambda, const std::vector<std::pair<Rat, Rat>>& samples) {
    return pencil_impl(lambda, samples, true);
}

PencilReport pencil_family_certificate_serial(const Partition& lambda, const std::vector<std::pair<Rat, Rat>>& samples) {
    return pencil_impl(lambda, samples, false);
}

}  // namespace qcas
