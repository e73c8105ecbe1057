#include "qcas/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcas {

Chart full_chart(const RingPtr& ring) {
    std::vector<int> all(ring->nvars());
    for (int i = 0; i < ring->nvars(); ++i) all[i] = i;
    return Chart{ring, std::move(all)};
}

Chart make_chart(const RingPtr& ring, std::vector<int> fiber_vars) {
    for (int v : fiber_vars)
        if (v < 0 || v >= ring->nvars()) throw std::invalid_argument("fiber variable out of range");
    return Chart{ring, std::move(fiber_vars)};
}

PolyVectorField make_field(const Chart& chart, PolyVec components) {
    if (static_cast<int>(components.size()) != chart.dim()) throw std::invalid_argument("component count mismatch");
    return PolyVectorField{chart, std::move(components)};
}

ExteriorForm::ExteriorForm(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree) {
    // degrees above the chart dimension are allowed and identically zero
    if (degree < 0) throw std::invalid_argument("bad form degree");
}

namespace {

// Sorts a tuple, counting transposition sign. Returns false on a repeat.
bool sort_with_sign(std::vector<int>& idx, int& sign) {
    sign = 1;
    for (size_t i = 1; i < idx.size(); ++i)
        for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return false;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return true;
}

std::vector<std::vector<int>> increasing_tuples(int n, int q) {
    std::vector<std::vector<int>> out;
    if (q < 0 || q > n) return out;
    std::vector<int> idx(q);
    for (int i = 0; i < q; ++i) idx[i] = i;
    if (q == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(idx);
        int pos = q - 1;
        while (pos >= 0 && idx[pos] == n - q + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < q; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

}  // namespace

void ExteriorForm::add_term(std::vector<int> indices, const Poly& coeff) {
    if (static_cast<int>(indices.size()) != degree_) throw std::invalid_argument("index arity mismatch");
    for (int i : indices)
        if (i < 0 || i >= chart_.dim()) throw std::invalid_argument("form index out of range");
    if (coeff.is_zero()) return;
    int sign = 1;
    if (!sort_with_sign(indices, sign)) return;  // repeated differential
    Poly signed_coeff = sign < 0 ? -coeff : coeff;
    auto it = coeffs_.find(indices);
    if (it == coeffs_.end()) {
        coeffs_.emplace(std::move(indices), std::move(signed_coeff));
    } else {
        it->second += signed_coeff;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

Poly ExteriorForm::coeff(const std::vector<int>& sorted_indices) const {
    auto it = coeffs_.find(sorted_indices);
    if (it != coeffs_.end()) return it->second;
    return Poly(chart_.ring);
}

ExteriorForm ExteriorForm::operator+(const ExteriorForm& other) const {
    if (!(chart_ == other.chart_) || degree_ != other.degree_) throw std::invalid_argument("form mismatch in sum");
    ExteriorForm r = *this;
    for (const auto& [idx, c] : other.coeffs_) r.add_term(idx, c);
    return r;
}

ExteriorForm ExteriorForm::operator-() const {
    ExteriorForm r(chart_, degree_);
    for (const auto& [idx, c] : coeffs_) r.coeffs_.emplace(idx, -c);
    return r;
}

ExteriorForm ExteriorForm::scale(const Poly& f) const {
    ExteriorForm r(chart_, degree_);
    if (f.is_zero()) return r;
    for (const auto& [idx, c] : coeffs_) {
        Poly p = c * f;
        if (!p.is_zero()) r.coeffs_.emplace(idx, std::move(p));
    }
    return r;
}

bool ExteriorForm::operator==(const ExteriorForm& other) const {
    return chart_ == other.chart_ && degree_ == other.degree_ && coeffs_ == other.coeffs_;
}

ExteriorForm basis_form(const Chart& chart, std::vector<int> indices) {
    ExteriorForm f(chart, static_cast<int>(indices.size()));
    f.add_term(std::move(indices), Poly::constant(chart.ring, Rat(1)));
    return f;
}

ExteriorForm one_form(const Chart& chart, const PolyVec& coefficients) {
    if (static_cast<int>(coefficients.size()) != chart.dim()) throw std::invalid_argument("coefficient count mismatch");
    ExteriorForm f(chart, 1);
    for (int i = 0; i < chart.dim(); ++i) f.add_term({i}, coefficients[i]);
    return f;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
    if (!(a.chart() == b.chart())) throw std::invalid_argument("wedge across different charts");
    ExteriorForm r(a.chart(), a.degree() + b.degree());
    for (const auto& [ia, ca] : a.coeffs())
        for (const auto& [ib, cb] : b.coeffs()) {
            std::vector<int> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add_term(std::move(idx), ca * cb);
        }
    return r;
}

ExteriorForm contract(const PolyVectorField& v, const ExteriorForm& a) {
    if (!(v.chart == a.chart())) throw std::invalid_argument("contraction across different charts");
    if (a.degree() < 1) throw std::invalid_argument("contraction of a 0-form");
    ExteriorForm r(a.chart(), a.degree() - 1);
    for (const auto& [idx, c] : a.coeffs()) {
        for (size_t l = 0; l < idx.size(); ++l) {
            const Poly& comp = v.components[idx[l]];
            if (comp.is_zero()) continue;
            std::vector<int> rest;
            for (size_t k = 0; k < idx.size(); ++k)
                if (k != l) rest.push_back(idx[k]);
            Poly contrib = comp * c;
            if (l % 2 == 1) contrib = -contrib;
            r.add_term(std::move(rest), contrib);
        }
    }
    return r;
}

ExteriorForm exterior_derivative(const ExteriorForm& a) {
    const Chart& ch = a.chart();
    ExteriorForm r(ch, a.degree() + 1);
    if (a.degree() + 1 > ch.dim()) return r;  // nothing above top degree
    for (const auto& [idx, c] : a.coeffs()) {
        for (int pos = 0; pos < ch.dim(); ++pos) {
            Poly dc = c.derivative(ch.fiber_vars[pos]);
            if (dc.is_zero()) continue;
            std::vector<int> ext;
            ext.push_back(pos);
            ext.insert(ext.end(), idx.begin(), idx.end());
            r.add_term(std::move(ext), dc);
        }
    }
    return r;
}

SubmoduleBasis kernel_module(const ExteriorForm& omega) {
    const Chart& ch = omega.chart();
    const int m = ch.dim();
    const int q = omega.degree();
    if (q < 1) throw std::invalid_argument("kernel of a 0-form");
    const RingPtr& ring = ch.ring;

    if (omega.is_zero()) {
        std::vector<PolyVec> gens;
        for (int i = 0; i < m; ++i) {
            PolyVec e(m, Poly(ring));
            e[i] = Poly::constant(ring, Rat(1));
            gens.push_back(std::move(e));
        }
        return SubmoduleBasis(ring, m, std::move(gens));
    }

    // rows: (q-1)-tuples J, columns: fiber positions i;
    // entry = sign . omega_(J u i), zero when i already sits in J
    std::vector<std::vector<int>> rows_idx = increasing_tuples(m, q - 1);
    PolyMatrix mat(rows_idx.size(), std::vector<Poly>(m, Poly(ring)));
    for (size_t r = 0; r < rows_idx.size(); ++r) {
        const std::vector<int>& J = rows_idx[r];
        for (int i = 0; i < m; ++i) {
            if (std::find(J.begin(), J.end(), i) != J.end()) continue;
            std::vector<int> K = J;
            K.push_back(i);
            int sign = 1;
            sort_with_sign(K, sign);
            // position of i in the sorted K fixes the contraction sign
            const size_t l = static_cast<size_t>(std::find(K.begin(), K.end(), i) - K.begin());
            Poly entry = omega.coeff(K);
            if (entry.is_zero()) continue;
            if (l % 2 == 1) entry = -entry;
            mat[r][i] = std::move(entry);
        }
    }
    return module_kernel(mat, m);
}

bool is_decomposable_generic(const ExteriorForm& omega) {
    const int q = omega.degree();
    if (q < 1) throw std::invalid_argument("decomposability wants degree >= 1");
    if (q == 1) return true;
    const int m = omega.chart().dim();
    const RingPtr& ring = omega.chart().ring;

    auto signed_coeff = [&](std::vector<int> idx) -> Poly {
        int sign = 1;
        if (!sort_with_sign(idx, sign)) return Poly(ring);
        Poly c = omega.coeff(idx);
        return sign < 0 ? -c : c;
    };

    std::vector<std::vector<int>> is = increasing_tuples(m, q - 1);
    std::vector<std::vector<int>> js = increasing_tuples(m, q + 1);
    for (const auto& I : is)
        for (const auto& J : js) {
            Poly rel(ring);
            for (size_t l = 0; l < J.size(); ++l) {
                std::vector<int> left = I;
                left.push_back(J[l]);
                std::vector<int> right;
                for (size_t k = 0; k < J.size(); ++k)
                    if (k != l) right.push_back(J[k]);
                Poly prod = signed_coeff(std::move(left)) * omega.coeff(right);
                if (l % 2 == 1) prod = -prod;
                rel += prod;
            }
            if (!rel.is_zero()) return false;
        }
    return true;
}

Ideal singular_ideal(const ExteriorForm& omega) {
    std::vector<Poly> gens;
    for (const auto& [idx, c] : omega.coeffs()) gens.push_back(c);
    return Ideal(omega.chart().ring, std::move(gens));
}

Ideal nonkupka_ideal(const ExteriorForm& omega) {
    Ideal s = singular_ideal(omega);
    Ideal ds = singular_ideal(exterior_derivative(omega));
    std::vector<Poly> gens = s.gens();
    gens.insert(gens.end(), ds.gens().begin(), ds.gens().end());
    return Ideal(omega.chart().ring, std::move(gens));
}

PolyVectorField bracket_fields(const PolyVectorField& v, const PolyVectorField& w) {
    if (!(v.chart == w.chart)) throw std::invalid_argument("bracket across different charts");
    const Chart& ch = v.chart;
    PolyVec comps;
    for (int i = 0; i < ch.dim(); ++i) {
        Poly c(ch.ring);
        for (int j = 0; j < ch.dim(); ++j) {
            c += v.components[j] * w.components[i].derivative(ch.fiber_vars[j]);
            c -= w.components[j] * v.components[i].derivative(ch.fiber_vars[j]);
        }
        comps.push_back(std::move(c));
    }
    return PolyVectorField{ch, std::move(comps)};
}

bool is_involutive(const std::vector<PolyVectorField>& gens, const SubmoduleBasis& saturated) {
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            PolyVectorField br = bracket_fields(gens[i], gens[j]);
            if (!saturated.contains(br.components)) return false;
        }
    return true;
}

}  // namespace qcas
