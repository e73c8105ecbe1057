#include "qcas/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qcas {

int Ring::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> vars) {
    for (const auto& v : vars)
        if (v.empty()) throw std::invalid_argument("empty variable name");
    auto r = std::make_shared<Ring>();
    r->vars = std::move(vars);
    return r;
}

Poly::Poly(RingPtr ring, const Rat& constant) : ring_(std::move(ring)) {
    if (!qcas::is_zero(constant)) terms_.emplace(Mono(ring_->nvars(), 0), constant);
}

Poly Poly::variable(const RingPtr& ring, int index, int exponent) {
    if (index < 0 || index >= ring->nvars()) throw std::invalid_argument("variable index out of range");
    Poly p(ring);
    Mono m(ring->nvars(), 0);
    m[index] = exponent;
    p.terms_.emplace(std::move(m), Rat(1));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && mono_is_one(terms_.begin()->first);
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

bool Poly::is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        if (d < 0)
            d = total_degree(m);
        else if (total_degree(m) != d)
            return false;
    }
    return true;
}

void Poly::add_term(const Mono& m, const Rat& c) {
    if (qcas::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (qcas::is_zero(it->second)) terms_.erase(it);
    }
}

void Poly::check_same_ring(const Poly& other) const {
    if (ring_ != other.ring_) throw std::invalid_argument("polynomials from different rings");
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& other) const {
    Poly r = *this;
    r += other;
    return r;
}

Poly Poly::operator-(const Poly& other) const {
    Poly r = *this;
    r -= other;
    return r;
}

Poly& Poly::operator+=(const Poly& other) {
    check_same_ring(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    check_same_ring(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator*(const Poly& other) const {
    check_same_ring(other);
    Poly r(ring_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : other.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(ring_);
    if (qcas::is_zero(c)) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

Poly Poly::derivative(int var) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono d = m;
        d[var] -= 1;
        r.add_term(d, c * Rat(m[var]));
    }
    return r;
}

Poly Poly::substitute(int var, const Poly& value) const {
    check_same_ring(value);
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        Mono base = m;
        const int e = base[var];
        base[var] = 0;
        Poly term(ring_);
        term.terms_.emplace(base, c);
        for (int i = 0; i < e; ++i) term = term * value;
        r += term;
    }
    return r;
}

Rat Poly::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != static_cast<size_t>(ring_->nvars())) throw std::invalid_argument("point arity mismatch");
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

bool Poly::uses_var(int var) const {
    for (const auto& [m, c] : terms_)
        if (m[var] > 0) return true;
    return false;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    // grevlex-descending for stable output
    std::vector<const std::pair<const Mono, Rat>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    MonOrder ord = MonOrder::grevlex();
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });

    std::string out;
    bool first = true;
    for (auto* t : ts) {
        const Mono& m = t->first;
        Rat c = t->second;
        const bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (neg) c = -c;

        std::string vars;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += ring_->vars[i];
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) {
            out += rat_to_string(c);
        } else if (c == Rat(1)) {
            out += vars;
        } else {
            out += rat_to_string(c) + "*" + vars;
        }
    }
    return out;
}

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    explicit Lexer(const std::string& text) : s(text) {}
    void skip_ws() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        return s[pos++];
    }
    std::string take_while(bool (*pred)(char)) {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && pred(s[pos])) ++pos;
        return s.substr(start, pos - start);
    }
};

bool is_digit_or_slash(char c) { return isdigit(static_cast<unsigned char>(c)) || c == '/'; }
bool is_digit_only(char c) { return isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

}  // namespace

Poly poly_parse(const RingPtr& ring, const std::string& text) {
    Lexer lx(text);
    Poly result(ring);
    bool expect_term = true;
    int sign = 1;
    // a factor sequence joined by '*'; terms joined by '+'/'-'
    Rat coeff(1);
    Mono mono(ring->nvars(), 0);
    bool have_factor = false;

    auto flush = [&]() {
        if (!have_factor) {
            if (!expect_term) throw std::invalid_argument("dangling operator in polynomial: " + text);
            return;
        }
        result.add_term(mono, coeff * Rat(sign));
        coeff = Rat(1);
        mono.assign(ring->nvars(), 0);
        have_factor = false;
    };

    while (!lx.done()) {
        char c = lx.peek();
        if (c == '+' || c == '-') {
            flush();
            sign = 1;
            // consume a run of signs
            while (!lx.done() && (lx.peek() == '+' || lx.peek() == '-')) {
                if (lx.take() == '-') sign = -sign;
            }
            expect_term = true;
            continue;
        }
        if (c == '*') {
            lx.take();
            continue;
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            std::string num = lx.take_while(is_digit_or_slash);
            coeff *= rat_from_string(num);
            have_factor = true;
            expect_term = false;
            continue;
        }
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = lx.take_while(is_ident_char);
            int idx = ring->var_index(name);
            if (idx < 0) throw std::invalid_argument("unknown variable '" + name + "' in: " + text);
            int exp = 1;
            if (lx.peek() == '^') {
                lx.take();
                std::string e = lx.take_while(is_digit_only);
                if (e.empty()) throw std::invalid_argument("missing or non-integer exponent in: " + text);
                exp = std::stoi(e);
            }
            mono[idx] += exp;
            have_factor = true;
            expect_term = false;
            continue;
        }
        throw std::invalid_argument(std::string("unexpected character '") + c + "' in polynomial: " + text);
    }
    flush();
    if (expect_term && result.is_zero() && text.find('0') == std::string::npos)
        throw std::invalid_argument("empty polynomial text");
    return result;
}

RingHeader parse_ring_header(const std::string& line) {
    std::istringstream in(line);
    std::string word;
    in >> word;
    if (word != "ring") throw std::invalid_argument("ring header must start with 'ring'");
    std::vector<std::string> vars;
    std::string order_name = "grevlex";
    while (in >> word) {
        if (word == "order") {
            in >> order_name;
            break;
        }
        vars.push_back(word);
    }
    RingHeader h;
    h.ring = make_ring(std::move(vars));
    if (order_name == "grevlex")
        h.order = MonOrder::grevlex();
    else if (order_name == "lex")
        h.order = MonOrder::lex();
    else
        throw std::invalid_argument("unknown order: " + order_name);
    return h;
}

}  // namespace qcas
