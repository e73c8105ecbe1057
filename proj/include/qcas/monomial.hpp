// Exponent vectors and monomial orders (lex, graded reverse lex, and a
// block order used for elimination). Orders are total, multiplicative, and
// have 1 as the minimum.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcas {

using Mono = std::vector<int>;

inline int total_degree(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool mono_divides(const Mono& a, const Mono& b) {  // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Mono mono_div(const Mono& b, const Mono& a) {  // b / a, assumes divisibility
    Mono r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

inline bool mono_coprime(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

inline bool mono_is_one(const Mono& m) {
    for (int e : m)
        if (e != 0) return false;
    return true;
}

class MonOrder {
public:
    enum class Kind { Lex, Grevlex, Block };

    static MonOrder lex() { return MonOrder(Kind::Lex, {}); }
    static MonOrder grevlex() { return MonOrder(Kind::Grevlex, {}); }
    // Block elimination order: monomials are compared first by their
    // restriction to `eliminated` (grevlex), then by the rest (grevlex).
    // Any monomial touching an eliminated variable beats every one that
    // does not, which is what elimination needs.
    static MonOrder block(std::vector<bool> eliminated) { return MonOrder(Kind::Block, std::move(eliminated)); }

    Kind kind() const { return kind_; }
    const std::vector<bool>& eliminated() const { return elim_; }

    // Strict "a < b" in the order.
    bool less(const Mono& a, const Mono& b) const;
    bool greater(const Mono& a, const Mono& b) const { return less(b, a); }

    // Stable identity for caching.
    std::string key() const;

private:
    MonOrder(Kind k, std::vector<bool> e) : kind_(k), elim_(std::move(e)) {}
    static int grevlex_cmp(const Mono& a, const Mono& b);
    static int masked_grevlex_cmp(const Mono& a, const Mono& b, const std::vector<bool>& mask, bool in_mask);

    Kind kind_;
    std::vector<bool> elim_;
};

inline int MonOrder::grevlex_cmp(const Mono& a, const Mono& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // rightmost difference: larger exponent loses
    }
    return 0;
}

inline int MonOrder::masked_grevlex_cmp(const Mono& a, const Mono& b, const std::vector<bool>& mask, bool in_mask) {
    int da = 0, db = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (mask[i] == in_mask) {
            da += a[i];
            db += b[i];
        }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (mask[i] == in_mask && a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

inline bool MonOrder::less(const Mono& a, const Mono& b) const {
    switch (kind_) {
        case Kind::Lex:
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i];
            return false;
        case Kind::Grevlex:
            return grevlex_cmp(a, b) < 0;
        case Kind::Block: {
            if (elim_.size() != a.size()) throw std::invalid_argument("block order arity mismatch");
            int c = masked_grevlex_cmp(a, b, elim_, true);
            if (c != 0) return c < 0;
            return masked_grevlex_cmp(a, b, elim_, false) < 0;
        }
    }
    return false;
}

inline std::string MonOrder::key() const {
    switch (kind_) {
        case Kind::Lex:
            return "lex";
        case Kind::Grevlex:
            return "grevlex";
        case Kind::Block: {
            std::string k = "block:";
            for (bool b : elim_) k.push_back(b ? '1' : '0');
            return k;
        }
    }
    return "?";
}

}  // namespace qcas
