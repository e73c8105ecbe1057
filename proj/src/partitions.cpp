#include "qcas/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qcas {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::contains_part(int p) const {
    return std::find(parts.begin(), parts.end(), p) != parts.end();
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + "]";
}

Partition make_partition(std::vector<int> parts) {
    for (int p : parts)
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition{std::move(parts)};
}

namespace {
void enumerate_rec(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition{acc});
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("negative partition argument");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_rec(n, n == 0 ? 1 : n, acc, out);
    return out;
}

Int count_partitions(int n) {
    if (n < 0) throw std::invalid_argument("negative partition argument");
    std::vector<Int> p(static_cast<size_t>(n) + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Int total = 0;
        for (int k = 1;; ++k) {
            const long g1 = static_cast<long>(k) * (3L * k - 1) / 2;
            const long g2 = static_cast<long>(k) * (3L * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            const int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) total += sign * p[m - g1];
            if (g2 <= m) total += sign * p[m - g2];
        }
        p[m] = total;
    }
    return p[n];
}

std::vector<Partition> partitions_with_part(int n, int part) {
    if (part < 1) throw std::invalid_argument("part must be positive");
    std::vector<Partition> out;
    if (part > n) return out;
    for (const Partition& lam : enumerate_partitions(n))
        if (lam.contains_part(part)) out.push_back(lam);
    return out;
}

void sqrt_enclosure(int n, Rat& lo, Rat& hi) {
    if (n < 0) throw std::invalid_argument("negative radicand");
    if (n == 0) {
        lo = hi = Rat(0);
        return;
    }
    // bisection from integer bounds down to width 2^-60
    Rat a(0), b(n + 1);
    const Rat target = Rat(1) / (Int(1) << 60);
    while (b - a > target) {
        Rat mid = (a + b) / 2;
        if (mid * mid <= Rat(n))
            a = mid;
        else
            b = mid;
    }
    lo = a;
    hi = b;
}

void exp_enclosure(const Rat& x, Rat& lo, Rat& hi) {
    if (sgn(x) < 0) throw std::invalid_argument("exp enclosure wants x >= 0");
    // N chosen so x/(N+2) <= 1/2; remainder of the Taylor tail is then at
    // most 2 x^(N+1)/(N+1)!.
    long n_terms = 64;
    while (Rat(n_terms + 2) < x * 2) n_terms *= 2;

    Rat sum(1), term(1);
    for (long k = 1; k <= n_terms; ++k) {
        term *= x / Rat(k);
        sum += term;
    }
    Rat tail = term * x / Rat(n_terms + 1) * 2;
    lo = sum;
    hi = sum + tail;
}

HardyRamanujanCheck hardy_ramanujan_check(int n) {
    if (n < 0) throw std::invalid_argument("negative argument");
    HardyRamanujanCheck res;
    Rat slo, shi;
    sqrt_enclosure(n, slo, shi);
    Rat elo_lo, elo_hi, ehi_lo, ehi_hi;
    exp_enclosure(slo * 2, elo_lo, elo_hi);
    exp_enclosure(shi * 2, ehi_lo, ehi_hi);
    res.lower_bound = elo_lo / 14;
    res.upper_bound = ehi_hi / 14;
    res.partition_count = count_partitions(n);
    res.holds = Rat(res.partition_count) > res.upper_bound;
    return res;
}

JordanTriple jordan_triple(const Partition& lambda) {
    if (lambda.parts.empty()) throw std::invalid_argument("empty partition");
    const int n = lambda.size();
    JordanTriple t{QMatrix(n, n), QMatrix(n, n), QMatrix(n, n)};
    int offset = 0;
    for (int mu : lambda.parts) {
        for (int i = 0; i < mu - 1; ++i) t.j.at(offset + i, offset + i + 1) = 1;
        for (int i = 0; i < mu; ++i) t.h.at(offset + i, offset + i) = rat(mu - 1 - 2 * i);
        // subdiagonal entries of K from [J,K] = H: with k_i below row i,
        // (JK - KJ) diagonal gives k_i - k_{i-1} = mu-1-2i, so
        // k_i = (i+1)(mu-1-i).
        for (int i = 0; i < mu - 1; ++i) t.k.at(offset + i + 1, offset + i) = rat(static_cast<long>(i + 1) * (mu - 1 - i));
        offset += mu;
    }
    return t;
}

}  // namespace qcas
