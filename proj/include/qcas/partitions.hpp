// Integer partitions: enumeration, the pentagonal-number counting
// recurrence, a certified rational enclosure of e^(2 sqrt n)/14, and the
// block matrices (J, H, K) attached to a partition.
#pragma once

#include "qcas/qmatrix.hpp"

#include <vector>

namespace qcas {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    int size() const;
    bool contains_part(int p) const;
    bool operator==(const Partition&) const = default;
    std::string to_string() const;
};

Partition make_partition(std::vector<int> parts);  // sorts and validates

// All partitions of n, lexicographically descending; n = 0 gives the empty
// partition.
std::vector<Partition> enumerate_partitions(int n);

// p(n) via the Euler pentagonal recurrence.
Int count_partitions(int n);

// Partitions of n with at least one part equal to `part`.
std::vector<Partition> partitions_with_part(int n, int part);

// Certified enclosure lo <= e^(2 sqrt n)/14 <= hi with exact rational
// endpoints; `holds` is the verdict p(n) > hi, a certificate for the strict
// inequality p(n) > e^(2 sqrt n)/14.
struct HardyRamanujanCheck {
    Rat lower_bound;
    Rat upper_bound;
    Int partition_count;
    bool holds;
};
HardyRamanujanCheck hardy_ramanujan_check(int n);

// Enclosure of e^x for rational x >= 0 by a Taylor partial sum with an
// explicit remainder bound.
void exp_enclosure(const Rat& x, Rat& lo, Rat& hi);

// Enclosure of sqrt(n) to within 2^-60.
void sqrt_enclosure(int n, Rat& lo, Rat& hi);

// Block matrices for a partition: J the Jordan nilpotent, H the weight
// diagonal (mu-1, mu-3, ..., -mu+1 per block), K the lowering matrix solved
// per block from [J,K] = H. The triple satisfies [H,J] = 2J, [H,K] = -2K,
// [J,K] = H exactly and all three are traceless.
struct JordanTriple {
    QMatrix j, h, k;
};
JordanTriple jordan_triple(const Partition& lambda);

}  // namespace qcas
