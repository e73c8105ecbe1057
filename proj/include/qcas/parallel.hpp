// Thread-count control and a parallel map over independent work items.
// Every parallel kernel in this library has a serial twin; the two must
// agree bit-for-bit, which tests/test_parallel_consistency.cpp enforces.
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace qcas::par {

// 0 means "whatever OpenMP considers the default".
void set_max_threads(int n);
int max_threads();

// True when the library was built with OpenMP and more than one thread
// is permitted at the moment.
bool parallel_enabled();

// Applies fn to 0..n-1, possibly out of order and concurrently.
// fn must not touch shared mutable state.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& fn);

// Serial reference with identical semantics.
void for_each_index_serial(std::size_t n, const std::function<void(std::size_t)>& fn);

template <typename T, typename Fn>
std::vector<T> map_indexed(std::size_t n, Fn fn) {
    std::vector<T> out(n);
    for_each_index(n, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

template <typename T, typename Fn>
std::vector<T> map_indexed_serial(std::size_t n, Fn fn) {
    std::vector<T> out(n);
    for_each_index_serial(n, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

}  // namespace qcas::par
