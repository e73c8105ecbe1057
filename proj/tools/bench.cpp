// Benchmark comparing the OpenMP kernels against their serial references.
// Each kernel pair must produce identical output; the table reports both
// wall times and the speedup.
#include "qcas/ideal.hpp"
#include "qcas/parallel.hpp"
#include "qcas/projgeo.hpp"
#include "qcas/rootsys.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace qcas;

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-34s %10.1f ms %10.1f ms   x%-5.2f %s\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "outputs equal" : "OUTPUT MISMATCH");
}

}  // namespace

int main() {
    std::printf("%-34s %13s %13s   %-7s\n", "kernel", "serial", "openmp", "speedup");

    {
        RingPtr ring = make_ring({"a", "b", "c", "d", "e"});
        PolyMatrix m(6, std::vector<Poly>(6, Poly(ring)));
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) {
                Poly entry = Poly::variable(ring, (r + c) % 5);
                if ((r * c) % 3 == 1) entry = entry * Poly::variable(ring, (r + 2 * c) % 5) + Poly::constant(ring, rat(r - c));
                m[r][c] = entry;
            }
        std::vector<Poly> serial_out, parallel_out;
        const double ts = time_ms([&] { serial_out = minors_serial(m, 5); });
        par::set_max_threads(0);
        const double tp = time_ms([&] { parallel_out = minors(m, 5); });
        row("5x5 minors of a 6x6 poly matrix", ts, tp, serial_out == parallel_out);
    }

    {
        std::vector<EligibilityRow> serial_out, parallel_out;
        const double ts = time_ms([&] { serial_out = eligibility_report_serial(8); });
        const double tp = time_ms([&] { parallel_out = eligibility_report(8); });
        bool equal = serial_out.size() == parallel_out.size();
        for (size_t i = 0; equal && i < serial_out.size(); ++i)
            equal = serial_out[i].levi.minimum == parallel_out[i].levi.minimum &&
                    serial_out[i].eligible == parallel_out[i].eligible;
        row("eligibility table, rank cap 8", ts, tp, equal);
    }

    {
        Partition lam = make_partition({5, 1, 1});
        std::vector<std::pair<Rat, Rat>> samples = sample_pairs(8, 42);
        PencilReport serial_out, parallel_out;
        const double ts = time_ms([&] { serial_out = pencil_family_certificate_serial(lam, samples); });
        const double tp = time_ms([&] { parallel_out = pencil_family_certificate(lam, samples); });
        bool equal = serial_out.members.size() == parallel_out.members.size() &&
                     serial_out.family_flat == parallel_out.family_flat;
        for (size_t i = 0; equal && i < serial_out.members.size(); ++i)
            equal = serial_out.members[i].dim == parallel_out.members[i].dim;
        row("pencil certificate, [5,1,1], 10 members", ts, tp, equal);
    }

    return 0;
}
