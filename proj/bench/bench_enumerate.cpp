// Compares the serial and OpenMP enumeration paths on identical bounds
// and checks they agree field-for-field.
#include <chrono>
#include <iostream>

#include "rdlab/enumerator.hpp"
#include "rdlab/fieldspec.hpp"

using Clock = std::chrono::steady_clock;

static double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main(int argc, char** argv) {
    std::string bound = argc > 1 ? argv[1] : "8";
    auto params = rdlab::EnumerationParams::for_bound(rdlab::parse_positive_rational(bound));

    auto t0 = Clock::now();
    auto serial = rdlab::enumerate_abelian_fields_serial(params);
    auto t1 = Clock::now();
    auto parallel = rdlab::enumerate_abelian_fields(params);
    auto t2 = Clock::now();

    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::cout << "bound " << bound << ": " << serial.size() << " fields\n";
    std::cout << "serial   " << ts << " s\n";
    std::cout << "parallel " << tp << " s  (speedup " << (tp > 0 ? ts / tp : 0) << "x)\n";

    if (serial.size() != parallel.size()) {
        std::cerr << "MISMATCH: sizes differ (" << serial.size() << " vs " << parallel.size()
                  << ")\n";
        return 1;
    }
    for (size_t i = 0; i < serial.size(); ++i) {
        if (!(serial[i] == parallel[i])) {
            std::cerr << "MISMATCH at " << i << ": " << rdlab::canonical_spec(serial[i]) << " vs "
                      << rdlab::canonical_spec(parallel[i]) << "\n";
            return 1;
        }
    }
    std::cout << "outputs identical\n";
    return 0;
}
