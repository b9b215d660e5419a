// Benchmark comparing the OpenMP enumeration kernels against the serial
// reference implementations, plus a partition timing.
//
//   ccwb-bench [--threads T]

#include <chrono>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ccwb/distance.hpp"
#include "ccwb/equiv.hpp"
#include "ccwb/linear_code.hpp"
#include "ccwb/textio.hpp"

using namespace ccwb;

namespace {

double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

LinearCode from_check(int q, int n, const std::string& a_s, const std::string& h_s) {
    const Field& F = Field::get(q);
    fe a = parse_element(a_s, F);
    auto [g, rem] = poly_divmod(poly_xn_minus_a(F, n, a), parse_poly(h_s, F));
    if (!rem.is_zero()) throw std::runtime_error("bad check polynomial");
    return cc_code(cc_params(F, n, a), g);
}

template <typename F1, typename F2>
void compare(const std::string& label, F1&& reference, F2&& kernel) {
    double t0 = now_s();
    auto ref = reference();
    double t_ref = now_s() - t0;
    t0 = now_s();
    auto got = kernel();
    double t_par = now_s() - t0;
    bool ok = (ref == got);
    std::printf("%-34s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", label.c_str(),
                t_ref, t_par, t_ref / (t_par > 0 ? t_par : 1e-9), ok ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        std::string s = argv[i];
        if (s == "--threads" && i + 1 < argc) {
#ifdef _OPENMP
            omp_set_num_threads(std::stoi(argv[++i]));
#else
            ++i;
#endif
        } else {
            std::cerr << "usage: ccwb-bench [--threads T]\n";
            return 64;
        }
    }
#ifdef _OPENMP
    std::printf("OpenMP max threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel kernels run serially\n");
#endif

    {
        LinearCode C = from_check(3, 28, "2", "221211000122221");  // [28,14] over GF(3)
        compare("weight histogram [28,14]_3", [&] { return weight_histogram_serial(C); },
                [&] { return weight_histogram(C); });
        compare("min weight [28,14]_3", [&] { return min_weight_full_serial(C); },
                [&] { return min_weight_full(C); });
    }
    {
        LinearCode C = from_check(5, 26, "2", "41331");  // [26,4] over GF(5), tiny
        compare("weight histogram [26,4]_5", [&] { return weight_histogram_serial(C); },
                [&] { return weight_histogram(C); });
    }
    {
        const Field& F5 = Field::get(5);
        double t0 = now_s();
        PartitionOptions opt;
        opt.materialize = false;
        PartitionResult r = partition(F5, 124, F5.from_digit(2), opt);
        std::printf("%-34s %8.3fs   (total %llu, classes %llu)\n", "partition (5,124,2)",
                    now_s() - t0, (unsigned long long)r.total, (unsigned long long)r.new_count);
    }
    return 0;
}
