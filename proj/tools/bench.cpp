// Benchmark of the parallel verification kernels against their serial
// references. Each kernel runs both ways on the same instances; results must
// match and the table reports the timings.

#include "lrw/parallel.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace lrw;
using clk = std::chrono::steady_clock;

namespace {

double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

void row(const char* name, double serial_ms, double par_ms, bool agree) {
    std::printf("%-28s %10.1f ms %10.1f ms   x%.2f   %s\n", name, serial_ms, par_ms,
                par_ms > 0 ? serial_ms / par_ms : 0.0, agree ? "match" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp not enabled; parallel kernels run serially\n");
#endif
    std::printf("%-28s %13s %13s\n", "kernel", "serial", "parallel");

    { // decode round trips on random NLC instances
        std::vector<ColoredOrder> cos;
        for (int i = 0; i < 30; ++i) {
            auto alpha = random_nlc(64, 4, 1000 + i);
            auto ev = eval_nlc(alpha);
            cos.push_back(encode(identity_order(ev.graph)));
        }
        auto t0 = clk::now();
        std::vector<Graph> serial;
        for (const auto& co : cos) serial.push_back(decode(co));
        double ts = ms_since(t0);
        t0 = clk::now();
        std::vector<Graph> par;
        for (const auto& co : cos) par.push_back(decode_omp(co));
        double tp = ms_since(t0);
        bool agree = serial == par;
        row("decode (30x n=64 k=4)", ts, tp, agree);
    }

    { // brute-force linear rankwidth
        std::vector<Graph> gs;
        for (int i = 0; i < 12; ++i) {
            auto alpha = random_nlc(8, 4, 2000 + i);
            gs.push_back(eval_nlc(alpha).graph);
        }
        auto t0 = clk::now();
        std::vector<int> serial;
        for (const auto& g : gs) serial.push_back(lrw_bruteforce(g));
        double ts = ms_since(t0);
        t0 = clk::now();
        std::vector<int> par;
        for (const auto& g : gs) par.push_back(lrw_bruteforce_omp(g));
        double tp = ms_since(t0);
        row("lrw brute force (12x n=8)", ts, tp, serial == par);
    }

    { // ramsey coloring enumeration
        Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
        auto t0 = clk::now();
        auto serial = ramsey_check(p3, 2);
        double ts = ms_since(t0);
        t0 = clk::now();
        auto par = ramsey_check_omp(p3, 2);
        double tp = ms_since(t0);
        row("ramsey P3^{.2} (512 col.)", ts, tp,
            serial.ok == par.ok && serial.colorings_checked == par.colorings_checked);
    }

    { // scode all-pairs agreement
        auto alpha = random_nlc(200, 3, 77);
        auto ft = simon_factorize(alpha);
        auto t0 = clk::now();
        bool serial = scode_agrees_serial(ft, alpha);
        double ts = ms_since(t0);
        t0 = clk::now();
        bool par = scode_agrees_omp(ft, alpha);
        double tp = ms_since(t0);
        row("scode all pairs (n=200)", ts, tp, serial == par && serial);
    }

    { // decode_edge all-pairs agreement
        auto alpha = random_nlc(96, 3, 555);
        auto ev = eval_nlc(alpha);
        auto og = identity_order(ev.graph);
        auto pipe = build_pipeline(og);
        auto t0 = clk::now();
        bool serial = decode_edges_agree_serial(pipe.ft, og);
        double ts = ms_since(t0);
        t0 = clk::now();
        bool par = decode_edges_agree_omp(pipe.ft, og);
        double tp = ms_since(t0);
        row("decode_edge pairs (n=96)", ts, tp, serial == par && serial);
    }

    return 0;
}
