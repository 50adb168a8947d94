// Compares the serial and parallel dual-support enumeration on the largest
// fixture and checks that both agree.

#include <chrono>
#include <iostream>

#include "plumb/poincare.hpp"

using namespace plumb;

int main(int argc, char** argv) {
    std::string file = argc > 1 ? argv[1] : "fixtures/gfig2.graph";
    int threads = argc > 2 ? std::atoi(argv[2]) : 4;
    LatticeContext ctx = build_context(load_graph_file(file));
    Vec excl = vec_sub(ctx.ZK, ctx.E_total);

    auto time = [&](auto&& fn, const char* label) {
        auto t0 = std::chrono::steady_clock::now();
        auto r = fn();
        auto dt = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
        std::cout << label << ": " << r.size() << " support elements in " << dt.count()
                  << " ms\n";
        return r;
    };

    auto serial = time(
        [&] { return enumerate_dual_support_serial(ctx, ctx.ZK, excl, ctx.g.ids); }, "serial");
    auto parallel = time(
        [&] { return enumerate_dual_support(ctx, ctx.ZK, excl, ctx.g.ids, threads); },
        ("parallel x" + std::to_string(threads)).c_str());

    bool same = serial.size() == parallel.size();
    for (size_t i = 0; same && i < serial.size(); ++i)
        same = serial[i].lp == parallel[i].lp && serial[i].z == parallel[i].z;
    std::cout << (same ? "results identical\n" : "MISMATCH\n");
    return same ? 0 : 1;
}
