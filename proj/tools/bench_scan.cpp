// Benchmark for the enumeration scan kernels: serial reference vs OpenMP
// parallel variants, on a synthetic predicate and on a realistic workload
// (directedness filtering over the subset stream of an L-ordered set).

#include <chrono>
#include <iostream>

#include "qdom/domain.hpp"
#include "qdom/scan.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double secs(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timeIt(F&& f) {
    auto t0 = Clock::now();
    f();
    return secs(t0, Clock::now());
}

qdom::LOrderedSet chainOrder(const qdom::QuantalePtr& L, std::size_t n) {
    qdom::LOrderedSet P;
    P.id = "bench-chain";
    P.L = L;
    for (std::size_t i = 0; i < n; ++i) P.points.push_back("c" + std::to_string(i));
    P.e.assign(n * n, L->bottom());
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x; y < n; ++y) P.e[x * n + y] = L->unit();
    return P;
}

}  // namespace

int main(int argc, char** argv) {
    int maxWorkers = 4;
    if (argc > 1) maxWorkers = std::atoi(argv[1]);

    // Synthetic: a mildly expensive arithmetic predicate over a large range.
    const std::size_t N = 1u << 22;
    auto pred = [](std::size_t i) {
        std::size_t h = i * 2654435761u;
        h ^= h >> 13;
        return (h % 1021) == 0;
    };

    std::cout << "synthetic filter over " << N << " indices\n";
    std::vector<std::size_t> ref;
    double tSerial = timeIt([&] { ref = qdom::filter_indices_serial(N, pred); });
    std::cout << "  serial: " << tSerial << " s (" << ref.size() << " hits)\n";
    for (int w = 2; w <= maxWorkers; w *= 2) {
        qdom::worker_count() = w;
        std::vector<std::size_t> got;
        double t = timeIt([&] { got = qdom::filter_indices(N, pred); });
        std::cout << "  " << w << " workers: " << t << " s, speedup x" << tSerial / t
                  << (got == ref ? "" : "  MISMATCH") << '\n';
    }

    // Realistic: directedness filtering over all subsets of a chain.
    qdom::worker_count() = 1;
    auto L = qdom::fixtureQuantale("lukasiewicz-3");
    auto P = chainOrder(L, 9);
    qdom::LSubsetEnum en = qdom::enumerateLSubsets(P);
    auto dirPred = [&](std::size_t r) { return qdom::isDirected(P, en.at(r)).pass; };

    std::cout << "directedness filter over " << en.count() << " subsets (|L|=3 chain of 9)\n";
    double uSerial = timeIt([&] { ref = qdom::filter_indices_serial(en.count(), dirPred); });
    std::cout << "  serial: " << uSerial << " s (" << ref.size() << " directed)\n";
    for (int w = 2; w <= maxWorkers; w *= 2) {
        qdom::worker_count() = w;
        std::vector<std::size_t> got;
        double t = timeIt([&] { got = qdom::filter_indices(en.count(), dirPred); });
        std::cout << "  " << w << " workers: " << t << " s, speedup x" << uSerial / t
                  << (got == ref ? "" : "  MISMATCH") << '\n';
    }
    qdom::worker_count() = 1;
    return 0;
}
