#include "doctest.h"
#include "qdom/scan.hpp"

using namespace qdom;

namespace {

bool spaced(std::size_t i) { return i % 37 == 5; }

}  // namespace

TEST_CASE("parallel kernels match the serial reference") {
    const std::size_t n = 100000;
    auto refFirst = find_first_serial(n, spaced);
    auto refAll = filter_indices_serial(n, spaced);
    int saved = worker_count();
    for (int w : {1, 2, 4}) {
        worker_count() = w;
        CAPTURE(w);
        CHECK(find_first(n, spaced) == refFirst);
        CHECK(filter_indices(n, spaced) == refAll);
    }
    worker_count() = saved;
}

TEST_CASE("find_first reports the lowest index and npos on miss") {
    int saved = worker_count();
    for (int w : {1, 4}) {
        worker_count() = w;
        CHECK(find_first(1000, [](std::size_t i) { return i >= 123; }) == 123);
        CHECK(find_first(1000, [](std::size_t) { return false; }) == scan_npos);
        CHECK(find_first(0, [](std::size_t) { return true; }) == scan_npos);
    }
    worker_count() = saved;
}

TEST_CASE("filter preserves canonical increasing order") {
    int saved = worker_count();
    worker_count() = 4;
    auto v = filter_indices(5000, [](std::size_t i) { return i % 3 == 0; });
    for (std::size_t k = 1; k < v.size(); ++k) CHECK(v[k - 1] < v[k]);
    CHECK(v.front() == 0);
    worker_count() = saved;
}
