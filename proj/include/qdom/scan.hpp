#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "qdom/check.hpp"

namespace qdom {

constexpr std::size_t scan_npos = static_cast<std::size_t>(-1);

/// Index of the first i in [0, n) with pred(i) true, or scan_npos.
/// Serial reference implementation, kept as the testing oracle for the
/// OpenMP kernel below.
std::size_t find_first_serial(std::size_t n, const std::function<bool(std::size_t)>& pred);

/// OpenMP variant of find_first_serial. The reported index is always the
/// lowest violating one, independent of worker count.
std::size_t find_first(std::size_t n, const std::function<bool(std::size_t)>& pred);

/// Indices in [0, n) accepted by pred, in increasing order. Serial reference.
std::vector<std::size_t> filter_indices_serial(std::size_t n,
                                               const std::function<bool(std::size_t)>& pred);

/// OpenMP variant of filter_indices_serial; output order is canonical
/// (increasing) regardless of worker count.
std::vector<std::size_t> filter_indices(std::size_t n,
                                        const std::function<bool(std::size_t)>& pred);

}  // namespace qdom
