#pragma once

#include <utility>
#include <vector>

namespace hyperpd::detail {

/// Sparse integer row: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<int, long long>>;

/// Rank over Q (field_char 0) or over F_p.
///
/// Rational rank uses fraction-free row reduction with content division in
/// 64-bit arithmetic and restarts with GMP integers if anything overflows.
std::size_t matrix_rank(std::vector<SparseRow> rows, int field_char);

}  // namespace hyperpd::detail
