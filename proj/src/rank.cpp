#include "detail/rank.hpp"

#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_map>

#include <gmpxx.h>

namespace hyperpd::detail {
namespace {

struct Overflow {};

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a == std::numeric_limits<std::int64_t>::min() || b == std::numeric_limits<std::int64_t>::min()) {
    throw Overflow{};
  }
  return std::gcd(a, b);
}
bool is_zero(std::int64_t a) { return a == 0; }
bool is_negative(std::int64_t a) { return a < 0; }

mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
bool is_negative(const mpz_class& a) { return sgn(a) < 0; }

template <class T>
using Row = std::vector<std::pair<int, T>>;

template <class T>
void normalize(Row<T>& row) {
  T g = 0;
  for (const auto& [c, v] : row) g = gcd(g, v);
  if (is_negative(row.front().second)) g = sub(T(0), g);
  if (g != T(1)) {
    for (auto& [c, v] : row) v /= g;
  }
}

/// row <- p.lead * row - row.lead * p, both rows sharing their leading column.
template <class T>
Row<T> cancel(const Row<T>& row, const Row<T>& pivot) {
  const T a = pivot.front().second;
  const T b = row.front().second;
  Row<T> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1, j = 1;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, mul(a, row[i].second));
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, sub(T(0), mul(b, pivot[j].second)));
      ++j;
    } else {
      T v = sub(mul(a, row[i].second), mul(b, pivot[j].second));
      if (!is_zero(v)) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class T>
std::size_t rational_rank(const std::vector<SparseRow>& input) {
  std::unordered_map<int, Row<T>> pivots;
  for (const auto& source : input) {
    Row<T> row;
    row.reserve(source.size());
    for (const auto& [c, v] : source) row.emplace_back(c, T(static_cast<long>(v)));
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        normalize(row);
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      row = cancel(row, it->second);
      if (!row.empty()) normalize(row);
    }
  }
  return pivots.size();
}

std::int64_t power_mod(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::size_t modular_rank(const std::vector<SparseRow>& input, std::int64_t p) {
  using R = std::vector<std::pair<int, std::int64_t>>;
  std::unordered_map<int, R> pivots;  // leading coefficient 1
  for (const auto& source : input) {
    R row;
    for (const auto& [c, v] : source) {
      std::int64_t x = ((v % p) + p) % p;
      if (x != 0) row.emplace_back(c, x);
    }
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const std::int64_t inv = power_mod(row.front().second, p - 2, p);
        for (auto& [c, v] : row) v = v * inv % p;
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      const R& piv = it->second;
      const std::int64_t f = row.front().second;
      R out;
      std::size_t i = 1, j = 1;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          out.push_back(row[i++]);
        } else if (i == row.size() || piv[j].first < row[i].first) {
          out.emplace_back(piv[j].first, (p - f * piv[j].second % p) % p);
          ++j;
        } else {
          std::int64_t v = ((row[i].second - f * piv[j].second) % p + p) % p;
          if (v != 0) out.emplace_back(row[i].first, v);
          ++i;
          ++j;
        }
      }
      row = std::move(out);
    }
  }
  return pivots.size();
}

}  // namespace

std::size_t matrix_rank(std::vector<SparseRow> rows, int field_char) {
  if (field_char != 0) return modular_rank(rows, field_char);
  try {
    return rational_rank<std::int64_t>(rows);
  } catch (const Overflow&) {
    return rational_rank<mpz_class>(rows);
  }
}

}  // namespace hyperpd::detail
