#include "umbral/stirling.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "umbral/errors.hpp"
#include "umbral/series.hpp"

namespace umbral {

StirlingTable::StirlingTable(StirlingKind kind, std::size_t max_n) : kind_(kind), max_n_(max_n) {
  rows_.reserve(max_n + 1);
  rows_.push_back({Integer(1)});
  for (std::size_t n = 0; n < max_n; ++n) {
    const auto& prev = rows_.back();
    std::vector<Integer> next(n + 2, Integer(0));
    const Integer nn(static_cast<unsigned long>(n));
    for (std::size_t l = 0; l <= n + 1; ++l) {
      Integer below = l >= 1 ? prev[l - 1] : Integer(0);
      Integer same = l <= n ? prev[l] : Integer(0);
      switch (kind) {
        case StirlingKind::FirstSigned:
          next[l] = below - nn * same;
          break;
        case StirlingKind::FirstUnsigned:
          next[l] = below + nn * same;
          break;
        case StirlingKind::Second:
          next[l] = below + Integer(static_cast<unsigned long>(l)) * same;
          break;
      }
    }
    rows_.push_back(std::move(next));
  }
}

const Integer& StirlingTable::operator()(std::size_t n, std::size_t l) const {
  static const Integer zero(0);
  if (n > max_n_) throw IndexOutOfRange("row " + std::to_string(n) + " beyond table size");
  return l <= n ? rows_[n][l] : zero;
}

namespace {

void check_indices(long n, long l) {
  if (n < 0 || l < 0 || l > n) {
    throw IndexOutOfRange("Stirling index (" + std::to_string(n) + ", " + std::to_string(l) +
                          ") outside 0 <= l <= n");
  }
}

// Tables are rebuilt with doubled capacity when a larger row is requested;
// published tables are immutable so readers never see a partial build.
Integer lookup(StirlingKind kind, long n, long l) {
  static std::mutex mu;
  static std::map<StirlingKind, std::shared_ptr<const StirlingTable>> tables;
  std::shared_ptr<const StirlingTable> table;
  {
    std::lock_guard lock(mu);
    auto& slot = tables[kind];
    if (!slot || slot->max_n() < static_cast<std::size_t>(n)) {
      std::size_t size = slot ? slot->max_n() : 16;
      while (size < static_cast<std::size_t>(n)) size *= 2;
      slot = std::make_shared<const StirlingTable>(kind, size);
    }
    table = slot;
  }
  return (*table)(static_cast<std::size_t>(n), static_cast<std::size_t>(l));
}

}  // namespace

Integer stirling1(long n, long l) {
  check_indices(n, l);
  return lookup(StirlingKind::FirstSigned, n, l);
}

Integer stirling2(long n, long l) {
  check_indices(n, l);
  return lookup(StirlingKind::Second, n, l);
}

Integer stirling1_unsigned(long n, long l) {
  check_indices(n, l);
  return lookup(StirlingKind::FirstUnsigned, n, l);
}

Integer stirling2_via_series(long n, long l) {
  check_indices(n, l);
  const auto order = static_cast<std::size_t>(n);
  Series<Rational> power = series_pow(exp_minus_one(order), static_cast<unsigned>(l));
  Rational value = power[order] * Rational(factorial(order), factorial(static_cast<unsigned long>(l)));
  if (!value.is_integer()) throw Error("non-integral Stirling value from series route");
  return value.numerator();
}

}  // namespace umbral
