#pragma once

#include <cstdint>

#include <boost/rational.hpp>

namespace liouq {

// Exact ratio of counts; always kept in lowest terms with positive denominator.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

}  // namespace liouq
