#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace distort {

// Exact integer type used throughout: counters, cursors, exponents and
// lengths must never overflow (binomial rows alone exceed 64 bits).
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace distort
