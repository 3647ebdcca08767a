#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schubert {

// Exact arbitrary-precision integer. Counts of monomials, tableaux and module
// dimensions outgrow 64 bits quickly, so everything countable returns BigInt.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace schubert
