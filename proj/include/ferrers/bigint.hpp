#pragma once

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace ferrers {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient C(a, k), exact at arbitrary precision.
// Out-of-range arguments (k < 0, k > a, a < 0) give 0, so that sums of
// binomials may be written without explicit range guards.
inline Int binomial(long long a, long long k) {
    if (a < 0 || k < 0 || k > a) return 0;
    k = std::min(k, a - k);
    Int result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= a - k + i;
        result /= i;  // exact: product of i consecutive integers
    }
    return result;
}

// Enumeration ceilings were exceeded; callers map this to a dedicated
// exit code rather than treating it as a computational failure.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ferrers
