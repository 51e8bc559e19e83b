#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace quotshrink {

// Group orders are exact arbitrary-precision integers; they are never allowed
// to overflow silently.
using Order = boost::multiprecision::cpp_int;

}  // namespace quotshrink
