#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace monodromy {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace monodromy
