#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pushcalc {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace pushcalc
