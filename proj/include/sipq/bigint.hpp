#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sipq {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace sipq
