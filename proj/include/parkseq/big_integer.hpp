#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace parkseq {

/// Arbitrary-precision signed integer used for every count and coefficient.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace parkseq
