#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace wordmap {

using Int = boost::multiprecision::cpp_int;

// Checked narrowing for loop bounds and matrix powers.
inline long long to_ll(const Int &v)
{
	if (v > std::numeric_limits<long long>::max() ||
	    v < std::numeric_limits<long long>::min())
		throw std::overflow_error("integer too large for this operation");
	return v.convert_to<long long>();
}

} // namespace wordmap
