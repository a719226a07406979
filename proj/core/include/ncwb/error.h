#pragma once
#include <stdexcept>
#include <string>

namespace ncwb {

// all library failures (bad input, degree bounds, parse errors) throw this
class Error : public std::runtime_error {
public:
	explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace ncwb
