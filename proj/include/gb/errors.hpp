#ifndef GB_ERRORS_HPP
#define GB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gb {

// Malformed input files (graphs, CNF, tree decompositions). Messages carry
// line numbers where applicable.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An exponential search ran past its work budget.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace gb

#endif
