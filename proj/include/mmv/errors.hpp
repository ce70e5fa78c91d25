#ifndef MMV_ERRORS_HPP
#define MMV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mmv {

// Invalid mathematical input (odd Bernoulli index, divergent MZV index, ...).
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// Evaluation requested at a pole of the function.
struct pole_error : domain_error {
    explicit pole_error(const std::string& msg) : domain_error(msg) {}
};

// Requested accuracy cannot be met with the given truncation / precision.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A consistency cross-check failed (e.g. non-constant coefficient ratios).
struct inconsistency_error : std::runtime_error {
    explicit inconsistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace mmv

#endif
