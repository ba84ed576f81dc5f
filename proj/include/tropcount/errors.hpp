#ifndef TROPCOUNT_ERRORS_HPP
#define TROPCOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropcount {

// Exit codes: 0 success, 2 validation, 3 genericity, 4 resource budget,
// 5 internal consistency.

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
    static constexpr int exit_code = 2;
};

struct GenericityError : std::runtime_error {
    explicit GenericityError(const std::string& msg) : std::runtime_error(msg) {}
    static constexpr int exit_code = 3;
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
    static constexpr int exit_code = 4;
};

struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
    static constexpr int exit_code = 5;
};

} // namespace tropcount

#endif
