#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace splitchroma {

// Input violates a documented precondition (bad graph, out-of-family request).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency condition failed. The CLI maps this to exit code 3.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {
inline bool& strict_flag() {
    static bool flag = []() {
        const char* v = std::getenv("SPLITCHROMA_ASSERT");
        return v != nullptr && std::string(v) == "strict";
    }();
    return flag;
}
} // namespace detail

inline bool strict_checks_enabled() { return detail::strict_flag(); }
inline void set_strict_checks(bool on) { detail::strict_flag() = on; }

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InputError(msg);
}

// Always-on consistency check; cheap conditions only.
inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

} // namespace splitchroma
