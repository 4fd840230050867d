#pragma once

#include <stdexcept>
#include <string>

namespace ute {

// All recoverable failures in the library throw this type with a short
// machine-checkable reason as the leading part of the message.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

}  // namespace ute
