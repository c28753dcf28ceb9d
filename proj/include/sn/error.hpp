#pragma once

#include <stdexcept>
#include <string>

namespace sn {

/// Input is structurally invalid (mismatched degrees, out-of-range rank, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Input is valid but exceeds an explicit size limit of the implementation.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sn
