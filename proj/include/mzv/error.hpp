#pragma once

#include <stdexcept>
#include <string>

namespace mzvkit {

// Input outside the domain of an operation (bad index, word outside H^1, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string &what) : std::domain_error(what) {}
};

// An oracle or campaign refused to run because a configured cost cap was exceeded.
class RefusalError : public std::runtime_error {
public:
    explicit RefusalError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace mzvkit
