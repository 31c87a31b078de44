#pragma once

#include <stdexcept>
#include <string>

namespace pact {

// Validation failure: bad input data, broken invariant, unknown point/element.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A size guard tripped; the computation was refused, not attempted.
class guard_error : public error {
public:
    explicit guard_error(const std::string& what) : error(what) {}
};

} // namespace pact
