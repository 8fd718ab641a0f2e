#pragma once

#include <stdexcept>
#include <string>

namespace meanconvex {

// Argument outside an interval, pole of a weight, nonpositive mean input.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// f cannot be combined as asked: zero under a reciprocal, nonpositive under a log.
class evaluation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class inapplicable_spec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class hypothesis_mismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class insufficient_samples : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace meanconvex
