#pragma once

#include <stdexcept>
#include <string>

namespace nclkit {

// Precondition violated by caller-supplied data (bad vertex, bad family parameter, ...).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exponential search was asked to run on a graph above its configured vertex cap.
class limit_exceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

// Malformed edge-list, graph6 or JSON input.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nclkit
