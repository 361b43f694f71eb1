#pragma once

#include <stdexcept>
#include <string>

namespace invnum {

/// Malformed input: out-of-range vertices, loops, 2-cycles, bad files.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size guard refused the instance.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search ran past its deadline. Never a substitute for a refutation.
class Timeout : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A claimed certificate failed verification.
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace invnum
