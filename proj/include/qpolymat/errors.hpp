#pragma once

#include <stdexcept>
#include <string>

namespace qpolymat {

/// Raised when an enumeration would exceed the configured element cap.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(const std::string& what, long long required, long long cap)
        : std::runtime_error(what + " (needs " + std::to_string(required) + " elements, cap is " +
                             std::to_string(cap) + "; raise --cap or QPOLYMAT_CAP)"),
          required_(required),
          cap_(cap) {}

    long long required() const { return required_; }
    long long cap() const { return cap_; }

private:
    long long required_;
    long long cap_;
};

/// Raised when a cross-checked identity fails to hold on concrete data.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long long kDefaultCap = 1000000;

}  // namespace qpolymat
