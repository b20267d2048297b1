#ifndef REGAL_ERRORS_HPP
#define REGAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace regal {

/// Malformed input: bad grammar, unknown variable, coefficient not in the field.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured cap (S-pair count, reduction degree, iteration limit) was hit.
/// Never silent: the computation is abandoned, not truncated.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands constructed over different rings, or incompatible orders.
struct ring_mismatch : std::invalid_argument {
    explicit ring_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented precondition does not hold (unit ideal, wrong dimension, ...).
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace regal

#endif
