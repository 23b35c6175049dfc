#pragma once

#include <stdexcept>
#include <string>

namespace grouptrace {

// Base class of everything this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands live over different base fields.
class FieldMismatchError : public Error {
public:
    explicit FieldMismatchError(const std::string& what) : Error(what) {}
};

// Shapes do not line up (matrix/vector/tensor sizes).
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

// Malformed input text (JSON descriptors, scalar strings).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A multiplication table that is not a group.
class NotAGroupError : public Error {
public:
    explicit NotAGroupError(const std::string& what) : Error(what) {}
};

// Structural axioms failed on user-supplied data; carries the report text.
class AxiomError : public Error {
public:
    AxiomError(const std::string& what, std::string report)
        : Error(what), report_(std::move(report)) {}
    const std::string& report() const { return report_; }

private:
    std::string report_;
};

// Fourier data requested for a group with no invariant integral.
class NotReductiveError : public Error {
public:
    explicit NotReductiveError(const std::string& what) : Error(what) {}
};

// Block splitting requested for a dual algebra that is not semisimple.
class NotSemisimpleError : public Error {
public:
    explicit NotSemisimpleError(const std::string& what) : Error(what) {}
};

// The request is outside the supported scope (blocks over Q, oversized
// dimensions, characteristic above the splitting cap, ...).
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& what) : Error(what) {}
};

// An internal consistency check failed; indicates corrupted input data.
class StructureError : public Error {
public:
    explicit StructureError(const std::string& what) : Error(what) {}
};

} // namespace grouptrace
