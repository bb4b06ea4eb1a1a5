#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilcohom {

// Base class for all errors raised on invalid input or unsatisfied
// preconditions. Internal invariant violations use std::logic_error instead,
// so callers can tell "bad input" from "bug" by the exception hierarchy.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::string location)
        : Error(location.empty() ? msg : location + ": " + msg),
          location(std::move(location)) {}
    std::string location;
};

class ValidationError : public Error {
public:
    ValidationError(const std::string& reason, std::string field)
        : Error(field.empty() ? reason : field + ": " + reason),
          field(std::move(field)) {}
    std::string field;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

class NotNilpotent : public Error {
public:
    explicit NotNilpotent(int stable_dim)
        : Error("lower central series stabilizes at dimension " +
                std::to_string(stable_dim) + " > 0; algebra is not nilpotent"),
          stable_dim(stable_dim) {}
    int stable_dim;
};

class OddDimension : public Error {
public:
    explicit OddDimension(int dim)
        : Error("complex structure requires even dimension, got " +
                std::to_string(dim)) {}
};

class NotIntegrable : public Error {
public:
    explicit NotIntegrable(const std::string& witness)
        : Error("complex structure is not integrable: " + witness),
          witness(witness) {}
    std::string witness;
};

class BasisMismatch : public Error {
public:
    explicit BasisMismatch(const std::string& msg) : Error(msg) {}
};

class WrongBasis : public Error {
public:
    explicit WrongBasis(const std::string& msg) : Error(msg) {}
};

class TableMismatch : public Error {
public:
    TableMismatch() : Error("cohomology classes come from different tables") {}
};

class UnknownEntry : public Error {
public:
    explicit UnknownEntry(const std::string& name)
        : Error("unknown catalog entry '" + name + "'") {}
};

class DimensionCap : public Error {
public:
    explicit DimensionCap(int dim, int cap)
        : Error("dimension " + std::to_string(dim) + " exceeds the cap of " +
                std::to_string(cap) + " enforced to bound exterior-algebra sizes") {}
};

// D composed with D is nonzero: the input matrices are not a cochain complex.
class NotAComplex : public Error {
public:
    explicit NotAComplex(int degree)
        : Error("differentials do not compose to zero at degree " +
                std::to_string(degree)),
          degree(degree) {}
    int degree;
};

// dim H^{m,m} != 1 would contradict Poincare duality for a nilpotent algebra;
// reaching this on validated input signals a bug, so it is a logic_error.
class TopNotOneDimensional : public std::logic_error {
public:
    explicit TopNotOneDimensional(int dim)
        : std::logic_error("top Dolbeault cohomology has dimension " +
                           std::to_string(dim) + ", expected 1") {}
};

}  // namespace nilcohom
