#pragma once

#include <stdexcept>
#include <string>

namespace profgen {

// Error taxonomy shared across the library. Every condition a caller can
// reasonably handle gets its own type; all derive from Error.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Full in-memory evaluation would exceed the configured combination cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// A generator violates one of its structural constraints.
class InvalidGenerator : public Error {
public:
    using Error::Error;
};

// count_profiles requires pairwise-disjoint criterion domains.
class OverlappingCriteria : public Error {
public:
    using Error::Error;
};

// Global dedup of an overlapping-criteria enumeration hit the row cap.
class DedupCapExceeded : public Error {
public:
    using Error::Error;
};

class EmptyMatrix : public Error {
public:
    using Error::Error;
};

// Naive reference implementation refused an input above its size guard.
class OracleTooLarge : public Error {
public:
    using Error::Error;
};

// No profile of the generator contains the requested symptom set.
class Unsatisfiable : public Error {
public:
    using Error::Error;
};

// G3 criteria pass through the reducer unchanged; forcing them is an error.
class G3NotReducible : public Error {
public:
    using Error::Error;
};

// A profile or matrix was combined with one from a different symbol table.
class TableMismatch : public Error {
public:
    using Error::Error;
};

class UnknownSymptom : public Error {
public:
    using Error::Error;
};

}  // namespace profgen
