#pragma once

#include <stdexcept>
#include <string>

namespace sperner {

// Error taxonomy shared by all modules.  Each class corresponds to one
// failure mode named in the public contracts; callers that want to
// distinguish them catch the subtype, everyone else catches Error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments: non-divisor p, n too small, wrong group family, ...
struct ParameterError : Error {
    using Error::Error;
};

// Enumeration or construction exceeds a configured budget.
struct ResourceError : Error {
    using Error::Error;
};

// Input digraph is not a valid Hasse diagram (cycle detected).
struct StructuralError : Error {
    using Error::Error;
};

// Operation requires state the object does not have (e.g. rank function).
struct StateError : Error {
    using Error::Error;
};

// Input violates a semantic precondition (e.g. conjugation-closed set).
struct DomainError : Error {
    using Error::Error;
};

// Requested object is declared out of scope (E7, E8).
struct NotSupportedError : Error {
    using Error::Error;
};

// A partition fed to quotient/lift machinery is not induced by poset
// automorphisms (rank or biregularity violation).
struct NotAutomorphismActionError : Error {
    using Error::Error;
};

// Malformed poset / certificate / weight file.
struct SchemaError : Error {
    using Error::Error;
};

// A verification pass that must never fail did fail.
struct InternalConsistencyError : Error {
    using Error::Error;
};

}  // namespace sperner
