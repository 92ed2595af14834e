/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef NICESEC_GUARD_ERRORS_HH
#define NICESEC_GUARD_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace nicesec
{
    class NicesecError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// The generating pairs of a relation contain a directed cycle.
    class CycleError : public NicesecError
    {
        public:
            using NicesecError::NicesecError;
    };

    class IndexError : public NicesecError
    {
        public:
            using NicesecError::NicesecError;
    };

    class LevelError : public NicesecError
    {
        public:
            using NicesecError::NicesecError;
    };

    class StructureError : public NicesecError
    {
        public:
            using NicesecError::NicesecError;
    };

    class HeightError : public NicesecError
    {
        public:
            using NicesecError::NicesecError;
    };

    /// A base permutation could not be extended uniquely to an automorphism.
    class ExtensionError : public NicesecError
    {
        public:
            using NicesecError::NicesecError;
    };

    /// A removed set is not a down-set (or up-set) as claimed.
    class SideError : public NicesecError
    {
        public:
            using NicesecError::NicesecError;
    };

    /// A constructed object failed its own validation. Seeing one of these
    /// means a bug, or a counterexample to the theory the construction
    /// relies upon.
    class InvariantError : public NicesecError
    {
        public:
            using NicesecError::NicesecError;
    };

    class PreconditionError : public NicesecError
    {
        public:
            using NicesecError::NicesecError;
    };

    class ContextError : public NicesecError
    {
        public:
            using NicesecError::NicesecError;
    };

    /// A search ran out of its node budget. Never to be read as "no".
    class UndecidedError : public NicesecError
    {
        public:
            using NicesecError::NicesecError;
    };

    class ParseError : public NicesecError
    {
        public:
            using NicesecError::NicesecError;
    };
}

#endif
