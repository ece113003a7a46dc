#ifndef CAPGRAPH_ERRORS_HPP
#define CAPGRAPH_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace capgraph
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Bad argument: out-of-range vertex, invalid generator parameters, arity
    // mismatch, non-stable witness where a stable one is required.
    class ParameterError : public Error
    {
    public:
        using Error::Error;
    };

    // Malformed serialized input. offset is the byte position of the first
    // offending character.
    class FormatError : public Error
    {
    public:
        FormatError(const std::string & message, std::size_t offset) :
            Error(message + " (byte " + std::to_string(offset) + ")"),
            offset(offset)
        {
        }

        std::size_t offset;
    };

    // A construction would exceed the configured vertex budget.
    class SizeError : public Error
    {
    public:
        using Error::Error;
    };

    // An exact solve ran out of its node or time budget. Recoverable: the
    // caller may retry with a larger budget or skip the instance.
    class BudgetError : public Error
    {
    public:
        BudgetError(const std::string & message, std::uint64_t nodes, double seconds) :
            Error(message),
            nodes(nodes),
            seconds(seconds)
        {
        }

        std::uint64_t nodes;
        double seconds;
    };

    // The SDP solver could not certify the requested gap within its
    // iteration budget. Carries the best certified enclosure found.
    class ConvergenceError : public Error
    {
    public:
        ConvergenceError(const std::string & message, double best_lower, double best_upper) :
            Error(message),
            best_lower(best_lower),
            best_upper(best_upper)
        {
        }

        double best_lower;
        double best_upper;
        double best_gap() const { return best_upper - best_lower; }
    };

    // A matrix supplied to the rank bound is not fitting for the graph.
    class FittingError : public Error
    {
    public:
        FittingError(const std::string & message, int row, int col) :
            Error(message),
            row(row),
            col(col)
        {
        }

        int row;
        int col;
    };

    // A certificate derivation came out with nonpositive slack.
    class DerivationError : public Error
    {
    public:
        DerivationError(const std::string & message, double deficit) :
            Error(message),
            deficit(deficit)
        {
        }

        double deficit;
    };

    // Every k in a capacity sweep was skipped, so no lower bound exists.
    class NoLowerBoundError : public Error
    {
    public:
        using Error::Error;
    };
}

#endif
