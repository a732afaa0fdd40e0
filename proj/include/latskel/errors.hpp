#ifndef LATSKEL_ERRORS_HPP
#define LATSKEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latskel {

/// Base of every named failure. `name()` is stable and is what the CLI
/// prints next to its nonzero exit code.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define LATSKEL_ERROR(Name)                                              \
    class Name : public Error {                                          \
    public:                                                              \
        explicit Name(const std::string& what) : Error(#Name, what) {}   \
    }

LATSKEL_ERROR(NotALattice);
LATSKEL_ERROR(NoBounds);
LATSKEL_ERROR(CycleDetected);
LATSKEL_ERROR(TooLarge);
LATSKEL_ERROR(NotComparable);
LATSKEL_ERROR(BlockNotInterval);
LATSKEL_ERROR(ChainDependentWeight);
LATSKEL_ERROR(IsZeta0);
LATSKEL_ERROR(NegativeJCount);
LATSKEL_ERROR(InconsistentCounts);
LATSKEL_ERROR(InvalidWds);
LATSKEL_ERROR(UnknownSuite);

#undef LATSKEL_ERROR

/// Parse failures carry the 1-based line number of the offending input.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("ParseError", "line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

} // namespace latskel

#endif
