#ifndef SNCLAB_ERRORS_HPP
#define SNCLAB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace snclab {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live on different vertex sets, or a vertex id is outside 0..n-1.
struct DimensionError : Error {
    using Error::Error;
};

/// A documented precondition was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

/// Malformed input document. `where` is a path into the document,
/// e.g. "a[2][3]".
class ParseError : public Error {
  public:
    ParseError(std::string where, const std::string & what) :
        Error(where.empty() ? what : where + ": " + what),
        where_(std::move(where))
    {
    }

    const std::string & where() const noexcept { return where_; }

  private:
    std::string where_;
};

} // namespace snclab

#endif
