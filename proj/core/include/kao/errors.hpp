#ifndef KAO_ERRORS_HPP
#define KAO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kao {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed expression text; carries the byte offset of the offending token.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(std::size_t pos, const std::string& msg)
        : Error("syntax error at offset " + std::to_string(pos) + ": " + msg),
          position(pos) {}
};

/// An identifier that is not declared in the signature, with the syntactic
/// class it was used as ("action" or "observable").
struct UnknownSymbol : Error {
    std::string name;
    std::string context;
    UnknownSymbol(std::string n, std::string ctx)
        : Error("unknown " + ctx + " '" + n + "'"),
          name(std::move(n)), context(std::move(ctx)) {}
};

/// More than 16 observables; atoms are enumerated and 2^|observables| must
/// stay tractable.
struct SignatureTooLarge : Error {
    using Error::Error;
};

/// A brute-force enumeration outgrew its configured cap.
struct BudgetExceeded : Error {
    using Error::Error;
};

struct NotSquare : Error {
    using Error::Error;
};

}  // namespace kao

#endif
