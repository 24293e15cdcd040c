// piforge: error taxonomy.
//
// Every failure mode the library can signal is a distinct exception type so
// callers (and the CLI's exit-code mapping) can dispatch without string
// matching. All of them derive from piforge::Error.
#pragma once

#include <stdexcept>
#include <string>

namespace piforge {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Checked 64-bit arithmetic overflowed. Exponents this large are always a bug
// in the input, never a value we should silently wrap.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// Mismatched vector lengths, bad indices, violated call preconditions.
class StructuralError : public Error {
public:
    explicit StructuralError(const std::string& msg) : Error(msg) {}
};

// Inverting the zero quantity.
class NotInvertible : public Error {
public:
    explicit NotInvertible(const std::string& msg) : Error(msg) {}
};

// expand(): the dimension is not an integer combination of the basis.
class NotExpandable : public Error {
public:
    explicit NotExpandable(const std::string& msg) : Error(msg) {}
};

// expand()/solvers: the supplied basis is not independent (or has zero members).
class InvalidBasis : public Error {
public:
    explicit InvalidBasis(const std::string& msg) : Error(msg) {}
};

// canonical_solve(): target is outside the rational span of the basis columns.
class NoSolution : public Error {
public:
    explicit NoSolution(const std::string& msg) : Error(msg) {}
};

// primitive_kernel()/pi_monomial(): the column set does not have nullity 1.
class NotPseudocircuit : public Error {
public:
    explicit NotPseudocircuit(const std::string& msg) : Error(msg) {}
};

// No prebasis exists for the chosen dependent variable.
class NotPrecomplete : public Error {
public:
    explicit NotPrecomplete(const std::string& msg) : Error(msg) {}
};

// A fixed kappa left every prebasis unsolvable.
class KappaInsufficient : public Error {
public:
    explicit KappaInsufficient(const std::string& msg) : Error(msg) {}
};

// apply_symmetry(): no pair of equations are swap-images for the given pair.
class NoSymmetricPair : public Error {
public:
    explicit NoSymmetricPair(const std::string& msg) : Error(msg) {}
};

// apply_symmetry(): the functional equation's exponent is outside {+1, -1}.
class UnsupportedExponent : public Error {
public:
    explicit UnsupportedExponent(const std::string& msg) : Error(msg) {}
};

// substitute(): a constituent variable appears in more than one substitution
// or in a symmetry declaration.
class OverlappingSubstitution : public Error {
public:
    explicit OverlappingSubstitution(const std::string& msg) : Error(msg) {}
};

// substitute(): a constituent variable is still referenced by a surviving
// declaration (e.g. it is the dependent variable).
class DanglingVariable : public Error {
public:
    explicit DanglingVariable(const std::string& msg) : Error(msg) {}
};

// A name does not resolve to a declared variable or base dimension.
class UnknownName : public Error {
public:
    explicit UnknownName(const std::string& msg) : Error(msg) {}
};

// A declaration collides with an existing name.
class DuplicateName : public Error {
public:
    explicit DuplicateName(const std::string& msg) : Error(msg) {}
};

// Problem-file parse error with a 1-based source position.
class ParseError : public Error {
public:
    ParseError(std::string file, int line, int col, const std::string& msg)
        : Error(file + ":" + std::to_string(line) + ":" + std::to_string(col) +
                ": " + msg),
          file_(std::move(file)), line_(line), col_(col), detail_(msg) {}

    const std::string& file() const { return file_; }
    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& detail() const { return detail_; }

private:
    std::string file_;
    int line_;
    int col_;
    std::string detail_;
};

} // namespace piforge
