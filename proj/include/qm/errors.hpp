#ifndef QM_ERRORS_HPP
#define QM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qm {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- order / lattice construction -------------------------------------------

struct NotAPartialOrder : Error {
    explicit NotAPartialOrder(const std::string& msg) : Error("not a partial order: " + msg) {}
};

struct NotALattice : Error {
    explicit NotALattice(const std::string& msg) : Error("not a lattice: " + msg) {}
};

struct NoBottom : Error {
    NoBottom() : Error("lattice has no bottom element") {}
};

struct NoTop : Error {
    NoTop() : Error("lattice has no top element") {}
};

struct UnknownElement : Error {
    explicit UnknownElement(const std::string& which) : Error("unknown element: " + which) {}
};

struct BoundExceeded : Error {
    explicit BoundExceeded(const std::string& msg) : Error("enumeration bound exceeded: " + msg) {}
};

// -- quantale axioms ----------------------------------------------------------

struct AssocFails : Error {
    explicit AssocFails(const std::string& witness) : Error("associativity fails: " + witness) {}
};

struct UnitFails : Error {
    explicit UnitFails(const std::string& witness) : Error("unit law fails: " + witness) {}
};

struct DistribFails : Error {
    explicit DistribFails(const std::string& witness) : Error("join distributivity fails: " + witness) {}
};

struct NotOrderPreserving : Error {
    explicit NotOrderPreserving(const std::string& witness) : Error("involution not order-preserving: " + witness) {}
};

struct NotInvolutive : Error {
    explicit NotInvolutive(const std::string& witness) : Error("map not involutive: " + witness) {}
};

struct NotMultReversing : Error {
    explicit NotMultReversing(const std::string& witness) : Error("involution not multiplication-reversing: " + witness) {}
};

// -- module axioms ------------------------------------------------------------

struct ActionAssocFails : Error {
    explicit ActionAssocFails(const std::string& witness) : Error("action associativity fails: " + witness) {}
};

struct ActionUnitFails : Error {
    explicit ActionUnitFails(const std::string& witness) : Error("action unit law fails: " + witness) {}
};

struct ActionDistribFails : Error {
    explicit ActionDistribFails(const std::string& witness) : Error("action distributivity fails: " + witness) {}
};

struct NotIdempotent : Error {
    explicit NotIdempotent(const std::string& witness) : Error("element not idempotent: " + witness) {}
};

struct NotFixed : Error {
    explicit NotFixed(const std::string& witness) : Error("element not fixed by the idempotent: " + witness) {}
};

struct NotPreInner : Error {
    explicit NotPreInner(const std::string& msg) : Error("not a pre-inner product: " + msg) {}
};

struct HermitianFails : Error {
    explicit HermitianFails(const std::string& witness) : Error("Hilbert structure validation fails: " + witness) {}
};

struct HypothesisFails : Error {
    explicit HypothesisFails(const std::string& msg) : Error("hypothesis not met: " + msg) {}
};

struct CharacterisationFails : Error {
    explicit CharacterisationFails(const std::string& witness) : Error("involute characterisation fails: " + witness) {}
};

// -- matrices -----------------------------------------------------------------

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& msg) : Error("matrix shape mismatch: " + msg) {}
};

struct NotSquare : Error {
    NotSquare() : Error("matrix is not square") {}
};

// Violations of facts the library is supposed to uphold.  Any of these
// indicates a bug in this implementation, never bad user input.

struct EquivalenceViolation : Error {
    explicit EquivalenceViolation(const std::string& witness) : Error("internal equivalence violated (bug): " + witness) {}
};

struct Theorem11Violation : Error {
    explicit Theorem11Violation(const std::string& witness) : Error("canonical-basis biconditional violated (bug): " + witness) {}
};

struct Theorem14Violation : Error {
    explicit Theorem14Violation(const std::string& witness) : Error("uniqueness of Hilbert structure violated (bug): " + witness) {}
};

struct Lemma15Violation : Error {
    explicit Lemma15Violation(const std::string& witness) : Error("Gram identity violated (bug): " + witness) {}
};

struct Lemma16Violation : Error {
    explicit Lemma16Violation(const std::string& witness) : Error("regularity agreement violated (bug): " + witness) {}
};

// -- workspace / CLI ------------------------------------------------------------

struct ParseError : Error {
    ParseError(const std::string& file, int line, const std::string& msg)
        : Error(file + ":" + std::to_string(line) + ": " + msg), file_(file), line_(line) {}
    const std::string& file() const { return file_; }
    int line() const { return line_; }

  private:
    std::string file_;
    int line_;
};

struct ValidationError : Error {
    ValidationError(const std::string& file, int line, const std::string& msg)
        : Error(file + ":" + std::to_string(line) + ": " + msg) {}
};

struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& name) : Error("unknown check suite: " + name) {}
};

} // namespace qm

#endif // QM_ERRORS_HPP
