#pragma once

#include <stdexcept>
#include <string>

namespace sptab {

/// Root of the library's exception hierarchy.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Violation of a documented precondition or domain rule (CLI exit code 1).
struct DomainError : Error {
    using Error::Error;
};

/// Malformed textual or JSON input (CLI exit code 2).
struct ParseError : Error {
    using Error::Error;
};

/// add_box: the requested row has no addable box.
struct NoCocornerInRow : DomainError {
    using DomainError::DomainError;
};

/// remove_box: the requested row has no removable box.
struct NoCornerInRow : DomainError {
    using DomainError::DomainError;
};

/// diff_box: the two partitions do not differ by exactly one box.
struct NotACover : DomainError {
    using DomainError::DomainError;
};

/// jdt_slide: the hole is already a corner; no neighbor can move in.
struct HoleAtCorner : DomainError {
    using DomainError::DomainError;
};

/// column_delete: the bottom of the first column does not carry the letter k.
struct MissingK : DomainError {
    using DomainError::DomainError;
};

/// berele_insert: the input tableau violates the symplectic condition.
struct NotSymplectic : DomainError {
    using DomainError::DomainError;
};

/// Standardized insertion: input word/tableau is not validly standardized.
struct NotStandardized : DomainError {
    using DomainError::DomainError;
};

/// standardize_tableau: multiplicities minus cancellations do not match the tableau.
struct CountMismatch : DomainError {
    using DomainError::DomainError;
};

/// forward/backward local rule: the corner shapes fit no rule case.
struct InvalidConfiguration : DomainError {
    using DomainError::DomainError;
};

/// extract_p: the right edge of the grid does not decompose into the
/// horizontal strips the extraction requires.
struct MalformedEdge : DomainError {
    using DomainError::DomainError;
};

/// reconstruct_row_backward: the hypothesized row is unacceptable (nonempty
/// leftmost shape, or no rule case applies mid-walk).
struct RowRejected : DomainError {
    using DomainError::DomainError;
};

/// reverse_correspondence / classify_last_step: (P, Q) is not a valid pair.
struct InvalidPair : DomainError {
    using DomainError::DomainError;
};

/// classify_last_step: the pair encodes the empty word; there is no last step.
struct EmptyWord : DomainError {
    using DomainError::DomainError;
};

/// enumerate_sp_tableaux: shape has more rows than the alphabet allows.
struct ShapeTooLong : DomainError {
    using DomainError::DomainError;
};

/// check_all: (2n)^f exceeds the exhaustion guard.
struct ScopeTooLarge : DomainError {
    using DomainError::DomainError;
};

}  // namespace sptab
