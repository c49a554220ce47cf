#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxcomm {

/// Base of every error raised by the library.  The CLI maps the three
/// families below onto exit codes 2, 3 and 4.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad symbol, asymmetric matrix, ...).
class InvalidInput : public Error {
public:
	using Error::Error;
};

/// A configurable budget (class size, memo entries) was exceeded.
class ResourceLimit : public Error {
public:
	using Error::Error;
};

/// An internal invariant failed; indicates a construction bug or an
/// input outside the mathematical assumptions of an algorithm.
class InvariantViolation : public Error {
public:
	using Error::Error;
};

class NotReduced : public InvalidInput {
public:
	using InvalidInput::InvalidInput;
};

/// Extension requested along a generator that is already a right descent.
class DescentError : public InvalidInput {
public:
	using InvalidInput::InvalidInput;
};

class ContextMismatch : public InvalidInput {
public:
	using InvalidInput::InvalidInput;
};

/// A vector classified as a root has coordinates of both signs.
class MixedSigns : public InvariantViolation {
public:
	using InvariantViolation::InvariantViolation;
};

/// The depth-extension rule found a non-simple new root with no earlier
/// root pairing positively against it.
class UndefinedExtension : public InvariantViolation {
public:
	using InvariantViolation::InvariantViolation;
};

/// Limits shared by the enumeration and memoized counting routines.
struct Budget {
	/// Maximum number of words produced by an enumeration (class size,
	/// reduced words).
	std::size_t max_words = 1'000'000;
	/// Maximum number of memo entries (down-sets, group elements).
	std::size_t max_memo = 10'000'000;
};

} // namespace coxcomm
