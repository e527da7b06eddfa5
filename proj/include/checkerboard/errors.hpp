#pragma once

#include <stdexcept>
#include <string>

namespace checkerboard {

/// Base class for all library-defined failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A stated operation precondition does not hold for the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A verification or internal proof-step check failed.
class VerificationError : public Error {
 public:
  using Error::Error;
};

class DegenerateFormError : public PreconditionError {
 public:
  DegenerateFormError() : PreconditionError("bilinear form is degenerate (det = 0)") {}
};

class OppositeUndefinedError : public PreconditionError {
 public:
  OppositeUndefinedError() : PreconditionError("opposite parameters undefined for m = n") {}
};

class IndefiniteWithoutBoundError : public PreconditionError {
 public:
  IndefiniteWithoutBoundError()
      : PreconditionError(
            "lattice is not positive-definite; a latitude shell bound is required") {}
};

class RankTooLargeError : public PreconditionError {
 public:
  explicit RankTooLargeError(int n, int limit)
      : PreconditionError("rank " + std::to_string(n) + " exceeds enumeration limit " +
                          std::to_string(limit)) {}
};

class NotARootLatticeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotHadamardError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

enum class DesignFault {
  BlockCountMismatch,
  BlockSizeMismatch,
  IntersectionNotConstant,
  InvalidBlock,
};

class DesignError : public PreconditionError {
 public:
  DesignError(DesignFault fault, const std::string& what)
      : PreconditionError(what), fault_(fault) {}
  DesignFault fault() const { return fault_; }

 private:
  DesignFault fault_;
};

class NotCartanAError : public PreconditionError {
 public:
  NotCartanAError() : PreconditionError("sublattice Gram is not the A_{n-1} Cartan matrix") {}
};

class NotPrimitiveError : public PreconditionError {
 public:
  NotPrimitiveError() : PreconditionError("sublattice embedding is not primitive") {}
};

class KernelRankNotOneError : public PreconditionError {
 public:
  explicit KernelRankNotOneError(std::size_t rank)
      : PreconditionError("annihilator has rank " + std::to_string(rank) + ", expected 1") {}
};

class InternalInconsistencyError : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

}  // namespace checkerboard
