#ifndef LATFORGE_ERRORS_HPP
#define LATFORGE_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace latforge {

/// Base class of everything thrown by the library.
class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The reflexive-transitive closure of a cover list has a directed cycle.
class CyclicCoversError : public LatticeError {
 public:
  CyclicCoversError() : LatticeError("CyclicCovers: cover relation has a cycle") {}
};

/// Some pair of elements has no unique least upper / greatest lower bound.
class NotALatticeError : public LatticeError {
 public:
  NotALatticeError(std::uint16_t x, std::uint16_t y, bool join_side)
      : LatticeError("NotALattice(" + std::to_string(x) + ", " + std::to_string(y) + "): no unique " +
                     (join_side ? "least upper" : "greatest lower") + " bound"),
        x(x),
        y(y),
        join_side(join_side) {}
  std::uint16_t x;
  std::uint16_t y;
  bool join_side;
};

class UnknownNameError : public LatticeError {
 public:
  explicit UnknownNameError(const std::string& name) : LatticeError("UnknownName: " + name) {}
};

class BadParamError : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

/// Requested interval [a, b] with a not below b (or an element outside it).
class BadIntervalError : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

/// A closure or enumeration grew past its element cap.
class CapExceededError : public LatticeError {
 public:
  CapExceededError(std::size_t cap, std::size_t reached)
      : LatticeError("CapExceeded: cap " + std::to_string(cap) + ", reached " + std::to_string(reached)),
        cap(cap),
        reached(reached) {}
  std::size_t cap;
  std::size_t reached;
};

class NotSurjectiveError : public LatticeError {
 public:
  NotSurjectiveError() : LatticeError("NotSurjective: map misses part of its codomain") {}
};

/// A preimage class has no least element, so the map was not a lattice homomorphism.
class NoMinimumError : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

/// Davey-Sands lifting requires the source to satisfy Whitman's condition.
class PreconditionWError : public LatticeError {
 public:
  PreconditionWError() : LatticeError("PreconditionW: source partial lattice fails (W)") {}
};

/// A named hypothesis of a theorem engine does not hold for the given input.
class PreconditionFailedError : public LatticeError {
 public:
  explicit PreconditionFailedError(const std::string& which)
      : LatticeError("PreconditionFailed: " + which), which(which) {}
  std::string which;
};

class NotInMomegaError : public LatticeError {
 public:
  NotInMomegaError() : LatticeError("NotInMomega: lattice is outside the length-two variety") {}
};

class PremiseViolatedError : public LatticeError {
 public:
  explicit PremiseViolatedError(int index)
      : LatticeError("PremiseViolated(" + std::to_string(index) + ")"), index(index) {}
  int index;
};

class NotJoinHomError : public LatticeError {
 public:
  NotJoinHomError() : LatticeError("NotJoinHom: map does not preserve binary joins") {}
};

class NotJoinIrreducibleError : public LatticeError {
 public:
  NotJoinIrreducibleError() : LatticeError("NotJoinIrreducible") {}
};

class NotDistributiveError : public LatticeError {
 public:
  NotDistributiveError() : LatticeError("NotDistributive") {}
};

/// No separating witness exists, so the ideal map is not an embedding.
class NoWitnessError : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class BadFloorError : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class UnboundVariableError : public LatticeError {
 public:
  explicit UnboundVariableError(const std::string& name) : LatticeError("UnboundVariable: " + name) {}
};

class DimensionMismatchError : public LatticeError {
 public:
  DimensionMismatchError() : LatticeError("DimensionMismatch") {}
};

class FieldMismatchError : public LatticeError {
 public:
  FieldMismatchError() : LatticeError("FieldMismatch") {}
};

class IndexOutOfTruncationError : public LatticeError {
 public:
  explicit IndexOutOfTruncationError(int n)
      : LatticeError("IndexOutOfTruncation: n = " + std::to_string(n)), n(n) {}
  int n;
};

class IndexOutOfWindowError : public LatticeError {
 public:
  explicit IndexOutOfWindowError(int n) : LatticeError("IndexOutOfWindow: n = " + std::to_string(n)), n(n) {}
  int n;
};

class NotConvexSublatticeError : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

/// An element set accessor was used on a presented lattice whose closure hit its cap.
class NotMaterializedError : public LatticeError {
 public:
  NotMaterializedError() : LatticeError("NotMaterialized: closure stopped at cap") {}
};

class ParseError : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

}  // namespace latforge

#endif
