#pragma once

#include <stdexcept>
#include <string>

namespace locmod {

enum class Errc {
  NonPrimeModulus,
  CharacteristicTwo,
  ReducibleModulus,
  ShapeMismatch,
  NotSquare,
  KTooLarge,
  NotAField,
  NotInvertible,
  Overflow,
  UnsupportedCase,
  SubstitutionConflict,
  TooLarge,
  NotNilpotentOrder2,
  ZeroVector,
  NotInStabilizer,
  PreconditionViolated,
  InsufficientData,
  Inconsistent,
  InvalidArgument,
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::NonPrimeModulus: return "NonPrimeModulus";
    case Errc::CharacteristicTwo: return "CharacteristicTwo";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::KTooLarge: return "KTooLarge";
    case Errc::NotAField: return "NotAField";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::Overflow: return "Overflow";
    case Errc::UnsupportedCase: return "UnsupportedCase";
    case Errc::SubstitutionConflict: return "SubstitutionConflict";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotNilpotentOrder2: return "NotNilpotentOrder2";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotInStabilizer: return "NotInStabilizer";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace locmod
