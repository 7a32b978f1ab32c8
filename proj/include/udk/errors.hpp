#ifndef UDK_ERRORS_HPP_
#define UDK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace udk {

// All library errors derive from Error and carry a stable machine name
// plus the process exit code the CLI maps them to:
//   1 property/expectation violation, 2 input error, 3 cap exceeded.
class Error : public std::runtime_error {
 public:
  Error(std::string name, int exit_code, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)), exit_code_(exit_code) {}
  const std::string& name() const { return name_; }
  int exit_code() const { return exit_code_; }

 private:
  std::string name_;
  int exit_code_;
};

#define UDK_DEFINE_ERROR(Cls, code)                          \
  class Cls : public Error {                                 \
   public:                                                   \
    explicit Cls(const std::string& what)                    \
        : Error(#Cls, code, std::string(#Cls) + ": " + what) {} \
  }

UDK_DEFINE_ERROR(ZeroConductor, 2);
UDK_DEFINE_ERROR(ZeroDenominator, 2);
UDK_DEFINE_ERROR(ParseError, 2);
UDK_DEFINE_ERROR(FormatError, 2);
UDK_DEFINE_ERROR(UnknownName, 2);
UDK_DEFINE_ERROR(UnknownWitness, 2);
UDK_DEFINE_ERROR(DataMissing, 2);
UDK_DEFINE_ERROR(UnsupportedPrime, 2);
UDK_DEFINE_ERROR(IoError, 2);

UDK_DEFINE_ERROR(NotRational, 1);
UDK_DEFINE_ERROR(SingularGenerator, 1);
UDK_DEFINE_ERROR(NotEnumerated, 1);
UDK_DEFINE_ERROR(IntegralityViolation, 1);
UDK_DEFINE_ERROR(NotSymplectic, 1);
UDK_DEFINE_ERROR(VerificationFailed, 1);

UDK_DEFINE_ERROR(CapExceeded, 3);

#undef UDK_DEFINE_ERROR

}  // namespace udk

#endif
