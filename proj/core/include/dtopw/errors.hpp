#pragma once

#include <stdexcept>
#include <string>

namespace dtopw {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleDetected : public Error { public: using Error::Error; };
class UnknownLabel : public Error { public: using Error::Error; };
class DuplicateLabel : public Error { public: using Error::Error; };
class NotAPartialOrder : public Error { public: using Error::Error; };
class BoundExceeded : public Error { public: using Error::Error; };
class NotDirected : public Error { public: using Error::Error; };
class NotATopology : public Error { public: using Error::Error; };
class NotT0 : public Error { public: using Error::Error; };
class NotALattice : public Error { public: using Error::Error; };
class NotDistributive : public Error { public: using Error::Error; };
class NotMonotone : public Error { public: using Error::Error; };
class NotAGaloisConnection : public Error { public: using Error::Error; };
class NotARetraction : public Error { public: using Error::Error; };
class OracleUnavailable : public Error { public: using Error::Error; };
class UnknownName : public Error { public: using Error::Error; };
class NotInFragment : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };
class UnknownProperty : public Error { public: using Error::Error; };

/// Raised when a gallery claim does not hold; what() lists every failing
/// claim together with its witness line.
class ClaimFailed : public Error { public: using Error::Error; };

}  // namespace dtopw
