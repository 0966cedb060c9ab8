#pragma once

#include <stdexcept>
#include <string>

namespace hypvol {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Trace lies on the parabolic/identity boundary and the matrix does not
// settle the question; never resolved silently.
struct AmbiguousClass : Error {
  using Error::Error;
};

struct IdentityHasAllFixed : Error {
  using Error::Error;
};

struct NotReal : Error {
  using Error::Error;
};

struct DegenerateFrame : Error {
  using Error::Error;
};

struct DependentBasis : Error {
  using Error::Error;
};

struct NonGenericConfiguration : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct EmptyFamily : Error {
  using Error::Error;
};

struct InvalidInput : Error {
  using Error::Error;
};

} // namespace hypvol
