#pragma once

#include <stdexcept>
#include <string>

namespace greenseq {

/* Base for every error the library throws on a broken contract. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* exchange data validation */
struct BadSymmetrizer : Error { using Error::Error; };
struct NonzeroDiagonal : Error { using Error::Error; };
struct NotSkewSymmetrizable : Error { using Error::Error; };
struct CyclicQuiver : Error { using Error::Error; };

/* exact linear algebra */
struct SingularMatrix : Error { using Error::Error; };
struct SingularC : Error { using Error::Error; };
struct NonIntegralResult : Error { using Error::Error; };

/* search and polygon machinery */
struct NotGreen : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct AlternationMismatch : Error { using Error::Error; };
struct ReplayFailed : Error { using Error::Error; };
struct IncompleteSearch : Error { using Error::Error; };

/* affine-type geometry */
struct NotTame : Error { using Error::Error; };
struct TooManyRegulars : Error { using Error::Error; };
struct BoundExceeded : Error { using Error::Error; };

/* file / argument handling */
struct InvalidInput : Error { using Error::Error; };

}  // namespace greenseq
