#pragma once

#include <stdexcept>
#include <string>

namespace addtop {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct NotFinite : Error { using Error::Error; };
struct TargetMismatch : Error { using Error::Error; };
struct ApexMismatch : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };
struct NotAComplex : Error { using Error::Error; };
struct UnknownObject : Error { using Error::Error; };
struct WindowOverflow : Error { using Error::Error; };
struct Unstable : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace addtop
