#pragma once

#include <stdexcept>
#include <string>

namespace lenstorsion {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotCoprime : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };
struct UnknownEdge : Error { using Error::Error; };
struct DegenerateParams : Error { using Error::Error; };
struct DegenerateTet : Error { using Error::Error; };
struct NotRealizable : Error { using Error::Error; };
struct ZeroLengthEdge : Error { using Error::Error; };
struct DegenerateK : Error { using Error::Error; };
struct BlockStructureViolation : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct SingularMinor : Error { using Error::Error; };

}  // namespace lenstorsion
