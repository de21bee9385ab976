#ifndef HGF_ERRORS_HPP
#define HGF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hgf {

// Base class for all library errors. Subclasses carry the failure kind in
// the type so callers can map them to exit codes without string matching.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct LengthMismatch : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct NonZeroSum : Error { using Error::Error; };
struct MixedDegrees : Error { using Error::Error; };

// Parse failures carry the byte offset of the offending character.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct NotHilbertPolynomial : Error { using Error::Error; };
struct ImproperSubscheme : Error { using Error::Error; };
struct InfeasibleProfile : Error { using Error::Error; };
struct EmptyDegree : Error { using Error::Error; };

struct InvalidTermOrder : Error { using Error::Error; };
struct InvalidWeight : Error { using Error::Error; };

struct ContextMismatch : Error { using Error::Error; };
struct LabelMismatch : Error { using Error::Error; };
struct NotAPairing : Error { using Error::Error; };

struct MixedGraph : Error { using Error::Error; };
struct AmbiguousUnderWeights : Error { using Error::Error; };

struct NotSegment : Error { using Error::Error; };
struct SameIdeal : Error { using Error::Error; };
struct NoSegmentIdeal : Error { using Error::Error; };

struct EmptyCone : Error { using Error::Error; };
struct UnsupportedDimension : Error { using Error::Error; };

} // namespace hgf

#endif
