#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace kncross {

enum class DrawingErrorKind { EulerViolation, BadCrossingDegree, EdgePathInconsistent, BadRotation };

inline const char* to_string(DrawingErrorKind kind) {
    switch (kind) {
        case DrawingErrorKind::EulerViolation: return "EulerViolation";
        case DrawingErrorKind::BadCrossingDegree: return "BadCrossingDegree";
        case DrawingErrorKind::EdgePathInconsistent: return "EdgePathInconsistent";
        case DrawingErrorKind::BadRotation: return "BadRotation";
    }
    return "?";
}

// Raised by build_drawing when the map data cannot describe a spherical
// embedding of a planarized K_n.
class DrawingError : public std::runtime_error {
public:
    DrawingError(DrawingErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    DrawingErrorKind kind() const noexcept { return kind_; }

private:
    DrawingErrorKind kind_;
};

enum class DegeneracyKind { Collinear, ConcurrentSegments, CoincidentPoints };

inline const char* to_string(DegeneracyKind kind) {
    switch (kind) {
        case DegeneracyKind::Collinear: return "Collinear";
        case DegeneracyKind::ConcurrentSegments: return "ConcurrentSegments";
        case DegeneracyKind::CoincidentPoints: return "CoincidentPoints";
    }
    return "?";
}

// Geometric input that does not determine a unique planarization.
// For Collinear and CoincidentPoints the witness holds vertex ids (the third
// entry is -1 for coincident pairs); for ConcurrentSegments it holds edge ids.
class DegenerateInput : public std::runtime_error {
public:
    DegenerateInput(DegeneracyKind kind, std::array<int, 3> witness)
        : std::runtime_error(std::string("DegenerateInput: ") + to_string(kind) + " (" +
                             std::to_string(witness[0]) + ", " + std::to_string(witness[1]) +
                             ", " + std::to_string(witness[2]) + ")"),
          kind_(kind),
          witness_(witness) {}
    DegeneracyKind kind() const noexcept { return kind_; }
    const std::array<int, 3>& witness() const noexcept { return witness_; }

private:
    DegeneracyKind kind_;
    std::array<int, 3> witness_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// Witness structurally unusable for the given drawing (duplicates, out of
// range vertices, length mismatch).
class MalformedWitness : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A witness handed to a transformation did not verify.
class WitnessInvalid : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class NoGeometry : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace kncross
