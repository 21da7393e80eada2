#ifndef BRSTLAB_ERRORS_HPP
#define BRSTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace brstlab {

// Common base so callers can catch everything coming out of the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

class NotHermitianError : public Error {
public:
  explicit NotHermitianError(const std::string& msg) : Error(msg) {}
};

class SizeError : public Error {
public:
  explicit SizeError(const std::string& msg) : Error(msg) {}
};

class IndexError : public Error {
public:
  explicit IndexError(const std::string& msg) : Error(msg) {}
};

class ShapeError : public Error {
public:
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// Structure constants fail to close / Q^2 != 0 beyond tolerance.
class ClosureError : public Error {
public:
  explicit ClosureError(const std::string& msg) : Error(msg) {}
};

class NilpotencyError : public Error {
public:
  explicit NilpotencyError(const std::string& msg) : Error(msg) {}
};

// A singular-value gap straddles the rank cutoff; the rank decision would be
// unstable, so we refuse to make it.
class RankAmbiguityError : public Error {
public:
  explicit RankAmbiguityError(const std::string& msg) : Error(msg) {}
};

class GradingError : public Error {
public:
  explicit GradingError(const std::string& msg) : Error(msg) {}
};

class UnsupportedError : public Error {
public:
  explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

class StructureTheoremViolation : public Error {
public:
  explicit StructureTheoremViolation(const std::string& msg) : Error(msg) {}
};

class SchemaError : public Error {
public:
  explicit SchemaError(const std::string& msg) : Error(msg) {}
};

} // namespace brstlab

#endif // BRSTLAB_ERRORS_HPP
