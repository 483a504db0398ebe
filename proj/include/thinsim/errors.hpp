#pragma once

#include <stdexcept>
#include <string>

namespace thinsim {

// Base for all domain errors so callers can catch the library as a whole.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Fewer than 3 points, or all input points collinear.
class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& what) : Error(what) {}
};

// Depth is non-positive, non-finite, or outside the sensor validity range.
class InvalidDepth : public Error {
public:
    explicit InvalidDepth(const std::string& what) : Error(what) {}
};

class EmptyCloud : public Error {
public:
    explicit EmptyCloud(const std::string& what) : Error(what) {}
};

class TooFewNeighbors : public Error {
public:
    explicit TooFewNeighbors(const std::string& what) : Error(what) {}
};

// Averaged sub-normals cancelled out; no orientation can be reported.
class DegenerateNormals : public Error {
public:
    explicit DegenerateNormals(const std::string& what) : Error(what) {}
};

class DegenerateHull : public Error {
public:
    explicit DegenerateHull(const std::string& what) : Error(what) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Malformed record in an annotation or decision-log file; message carries
// file/line context.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Annotation vertex outside the declared image size.
class BoundsError : public Error {
public:
    explicit BoundsError(const std::string& what) : Error(what) {}
};

// Tour references a cluster the execution inputs do not know about.
class PlanMismatch : public Error {
public:
    explicit PlanMismatch(const std::string& what) : Error(what) {}
};

}  // namespace thinsim
