#pragma once

#include <stdexcept>
#include <string>

namespace congest {

// Base class for all errors raised by the simulator and its tooling.
class SimError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input (edge lists, scenario files); carries a 1-based line number.
class FormatError : public SimError {
public:
    FormatError(const std::string& what, int line)
        : SimError("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class SelfLoopError : public SimError {
public:
    using SimError::SimError;
};

class DuplicateEdgeError : public SimError {
public:
    using SimError::SimError;
};

// Partition sides share a node.
class OverlapError : public SimError {
public:
    using SimError::SimError;
};

// Unresolvable references or parameters that fail setup-time validation.
class ConfigError : public SimError {
public:
    using SimError::SimError;
};

// A node tried to send more than b(n) bits over one edge in one round.
class BandwidthExceeded : public SimError {
public:
    using SimError::SimError;
};

// A node tried to send over an edge the current mode does not permit.
class IllegalSend : public SimError {
public:
    using SimError::SimError;
};

// max_rounds reached while some participating node has no output.
class NonTermination : public SimError {
public:
    using SimError::SimError;
};

// Player inputs of unequal length were handed to a family builder.
class LengthMismatch : public SimError {
public:
    using SimError::SimError;
};

// A simulated message crossed the partition outside the designated cut.
class CutViolation : public SimError {
public:
    using SimError::SimError;
};

// A supported-mode algorithm was started without its preprocessing output.
class MissingAdvice : public SimError {
public:
    using SimError::SimError;
};

// Not enough unused identifiers left in the identifier space.
class IdSpaceExhausted : public SimError {
public:
    using SimError::SimError;
};

}  // namespace congest
