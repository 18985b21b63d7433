#pragma once

#include <stdexcept>
#include <string>

namespace hseq {

// Bad or inconsistent input data (files, corpora, checkpoints). CLI exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Tensor dimension disagreement. Message names both shapes.
class ShapeError : public std::runtime_error {
public:
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// Training produced a non-finite loss. Carries the offending step. CLI exit code 3.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& what, long step)
        : std::runtime_error(what), step_(step) {}
    long step() const { return step_; }

private:
    long step_;
};

}  // namespace hseq
