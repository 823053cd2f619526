#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fiolab {

// Raised when a requested grid would be silently aliased or would exceed
// the configured memory budget. Carries the point count that would have
// been needed, so callers can report actionable refusals.
class PolicyError : public std::runtime_error {
public:
    explicit PolicyError(const std::string& what, std::size_t required_points = 0)
        : std::runtime_error(what), required_points_(required_points) {}
    std::size_t required_points() const noexcept { return required_points_; }

private:
    std::size_t required_points_;
};

class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Process-wide cap on samples per grid (N^d). Reads FIOLAB_MAX_POINTS from
// the environment once; settable programmatically.
std::size_t memory_budget();
void set_memory_budget(std::size_t points);

bool is_pow2(std::size_t n);
std::size_t next_pow2(std::size_t n);

// Rounds to `digits` significant decimal digits. Used to pin report output.
double round_sig(double x, int digits = 12);

}  // namespace fiolab
