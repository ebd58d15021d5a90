#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpx {

using Rational = mpq_class;
using Integer = mpz_class;

/// Every failure the library reports carries a short machine-readable kind
/// ("LoopContraction", "ResourceLimit", ...) next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

std::string to_string(const Rational& q);

/// Sign of the permutation i -> perm[i].
int permutation_sign(const std::vector<int>& perm);

/// Cap on basis sizes, read from GRAPHOPLEX_MAX_CELLS (default 250000).
std::size_t max_cells();

} // namespace gpx
