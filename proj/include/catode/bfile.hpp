#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catode/exact_arith.hpp"

namespace catode {

/// One "<index> <value>" line of an OEIS-style b-file.
struct BFileEntry {
    long long index = 0;
    Integer value;
};

/// Parse failure carrying the 1-based line number of the offending line.
class BFileError : public std::runtime_error {
public:
    BFileError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Blank lines and lines starting with '#' are skipped; indices must be
/// strictly increasing.
std::vector<BFileEntry> parse_bfile(std::string_view content);

struct BFileMismatch {
    long long index = 0;
    Integer expected;
    Integer actual;
};

struct CrosscheckResult {
    std::size_t checked = 0;
    std::vector<BFileMismatch> mismatches;
};

/// Compares entries with 0 <= index <= max_index against catalan_closed.
CrosscheckResult crosscheck_catalan(const std::vector<BFileEntry>& entries, unsigned long max_index);

}  // namespace catode
